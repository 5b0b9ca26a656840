#include "scissors/fg_group.hpp"

#include <ostream>

#include "scissors/errors.hpp"
#include "scissors/snf.hpp"

namespace scissors {

FgAbGroup::FgAbGroup(std::size_t rank, std::vector<Integer> tors) : free_rank(rank) {
  // Accept any list of orders and bring it to the divisibility chain by SNF of the diagonal.
  bool chain = true;
  for (std::size_t i = 0; i < tors.size(); ++i) {
    if (tors[i] <= 1) chain = false;
    if (i > 0 && !mpz_divisible_p(tors[i].get_mpz_t(), tors[i - 1].get_mpz_t())) chain = false;
  }
  if (chain) {
    torsion = std::move(tors);
    return;
  }
  IntMatrix diag(tors.size(), tors.size());
  for (std::size_t i = 0; i < tors.size(); ++i) {
    if (sgn(tors[i]) < 0) throw ContractError("FgAbGroup: negative torsion order");
    diag(i, i) = tors[i];
  }
  auto d = invariant_factors(diag);
  free_rank += tors.size() - d.size();  // zero orders are free summands
  for (auto& v : d)
    if (v > 1) torsion.push_back(v);
}

FgAbGroup FgAbGroup::from_relations(const IntMatrix& relations, std::size_t generators) {
  if (relations.rows() > 0 && relations.cols() != generators)
    throw ContractError("FgAbGroup::from_relations: relation width differs from generator count");
  if (relations.rows() == 0) return FgAbGroup(generators);
  auto d = invariant_factors(relations);
  FgAbGroup g;
  g.free_rank = generators - d.size();
  for (auto& v : d)
    if (v > 1) g.torsion.push_back(v);
  return g;
}

std::string to_string(const FgAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  auto append = [&](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (g.free_rank == 1) append("Z");
  else if (g.free_rank > 1) append("Z^" + std::to_string(g.free_rank));
  for (const auto& t : g.torsion) append("Z/" + t.get_str());
  return s;
}

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g) { return os << to_string(g); }

}  // namespace scissors
