#include "scissors/cutpaste.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "scissors/errors.hpp"
#include "scissors/forms.hpp"
#include "scissors/homology.hpp"
#include "scissors/manifold.hpp"

namespace scissors {
namespace {

const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(int k) {
  std::string out;
  for (char c : std::to_string(k)) out += kSuperscripts[c - '0'];
  return out;
}

std::string sphere_label(int k) { return "S" + superscript(k); }
std::string torus_label(int k) { return "T" + superscript(k); }
std::string surface_label(long genus) {
  if (genus == 0) return sphere_label(2);
  if (genus == 1) return torus_label(2);
  return "Σ_" + std::to_string(genus);
}

/// Parses "S^3", "S³", "T^2", "T²", "Sigma_2", "Σ_2" into (letter, number).
std::optional<std::pair<char, long>> parse_label(const std::string& label) {
  if (label.empty()) return std::nullopt;
  std::string rest;
  char letter = 0;
  if (label[0] == 'S' && label.rfind("Sigma_", 0) != 0) {
    letter = 'S';
    rest = label.substr(1);
  } else if (label[0] == 'T') {
    letter = 'T';
    rest = label.substr(1);
  } else if (label.rfind("Sigma_", 0) == 0) {
    letter = 'G';
    rest = label.substr(6);
  } else if (label.rfind("Σ_", 0) == 0) {
    letter = 'G';
    rest = label.substr(std::string("Σ_").size());
  } else {
    return std::nullopt;
  }
  if (letter != 'G') {
    if (!rest.empty() && rest[0] == '^') {
      rest = rest.substr(1);
    } else {
      std::string digits;
      std::size_t pos = 0;
      while (pos < rest.size()) {
        bool matched = false;
        for (int d = 0; d < 10; ++d) {
          const std::string s = kSuperscripts[d];
          if (rest.compare(pos, s.size(), s) == 0) {
            digits += static_cast<char>('0' + d);
            pos += s.size();
            matched = true;
            break;
          }
        }
        if (!matched) return std::nullopt;
      }
      rest = digits;
    }
  }
  if (rest.empty() || rest.size() > 6 || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return std::nullopt;
  return std::make_pair(letter, std::stol(rest));
}

/// Canonical spelling of a label: known families get superscripts, others are kept.
std::string canonical_label(const std::string& label) {
  const auto p = parse_label(label);
  if (!p) return label;
  if (p->first == 'S') return sphere_label(static_cast<int>(p->second));
  if (p->first == 'T') return torus_label(static_cast<int>(p->second));
  return surface_label(p->second);
}

std::string join_fingerprint(const std::vector<FgAbGroup>& groups) {
  std::string out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += ",";
    out += to_string(groups[i]);
  }
  return out;
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_nonzero_dim(int d) {
  if (d < 1) throw ContractError("dimension must be at least 1, got " + std::to_string(d));
}

}  // namespace

std::string Bordism::to_string() const {
  switch (kind) {
    case Kind::trivial:
      return "trivial";
    case Kind::computed:
      return "computed(" + std::to_string(signature) + ")";
    case Kind::supplied:
      return "supplied(" + label + ")";
  }
  return "";
}

void require_well_formed(const InvariantTuple& t) {
  require_nonzero_dim(t.dim);
  const bool odd = t.dim % 2 == 1;
  if (odd != t.kappa.has_value()) throw ContractError("kappa must be present exactly for odd dimensions");
  if (t.kappa && *t.kappa != 0 && *t.kappa != 1) throw ContractError("kappa must be 0 or 1");
  if (odd && t.chi != 0) throw ContractError("odd-dimensional closed manifolds have chi = 0, got " + std::to_string(t.chi));
  const Bordism::Kind expected =
      t.dim <= 3 ? Bordism::Kind::trivial : t.dim == 4 ? Bordism::Kind::computed : Bordism::Kind::supplied;
  if (t.bordism.kind != expected) throw ContractError("bordism kind does not match dimension " + std::to_string(t.dim));
}

InvariantTuple invariant_tuple(const Triangulation& t, const std::optional<std::string>& label) {
  require_nonzero_dim(t.dim);
  const std::optional<std::string> bordism_label = label ? label : t.bordism;
  require_valid(t);
  if (!t.orientation && !compute_orientation(t)) throw ContractError("invariant tuple needs an orientable triangulation");
  if (t.dim >= 5 && !bordism_label) throw ContractError("dimension " + std::to_string(t.dim) + " needs a bordism label");
  if (t.dim <= 4 && bordism_label) throw ContractError("bordism labels apply to dimension 5 and up only");

  const Manifold m(t);
  InvariantTuple out;
  out.dim = t.dim;
  out.chi = m.euler_characteristic();
  if (t.dim % 2 == 1) {
    if (out.chi != 0) throw StructuralError("odd-dimensional closed manifold with chi = " + std::to_string(out.chi));
    out.kappa = kervaire_semicharacteristic(m);
  }
  if (t.dim == 4)
    out.bordism = Bordism::computed(signature(intersection_form(t)));
  else if (t.dim >= 5)
    out.bordism = Bordism::supplied(*bordism_label);
  return out;
}

std::string to_report(const InvariantTuple& t) {
  std::ostringstream os;
  os << "{dim:" << t.dim << ", chi:" << t.chi;
  if (t.kappa) os << ", kappa:" << *t.kappa;
  os << ", bordism:" << t.bordism.to_string() << "}";
  return os.str();
}

bool skk_equivalent(const InvariantTuple& a, const InvariantTuple& b) {
  if (a.dim != b.dim) throw ContractError("dimension mismatch: " + std::to_string(a.dim) + " vs " + std::to_string(b.dim));
  require_well_formed(a);
  require_well_formed(b);
  return a == b;
}

bool sk_equivalent(const InvariantTuple& a, const InvariantTuple& b, const std::optional<QuotientConvention>& convention) {
  if (a.dim != b.dim) throw ContractError("dimension mismatch: " + std::to_string(a.dim) + " vs " + std::to_string(b.dim));
  require_well_formed(a);
  require_well_formed(b);
  const bool even = a.dim % 2 == 0;
  if (even && a.chi != b.chi) return false;
  if (a.dim <= 3) return true;
  if (a.dim == 4) return a.bordism.signature == b.bordism.signature;
  if (!convention) throw ContractError("Omega_d/F_d not computable from a triangulation: supply a quotient convention");
  return (*convention)(a.bordism.label) == (*convention)(b.bordism.label);
}

GroupDescription j_group(int d) {
  require_nonzero_dim(d);
  const std::string gen = "[" + sphere_label(d) + "]";
  if (d % 2 == 0) return {FgAbGroup::free(1), {gen}};
  if (d % 4 == 1) return {FgAbGroup(0, {Integer(2)}), {gen}};
  return {FgAbGroup(), {}};
}

GroupDescription oriented_bordism(int d) {
  if (d < 1 || d > 4) throw ContractError("oriented bordism is built in for 1 <= d <= 4 only");
  if (d == 4) return {FgAbGroup::free(1), {"bordism"}};
  return {FgAbGroup(), {}};
}

GroupDescription skk_group_structure(int d, const std::optional<GroupDescription>& omega) {
  require_nonzero_dim(d);
  if (d >= 5 && !omega) throw ContractError("SKK_" + std::to_string(d) + " needs Omega_d as input");
  const GroupDescription bordism = omega ? *omega : oriented_bordism(d);
  if (bordism.generators.size() != bordism.group.generator_count())
    throw ContractError("Omega_d description needs one label per generator");
  const GroupDescription j = j_group(d);

  // Summands (order, label) with order 0 for free ones.
  std::vector<std::pair<Integer, std::string>> torsion, free;
  for (const GroupDescription* g : {&j, &bordism}) {
    for (std::size_t i = 0; i < g->group.generator_count(); ++i) {
      if (i < g->group.torsion.size())
        torsion.emplace_back(g->group.torsion[i], g->generators[i]);
      else
        free.emplace_back(Integer(0), g->generators[i]);
    }
  }
  std::stable_sort(torsion.begin(), torsion.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  bool chain = true;
  for (std::size_t i = 1; i < torsion.size(); ++i)
    if (torsion[i].first % torsion[i - 1].first != 0) chain = false;

  GroupDescription out;
  std::vector<Integer> orders;
  for (const auto& t : torsion) orders.push_back(t.first);
  out.group = FgAbGroup(free.size(), orders);
  if (chain) {
    for (const auto& t : torsion) out.generators.push_back(t.second);
    for (const auto& f : free) out.generators.push_back(f.second);
  } else {
    // The invariant factors mix summands; name them positionally.
    for (std::size_t i = 0; i < out.group.torsion.size(); ++i) out.generators.push_back("t" + std::to_string(i + 1));
    for (const auto& f : free) out.generators.push_back(f.second);
  }
  return out;
}

std::string BoundaryClass::word() const {
  std::string out;
  for (const auto& [label, count] : boundary_word)
    for (long i = 0; i < count; ++i) {
      if (!out.empty()) out += "·";
      out += label;
    }
  return out;
}

BoundaryClass sk_boundary_split(int d, const InvariantTuple& sk_part, const std::vector<std::string>& boundary_labels,
                                const std::multimap<std::string, bool>& nullbordant) {
  require_nonzero_dim(d);
  if (sk_part.dim != d) throw ContractError("SK part has dimension " + std::to_string(sk_part.dim) + ", expected " + std::to_string(d));
  require_well_formed(sk_part);

  std::map<std::string, bool> asserted;
  for (const auto& [label, value] : nullbordant) {
    const std::string key = canonical_label(label);
    auto [it, fresh] = asserted.emplace(key, value);
    if (!fresh && it->second != value) throw ContractError("contradictory nullbordance assertions for " + key);
  }

  BoundaryClass out;
  out.dim = d;
  if (d % 2 == 0) out.chi = sk_part.chi;
  if (d == 4) out.signature = sk_part.bordism.signature;
  if (d >= 5) out.bordism_class = sk_part.bordism.label;
  for (const std::string& raw : boundary_labels) {
    if (raw.empty()) throw ContractError("empty boundary label");
    const std::string label = canonical_label(raw);
    if (d - 1 >= 4) {
      auto it = asserted.find(label);
      if (it == asserted.end()) throw ContractError("boundary label " + label + " needs a nullbordance assertion");
      if (!it->second) throw ContractError("boundary label " + label + " is asserted not nullbordant");
    } else if (asserted.count(label) && !asserted.at(label)) {
      throw ContractError("boundary label " + label + " asserted not nullbordant, but Omega_" + std::to_string(d - 1) + " = 0");
    }
    ++out.boundary_word[label];
  }
  return out;
}

std::string homology_fingerprint(const Triangulation& t) { return join_fingerprint(homology(FaceLattice(t).chains())); }

std::optional<std::string> label_fingerprint(const std::string& label, int dim) {
  const auto p = parse_label(label);
  if (!p) return std::nullopt;
  std::vector<FgAbGroup> groups(static_cast<std::size_t>(dim) + 1);
  if (p->first == 'S') {
    if (p->second != dim) return "dimension " + std::to_string(p->second);
    groups.front() = groups.back() = FgAbGroup::free(1);
  } else if (p->first == 'T') {
    if (p->second != dim) return "dimension " + std::to_string(p->second);
    for (int i = 0; i <= dim; ++i) groups[i] = FgAbGroup::free(static_cast<std::size_t>(binomial(dim, i)));
  } else {
    if (dim != 2) return "dimension 2";
    groups = {FgAbGroup::free(1), FgAbGroup::free(static_cast<std::size_t>(2 * p->second)), FgAbGroup::free(1)};
  }
  return join_fingerprint(groups);
}

std::vector<Triangulation> boundary_triangulations(const Triangulation& t) {
  std::vector<Triangulation> out;
  for (const auto& ridges : boundary_components(t)) {
    std::map<std::uint32_t, std::uint32_t> relabel;
    for (const Tuple& r : ridges)
      for (std::uint32_t v : r) relabel.emplace(v, 0);
    std::uint32_t next = 0;
    for (auto& [v, id] : relabel) id = next++;
    Triangulation b;
    b.dim = t.dim - 1;
    b.vertices = relabel.size();
    for (const Tuple& r : ridges) {
      Tuple f;
      for (std::uint32_t v : r) f.push_back(relabel.at(v));
      b.facets.push_back(std::move(f));
    }
    out.push_back(std::move(b));
  }
  return out;
}

BoundaryClass sk_boundary_split(const Triangulation& t, const std::optional<std::vector<std::string>>& labels,
                                const std::optional<std::string>& bordism_label) {
  require_nonzero_dim(t.dim);
  const std::vector<Triangulation> components = boundary_triangulations(t);
  if (components.empty()) return sk_boundary_split(t.dim, invariant_tuple(t, bordism_label), {});
  if (labels && labels->size() != components.size())
    throw ContractError("expected " + std::to_string(components.size()) + " boundary labels, got " + std::to_string(labels->size()));
  if (t.dim - 1 >= 4) throw ContractError("boundary components of dimension >= 4 need nullbordance assertions");

  const int k = t.dim - 1;
  std::vector<std::string> words;
  std::map<std::string, std::string> seen;  // label -> fingerprint
  for (std::size_t i = 0; i < components.size(); ++i) {
    const std::string fingerprint = homology_fingerprint(components[i]);
    std::string label;
    if (labels) {
      label = canonical_label((*labels)[i]);
      const auto expected = label_fingerprint(label, k);
      if (expected && *expected != fingerprint)
        throw ContractError("boundary component " + std::to_string(i) + " labelled " + label + " has homology " +
                            fingerprint + ", expected " + *expected);
    } else if (k == 1) {
      label = sphere_label(1);
    } else if (k == 2 && compute_orientation(components[i])) {
      label = surface_label((2 - euler_characteristic(components[i])) / 2);
    } else {
      throw ContractError("boundary component " + std::to_string(i) + " (homology " + fingerprint + ") needs a label");
    }
    auto [it, fresh] = seen.emplace(label, fingerprint);
    if (!fresh && it->second != fingerprint)
      throw ContractError("label " + label + " names components with homology " + it->second + " and " + fingerprint);
    words.push_back(label);
  }

  BoundaryClass out;
  out.dim = t.dim;
  if (t.dim % 2 == 0) out.chi = euler_characteristic(t);
  for (const auto& w : words) ++out.boundary_word[w];
  out.presentation_level = true;
  return out;
}

}  // namespace scissors
