#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scissors/fg_group.hpp"
#include "scissors/triangulation.hpp"

namespace scissors {

/// Cobordism class: trivial (d <= 3), signature (d = 4) or a user label (d >= 5).
struct Bordism {
  enum class Kind { trivial, computed, supplied };
  Kind kind = Kind::trivial;
  long signature = 0;
  std::string label;

  static Bordism trivial() { return {}; }
  static Bordism computed(long sigma) { return {Kind::computed, sigma, {}}; }
  static Bordism supplied(std::string label) { return {Kind::supplied, 0, std::move(label)}; }
  std::string to_string() const;
  friend bool operator==(const Bordism&, const Bordism&) = default;
};

/// (d, chi, kappa, bordism): kappa present iff d is odd; chi = 0 for d odd.
struct InvariantTuple {
  int dim = 0;
  long chi = 0;
  std::optional<int> kappa;
  Bordism bordism;

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

/// Checks the tuple invariants; throws ContractError with the violated one.
void require_well_formed(const InvariantTuple& t);

/// Invariants of a valid closed orientable triangulation. d = 4 computes the
/// signature from the file orientation (or the propagated one); d >= 5 needs a
/// label, given here or carried by the file (the argument wins).
InvariantTuple invariant_tuple(const Triangulation& t, const std::optional<std::string>& bordism_label = std::nullopt);

/// `{dim:3, chi:0, kappa:1, bordism:trivial}`; kappa is omitted for even d.
std::string to_report(const InvariantTuple& t);

bool skk_equivalent(const InvariantTuple& a, const InvariantTuple& b);

/// Maps a supplied bordism label to its class in Omega_d / F_d. Labels the
/// convention does not know are a ContractError.
using QuotientConvention = std::function<std::string(const std::string&)>;

/// Equal Euler characteristic (d even) and equal class in Omega_d / F_d, with
/// F_d = 0 and Omega_d / F_d detected by the signature for d = 4, and
/// Omega_d = 0 for d <= 3. Needs a convention for d >= 5.
bool sk_equivalent(const InvariantTuple& a, const InvariantTuple& b,
                   const std::optional<QuotientConvention>& convention = std::nullopt);

/// Finitely generated abelian group with one label per canonical generator
/// (torsion generators first, matching FgAbGroup order).
struct GroupDescription {
  FgAbGroup group;
  std::vector<std::string> generators;

  friend bool operator==(const GroupDescription&, const GroupDescription&) = default;
};

/// J_d from the Kervaire semicharacteristic splitting: Z for d even, Z/2 for
/// d = 1 mod 4, 0 for d = 3 mod 4, generated by [S^d].
GroupDescription j_group(int d);
/// Classical oriented bordism Omega_d for 1 <= d <= 4: 0, 0, 0, Z (signature).
GroupDescription oriented_bordism(int d);

/// SKK_d = J_d (+) Omega_d in canonical form. Omega_d must be supplied for d >= 5.
GroupDescription skk_group_structure(int d, const std::optional<GroupDescription>& omega = std::nullopt);

/// Class in SK_d (+) C_{d-1}: SK-invariants plus a free word in boundary labels.
struct BoundaryClass {
  int dim = 0;
  std::optional<long> chi;        // d even
  std::optional<long> signature;  // d = 4
  std::optional<std::string> bordism_class;  // d >= 5
  std::map<std::string, long> boundary_word;
  bool presentation_level = false;  // SK part read off a manifold with boundary

  std::string word() const;  // "S²·S²", "" for the empty word
  friend bool operator==(const BoundaryClass&, const BoundaryClass&) = default;
};

/// Pairs the SK-part of sk_part with the boundary labels. For d - 1 >= 4 every
/// label needs a nullbordance assertion; a label asserted false, or asserted
/// both ways, is a ContractError.
BoundaryClass sk_boundary_split(int d, const InvariantTuple& sk_part, const std::vector<std::string>& boundary_labels,
                                const std::multimap<std::string, bool>& nullbordant = {});

/// Homology fingerprint of a closed triangulation, e.g. "Z,Z^2,Z".
std::string homology_fingerprint(const Triangulation& t);
/// Expected fingerprint of a known label (S^k, T^k, Sigma_g, S¹, T², ...), if any.
std::optional<std::string> label_fingerprint(const std::string& label, int dim);

/// Boundary components of a compact pseudomanifold as closed triangulations.
std::vector<Triangulation> boundary_triangulations(const Triangulation& t);

/// Split for a triangulated manifold with (possibly empty) boundary. Labels
/// default to automatic ones for circles and orientable surfaces; given labels
/// must match their fingerprint and be used consistently.
BoundaryClass sk_boundary_split(const Triangulation& t, const std::optional<std::vector<std::string>>& labels = std::nullopt,
                                const std::optional<std::string>& bordism_label = std::nullopt);

}  // namespace scissors
