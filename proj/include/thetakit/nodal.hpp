#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "thetakit/exec.hpp"
#include "thetakit/lattice.hpp"
#include "thetakit/theta_f2.hpp"

namespace thetakit {

/// A configuration of -2 classes describing an ADE degeneration of a Del
/// Pezzo surface. The roots generate the subgroup N used for congruences.
class NodalConfig {
 public:
  NodalConfig(PicardLattice lattice, std::vector<DivisorClass> roots);

  const PicardLattice& lattice() const { return lattice_; }
  const std::vector<DivisorClass>& roots() const { return roots_; }

  /// Dynkin type of the root configuration, e.g. "A1", "A1+A2", "E7", or
  /// "trivial" for the empty configuration.
  const std::string& ade_type() const { return ade_type_; }

  /// True iff x - y lies in the integer span of the roots.
  bool congruent(const DivisorClass& x, const DivisorClass& y) const;

 private:
  PicardLattice lattice_;
  std::vector<DivisorClass> roots_;
  std::string ade_type_;
  // Congruence test data: x - y = sum c_j alpha_j with
  // c = adjugate * (pairings) / determinant.
  std::vector<std::vector<long>> adjugate_;
  long determinant_ = 1;
};

/// Checks the root invariants and returns the Dynkin decomposition. Throws
/// std::invalid_argument on a non-root member, a pairwise product outside
/// {0, 1}, or a span that is not negative definite.
std::string validate_config(const PicardLattice& lattice, const std::vector<DivisorClass>& roots);

/// Equivalence classes modulo N. Each part is sorted and parts are ordered by
/// their representative (lexicographic minimum). All inputs must be of one kind.
std::vector<std::vector<DivisorClass>> congruence_classes(const NodalConfig& cfg,
                                                          const std::vector<DivisorClass>& classes,
                                                          Exec exec = Exec::parallel);

struct SchemePoint {
  std::vector<DivisorClass> members;  // sorted; front() is the representative
  DivisorClass partner;               // representative of the paired part, when quotiented
  int multiplicity = 0;

  const DivisorClass& representative() const { return members.front(); }
};

struct MultiplicityScheme {
  std::string kind;
  std::vector<SchemePoint> points;
  int total = 0;

  /// multiplicity -> number of points
  std::map<int, int> histogram() const;
};

MultiplicityScheme line_scheme(const NodalConfig& cfg);
MultiplicityScheme blowdown_scheme(const NodalConfig& cfg);
/// Lines modulo the Geiser involution (degree 2). Total 28.
MultiplicityScheme bitangent_scheme(const NodalConfig& cfg);
/// Blow-down models modulo the Geiser involution (degree 2). Total 288.
MultiplicityScheme aronhold_scheme(const NodalConfig& cfg);
/// Blow-down models modulo the double-six partner (degree 3). Total 36.
MultiplicityScheme double_six_scheme(const NodalConfig& cfg);

struct ThetaSchemePoint {
  std::vector<EvenSubsetClass> labels;  // sorted; front() is the representative
  int multiplicity = 0;
};

struct EvenThetaScheme {
  std::vector<ThetaSchemePoint> points;
  int total = 0;
  std::map<int, int> histogram() const;
};

/// Even theta characteristics of the branch quartic with multiplicities
/// (degree 2). Labels whose blow-down fibers meet a common N-coset merge.
EvenThetaScheme even_theta_scheme(const NodalConfig& cfg);

// Blow-down family table for a single root F in degree 2.
inline constexpr std::array<int, 5> kProfileColumns{2, 1, 0, -1, -2};

struct ProfileRow {
  std::string family;  // e.g. "2L-E_m-E_n-E_p"
  std::array<int, 5> counts{};
  int row_sum() const;
};

struct IntersectionProfile {
  std::vector<ProfileRow> rows;  // the ten families, in the classical order
  std::array<int, 5> totals{};
};

/// Tabulates D.F over the 576 blow-down classes, one row per coefficient family.
IntersectionProfile intersection_profile(const NodalConfig& cfg);

/// Index 0..9 of the coefficient family of a degree-2 blow-down class.
int blowdown_family(const DivisorClass& x);
const std::array<std::string, 10>& blowdown_family_names();

}  // namespace thetakit
