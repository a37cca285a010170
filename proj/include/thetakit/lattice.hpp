#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thetakit/exec.hpp"

namespace thetakit {

/// An element of the Picard lattice, written in the basis (L, E_1, ..., E_n).
/// The coefficient of L comes first.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}
  DivisorClass(std::initializer_list<int> coeffs) : coeffs_(coeffs) {}

  std::size_t size() const { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const int> coeffs() const { return coeffs_; }

  /// Coefficient of L.
  int degree() const { return coeffs_.front(); }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(int k, const DivisorClass& x);

  bool is_zero() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::vector<int> coeffs_;
};

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& x) const noexcept;
};

enum class ClassKind {
  exceptional,  // D.D = -1, D.K = -1
  root,         // D.D = -2, D.K = 0
  blow_down,    // D.D = 1,  D.K = -3
};

std::string_view to_string(ClassKind kind);
ClassKind parse_class_kind(std::string_view text);

/// Picard lattice of a Del Pezzo surface of degree 2 or 3, i.e. the blow-up of
/// the plane in 9 - degree points. The intersection form is
/// diag(1, -1, ..., -1) and the canonical class is K = -3L + sum E_i.
class PicardLattice {
 public:
  explicit PicardLattice(int degree);

  int degree() const { return degree_; }
  int rank() const { return 10 - degree_; }
  int num_points() const { return 9 - degree_; }

  int pair(const DivisorClass& a, const DivisorClass& b) const;
  int self_intersection(const DivisorClass& a) const { return pair(a, a); }

  const DivisorClass& canonical() const { return canonical_; }

  // Named classes. Point indices are 1-based.
  DivisorClass line_class() const;                 // L
  DivisorClass exceptional(int i) const;           // E_i
  DivisorClass line_through(int i, int j) const;   // L_{i,j} = L - E_i - E_j
  DivisorClass conic_missing(int i) const;         // C_i (degree 3)
  DivisorClass conic_missing(int i, int j) const;  // C_{i,j} (degree 2)
  DivisorClass nodal_cubic(int i) const;           // D_i (degree 2)

  /// Builds a class from a coefficient list and checks its length.
  DivisorClass make_class(std::vector<int> coeffs) const;

  std::optional<ClassKind> classify(const DivisorClass& x) const;
  bool is_root(const DivisorClass& x) const;

  /// Every class of the given kind, sorted lexicographically.
  std::vector<DivisorClass> enumerate(ClassKind kind, Exec exec = Exec::parallel) const;

  /// Weyl reflection in a root: x + (x.root) root.
  DivisorClass reflect(const DivisorClass& root, const DivisorClass& x) const;

  /// Simple roots L - E_1 - E_2 - E_3, E_1 - E_2, ..., E_{n-1} - E_n.
  std::vector<DivisorClass> simple_roots() const;

  /// Closure of {seed} under the simple reflections, sorted.
  std::vector<DivisorClass> weyl_orbit(const DivisorClass& seed, Exec exec = Exec::parallel) const;

  /// Order of the Weyl group W(E_{9-d}).
  std::int64_t weyl_order() const;

  /// Geiser involution x -> -x + (x.K) K. Degree 2 only.
  DivisorClass geiser(const DivisorClass& x) const;

  /// Complementary blow-down system -2K - x of a double six. Degree 3 only.
  DivisorClass double_six_partner(const DivisorClass& x) const;

  /// Exceptional classes orthogonal to a blow-down class, i.e. the curves it
  /// contracts. Sorted.
  std::vector<DivisorClass> contracted_by(const DivisorClass& blow_down) const;

  void check_member(const DivisorClass& x) const;

 private:
  int degree_;
  DivisorClass canonical_;
};

/// Closure of {seed} under reflections in the given roots, sorted.
std::vector<DivisorClass> orbit_under(const PicardLattice& lat, std::span<const DivisorClass> roots,
                                      const DivisorClass& seed, Exec exec = Exec::parallel);

/// Order of the reflection group generated by a basis of simple roots whose
/// span is negative definite, by orbit-stabilizer down the parabolic chain.
std::int64_t reflection_group_order(const PicardLattice& lat, std::span<const DivisorClass> simple);

// Text forms. `[a, b1, ..., bn]` is the serialized coefficient vector; the
// symbolic form reads like `2L-E1-E2-E3`.
std::string format_class(const DivisorClass& x);
std::string format_symbolic(const DivisorClass& x);
DivisorClass parse_class(std::string_view text);

/// One class per line in the bracketed form; blank lines and `#` comments skipped.
std::vector<DivisorClass> parse_class_lines(std::string_view text);

}  // namespace thetakit
