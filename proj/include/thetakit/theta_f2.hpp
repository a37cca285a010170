#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thetakit/exec.hpp"
#include "thetakit/lattice.hpp"

namespace thetakit {

/// Even-cardinality subset of {1, ..., 8} modulo complement. The 64 classes
/// form the 2-torsion of a genus-3 Jacobian under symmetric difference; the
/// same set indexes theta characteristics, with the 28 two-element classes
/// odd and the remaining 36 even.
///
/// The stored representative has at most four elements; with exactly four it
/// is the one containing 1.
class EvenSubsetClass {
 public:
  EvenSubsetClass() = default;

  static EvenSubsetClass from_mask(std::uint8_t mask);
  static EvenSubsetClass from_indices(std::span<const int> indices);
  static EvenSubsetClass from_indices(std::initializer_list<int> indices);

  std::uint8_t mask() const { return mask_; }
  std::vector<int> indices() const;
  int size() const;

  /// 1 for the 28 odd characteristics, 0 otherwise.
  int parity() const;
  bool is_odd() const { return parity() == 1; }
  bool is_identity() const { return mask_ == 0; }

  EvenSubsetClass operator+(EvenSubsetClass other) const { return from_mask(mask_ ^ other.mask_); }

  friend bool operator==(EvenSubsetClass a, EvenSubsetClass b) { return a.mask_ == b.mask_; }
  // Lexicographic on the sorted index list; the identity sorts first.
  friend std::strong_ordering operator<=>(EvenSubsetClass a, EvenSubsetClass b);

 private:
  explicit EvenSubsetClass(std::uint8_t normalized) : mask_(normalized) {}
  std::uint8_t mask_ = 0;
};

std::string format_subset(EvenSubsetClass s);  // "{1,3}", identity "{}"
EvenSubsetClass parse_subset(std::string_view text);

std::vector<EvenSubsetClass> all_classes();
std::vector<EvenSubsetClass> odd_classes();
std::vector<EvenSubsetClass> even_classes();

/// |A intersect B| mod 2.
int weil_pair(EvenSubsetClass a, EvenSubsetClass b);

/// q_theta(eta) = parity(theta + eta) + parity(theta) mod 2.
int q_theta(EvenSubsetClass theta, EvenSubsetClass eta);

/// True iff q_{t1}(t2 + t3) = 0. Inputs must be distinct odd classes.
bool syzygetic(EvenSubsetClass t1, EvenSubsetClass t2, EvenSubsetClass t3);

using AronholdSet = std::array<EvenSubsetClass, 7>;

/// Seven distinct odd classes, every triple asyzygetic.
bool is_aronhold(std::span<const EvenSubsetClass> set);

/// All Aronhold sets, each sorted, in lexicographic order.
std::vector<AronholdSet> enumerate_aronhold(Exec exec = Exec::parallel);

/// Even characteristic attached to an Aronhold set: with base t0 = A[0],
/// t0 + sum_i (A[i] + t0).
EvenSubsetClass even_theta_of_aronhold(const AronholdSet& set);

/// Odd characteristic of the bitangent under an exceptional class of a
/// degree-2 lattice: E_i, D_i -> {i,8} and L_{i,j}, C_{i,j} -> {i,j}.
EvenSubsetClass bitangent_label(const PicardLattice& lat, const DivisorClass& exceptional);

/// Labels of the seven curves contracted by a degree-2 blow-down class.
AronholdSet aronhold_of_blowdown(const PicardLattice& lat, const DivisorClass& blow_down);

EvenSubsetClass even_theta_of_blowdown(const PicardLattice& lat, const DivisorClass& blow_down);

/// F_2^{2g} with the standard symplectic pairing (e_i, f_i) = 1, bits
/// 0..g-1 holding the e-coordinates and g..2g-1 the f-coordinates, and a
/// quadratic form q(x) = x^T U x + l.x whose strictly upper-triangular part U
/// is the upper triangle of the pairing Gram matrix, so that
/// q(a + b) + q(a) + q(b) = <a, b>.
class QuadraticSpace {
 public:
  QuadraticSpace(int genus, std::uint64_t linear);

  static QuadraticSpace standard(int genus, int arf);

  int genus() const { return genus_; }
  int dimension() const { return 2 * genus_; }
  std::uint64_t linear() const { return linear_; }
  std::uint64_t point_count() const { return std::uint64_t{1} << dimension(); }

  /// Row i of the strictly upper-triangular part, as a bit mask.
  std::uint64_t upper_row(int i) const;

  int pairing(std::uint64_t a, std::uint64_t b) const;
  int operator()(std::uint64_t x) const;

  /// The form x -> q(x) + <x, alpha>.
  QuadraticSpace shifted(std::uint64_t alpha) const;

 private:
  std::uint64_t swap_halves(std::uint64_t x) const;
  int genus_;
  std::uint64_t linear_;
  std::uint64_t low_mask_;
};

/// Arf invariant sum q(e_i) q(f_i).
int arf(const QuadraticSpace& q);

/// #{x : q(x) = 0}, by exhaustive evaluation.
std::uint64_t count_zeros(const QuadraticSpace& q, Exec exec = Exec::parallel);

struct ConicPairCount {
  std::uint64_t quotient_zeros = 0;  // zeros of the induced form on eta-perp / eta
  std::uint64_t z_size = 0;          // |Z|
  std::uint64_t pairs = 0;           // |Z| / 2
  std::uint64_t q1_linear = 0;       // the odd form used
  std::uint64_t eta = 0;             // the isotropic class used
};

/// Genus-6 count of syzygetic completions: an odd form q1, a nonzero eta
/// with q1(eta) = 0, q2 = q1 + <., eta>, and
/// Z = (q1^{-1}(0) intersect q2^{-1}(0)) minus {0, eta}.
ConicPairCount count_conic_pairs(std::uint64_t seed = 0);

/// Same count for explicitly chosen data. Throws if q1 is not odd, eta is
/// zero, or q1(eta) != 0.
ConicPairCount count_conic_pairs(const QuadraticSpace& q1, std::uint64_t eta);

}  // namespace thetakit
