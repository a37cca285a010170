#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thetakit/poly.hpp"

namespace thetakit {

/// Raised when an input is well formed but degenerate (a determinant or
/// conic that vanishes identically).
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entries of the symmetric matrix
///   [[L11, L12, Q1], [L12, L22, Q2], [Q1, Q2, H]]
/// in x0, x1, x2: linear L, quadratic Q, cubic H.
struct SymThetaData {
  MultiPoly L11, L12, L22, Q1, Q2, H;
  friend bool operator==(const SymThetaData&, const SymThetaData&) = default;
};

/// Throws std::invalid_argument if an entry is not a form of the right degree
/// in x0, x1, x2 (zero entries are allowed).
void check_degrees(const SymThetaData& data);

/// `KEY: expression` lines with keys L11 L12 L22 Q1 Q2 H, all required.
SymThetaData parse_sym_theta(std::string_view text);
std::string format_sym_theta(const SymThetaData& data);

/// det of the matrix: a plane quintic. Throws DegenerateInput if it is 0.
MultiPoly discriminant_quintic(const SymThetaData& data);

/// sum u_i u_j L_ij + 2 sum u_i Q_i + H, a cubic in u1, u2, x0, x1, x2
/// containing the line x0 = x1 = x2 = 0.
MultiPoly cubic_threefold(const SymThetaData& data);

/// Inverse of cubic_threefold.
SymThetaData extract_matrix(const MultiPoly& cubic);

/// L11 L22 - L12^2. Throws DegenerateInput if it is 0.
MultiPoly contact_conic(const SymThetaData& data);

enum class Tangency { totally_tangent, not_tangent, common_component };
std::string_view to_string(Tangency t);

struct TangencyReport {
  Tangency verdict = Tangency::not_tangent;
  mpq_class shear0, shear1;  // x0 -> x0 + shear0 x2, x1 -> x1 + shear1 x2
  MultiPoly resultant;        // Res_{x2} after the shear, a binary form
  std::vector<int> multiplicities;  // one per square-free factor; the point x0 = 0 last
};

/// Decides whether the conic T meets the quintic F with even multiplicity
/// everywhere: Res_{x2}(F, T) after a seeded shear must be a constant times
/// a square.
TangencyReport total_tangency_check(const MultiPoly& quintic, const MultiPoly& conic, std::uint64_t seed = 0);

struct QuarticResult {
  MultiPoly quartic;
  MultiPoly bitangent;
  bool verified = false;  // F + Q^2 divisible by the bitangent
};

/// F = Lf H - Q^2 from a linear, quadratic and cubic form.
QuarticResult quartic_from_odd_theta(const MultiPoly& lf, const MultiPoly& q, const MultiPoly& h);

}  // namespace thetakit
