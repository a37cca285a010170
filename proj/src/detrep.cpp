#include "thetakit/detrep.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>

namespace thetakit {

namespace {

const std::vector<std::string> kPlane{"x0", "x1", "x2"};

bool only_vars(const MultiPoly& p, const std::vector<std::string>& allowed) {
  for (const auto& v : p.vars())
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
  return true;
}

void check_form(const MultiPoly& p, int deg, const std::string& name, bool allow_zero) {
  if (p.is_zero()) {
    if (allow_zero) return;
    throw std::invalid_argument(name + " is zero");
  }
  if (!only_vars(p, kPlane)) throw std::invalid_argument(name + " must be a form in x0, x1, x2");
  if (!p.is_homogeneous() || p.degree() != deg)
    throw std::invalid_argument(name + " must be homogeneous of degree " + std::to_string(deg));
}

constexpr std::array<const char*, 6> kKeys{"L11", "L12", "L22", "Q1", "Q2", "H"};

std::array<MultiPoly*, 6> fields(SymThetaData& d) { return {&d.L11, &d.L12, &d.L22, &d.Q1, &d.Q2, &d.H}; }
std::array<const MultiPoly*, 6> fields(const SymThetaData& d) {
  return {&d.L11, &d.L12, &d.L22, &d.Q1, &d.Q2, &d.H};
}

}  // namespace

void check_degrees(const SymThetaData& data) {
  static constexpr std::array<int, 6> degs{1, 1, 1, 2, 2, 3};
  const auto f = fields(data);
  for (std::size_t i = 0; i < f.size(); ++i) check_form(*f[i], degs[i], kKeys[i], true);
}

SymThetaData parse_sym_theta(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::map<std::string, MultiPoly> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected 'KEY: expression', got '" + line + "'");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) throw std::invalid_argument("unknown key '" + key + "'");
    if (seen.count(key)) throw std::invalid_argument("duplicate key '" + key + "'");
    seen.emplace(key, parse_poly(line.substr(colon + 1)));
  }
  SymThetaData d;
  auto f = fields(d);
  for (std::size_t i = 0; i < kKeys.size(); ++i) {
    auto it = seen.find(kKeys[i]);
    if (it == seen.end()) throw std::invalid_argument(std::string("missing key ") + kKeys[i]);
    *f[i] = it->second;
  }
  check_degrees(d);
  return d;
}

std::string format_sym_theta(const SymThetaData& data) {
  std::string out;
  const auto f = fields(data);
  for (std::size_t i = 0; i < kKeys.size(); ++i) out += std::string(kKeys[i]) + ": " + format_poly(*f[i]) + "\n";
  return out;
}

MultiPoly discriminant_quintic(const SymThetaData& d) {
  check_degrees(d);
  const MultiPoly det = d.L11 * (d.L22 * d.H - d.Q2 * d.Q2) - d.L12 * (d.L12 * d.H - d.Q2 * d.Q1) +
                        d.Q1 * (d.L12 * d.Q2 - d.L22 * d.Q1);
  if (det.is_zero()) throw DegenerateInput("det(M) vanishes identically");
  return det;
}

MultiPoly cubic_threefold(const SymThetaData& d) {
  check_degrees(d);
  const MultiPoly u1 = MultiPoly::var("u1"), u2 = MultiPoly::var("u2");
  return u1 * u1 * d.L11 + MultiPoly(2) * u1 * u2 * d.L12 + u2 * u2 * d.L22 + MultiPoly(2) * u1 * d.Q1 +
         MultiPoly(2) * u2 * d.Q2 + d.H;
}

SymThetaData extract_matrix(const MultiPoly& cubic) {
  if (!only_vars(cubic, {"u1", "u2", "x0", "x1", "x2"}))
    throw std::invalid_argument("cubic must be in u1, u2, x0, x1, x2");
  if (!cubic.is_zero() && (!cubic.is_homogeneous() || cubic.degree() != 3))
    throw std::invalid_argument("cubic must be homogeneous of degree 3");
  auto part = [&](int a, int b) { return cubic.coefficient("u1", a).coefficient("u2", b); };
  for (int a = 0; a <= 3; ++a)
    if (!part(a, 3 - a).is_zero()) throw std::invalid_argument("cubic does not contain the line x0 = x1 = x2 = 0");
  const MultiPoly half(mpq_class(1, 2));
  SymThetaData d{part(2, 0), half * part(1, 1), part(0, 2), half * part(1, 0), half * part(0, 1), part(0, 0)};
  check_degrees(d);
  return d;
}

MultiPoly contact_conic(const SymThetaData& d) {
  check_degrees(d);
  const MultiPoly t = d.L11 * d.L22 - d.L12 * d.L12;
  if (t.is_zero()) throw DegenerateInput("contact conic vanishes identically");
  return t;
}

std::string_view to_string(Tangency t) {
  switch (t) {
    case Tangency::totally_tangent: return "TotallyTangent";
    case Tangency::not_tangent: return "Not";
    case Tangency::common_component: return "CommonComponent";
  }
  return "?";
}

TangencyReport total_tangency_check(const MultiPoly& quintic, const MultiPoly& conic, std::uint64_t seed) {
  if (quintic.is_zero() || conic.is_zero()) throw DegenerateInput("tangency check on a zero polynomial");
  check_form(quintic, 5, "quintic", false);
  check_form(conic, 2, "conic", false);

  // A shear making both polynomials monic-up-to-scalar in x2, so the
  // resultant is a binary form of full degree 10.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-9, 9);
  TangencyReport rep;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 1000) throw std::runtime_error("no admissible shear found");
    rep.shear0 = draw(rng);
    rep.shear1 = draw(rng);
    const std::map<std::string, mpq_class> at{{"x0", rep.shear0}, {"x1", rep.shear1}, {"x2", 1}};
    if (quintic.eval(at) != 0 && conic.eval(at) != 0) break;
  }
  const std::map<std::string, MultiPoly> shear{
      {"x0", MultiPoly::var("x0") + MultiPoly(rep.shear0) * MultiPoly::var("x2")},
      {"x1", MultiPoly::var("x1") + MultiPoly(rep.shear1) * MultiPoly::var("x2")},
  };
  rep.resultant = resultant(quintic.substitute(shear), conic.substitute(shear), "x2");
  if (rep.resultant.is_zero()) {
    rep.verdict = Tangency::common_component;
    return rep;
  }

  const UPoly affine = to_univariate(rep.resultant.substitute({{"x0", MultiPoly(1)}}), "x1");
  const int at_infinity = rep.resultant.degree() - degree(affine);
  for (const auto& [factor, mult] : squarefree_decomposition(affine))
    rep.multiplicities.push_back(mult);
  if (at_infinity > 0) rep.multiplicities.push_back(at_infinity);
  const bool all_even = std::all_of(rep.multiplicities.begin(), rep.multiplicities.end(), [](int m) { return m % 2 == 0; });
  rep.verdict = all_even ? Tangency::totally_tangent : Tangency::not_tangent;
  return rep;
}

QuarticResult quartic_from_odd_theta(const MultiPoly& lf, const MultiPoly& q, const MultiPoly& h) {
  check_form(lf, 1, "linear form", false);
  check_form(q, 2, "quadratic form", true);
  check_form(h, 3, "cubic form", true);
  QuarticResult r{lf * h - q * q, lf, false};
  if (r.quartic.is_zero()) throw DegenerateInput("quartic vanishes identically");
  try {
    divide_exact(r.quartic + q * q, lf);
    r.verified = true;
  } catch (const std::domain_error&) {
    r.verified = false;
  }
  return r;
}

}  // namespace thetakit
