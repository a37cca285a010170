#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "support.hpp"
#include "thetakit/detrep.hpp"

using namespace thetakit;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

SymThetaData sample() {
  std::ifstream in(THETAKIT_SOURCE_DIR "/data/sym_theta_sample.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sym_theta(ss.str());
}

// Random invertible integer change of coordinates in x0, x1, x2.
std::map<std::string, MultiPoly> random_gl3(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  while (true) {
    long m[3][3];
    for (auto& row : m)
      for (auto& e : row) e = c(rng);
    const long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det == 0) continue;
    std::map<std::string, MultiPoly> out;
    const char* names[] = {"x0", "x1", "x2"};
    for (int i = 0; i < 3; ++i) {
      MultiPoly img;
      for (int j = 0; j < 3; ++j) img += MultiPoly(m[i][j]) * MultiPoly::var(names[j]);
      out[names[i]] = img;
    }
    return out;
  }
}

}  // namespace

TEST_CASE("discriminant quintic") {
  const auto h = P("x0*x1*x2 + x2^3");
  const SymThetaData d{P("x0"), P("x1"), P("x2"), P("0"), P("0"), h};
  const auto f = discriminant_quintic(d);
  CHECK(f == h * P("x0*x2 - x1^2"));
  CHECK(f.degree() == 5);
  CHECK(f.is_homogeneous());
  CHECK_THROWS_AS(discriminant_quintic(SymThetaData{}), DegenerateInput);
  CHECK_THROWS_AS(discriminant_quintic(SymThetaData{P("x0"), P("x1"), P("x2"), P("x0"), P("x0"), P("x0^2")}),
                  std::invalid_argument);  // H of degree 2

  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto r = support::random_data(rng);
    const std::vector<std::vector<MultiPoly>> m{{r.L11, r.L12, r.Q1}, {r.L12, r.L22, r.Q2}, {r.Q1, r.Q2, r.H}};
    const auto oracle = support::cofactor_det(m);
    if (oracle.is_zero()) continue;
    const auto q = discriminant_quintic(r);
    CHECK(q == oracle);
    CHECK(q.degree() == 5);
    CHECK(q.num_terms() <= 21);
  }
}

TEST_CASE("cubic threefold and its matrix") {
  const SymThetaData only_h{P("0"), P("0"), P("0"), P("0"), P("0"), P("x0^3 - x1*x2^2")};
  CHECK(cubic_threefold(only_h) == P("x0^3 - x1*x2^2"));

  const auto d = extract_matrix(P("u1^2*x0 + 2*u1*x1^2 + x2^3"));
  CHECK(d == SymThetaData{P("x0"), P("0"), P("0"), P("x1^2"), P("0"), P("x2^3")});
  CHECK_THROWS_AS(extract_matrix(P("u1^3 + x0^3")), std::invalid_argument);
  CHECK_THROWS_AS(extract_matrix(P("u1^2*x0 + x0^2")), std::invalid_argument);
  CHECK_THROWS_AS(extract_matrix(P("u1^2*x0 + y^3")), std::invalid_argument);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto r = support::random_data(rng);
    const auto c = cubic_threefold(r);
    CHECK(c.is_homogeneous());
    CHECK(c.degree() == 3);
    // Contains the line: nothing survives x = 0.
    CHECK(c.substitute({{"x0", MultiPoly(0)}, {"x1", MultiPoly(0)}, {"x2", MultiPoly(0)}}).is_zero());
    CHECK(extract_matrix(c) == r);
    CHECK(cubic_threefold(extract_matrix(c)) == c);
  }
}

TEST_CASE("contact conic") {
  CHECK(contact_conic({P("x0"), P("x1"), P("x2"), P("0"), P("0"), P("0")}) == P("x0*x2 - x1^2"));
  CHECK(contact_conic({P("x0"), P("0"), P("x2 - x1"), P("0"), P("0"), P("0")}) == P("x0*x2 - x0*x1"));
  CHECK_THROWS_AS(contact_conic({P("x0"), P("x0"), P("x0"), P("0"), P("0"), P("0")}), DegenerateInput);
}

TEST_CASE("text form of the data") {
  const auto s = sample();
  CHECK(parse_sym_theta(format_sym_theta(s)) == s);
  CHECK_THROWS_AS(parse_sym_theta("L11: x0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sym_theta(format_sym_theta(s) + "L11: x1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sym_theta(format_sym_theta(s) + "M: x1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sym_theta("no colon\n"), std::invalid_argument);
}

TEST_CASE("tangency: the committed sample") {
  const auto s = sample();
  const auto rep = total_tangency_check(discriminant_quintic(s), contact_conic(s));
  CHECK(rep.verdict == Tangency::totally_tangent);
  CHECK(rep.resultant.degree() == 10);
  CHECK(support::binary_form_is_square(rep.resultant, 10));
  for (int m : rep.multiplicities) CHECK(m % 2 == 0);
  CHECK(to_string(rep.verdict) == "TotallyTangent");
}

TEST_CASE("tangency: contact conics of random data are totally tangent") {
  std::mt19937_64 rng(10);
  int tested = 0;
  for (int t = 0; t < 10; ++t) {
    const auto r = support::random_data(rng);
    MultiPoly f, c;
    try {
      f = discriminant_quintic(r);
      c = contact_conic(r);
    } catch (const DegenerateInput&) {
      continue;
    }
    const auto rep = total_tangency_check(f, c, t);
    if (rep.verdict == Tangency::common_component) continue;
    ++tested;
    CHECK(rep.verdict == Tangency::totally_tangent);
    CHECK(support::binary_form_is_square(rep.resultant, 10));
  }
  CHECK(tested >= 5);
}

TEST_CASE("tangency: generic pairs are not tangent") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const auto f = support::random_form(rng, 5), c = support::random_form(rng, 2);
    const auto rep = total_tangency_check(f, c, t);
    CHECK(rep.verdict == Tangency::not_tangent);
    CHECK_FALSE(support::binary_form_is_square(rep.resultant, 10));
  }
}

TEST_CASE("tangency: common components and errors") {
  const auto t = P("x0*x2 - x1^2");
  CHECK(total_tangency_check(t * P("x0^3 + x1^3 + x2^3"), t).verdict == Tangency::common_component);
  // A reducible conic sharing a line with the quintic.
  CHECK(total_tangency_check(P("x0") * P("x1^4 + x2^4"), P("x0*x1")).verdict == Tangency::common_component);
  CHECK_THROWS_AS(total_tangency_check(P("0"), t), DegenerateInput);
  CHECK_THROWS_AS(total_tangency_check(P("x0^4"), t), std::invalid_argument);
  CHECK_THROWS_AS(total_tangency_check(P("x0^5"), P("x0 + x1")), std::invalid_argument);
}

TEST_CASE("tangency: verdict survives coordinate changes") {
  std::mt19937_64 rng(12);
  const auto s = sample();
  const auto f = discriminant_quintic(s), c = contact_conic(s);
  const auto g = support::random_form(rng, 5), d = support::random_form(rng, 2);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_gl3(rng);
    CHECK(total_tangency_check(f.substitute(a), c.substitute(a), t).verdict == Tangency::totally_tangent);
    CHECK(total_tangency_check(g.substitute(a), d.substitute(a), t).verdict == Tangency::not_tangent);
  }
}

TEST_CASE("quartic from an odd theta") {
  const auto r = quartic_from_odd_theta(P("x0"), P("x1^2"), P("x2^3"));
  CHECK(r.quartic == P("x0*x2^3 - x1^4"));
  CHECK(r.bitangent == P("x0"));
  CHECK(r.verified);
  const auto reducible = quartic_from_odd_theta(P("x0 + x1"), P("0"), P("x2^3"));
  CHECK(divide_exact(reducible.quartic, P("x0 + x1")) == P("x2^3"));
  CHECK_THROWS_AS(quartic_from_odd_theta(P("x0"), P("0"), P("0")), DegenerateInput);
  CHECK_THROWS_AS(quartic_from_odd_theta(P("x0^2"), P("0"), P("x2^3")), std::invalid_argument);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const auto l = support::random_form(rng, 1), q = support::random_form(rng, 2), h = support::random_form(rng, 3);
    if (l.is_zero()) continue;
    const auto res = quartic_from_odd_theta(l, q, h);
    CHECK(res.verified);
    // Independent check: F + Q^2 = L * H exactly.
    CHECK(res.quartic + q * q == l * h);
  }
}
