#include <doctest.h>

#include <random>
#include <stdexcept>

#include "support.hpp"
#include "thetakit/poly.hpp"

using namespace thetakit;

namespace {
MultiPoly P(const char* s) { return parse_poly(s); }
MultiPoly X(const char* v) { return MultiPoly::var(v); }
}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK((X("x0") + X("x1")) * (X("x0") - X("x1")) == P("x0^2 - x1^2"));
  CHECK(P("x0*x2 - x1^2").eval({{"x0", 1}, {"x1", 1}, {"x2", 1}}) == 0);
  CHECK(P("x0*x2").substitute({{"x2", P("x2 + x0")}}) == P("x0*x2 + x0^2"));
  CHECK(P("x0 - x0").is_zero());
  CHECK(P("x0 - x0").vars().empty());
  CHECK(P("(x0 + 1)^3") == P("x0^3 + 3*x0^2 + 3*x0 + 1"));
  CHECK(P("3*x0^2*x1").derivative("x0") == P("6*x0*x1"));
  CHECK(P("x0^2").derivative("x1").is_zero());
  CHECK(P("x0^2*x1 + x1^3").degree() == 3);
  CHECK(P("x0^2*x1 + x1^3").is_homogeneous());
  CHECK_FALSE(P("x0^2 + x1").is_homogeneous());
  CHECK(P("x0^2*x1 + x1^3").degree_in("x1") == 3);
  CHECK(P("0").degree() == -1);
  CHECK(P("x0^2*x1 + 5*x1^3 + x1").coefficient("x1", 3) == P("5"));
  CHECK(P("x0^2*x1 + 5*x1^3 + x1").coefficient("x1", 1) == P("x0^2 + 1"));
  CHECK_THROWS_AS(P("x0").eval({{"x1", 1}}), std::invalid_argument);
}

TEST_CASE("parse and format") {
  const auto p = P("3*x0^2*x1 - 1/2*x2^3");
  CHECK(format_poly(p) == "3*x0^2*x1 - 1/2*x2^3");
  CHECK(format_poly(P("-x1 + x0")) == "x0 - x1");
  CHECK(format_poly(P("0")) == "0");
  CHECK(format_poly(P("-7/3")) == "-7/3");
  CHECK(format_poly(P("2*(x0 - x1)/4")) == "1/2*x0 - 1/2*x1");
  CHECK(P("x0 * -x1") == -P("x0*x1"));
  CHECK_THROWS_AS(P("x0 +"), std::invalid_argument);
  CHECK_THROWS_AS(P("x0 / x1"), std::invalid_argument);
  CHECK_THROWS_AS(P("x0 / 0"), std::invalid_argument);
  CHECK_THROWS_AS(P("(x0"), std::invalid_argument);
  CHECK_THROWS_AS(P("x0 $ 2"), std::invalid_argument);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto f = support::random_form(rng, 4, 9) * MultiPoly(mpq_class(1, 1 + t));
    CHECK(parse_poly(format_poly(f)) == f);
    CHECK(parse_records(format_records(f)) == f);
  }
  CHECK(format_records(P("2*x0 - 1/3")) == "vars x0\n0 -1 3\n1 2 1\n");
  CHECK_THROWS_AS(parse_records("vars x0\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_records("vars x0\n1 2 0\n"), std::invalid_argument);
}

TEST_CASE("exact division") {
  const auto a = P("x0^2 - x1^2"), b = P("x0 + x1");
  CHECK(divide_exact(a, b) == P("x0 - x1"));
  CHECK_THROWS_AS(divide_exact(P("x0^2 + x1^2"), b), std::domain_error);
  CHECK_THROWS_AS(divide_exact(a, P("0")), std::domain_error);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const auto f = support::random_form(rng, 2), g = support::random_form(rng, 3);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(divide_exact(f * g, f) == g);
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 5; ++t) {
      std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
      for (auto& row : m)
        for (auto& e : row) e = support::random_form(rng, 1, 2);
      CHECK(determinant(m) == support::cofactor_det(m));
    }
  // A zero first column forces pivoting.
  const std::vector<std::vector<MultiPoly>> m{{P("0"), P("x0")}, {P("x1"), P("1")}};
  CHECK(determinant(m) == P("-x0*x1"));
  CHECK(determinant({{P("x0"), P("x1")}, {P("x0"), P("x1")}}).is_zero());
  CHECK_THROWS_AS(determinant({{P("1"), P("2")}}), std::invalid_argument);
}

TEST_CASE("resultants") {
  CHECK(resultant(P("x - a"), P("x - b"), "x") == P("a - b"));
  CHECK(resultant(P("x^2 - y"), P("x - y"), "x") == P("y^2 - y"));
  CHECK_THROWS_AS(resultant(P("y"), P("y^2"), "x"), std::invalid_argument);
  // Multiplicativity in the second argument.
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const auto f = support::random_form(rng, 3) , g = support::random_form(rng, 2), h = support::random_form(rng, 1);
    if (f.degree_in("x2") < 1 || g.degree_in("x2") < 1 || h.degree_in("x2") < 1) continue;
    if (f.degree_in("x2") + g.degree_in("x2") + h.degree_in("x2") < 6) continue;  // keep leading terms honest
    CHECK(resultant(f, g * h, "x2") == resultant(f, g, "x2") * resultant(f, h, "x2"));
  }
  // A common factor kills the resultant.
  const auto c = P("x0 + x1 + x2");
  CHECK(resultant(c * P("x2 - x0"), c * P("x2^2 + x1^2"), "x2").is_zero());
}

TEST_CASE("univariate square-free decomposition") {
  const auto u = [](const char* s) { return to_univariate(parse_poly(s), "t"); };
  const auto d = squarefree_decomposition(u("(t - 1)^2 * (t + 2)^3 * (t^2 + 1)"));
  REQUIRE(d.size() == 3);
  CHECK(d[0].first == u("t^2 + 1"));
  CHECK(d[0].second == 1);
  CHECK(d[1].first == u("t - 1"));
  CHECK(d[1].second == 2);
  CHECK(d[2].first == u("t + 2"));
  CHECK(d[2].second == 3);
  const auto e = squarefree_decomposition(u("4*(t - 1)^2 * (t + 2)^3"));
  REQUIRE(e.size() == 2);
  CHECK(e[0].second == 2);
  CHECK(e[1].first == u("t + 2"));
  CHECK(e[1].second == 3);
  CHECK(squarefree_decomposition(u("5")).empty());
  CHECK_THROWS_AS(squarefree_decomposition({}), std::invalid_argument);
  CHECK(poly_gcd(u("t^2 - 1"), u("t^2 + 2*t + 1")) == u("t + 1"));
  CHECK_THROWS_AS(to_univariate(P("x*y"), "x"), std::invalid_argument);
  // Random products rebuild from their decomposition.
  const auto mul = [](const UPoly& a, const UPoly& b) {
    UPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    UPoly p{1};
    for (int k = 0; k < 3; ++k) {
      const UPoly f{mpq_class(static_cast<long>(rng() % 7) - 3), 1};
      const int m = 1 + static_cast<int>(rng() % 3);
      for (int r = 0; r < m; ++r) p = mul(p, f);
    }
    UPoly rebuilt{1};
    for (const auto& [f, m] : squarefree_decomposition(p))
      for (int r = 0; r < m; ++r) rebuilt = mul(rebuilt, f);
    // p is monic here.
    CHECK(rebuilt == p);
  }
}
