#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "thetakit/nodal.hpp"

using namespace thetakit;

namespace {

DivisorClass e_diff(int n, int i, int j) {  // E_i - E_j in a lattice with n points
  std::vector<int> v(n + 1, 0);
  v[i] = 1;
  v[j] = -1;
  return DivisorClass(v);
}

NodalConfig node_config() { return NodalConfig(PicardLattice(2), {DivisorClass{1, -1, -1, -1, 0, 0, 0, 0}}); }
NodalConfig cusp_config() { return NodalConfig(PicardLattice(3), {e_diff(6, 1, 2), e_diff(6, 2, 3)}); }
NodalConfig cusp2_config() { return NodalConfig(PicardLattice(2), {e_diff(7, 1, 2), e_diff(7, 2, 3)}); }
NodalConfig e7_config() {
  std::vector<DivisorClass> r;
  for (int i = 1; i <= 6; ++i) r.push_back(e_diff(7, i, i + 1));
  r.push_back(DivisorClass{1, -1, -1, -1, 0, 0, 0, 0});
  return NodalConfig(PicardLattice(2), r);
}

using Hist = std::map<int, int>;

}  // namespace

TEST_CASE("ADE types") {
  const PicardLattice l2(2), l3(3);
  CHECK(NodalConfig(l2, {}).ade_type() == "trivial");
  CHECK(node_config().ade_type() == "A1");
  CHECK(cusp_config().ade_type() == "A2");
  CHECK(e7_config().ade_type() == "E7");
  CHECK(NodalConfig(l2, {e_diff(7, 1, 2), e_diff(7, 3, 4)}).ade_type() == "A1+A1");
  CHECK(NodalConfig(l2, {e_diff(7, 1, 2), e_diff(7, 4, 5), e_diff(7, 5, 6)}).ade_type() == "A1+A2");
  CHECK(NodalConfig(l2, {e_diff(7, 3, 4), e_diff(7, 2, 3), e_diff(7, 4, 5), DivisorClass{1, -1, -1, -1, 0, 0, 0, 0}})
            .ade_type() == "D4");
  std::vector<DivisorClass> e6;
  for (const auto& r : l3.simple_roots()) e6.push_back(r);
  CHECK(NodalConfig(l3, e6).ade_type() == "E6");
  std::vector<DivisorClass> a6;
  for (int i = 1; i <= 6; ++i) a6.push_back(e_diff(7, i, i + 1));
  CHECK(NodalConfig(l2, a6).ade_type() == "A6");
  // L-E1-E2-E3 meets only E3-E4 in the chain E1-E2, ..., E5-E6: legs 2, 2, 1.
  std::vector<DivisorClass> branch{e_diff(7, 1, 2), e_diff(7, 2, 3), e_diff(7, 3, 4), e_diff(7, 4, 5),
                                   e_diff(7, 5, 6), DivisorClass{1, -1, -1, -1, 0, 0, 0, 0}};
  CHECK(NodalConfig(l2, branch).ade_type() == "E6");
}

TEST_CASE("invalid configurations") {
  const PicardLattice lat(2);
  CHECK_THROWS_AS(NodalConfig(lat, {lat.exceptional(1)}), std::invalid_argument);  // not a root
  CHECK_THROWS_AS(NodalConfig(lat, {e_diff(7, 1, 2), e_diff(7, 1, 3)}), std::invalid_argument);  // product -1
  CHECK_THROWS_AS(NodalConfig(lat, {e_diff(7, 1, 2), e_diff(7, 2, 1)}), std::invalid_argument);  // product 2
  // Cycle of three roots: affine A2, not negative definite.
  CHECK_THROWS_AS(NodalConfig(lat, {e_diff(7, 1, 2), e_diff(7, 2, 3), e_diff(7, 3, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(NodalConfig(lat, {DivisorClass{0, 1, -1}}), std::invalid_argument);  // wrong rank
}

TEST_CASE("congruence agrees with explicit root combinations") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const auto& cfg : {node_config(), cusp2_config(), e7_config()}) {
    const auto lines = cfg.lattice().enumerate(ClassKind::exceptional);
    for (int t = 0; t < 100; ++t) {
      DivisorClass x = lines[rng() % lines.size()];
      DivisorClass y = x;
      for (const auto& r : cfg.roots()) y = y + c(rng) * r;
      CHECK(cfg.congruent(x, y));
      CHECK(cfg.congruent(y, x));
    }
  }
  // E1 and E2 are congruent only when E1-E2 lies in the span.
  const auto node = node_config();
  const auto& lat = node.lattice();
  CHECK_FALSE(node.congruent(lat.exceptional(1), lat.exceptional(2)));
  CHECK(cusp2_config().congruent(lat.exceptional(1), lat.exceptional(3)));
  CHECK(node.congruent(lat.line_class(), lat.line_class() + DivisorClass{1, -1, -1, -1, 0, 0, 0, 0}));
  // 2(E1 - E2) is in the span, but a half of it is not.
  const NodalConfig a1(lat, {e_diff(7, 1, 2)});
  CHECK(a1.congruent(lat.exceptional(1) + lat.exceptional(1), lat.exceptional(2) + lat.exceptional(2)));
  CHECK_FALSE(a1.congruent(lat.exceptional(1), lat.line_class()));
}

TEST_CASE("congruence classes: serial equals parallel, parts are sorted") {
  for (const auto& cfg : {node_config(), cusp2_config(), e7_config()}) {
    const auto bd = cfg.lattice().enumerate(ClassKind::blow_down);
    const auto s = congruence_classes(cfg, bd, Exec::serial);
    CHECK(s == congruence_classes(cfg, bd, Exec::parallel));
    std::size_t total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(std::is_sorted(s[i].begin(), s[i].end()));
      if (i) CHECK(s[i - 1].front() < s[i].front());
      total += s[i].size();
    }
    CHECK(total == bd.size());
  }
  const auto node = node_config();
  std::vector<DivisorClass> mixed{node.lattice().exceptional(1), node.lattice().line_class()};
  CHECK_THROWS_AS(congruence_classes(node, mixed), std::invalid_argument);
}

TEST_CASE("smooth surfaces: every multiplicity is 1") {
  const NodalConfig s2(PicardLattice(2), {}), s3(PicardLattice(3), {});
  CHECK(line_scheme(s2).histogram() == Hist{{1, 56}});
  CHECK(bitangent_scheme(s2).histogram() == Hist{{1, 28}});
  CHECK(blowdown_scheme(s2).histogram() == Hist{{1, 576}});
  CHECK(aronhold_scheme(s2).histogram() == Hist{{1, 288}});
  CHECK(even_theta_scheme(s2).histogram() == Hist{{1, 36}});
  CHECK(line_scheme(s3).histogram() == Hist{{1, 27}});
  CHECK(double_six_scheme(s3).histogram() == Hist{{1, 36}});
}

TEST_CASE("node: one A1 root") {
  const auto cfg = node_config();
  const auto lines = line_scheme(cfg);
  CHECK(lines.histogram() == Hist{{1, 32}, {2, 12}});
  CHECK(lines.total == 56);
  const auto bit = bitangent_scheme(cfg);
  CHECK(bit.histogram() == Hist{{1, 16}, {2, 6}});
  CHECK(bit.total == 28);
  const auto theta = even_theta_scheme(cfg);
  CHECK(theta.histogram() == Hist{{1, 16}, {2, 10}});
  CHECK(theta.total == 36);
}

TEST_CASE("node: intersection profile") {
  // Reference rows, in family order.
  const std::vector<std::array<int, 5>> expected{
      {0, 1, 0, 0, 0},    {4, 18, 12, 1, 0},  {12, 39, 36, 18, 0}, {12, 40, 48, 36, 4}, {0, 3, 0, 4, 0},
      {0, 0, 0, 1, 0},    {0, 1, 12, 18, 4},  {0, 18, 36, 39, 12}, {4, 36, 48, 40, 12}, {0, 4, 0, 3, 0},
  };
  const auto prof = intersection_profile(node_config());
  REQUIRE(prof.rows.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CAPTURE(prof.rows[i].family);
    CHECK(prof.rows[i].counts == expected[i]);
  }
  // The middle total is the column sum, 192.
  CHECK(prof.totals == std::array<int, 5>{32, 160, 192, 160, 32});
  // Geiser sends F to -F, so row i and row i+5 are mirror images.
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t c = 0; c < 5; ++c) CHECK(prof.rows[i].counts[c] == prof.rows[i + 5].counts[4 - c]);
  CHECK_THROWS_AS(intersection_profile(cusp2_config()), std::invalid_argument);
}

TEST_CASE("blow-down families") {
  const PicardLattice lat(2);
  std::array<int, 10> sizes{};
  for (const auto& x : lat.enumerate(ClassKind::blow_down)) ++sizes[blowdown_family(x)];
  CHECK(sizes == std::array<int, 10>{1, 35, 105, 140, 7, 1, 35, 105, 140, 7});
  for (const auto& x : lat.enumerate(ClassKind::blow_down))
    CHECK((blowdown_family(lat.geiser(x)) + 5) % 10 == blowdown_family(x));
  CHECK(blowdown_family_names()[0] == "L");
}

TEST_CASE("cusp: A2 on the cubic surface") {
  const auto cfg = cusp_config();
  CHECK(line_scheme(cfg).histogram() == Hist{{1, 9}, {3, 6}});
  CHECK(double_six_scheme(cfg).histogram() == Hist{{1, 6}, {3, 10}});
  // The roots generate S_3 on E1, E2, E3; it moves 3L-2E1-E2-E4-E5-E6 through
  // six congruent classes, so one point has multiplicity 6.
  const auto bd = blowdown_scheme(cfg);
  CHECK(bd.histogram() == Hist{{1, 12}, {3, 18}, {6, 1}});
  CHECK(bd.total == 72);
}

TEST_CASE("cusp: A2 on the degree-2 surface") {
  const auto cfg = cusp2_config();
  CHECK(bitangent_scheme(cfg).histogram() == Hist{{1, 10}, {3, 6}});
  CHECK(even_theta_scheme(cfg).histogram() == Hist{{1, 6}, {3, 10}});
}

TEST_CASE("E7: everything collapses") {
  const auto cfg = e7_config();
  CHECK(bitangent_scheme(cfg).histogram() == Hist{{28, 1}});
  CHECK(aronhold_scheme(cfg).histogram() == Hist{{288, 1}});
  CHECK(line_scheme(cfg).histogram() == Hist{{56, 1}});  // differences of lines lie in K-perp
  CHECK(even_theta_scheme(cfg).histogram() == Hist{{36, 1}});
}

TEST_CASE("quotient schemes need the right degree") {
  CHECK_THROWS_AS(bitangent_scheme(cusp_config()), std::invalid_argument);
  CHECK_THROWS_AS(double_six_scheme(node_config()), std::invalid_argument);
  CHECK_THROWS_AS(even_theta_scheme(cusp_config()), std::invalid_argument);
}

TEST_CASE("quotient partners") {
  const auto cfg = node_config();
  const auto& lat = cfg.lattice();
  for (const auto& p : bitangent_scheme(cfg).points) {
    // Members are closed under the involution.
    std::set<DivisorClass> m(p.members.begin(), p.members.end());
    for (const auto& x : p.members) CHECK(m.count(lat.geiser(x)) == 1);
    CHECK(m.count(p.partner) == 1);
  }
}
