#pragma once

// Independent oracles and random generators shared by the unit tests and the
// acceptance binary. Nothing here calls the code it is meant to check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "thetakit/detrep.hpp"
#include "thetakit/lattice.hpp"
#include "thetakit/poly.hpp"
#include "thetakit/spin.hpp"

namespace support {

using thetakit::DivisorClass;
using thetakit::MultiPoly;

// ---------------------------------------------------------------------------
// Lattice

inline int diag_pair(const std::vector<int>& a, const std::vector<int>& b) {
  int s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
  return s;
}

// Every vector in the box |a| <= amax, |b_i| <= bmax with the given D.D and
// D.K, found by brute force.
inline std::vector<DivisorClass> box_search(int degree, int square, int canonical, int amax, int bmax) {
  const int n = 9 - degree;
  std::vector<int> k(n + 1, 1);
  k[0] = -3;
  std::vector<DivisorClass> out;
  std::vector<int> v(n + 1, -bmax);
  for (int a = -amax; a <= amax; ++a) {
    v[0] = a;
    std::fill(v.begin() + 1, v.end(), -bmax);
    while (true) {
      if (diag_pair(v, v) == square && diag_pair(v, k) == canonical) out.emplace_back(v);
      int i = 1;
      while (i <= n && v[i] == bmax) v[i++] = -bmax;
      if (i > n) break;
      ++v[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Graphs

inline thetakit::DualGraph random_stable_graph(std::mt19937_64& rng, int max_edges) {
  std::uniform_int_distribution<int> nv_d(1, 4), g_d(0, 2);
  while (true) {
    const int nv = nv_d(rng);
    std::vector<int> genera(nv);
    for (auto& g : genera) g = g_d(rng);
    const int ne = std::uniform_int_distribution<int>(0, max_edges)(rng);
    std::uniform_int_distribution<int> v_d(0, nv - 1);
    std::vector<std::pair<int, int>> edges(ne);
    for (auto& e : edges) e = {v_d(rng), v_d(rng)};
    thetakit::DualGraph g(genera, edges);
    try {
      g.validate();
      return g;
    } catch (const std::invalid_argument&) {
    }
  }
}

// ---------------------------------------------------------------------------
// Polynomials

inline MultiPoly random_form(std::mt19937_64& rng, int degree, int coeff_bound = 3,
                             const std::vector<std::string>& vars = {"x0", "x1", "x2"}) {
  std::uniform_int_distribution<int> c(-coeff_bound, coeff_bound);
  std::map<MultiPoly::Exponents, mpq_class> terms;
  // All monomials of the given degree.
  std::vector<int> e(vars.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == vars.size()) {
      e[i] = left;
      terms[e] = c(rng);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return MultiPoly::from_terms(vars, terms);
}

inline thetakit::SymThetaData random_data(std::mt19937_64& rng) {
  return {random_form(rng, 1), random_form(rng, 1), random_form(rng, 1),
          random_form(rng, 2), random_form(rng, 2), random_form(rng, 3)};
}

// Laplace expansion along the first row.
inline MultiPoly cofactor_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  if (n == 1) return m[0][0];
  MultiPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const MultiPoly t = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) det += t;
    else det -= t;
  }
  return det;
}

// Is the univariate polynomial (coefficients low to high) c * s^2 over Q?
// Decided by extracting a square root of the monic polynomial coefficient by
// coefficient from the top and checking s^2 exactly.
inline bool is_constant_times_square(std::vector<mpq_class> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return true;
  const int d = static_cast<int>(p.size()) - 1;
  if (d % 2 != 0) return false;
  const mpq_class lc = p.back();
  for (auto& c : p) c /= lc;
  const int h = d / 2;
  std::vector<mpq_class> s(h + 1, 0);
  s[h] = 1;
  for (int k = h - 1; k >= 0; --k) {
    // coefficient of x^{h+k} in s^2 determines s[k]
    mpq_class acc = 0;
    for (int i = k + 1; i <= h; ++i) {
      const int j = h + k - i;
      if (j > k && j <= h) acc += s[i] * s[j];
    }
    s[k] = (p[h + k] - acc) / 2;
  }
  std::vector<mpq_class> sq(2 * h + 1, 0);
  for (int i = 0; i <= h; ++i)
    for (int j = 0; j <= h; ++j) sq[i + j] += s[i] * s[j];
  return sq == p;
}

// Binary form of degree `deg` in x0, x1 -> is it c * s^2 as a form? Even
// vanishing order at x0 = 0 plus a square affine part.
inline bool binary_form_is_square(const MultiPoly& f, int deg) {
  std::vector<mpq_class> affine(deg + 1, 0);
  for (const auto& [e, c] : f.terms()) {
    int ex1 = 0;
    for (std::size_t i = 0; i < f.vars().size(); ++i)
      if (f.vars()[i] == "x1") ex1 = e[i];
    affine[ex1] = c;
  }
  int top = deg;
  while (top >= 0 && affine[top] == 0) --top;
  if ((deg - top) % 2 != 0) return false;
  affine.resize(top + 1);
  return is_constant_times_square(affine);
}

}  // namespace support
