#include "thetakit/lattice.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "exact_linalg.hpp"

namespace thetakit {

int max_threads() { return omp_get_max_threads(); }

// ---------------------------------------------------------------------------
// DivisorClass

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  if (size() != other.size()) throw std::invalid_argument("divisor class length mismatch");
  std::vector<int> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coeffs_[i];
  return DivisorClass(std::move(out));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  if (size() != other.size()) throw std::invalid_argument("divisor class length mismatch");
  std::vector<int> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.coeffs_[i];
  return DivisorClass(std::move(out));
}

DivisorClass DivisorClass::operator-() const { return -1 * *this; }

DivisorClass operator*(int k, const DivisorClass& x) {
  std::vector<int> out(x.coeffs_);
  for (int& c : out) c *= k;
  return DivisorClass(std::move(out));
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

std::size_t DivisorClassHash::operator()(const DivisorClass& x) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int c : x.coeffs()) {
    h ^= static_cast<std::size_t>(c + 0x9e3779b9);
    h *= 1099511628211ull;
  }
  return h;
}

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::exceptional: return "exceptional";
    case ClassKind::root: return "root";
    case ClassKind::blow_down: return "blowdown";
  }
  return "?";
}

ClassKind parse_class_kind(std::string_view text) {
  if (text == "exceptional" || text == "lines") return ClassKind::exceptional;
  if (text == "root" || text == "roots") return ClassKind::root;
  if (text == "blowdown" || text == "blow-down" || text == "blowdowns") return ClassKind::blow_down;
  throw std::invalid_argument("unknown class kind: " + std::string(text));
}

namespace {

struct KindConstraints {
  int canonical_degree;  // D.K
  int square;            // D.D
};

KindConstraints constraints_of(ClassKind kind) {
  switch (kind) {
    case ClassKind::exceptional: return {-1, -1};
    case ClassKind::root: return {0, -2};
    case ClassKind::blow_down: return {-3, 1};
  }
  throw std::logic_error("bad kind");
}

// Fills E-coefficients c_first..c_{n-1} with sum == target_sum and
// sum of squares == target_sq. Cauchy-Schwarz prunes the tail.
void fill_tail(std::vector<int>& coeffs, std::size_t pos, long target_sum, long target_sq,
               std::vector<DivisorClass>& out) {
  const std::size_t n = coeffs.size();
  const long remaining = static_cast<long>(n - pos);
  if (remaining == 0) {
    if (target_sum == 0 && target_sq == 0) out.emplace_back(coeffs);
    return;
  }
  if (target_sq < 0 || target_sum * target_sum > remaining * target_sq) return;
  if (((target_sum - target_sq) & 1) != 0) return;  // c^2 = c mod 2
  const int bound = static_cast<int>(std::sqrt(static_cast<double>(target_sq)) + 1e-9);
  for (int c = -bound; c <= bound; ++c) {
    const long sq = target_sq - static_cast<long>(c) * c;
    if (sq < 0) continue;
    coeffs[pos] = c;
    fill_tail(coeffs, pos + 1, target_sum - c, sq, out);
  }
  coeffs[pos] = 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// PicardLattice

PicardLattice::PicardLattice(int degree) : degree_(degree) {
  if (degree != 2 && degree != 3)
    throw std::invalid_argument("Del Pezzo degree must be 2 or 3, got " + std::to_string(degree));
  std::vector<int> k(rank(), 1);
  k[0] = -3;
  canonical_ = DivisorClass(std::move(k));
}

void PicardLattice::check_member(const DivisorClass& x) const {
  if (static_cast<int>(x.size()) != rank())
    throw std::invalid_argument("class " + format_class(x) + " has length " +
                                std::to_string(x.size()) + ", lattice rank is " +
                                std::to_string(rank()));
}

int PicardLattice::pair(const DivisorClass& a, const DivisorClass& b) const {
  check_member(a);
  check_member(b);
  int acc = a[0] * b[0];
  for (int i = 1; i < rank(); ++i) acc -= a[i] * b[i];
  return acc;
}

DivisorClass PicardLattice::make_class(std::vector<int> coeffs) const {
  DivisorClass x(std::move(coeffs));
  check_member(x);
  return x;
}

DivisorClass PicardLattice::line_class() const {
  std::vector<int> c(rank(), 0);
  c[0] = 1;
  return DivisorClass(std::move(c));
}

DivisorClass PicardLattice::exceptional(int i) const {
  if (i < 1 || i > num_points()) throw std::out_of_range("point index out of range");
  std::vector<int> c(rank(), 0);
  c[i] = 1;
  return DivisorClass(std::move(c));
}

DivisorClass PicardLattice::line_through(int i, int j) const {
  if (i == j) throw std::invalid_argument("L_{i,j} needs distinct points");
  return line_class() - exceptional(i) - exceptional(j);
}

DivisorClass PicardLattice::conic_missing(int i) const {
  if (degree_ != 3) throw std::invalid_argument("C_i is defined in degree 3");
  std::vector<int> c(rank(), -1);
  c[0] = 2;
  c[i] = 0;
  return make_class(std::move(c));
}

DivisorClass PicardLattice::conic_missing(int i, int j) const {
  if (degree_ != 2) throw std::invalid_argument("C_{i,j} is defined in degree 2");
  if (i == j) throw std::invalid_argument("C_{i,j} needs distinct points");
  std::vector<int> c(rank(), -1);
  c[0] = 2;
  c.at(i) = 0;
  c.at(j) = 0;
  return make_class(std::move(c));
}

DivisorClass PicardLattice::nodal_cubic(int i) const {
  if (degree_ != 2) throw std::invalid_argument("D_i is defined in degree 2");
  std::vector<int> c(rank(), -1);
  c[0] = 3;
  c.at(i) = -2;
  return make_class(std::move(c));
}

std::optional<ClassKind> PicardLattice::classify(const DivisorClass& x) const {
  const int sq = pair(x, x);
  const int k = pair(x, canonical_);
  for (ClassKind kind : {ClassKind::exceptional, ClassKind::root, ClassKind::blow_down}) {
    const auto c = constraints_of(kind);
    if (sq == c.square && k == c.canonical_degree) return kind;
  }
  return std::nullopt;
}

bool PicardLattice::is_root(const DivisorClass& x) const {
  return static_cast<int>(x.size()) == rank() && classify(x) == ClassKind::root;
}

std::vector<DivisorClass> PicardLattice::enumerate(ClassKind kind, Exec exec) const {
  // D = aL + sum c_i E_i has D.K = -3a - sum c_i and D.D = a^2 - sum c_i^2.
  // Cauchy-Schwarz on the E-part, (sum c)^2 <= n sum c^2, gives
  // d a^2 + 6 k a + k^2 + n s <= 0, a bounded range since d > 0.
  const auto [k, s] = constraints_of(kind);
  const long n = num_points();
  const long d = degree_;
  auto admissible = [&](long a) { return d * a * a + 6L * k * a + static_cast<long>(k) * k + n * s <= 0; };
  const double disc = 36.0 * k * k - 4.0 * d * (static_cast<double>(k) * k + n * s);
  std::vector<long> degrees;
  if (disc >= 0) {
    const long lo = static_cast<long>(std::floor((-6.0 * k - std::sqrt(disc)) / (2.0 * d))) - 1;
    const long hi = static_cast<long>(std::ceil((-6.0 * k + std::sqrt(disc)) / (2.0 * d))) + 1;
    for (long a = lo; a <= hi; ++a)
      if (admissible(a)) degrees.push_back(a);
  }

  // Work items: (a, c_1). The first E-coefficient spreads the load.
  struct Item {
    long a;
    int c1;
  };
  std::vector<Item> items;
  for (long a : degrees) {
    const long sq = a * a - s;
    const int bound = static_cast<int>(std::sqrt(static_cast<double>(sq)) + 1e-9);
    for (int c1 = -bound; c1 <= bound; ++c1) items.push_back({a, c1});
  }

  auto run_item = [&](const Item& it, std::vector<DivisorClass>& out) {
    std::vector<int> coeffs(rank(), 0);
    coeffs[0] = static_cast<int>(it.a);
    coeffs[1] = it.c1;
    const long target_sum = -3 * it.a - k - it.c1;
    const long target_sq = it.a * it.a - s - static_cast<long>(it.c1) * it.c1;
    fill_tail(coeffs, 2, target_sum, target_sq, out);
  };

  std::vector<DivisorClass> result;
  if (exec == Exec::serial) {
    for (const auto& it : items) run_item(it, result);
  } else {
    std::vector<std::vector<DivisorClass>> per_item(items.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < items.size(); ++i) run_item(items[i], per_item[i]);
    for (auto& part : per_item) result.insert(result.end(), part.begin(), part.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

DivisorClass PicardLattice::reflect(const DivisorClass& root, const DivisorClass& x) const {
  if (!is_root(root)) throw std::invalid_argument("reflection needs a root, got " + format_class(root));
  return x + pair(x, root) * root;
}

std::vector<DivisorClass> PicardLattice::simple_roots() const {
  std::vector<DivisorClass> roots;
  roots.push_back(line_class() - exceptional(1) - exceptional(2) - exceptional(3));
  for (int i = 1; i < num_points(); ++i) roots.push_back(exceptional(i) - exceptional(i + 1));
  return roots;
}

std::vector<DivisorClass> PicardLattice::weyl_orbit(const DivisorClass& seed, Exec exec) const {
  const auto roots = simple_roots();
  return orbit_under(*this, roots, seed, exec);
}

std::int64_t PicardLattice::weyl_order() const {
  const auto roots = simple_roots();
  return reflection_group_order(*this, roots);
}

DivisorClass PicardLattice::geiser(const DivisorClass& x) const {
  if (degree_ != 2) throw std::invalid_argument("the Geiser involution needs degree 2");
  return -x + pair(x, canonical_) * canonical_;
}

DivisorClass PicardLattice::double_six_partner(const DivisorClass& x) const {
  if (degree_ != 3) throw std::invalid_argument("double six partners need degree 3");
  if (classify(x) != ClassKind::blow_down)
    throw std::invalid_argument(format_class(x) + " is not a blow-down class");
  return -2 * canonical_ - x;
}

std::vector<DivisorClass> PicardLattice::contracted_by(const DivisorClass& blow_down) const {
  if (classify(blow_down) != ClassKind::blow_down)
    throw std::invalid_argument(format_class(blow_down) + " is not a blow-down class");
  static const std::vector<DivisorClass> deg2 = PicardLattice(2).enumerate(ClassKind::exceptional, Exec::serial);
  static const std::vector<DivisorClass> deg3 = PicardLattice(3).enumerate(ClassKind::exceptional, Exec::serial);
  std::vector<DivisorClass> out;
  for (const auto& e : degree_ == 2 ? deg2 : deg3)
    if (pair(e, blow_down) == 0) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Reflection groups

std::vector<DivisorClass> orbit_under(const PicardLattice& lat, std::span<const DivisorClass> roots,
                                      const DivisorClass& seed, Exec exec) {
  lat.check_member(seed);
  for (const auto& r : roots)
    if (!lat.is_root(r)) throw std::invalid_argument("orbit generator is not a root: " + format_class(r));

  std::unordered_set<DivisorClass, DivisorClassHash> seen{seed};
  std::vector<DivisorClass> frontier{seed};
  while (!frontier.empty()) {
    std::vector<std::vector<DivisorClass>> images(frontier.size());
    auto expand = [&](std::size_t i) {
      images[i].reserve(roots.size());
      for (const auto& r : roots) images[i].push_back(frontier[i] + lat.pair(frontier[i], r) * r);
    };
    if (exec == Exec::serial) {
      for (std::size_t i = 0; i < frontier.size(); ++i) expand(i);
    } else {
#pragma omp parallel for schedule(static)
      for (std::size_t i = 0; i < frontier.size(); ++i) expand(i);
    }
    std::vector<DivisorClass> next;
    for (auto& batch : images)
      for (auto& y : batch)
        if (seen.insert(y).second) next.push_back(std::move(y));
    frontier = std::move(next);
  }
  std::vector<DivisorClass> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t reflection_group_order(const PicardLattice& lat, std::span<const DivisorClass> simple) {
  if (simple.empty()) return 1;
  const std::size_t m = simple.size();
  detail::IntMatrix gram(m, std::vector<long>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = lat.pair(simple[i], simple[j]);

  // Weight w in the root span with w.alpha_j = delta_{j,last}. Its stabilizer
  // is the parabolic subgroup on the remaining roots.
  const auto inv = detail::inverse(gram);
  std::vector<mpq_class> c(m);
  for (std::size_t j = 0; j < m; ++j) c[j] = inv[j][m - 1];
  mpz_class denom = 1;
  for (const auto& q : c) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
  std::vector<int> w(lat.rank(), 0);
  for (std::size_t j = 0; j < m; ++j) {
    const mpz_class scaled = c[j].get_num() * (denom / c[j].get_den());
    const int sj = static_cast<int>(scaled.get_si());
    for (int t = 0; t < lat.rank(); ++t) w[t] += sj * simple[j][t];
  }
  const auto orbit = orbit_under(lat, simple, DivisorClass(std::move(w)));
  return static_cast<std::int64_t>(orbit.size()) * reflection_group_order(lat, simple.first(m - 1));
}

// ---------------------------------------------------------------------------
// Text forms

std::string format_class(const DivisorClass& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(x[i]);
  }
  return out + "]";
}

std::string format_symbolic(const DivisorClass& x) {
  std::string out;
  auto term = [&out](int c, const std::string& name) {
    if (c == 0) return;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += name;
  };
  if (x.size() == 0) return "0";
  term(x[0], "L");
  for (std::size_t i = 1; i < x.size(); ++i) term(x[i], "E" + std::to_string(i));
  return out.empty() ? "0" : out;
}

DivisorClass parse_class(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse divisor class '" + std::string(text) + "'");
  }
  if (!j.is_array()) throw std::invalid_argument("divisor class must be an integer array");
  std::vector<int> coeffs;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("divisor class entries must be integers");
    coeffs.push_back(v.get<int>());
  }
  return DivisorClass(std::move(coeffs));
}

std::vector<DivisorClass> parse_class_lines(std::string_view text) {
  std::vector<DivisorClass> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_class(line));
  }
  return out;
}

}  // namespace thetakit
