#include "thetakit/nodal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "exact_linalg.hpp"

namespace thetakit {

namespace {

struct DynkinComponent {
  char letter;
  int rank;
  auto operator<=>(const DynkinComponent&) const = default;
};

// Classifies a connected Dynkin diagram. Positive definiteness has already
// been checked, so the graph is a tree of type A, D or E.
DynkinComponent classify_component(const std::vector<std::vector<int>>& adj, const std::vector<int>& vertices) {
  const int n = static_cast<int>(vertices.size());
  int branch = -1;
  for (int v : vertices) {
    const auto deg = adj[v].size();
    if (deg > 3) throw std::invalid_argument("root diagram has a vertex of degree > 3");
    if (deg == 3) {
      if (branch != -1) throw std::invalid_argument("root diagram has two branch points");
      branch = v;
    }
  }
  if (branch == -1) return {'A', n};

  std::vector<int> legs;
  for (int start : adj[branch]) {
    int prev = branch, cur = start, len = 1;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next == -1) break;
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return {'D', n};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return {'E', n};
  throw std::invalid_argument("root diagram is not of ADE type");
}

void check_same_kind(const PicardLattice& lat, const std::vector<DivisorClass>& classes) {
  std::optional<ClassKind> kind;
  for (const auto& x : classes) {
    const auto k = lat.classify(x);
    if (!k) throw std::invalid_argument(format_class(x) + " is not an exceptional, root or blow-down class");
    if (kind && *kind != *k) throw std::invalid_argument("congruence classes need inputs of a single kind");
    kind = k;
  }
}

MultiplicityScheme scheme_from_parts(std::string kind, std::vector<std::vector<DivisorClass>> parts) {
  MultiplicityScheme s;
  s.kind = std::move(kind);
  for (auto& part : parts) {
    SchemePoint p;
    p.multiplicity = static_cast<int>(part.size());
    p.partner = part.front();
    p.members = std::move(part);
    s.total += p.multiplicity;
    s.points.push_back(std::move(p));
  }
  return s;
}

// Quotient of a congruence partition by an involution that permutes the
// parts. A point's multiplicity is half the number of classes it collects.
MultiplicityScheme quotient_by(std::string kind, const std::vector<std::vector<DivisorClass>>& parts,
                               const std::function<DivisorClass(const DivisorClass&)>& involution) {
  std::unordered_map<DivisorClass, std::size_t, DivisorClassHash> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& x : parts[i]) part_of.emplace(x, i);

  MultiplicityScheme s;
  s.kind = std::move(kind);
  std::vector<bool> used(parts.size(), false);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (used[i]) continue;
    const std::size_t j = part_of.at(involution(parts[i].front()));
    for (const auto& x : parts[i])
      if (part_of.at(involution(x)) != j) throw std::logic_error("involution does not descend to the quotient");
    used[i] = used[j] = true;

    SchemePoint p;
    p.members = parts[i];
    if (j != i) p.members.insert(p.members.end(), parts[j].begin(), parts[j].end());
    std::sort(p.members.begin(), p.members.end());
    if (p.members.size() % 2 != 0) throw std::logic_error("odd orbit under a fixed-point-free involution");
    p.multiplicity = static_cast<int>(p.members.size() / 2);
    p.partner = parts[j].front();
    s.total += p.multiplicity;
    s.points.push_back(std::move(p));
  }
  std::sort(s.points.begin(), s.points.end(),
            [](const SchemePoint& a, const SchemePoint& b) { return a.representative() < b.representative(); });
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Validation

std::string validate_config(const PicardLattice& lat, const std::vector<DivisorClass>& roots) {
  for (const auto& r : roots) {
    lat.check_member(r);
    if (lat.pair(r, r) != -2 || lat.pair(r, lat.canonical()) != 0)
      throw std::invalid_argument(format_class(r) + " is not a root (need D.D = -2, D.K = 0)");
  }
  const std::size_t m = roots.size();
  if (m == 0) return "trivial";

  detail::IntMatrix neg_gram(m, std::vector<long>(m));
  std::vector<std::vector<int>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int p = lat.pair(roots[i], roots[j]);
      neg_gram[i][j] = -p;
      if (i == j) continue;
      if (p != 0 && p != 1)
        throw std::invalid_argument("roots " + format_class(roots[i]) + " and " + format_class(roots[j]) +
                                    " have product " + std::to_string(p) + ", expected 0 or 1");
      if (p == 1) adj[i].push_back(static_cast<int>(j));
    }
  }
  for (const auto& minor : detail::leading_minors(neg_gram))
    if (minor <= 0) throw std::invalid_argument("root span is not negative definite");

  std::vector<int> comp(m, -1);
  std::vector<DynkinComponent> parts;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> vertices{static_cast<int>(s)};
    comp[s] = static_cast<int>(parts.size());
    for (std::size_t k = 0; k < vertices.size(); ++k)
      for (int w : adj[vertices[k]])
        if (comp[w] == -1) {
          comp[w] = comp[s];
          vertices.push_back(w);
        }
    parts.push_back(classify_component(adj, vertices));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "+";
    out += p.letter + std::to_string(p.rank);
  }
  return out;
}

NodalConfig::NodalConfig(PicardLattice lattice, std::vector<DivisorClass> roots)
    : lattice_(std::move(lattice)), roots_(std::move(roots)) {
  ade_type_ = validate_config(lattice_, roots_);
  const std::size_t m = roots_.size();
  if (m == 0) return;
  detail::IntMatrix gram(m, std::vector<long>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = lattice_.pair(roots_[i], roots_[j]);
  const mpz_class det = detail::leading_minors(gram).back();
  const auto inv = detail::inverse(gram);
  determinant_ = det.get_si();
  adjugate_.assign(m, std::vector<long>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const mpq_class a = inv[i][j] * det;
      if (a.get_den() != 1) throw std::logic_error("adjugate is not integral");
      adjugate_[i][j] = a.get_num().get_si();
    }
}

bool NodalConfig::congruent(const DivisorClass& x, const DivisorClass& y) const {
  const DivisorClass v = x - y;
  if (roots_.empty()) return v.is_zero();
  const std::size_t m = roots_.size();
  std::vector<long> b(m);
  for (std::size_t j = 0; j < m; ++j) b[j] = lattice_.pair(v, roots_[j]);
  std::vector<int> coeffs(v.size(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    long c = 0;
    for (std::size_t j = 0; j < m; ++j) c += adjugate_[i][j] * b[j];
    if (c % determinant_ != 0) return false;
    c /= determinant_;
    for (std::size_t t = 0; t < coeffs.size(); ++t) coeffs[t] += static_cast<int>(c) * roots_[i][t];
  }
  return DivisorClass(std::move(coeffs)) == v;
}

// ---------------------------------------------------------------------------
// Partitions and schemes

std::vector<std::vector<DivisorClass>> congruence_classes(const NodalConfig& cfg,
                                                          const std::vector<DivisorClass>& classes,
                                                          Exec exec) {
  check_same_kind(cfg.lattice(), classes);
  std::vector<DivisorClass> sorted = classes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // first[i] = least index congruent to i, which names i's part.
  const std::size_t n = sorted.size();
  std::vector<std::size_t> first(n);
  auto find_first = [&](std::size_t i) {
    std::size_t j = 0;
    while (j < i && !cfg.congruent(sorted[i], sorted[j])) ++j;
    first[i] = j;
  };
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) find_first(i);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < n; ++i) find_first(i);
  }

  std::vector<std::vector<DivisorClass>> parts;
  std::vector<std::size_t> part_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (first[i] == i) {
      part_index[i] = parts.size();
      parts.push_back({sorted[i]});
    } else {
      parts[part_index[first[i]]].push_back(sorted[i]);
    }
  }
  return parts;
}

std::map<int, int> MultiplicityScheme::histogram() const {
  std::map<int, int> h;
  for (const auto& p : points) ++h[p.multiplicity];
  return h;
}

std::map<int, int> EvenThetaScheme::histogram() const {
  std::map<int, int> h;
  for (const auto& p : points) ++h[p.multiplicity];
  return h;
}

MultiplicityScheme line_scheme(const NodalConfig& cfg) {
  const auto classes = cfg.lattice().enumerate(ClassKind::exceptional);
  return scheme_from_parts("lines", congruence_classes(cfg, classes));
}

MultiplicityScheme blowdown_scheme(const NodalConfig& cfg) {
  const auto classes = cfg.lattice().enumerate(ClassKind::blow_down);
  return scheme_from_parts("blowdowns", congruence_classes(cfg, classes));
}

MultiplicityScheme bitangent_scheme(const NodalConfig& cfg) {
  const auto& lat = cfg.lattice();
  if (lat.degree() != 2) throw std::invalid_argument("bitangent scheme needs degree 2");
  const auto parts = congruence_classes(cfg, lat.enumerate(ClassKind::exceptional));
  return quotient_by("bitangents", parts, [&](const DivisorClass& x) { return lat.geiser(x); });
}

MultiplicityScheme aronhold_scheme(const NodalConfig& cfg) {
  const auto& lat = cfg.lattice();
  if (lat.degree() != 2) throw std::invalid_argument("Aronhold scheme needs degree 2");
  const auto parts = congruence_classes(cfg, lat.enumerate(ClassKind::blow_down));
  return quotient_by("aronhold", parts, [&](const DivisorClass& x) { return lat.geiser(x); });
}

MultiplicityScheme double_six_scheme(const NodalConfig& cfg) {
  const auto& lat = cfg.lattice();
  if (lat.degree() != 3) throw std::invalid_argument("double-six scheme needs degree 3");
  const auto parts = congruence_classes(cfg, lat.enumerate(ClassKind::blow_down));
  return quotient_by("doublesix", parts, [&](const DivisorClass& x) { return lat.double_six_partner(x); });
}

EvenThetaScheme even_theta_scheme(const NodalConfig& cfg) {
  const auto& lat = cfg.lattice();
  if (lat.degree() != 2) throw std::invalid_argument("even theta scheme needs degree 2");
  const auto evens = even_classes();
  std::map<EvenSubsetClass, std::size_t> index;
  for (std::size_t i = 0; i < evens.size(); ++i) index.emplace(evens[i], i);

  std::vector<std::size_t> parent(evens.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };

  const auto parts = congruence_classes(cfg, lat.enumerate(ClassKind::blow_down));
  for (const auto& part : parts) {
    const std::size_t head = find(index.at(even_theta_of_blowdown(lat, part.front())));
    for (std::size_t k = 1; k < part.size(); ++k) {
      const std::size_t other = find(index.at(even_theta_of_blowdown(lat, part[k])));
      if (other != head) parent[other] = head;
    }
  }

  std::map<std::size_t, std::vector<EvenSubsetClass>> groups;
  for (std::size_t i = 0; i < evens.size(); ++i) groups[find(i)].push_back(evens[i]);
  EvenThetaScheme s;
  for (auto& [root, labels] : groups) {
    std::sort(labels.begin(), labels.end());
    const int mult = static_cast<int>(labels.size());
    s.points.push_back({std::move(labels), mult});
    s.total += mult;
  }
  std::sort(s.points.begin(), s.points.end(),
            [](const ThetaSchemePoint& a, const ThetaSchemePoint& b) { return a.labels.front() < b.labels.front(); });
  return s;
}

// ---------------------------------------------------------------------------
// Intersection profile

const std::array<std::string, 10>& blowdown_family_names() {
  static const std::array<std::string, 10> names{
      "L",
      "2L-E_m-E_n-E_p",
      "3L-sumE+E_i+E_j-E_k",
      "4L-sumE+E_i-E_m-E_n-E_p",
      "5L-2sumE+2E_i",
      "8L-3sumE",
      "7L-2sumE-E_i-E_j-E_k-E_l",
      "6L-2sumE-E_i-E_j+E_k",
      "5L-sumE-2E_i-E_j-E_k-E_l",
      "4L-sumE-2E_i",
  };
  return names;
}

int blowdown_family(const DivisorClass& x) {
  // Signature: degree in L and the multiplicities m_i (x = aL - sum m_i E_i)
  // sorted in decreasing order.
  struct Family {
    int degree;
    std::array<int, 7> mult;
  };
  static const std::array<Family, 10> families{{
      {1, {0, 0, 0, 0, 0, 0, 0}},
      {2, {1, 1, 1, 0, 0, 0, 0}},
      {3, {2, 1, 1, 1, 1, 0, 0}},
      {4, {2, 2, 2, 1, 1, 1, 0}},
      {5, {2, 2, 2, 2, 2, 2, 0}},
      {8, {3, 3, 3, 3, 3, 3, 3}},
      {7, {3, 3, 3, 3, 2, 2, 2}},
      {6, {3, 3, 2, 2, 2, 2, 1}},
      {5, {3, 2, 2, 2, 1, 1, 1}},
      {4, {3, 1, 1, 1, 1, 1, 1}},
  }};
  if (x.size() != 8) throw std::invalid_argument("blow-down families are defined in degree 2");
  std::array<int, 7> m{};
  for (int i = 0; i < 7; ++i) m[i] = -x[i + 1];
  std::sort(m.begin(), m.end(), std::greater<>());
  for (std::size_t f = 0; f < families.size(); ++f)
    if (families[f].degree == x.degree() && families[f].mult == m) return static_cast<int>(f);
  throw std::invalid_argument(format_class(x) + " is not in a blow-down family");
}

int ProfileRow::row_sum() const { return std::accumulate(counts.begin(), counts.end(), 0); }

IntersectionProfile intersection_profile(const NodalConfig& cfg) {
  const auto& lat = cfg.lattice();
  if (lat.degree() != 2) throw std::invalid_argument("intersection profile needs degree 2");
  if (cfg.roots().size() != 1) throw std::invalid_argument("intersection profile needs a single root");
  const DivisorClass& f = cfg.roots().front();

  IntersectionProfile prof;
  const auto& names = blowdown_family_names();
  for (const auto& name : names) prof.rows.push_back({name, {}});
  for (const auto& x : lat.enumerate(ClassKind::blow_down)) {
    const int p = lat.pair(x, f);
    const auto col = std::find(kProfileColumns.begin(), kProfileColumns.end(), p);
    if (col == kProfileColumns.end()) throw std::logic_error("D.F outside [-2, 2]");
    const auto c = static_cast<std::size_t>(col - kProfileColumns.begin());
    ++prof.rows[blowdown_family(x)].counts[c];
    ++prof.totals[c];
  }
  return prof;
}

}  // namespace thetakit
