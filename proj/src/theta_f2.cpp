#include "thetakit/theta_f2.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace thetakit {

namespace {

constexpr std::uint8_t kFull = 0xFF;

std::uint8_t normalize(std::uint8_t mask) {
  const int c = std::popcount(mask);
  if (c > 4 || (c == 4 && (mask & 1) == 0)) mask ^= kFull;
  return mask;
}

}  // namespace

// ---------------------------------------------------------------------------
// EvenSubsetClass

EvenSubsetClass EvenSubsetClass::from_mask(std::uint8_t mask) {
  if (std::popcount(mask) % 2 != 0) throw std::invalid_argument("subset must have even cardinality");
  return EvenSubsetClass(normalize(mask));
}

EvenSubsetClass EvenSubsetClass::from_indices(std::span<const int> indices) {
  std::uint8_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > 8) throw std::invalid_argument("subset index out of range 1..8");
    const auto bit = static_cast<std::uint8_t>(1u << (i - 1));
    if (mask & bit) throw std::invalid_argument("repeated subset index");
    mask |= bit;
  }
  return from_mask(mask);
}

EvenSubsetClass EvenSubsetClass::from_indices(std::initializer_list<int> indices) {
  return from_indices(std::span<const int>(indices.begin(), indices.size()));
}

std::vector<int> EvenSubsetClass::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 8; ++i)
    if (mask_ & (1u << i)) out.push_back(i + 1);
  return out;
}

int EvenSubsetClass::size() const { return std::popcount(mask_); }

int EvenSubsetClass::parity() const { return size() == 2 ? 1 : 0; }

std::strong_ordering operator<=>(EvenSubsetClass a, EvenSubsetClass b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::string format_subset(EvenSubsetClass s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

EvenSubsetClass parse_subset(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("cannot parse subset '" + std::string(text) + "'"); };
  std::string body;
  for (char c : text)
    if (c != ' ') body += c;
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') throw bad();
  body = body.substr(1, body.size() - 2);
  std::vector<int> idx;
  if (body.empty()) return EvenSubsetClass::from_indices(idx);
  std::istringstream in(body + ",");
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok.size() > 2 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw bad();
    idx.push_back(std::stoi(tok));
  }
  return EvenSubsetClass::from_indices(idx);
}

std::vector<EvenSubsetClass> all_classes() {
  std::vector<EvenSubsetClass> out;
  for (int m = 0; m < 256; ++m) {
    if (std::popcount(static_cast<unsigned>(m)) % 2 != 0) continue;
    if (normalize(static_cast<std::uint8_t>(m)) != m) continue;
    out.push_back(EvenSubsetClass::from_mask(static_cast<std::uint8_t>(m)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EvenSubsetClass> odd_classes() {
  auto all = all_classes();
  std::erase_if(all, [](EvenSubsetClass s) { return !s.is_odd(); });
  return all;
}

std::vector<EvenSubsetClass> even_classes() {
  auto all = all_classes();
  std::erase_if(all, [](EvenSubsetClass s) { return s.is_odd(); });
  return all;
}

int weil_pair(EvenSubsetClass a, EvenSubsetClass b) { return std::popcount(static_cast<unsigned>(a.mask() & b.mask())) & 1; }

int q_theta(EvenSubsetClass theta, EvenSubsetClass eta) { return ((theta + eta).parity() + theta.parity()) & 1; }

bool syzygetic(EvenSubsetClass t1, EvenSubsetClass t2, EvenSubsetClass t3) {
  if (!t1.is_odd() || !t2.is_odd() || !t3.is_odd())
    throw std::invalid_argument("syzygy is defined for odd characteristics");
  if (t1 == t2 || t2 == t3 || t1 == t3) throw std::invalid_argument("syzygy needs three distinct characteristics");
  return q_theta(t1, t2 + t3) == 0;
}

// ---------------------------------------------------------------------------
// Aronhold sets

bool is_aronhold(std::span<const EvenSubsetClass> set) {
  if (set.size() != 7) return false;
  for (std::size_t i = 0; i < 7; ++i) {
    if (!set[i].is_odd()) return false;
    for (std::size_t j = i + 1; j < 7; ++j)
      if (set[i] == set[j]) return false;
  }
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      for (std::size_t k = j + 1; k < 7; ++k)
        if (syzygetic(set[i], set[j], set[k])) return false;
  return true;
}

namespace {

void extend_aronhold(const std::vector<EvenSubsetClass>& odd, std::size_t start, std::vector<EvenSubsetClass>& cur,
                     std::vector<AronholdSet>& out) {
  if (cur.size() == 7) {
    AronholdSet a;
    std::copy(cur.begin(), cur.end(), a.begin());
    out.push_back(a);
    return;
  }
  for (std::size_t i = start; i < odd.size(); ++i) {
    bool ok = true;
    for (std::size_t a = 0; a < cur.size() && ok; ++a)
      for (std::size_t b = a + 1; b < cur.size() && ok; ++b)
        if (syzygetic(cur[a], cur[b], odd[i])) ok = false;
    if (!ok) continue;
    cur.push_back(odd[i]);
    extend_aronhold(odd, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AronholdSet> enumerate_aronhold(Exec exec) {
  const auto odd = odd_classes();  // sorted, so each emitted set is sorted
  std::vector<std::vector<AronholdSet>> by_first(odd.size());
  auto run = [&](std::size_t first) {
    std::vector<EvenSubsetClass> cur{odd[first]};
    extend_aronhold(odd, first + 1, cur, by_first[first]);
  };
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < odd.size(); ++i) run(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < odd.size(); ++i) run(i);
  }
  std::vector<AronholdSet> out;
  for (auto& part : by_first) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

EvenSubsetClass even_theta_of_aronhold(const AronholdSet& set) {
  if (!is_aronhold(set)) throw std::invalid_argument("not an Aronhold set");
  const EvenSubsetClass base = set[0];
  EvenSubsetClass acc = base;
  for (std::size_t i = 1; i < set.size(); ++i) acc = acc + (set[i] + base);
  return acc;
}

EvenSubsetClass bitangent_label(const PicardLattice& lat, const DivisorClass& exceptional) {
  if (lat.degree() != 2) throw std::invalid_argument("bitangent labels need a degree-2 lattice");
  if (lat.classify(exceptional) != ClassKind::exceptional)
    throw std::invalid_argument(format_class(exceptional) + " is not an exceptional class");
  auto positions = [&](int value) {
    std::vector<int> out;
    for (int i = 1; i < lat.rank(); ++i)
      if (exceptional[i] == value) out.push_back(i);
    return out;
  };
  switch (exceptional.degree()) {
    case 0: return EvenSubsetClass::from_indices({positions(1).at(0), 8});   // E_i
    case 1: return EvenSubsetClass::from_indices(positions(-1));             // L_{i,j}
    case 2: return EvenSubsetClass::from_indices(positions(0));              // C_{i,j}
    case 3: return EvenSubsetClass::from_indices({positions(-2).at(0), 8});  // D_i
  }
  throw std::logic_error("unexpected exceptional class " + format_class(exceptional));
}

AronholdSet aronhold_of_blowdown(const PicardLattice& lat, const DivisorClass& blow_down) {
  if (lat.degree() != 2) throw std::invalid_argument("blow-down labels need a degree-2 lattice");
  const auto contracted = lat.contracted_by(blow_down);
  if (contracted.size() != 7) throw std::logic_error("expected seven contracted curves");
  AronholdSet set;
  for (std::size_t i = 0; i < 7; ++i) set[i] = bitangent_label(lat, contracted[i]);
  std::sort(set.begin(), set.end());
  if (!is_aronhold(set)) throw std::logic_error("labels of " + format_class(blow_down) + " are not an Aronhold set");
  return set;
}

EvenSubsetClass even_theta_of_blowdown(const PicardLattice& lat, const DivisorClass& blow_down) {
  return even_theta_of_aronhold(aronhold_of_blowdown(lat, blow_down));
}

// ---------------------------------------------------------------------------
// Quadratic forms over F_2

QuadraticSpace::QuadraticSpace(int genus, std::uint64_t linear) : genus_(genus), linear_(linear) {
  if (genus < 1 || genus > 31) throw std::invalid_argument("genus must be in 1..31");
  low_mask_ = (std::uint64_t{1} << genus) - 1;
  const std::uint64_t all = (std::uint64_t{1} << (2 * genus)) - 1;
  if (linear & ~all) throw std::invalid_argument("linear part has bits beyond the dimension");
}

QuadraticSpace QuadraticSpace::standard(int genus, int arf_value) {
  // l = e_1 + f_1 makes q(e_1) = q(f_1) = 1, giving Arf 1.
  const std::uint64_t l = arf_value ? (std::uint64_t{1} | (std::uint64_t{1} << genus)) : 0;
  return QuadraticSpace(genus, l);
}

std::uint64_t QuadraticSpace::swap_halves(std::uint64_t x) const {
  return ((x & low_mask_) << genus_) | ((x >> genus_) & low_mask_);
}

std::uint64_t QuadraticSpace::upper_row(int i) const {
  if (i < 0 || i >= dimension()) throw std::out_of_range("row index");
  return i < genus_ ? (std::uint64_t{1} << (i + genus_)) : 0;
}

int QuadraticSpace::pairing(std::uint64_t a, std::uint64_t b) const { return std::popcount(a & swap_halves(b)) & 1; }

int QuadraticSpace::operator()(std::uint64_t x) const {
  return (std::popcount(x & (x >> genus_) & low_mask_) + std::popcount(x & linear_)) & 1;
}

QuadraticSpace QuadraticSpace::shifted(std::uint64_t alpha) const {
  return QuadraticSpace(genus_, linear_ ^ swap_halves(alpha));
}

int arf(const QuadraticSpace& q) {
  int acc = 0;
  for (int i = 0; i < q.genus(); ++i) acc ^= q(std::uint64_t{1} << i) & q(std::uint64_t{1} << (i + q.genus()));
  return acc;
}

std::uint64_t count_zeros(const QuadraticSpace& q, Exec exec) {
  const auto n = static_cast<std::int64_t>(q.point_count());
  std::uint64_t ones = 0;
  if (exec == Exec::serial) {
    for (std::int64_t x = 0; x < n; ++x) ones += q(static_cast<std::uint64_t>(x));
  } else {
#pragma omp parallel for reduction(+ : ones) schedule(static)
    for (std::int64_t x = 0; x < n; ++x) ones += q(static_cast<std::uint64_t>(x));
  }
  return static_cast<std::uint64_t>(n) - ones;
}

ConicPairCount count_conic_pairs(const QuadraticSpace& q1, std::uint64_t eta) {
  if (arf(q1) != 1) throw std::invalid_argument("q1 must be odd");
  if (eta == 0 || eta >= q1.point_count()) throw std::invalid_argument("eta must be a nonzero point");
  if (q1(eta) != 0) throw std::invalid_argument("q1(eta) must vanish");
  const QuadraticSpace q2 = q1.shifted(eta);
  if (arf(q2) != 1) throw std::logic_error("q2 should be odd");

  ConicPairCount out;
  out.q1_linear = q1.linear();
  out.eta = eta;
  for (std::uint64_t a = 0; a < q1.point_count(); ++a) {
    if (q1(a) == 0 && q2(a) == 0 && a != 0 && a != eta) ++out.z_size;
    // eta-perp / eta: one representative per coset {a, a + eta}.
    if (q1.pairing(a, eta) == 0 && a < (a ^ eta) && q1(a) == 0) ++out.quotient_zeros;
  }
  out.pairs = out.z_size / 2;
  return out;
}

ConicPairCount count_conic_pairs(std::uint64_t seed) {
  constexpr int kGenus = 6;
  std::mt19937_64 rng(seed);
  const std::uint64_t span = std::uint64_t{1} << (2 * kGenus);
  std::uniform_int_distribution<std::uint64_t> pick(0, span - 1);
  std::uint64_t l = pick(rng);
  while (arf(QuadraticSpace(kGenus, l)) != 1) l = pick(rng);
  const QuadraticSpace q1(kGenus, l);
  std::uint64_t eta = pick(rng);
  while (eta == 0 || q1(eta) != 0) eta = pick(rng);
  return count_conic_pairs(q1, eta);
}

}  // namespace thetakit
