#include "thetakit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace thetakit {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Position of each variable of `from` inside `to` (which must contain it).
std::vector<std::size_t> embedding(const std::vector<std::string>& from, const std::vector<std::string>& to) {
  std::vector<std::size_t> pos;
  for (const auto& v : from) pos.push_back(std::lower_bound(to.begin(), to.end(), v) - to.begin());
  return pos;
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(const mpq_class& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::var(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, mpq_class(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, const std::map<Exponents, mpq_class>& terms) {
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated variable name");
  const auto pos = embedding(vars, sorted);
  MultiPoly p;
  p.vars_ = sorted;
  for (const auto& [e, c] : terms) {
    if (e.size() != vars.size()) throw std::invalid_argument("exponent vector length mismatch");
    Exponents ne(sorted.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw std::invalid_argument("negative exponent");
      ne[pos[i]] = e[i];
    }
    p.terms_[ne] += c;
  }
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) keep.push_back(vars_[i]);
  std::map<Exponents, mpq_class> nt;
  for (auto& [e, c] : terms_) {
    Exponents ne;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    nt.emplace(std::move(ne), std::move(c));
  }
  vars_ = std::move(keep);
  terms_ = std::move(nt);
}

MultiPoly MultiPoly::over(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  const auto pos = embedding(vars_, vars);
  MultiPoly p;
  p.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    p.terms_.emplace(std::move(ne), c);
  }
  return p;
}

mpq_class MultiPoly::constant() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::degree_in(const std::string& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return is_zero() ? -1 : 0;
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  const int d = degree();
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s != d) return false;
  }
  return true;
}

MultiPoly MultiPoly::coefficient(const std::string& v, int k) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return k == 0 ? *this : MultiPoly();
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  MultiPoly p;
  p.vars_ = vars_;
  for (const auto& [e, c] : terms_)
    if (e[i] == k) {
      Exponents ne = e;
      ne[i] = 0;
      p.terms_.emplace(std::move(ne), c);
    }
  p.normalize();
  return p;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  const auto vars = merge_vars(vars_, o.vars_);
  *this = over(vars);
  for (const auto& [e, c] : o.over(vars).terms_) terms_[e] += c;
  normalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  const auto vars = merge_vars(a.vars_, b.vars_);
  const MultiPoly x = a.over(vars), y = b.over(vars);
  MultiPoly p;
  p.vars_ = vars;
  MultiPoly::Exponents e(vars.size());
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.terms_[e] += ca * cb;
    }
  p.normalize();
  return p;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  MultiPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(const std::string& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return MultiPoly();
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  MultiPoly p;
  p.vars_ = vars_;
  for (const auto& [e, c] : terms_)
    if (e[i] > 0) {
      Exponents ne = e;
      --ne[i];
      p.terms_[ne] += c * e[i];
    }
  p.normalize();
  return p;
}

mpq_class MultiPoly::eval(const std::map<std::string, mpq_class>& point) const {
  std::vector<mpq_class> vals;
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw std::invalid_argument("no value for variable " + v);
    vals.push_back(it->second);
  }
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= vals[i];
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
  // Powers of each image are cached; most inputs have small degrees.
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = images.find(vars_[i]);
    powers[i].push_back(MultiPoly(1));
    powers[i].push_back(it == images.end() ? var(vars_[i]) : it->second);
  }
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly t(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * pw[1]);
      if (e[i] > 0) t *= pw[e[i]];
    }
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division, determinants, resultants

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return MultiPoly();
  const auto vars = merge_vars(a.vars(), b.vars());
  // Lexicographic division; the remainder must vanish.
  MultiPoly rem = a, quot;
  const MultiPoly bb = MultiPoly::from_terms(b.vars(), b.terms());
  const auto bpos = embedding(b.vars(), vars);
  MultiPoly::Exponents blead(vars.size(), 0);
  const auto& [be, bc] = *b.terms().rbegin();
  for (std::size_t i = 0; i < be.size(); ++i) blead[bpos[i]] = be[i];

  while (!rem.is_zero()) {
    const auto rpos = embedding(rem.vars(), vars);
    MultiPoly::Exponents rlead(vars.size(), 0);
    // Leading term of rem with respect to lex order on `vars`.
    const MultiPoly::Exponents* best = nullptr;
    mpq_class best_c;
    MultiPoly::Exponents cur(vars.size());
    for (const auto& [e, c] : rem.terms()) {
      std::fill(cur.begin(), cur.end(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) cur[rpos[i]] = e[i];
      if (!best || cur > rlead) {
        rlead = cur;
        best = &e;
        best_c = c;
      }
    }
    MultiPoly::Exponents qe(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      qe[i] = rlead[i] - blead[i];
      if (qe[i] < 0) throw std::domain_error("polynomial division is not exact");
    }
    const MultiPoly term = MultiPoly::from_terms(vars, {{qe, best_c / bc}});
    quot += term;
    rem -= term * bb;
  }
  return quot;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return MultiPoly(1);
  MultiPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly();
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& v) {
  const int m = f.degree_in(v), n = g.degree_in(v);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  if (m <= 0 && n <= 0) throw std::invalid_argument("variable " + v + " occurs in neither polynomial");
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
  // Rows 0..n-1 hold shifted coefficients of f, rows n..n+m-1 those of g,
  // highest power first.
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = f.coefficient(v, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = g.coefficient(v, n - k);
  return determinant(std::move(s));
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly p = term();
    while (true) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }

  MultiPoly term() {
    MultiPoly p = unary();
    while (true) {
      if (eat('*')) {
        p *= unary();
      } else if (eat('/')) {
        const MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        p *= MultiPoly(mpq_class(1) / d.constant());
      } else {
        return p;
      }
    }
  }

  MultiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected an exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, i_ - start))));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return MultiPoly(mpq_class(mpz_class(std::string(s_.substr(start, i_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return MultiPoly::var(std::string(s_.substr(start, i_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  using Term = std::pair<MultiPoly::Exponents, mpq_class>;
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  auto total = [](const MultiPoly::Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    const int da = total(a.first), db = total(b.first);
    return da != db ? da > db : a.first > b.first;
  });
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& [e, c] = terms[t];
    const mpq_class mag = abs(c);
    if (t == 0) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

std::string format_records(const MultiPoly& p) {
  std::string out = "vars";
  for (const auto& v : p.vars()) out += " " + v;
  out += "\n";
  for (const auto& [e, c] : p.terms()) {
    for (int x : e) out += std::to_string(x) + " ";
    out += c.get_num().get_str() + " " + c.get_den().get_str() + "\n";
  }
  return out;
}

MultiPoly parse_records(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, tag;
  if (!std::getline(in, line)) throw std::invalid_argument("empty record block");
  std::istringstream header(line);
  if (!(header >> tag) || tag != "vars") throw std::invalid_argument("record block must start with 'vars'");
  std::vector<std::string> vars;
  for (std::string v; header >> v;) vars.push_back(v);
  std::map<MultiPoly::Exponents, mpq_class> terms;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> fields;
    for (std::string f; ls >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    if (fields.size() != vars.size() + 2) throw std::invalid_argument("bad record line: " + line);
    MultiPoly::Exponents e;
    for (std::size_t i = 0; i < vars.size(); ++i) e.push_back(std::stoi(fields[i]));
    const mpz_class den(fields.back());
    if (den == 0) throw std::invalid_argument("zero denominator in record");
    mpq_class c(mpz_class(fields[vars.size()]), den);
    c.canonicalize();
    terms[e] += c;
  }
  return MultiPoly::from_terms(vars, terms);
}

// ---------------------------------------------------------------------------
// Univariate helpers

namespace {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly make_monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  const mpq_class lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

// Quotient and remainder of a by b.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {{}, a};
  UPoly q(a.size() - b.size() + 1);
  for (int k = degree(a); k >= db; --k) {
    const mpq_class f = a[k] / b.back();
    q[k - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

UPoly sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

UPoly to_univariate(const MultiPoly& p, const std::string& v) {
  for (const auto& name : p.vars())
    if (name != v) throw std::invalid_argument("polynomial involves " + name + " besides " + v);
  UPoly out(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& [e, c] : p.terms()) out[e.empty() ? 0 : e[0]] = c;
  trim(out);
  return out;
}

int degree(const UPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

UPoly poly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

UPoly poly_divide_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::domain_error("univariate division is not exact");
  return q;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  UPoly a = make_monic(p);
  if (a.empty()) throw std::invalid_argument("square-free decomposition of zero");
  std::vector<std::pair<UPoly, int>> out;
  if (degree(a) == 0) return out;
  const UPoly b = derivative(a);
  const UPoly c = poly_gcd(a, b);
  UPoly w = poly_divide_exact(a, c);
  UPoly y = poly_divide_exact(b, c);
  UPoly z = sub(y, derivative(w));
  for (int i = 1; degree(w) > 0; ++i) {
    const UPoly g = poly_gcd(w, z);
    if (degree(g) > 0) out.emplace_back(g, i);
    w = poly_divide_exact(w, g);
    y = poly_divide_exact(z, g);
    z = sub(y, derivative(w));
  }
  return out;
}

}  // namespace thetakit
