#include "jetlaw/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>

namespace jetlaw {

Monomial::Monomial(Symbol s, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(s, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [s, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == s)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(s, e);
  }
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::degree_in(Symbol s) const {
  for (const auto& f : factors_)
    if (f.first == s) return f.second;
  return 0;
}

unsigned Monomial::degree_if(const std::function<bool(Symbol)>& pred) const {
  unsigned d = 0;
  for (const auto& f : factors_)
    if (pred(f.first)) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->first < j->first) {
      m.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.factors_.insert(m.factors_.end(), i, factors_.end());
  m.factors_.insert(m.factors_.end(), j, other.factors_.end());
  return m;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
  Monomial m;
  auto i = factors_.begin();
  for (const auto& [s, e] : other.factors_) {
    while (i != factors_.end() && i->first < s) m.factors_.push_back(*i++);
    if (i == factors_.end() || i->first != s || i->second < e) return std::nullopt;
    if (i->second > e) m.factors_.emplace_back(s, i->second - e);
    ++i;
  }
  m.factors_.insert(m.factors_.end(), i, factors_.end());
  return m;
}

Monomial Monomial::with_exponent(Symbol s, unsigned exponent) const {
  Monomial m;
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && s < f.first) {
      if (exponent > 0) m.factors_.emplace_back(s, exponent);
      placed = true;
    }
    if (f.first == s) {
      if (exponent > 0) m.factors_.emplace_back(s, exponent);
      placed = true;
      continue;
    }
    m.factors_.push_back(f);
  }
  if (!placed && exponent > 0) m.factors_.emplace_back(s, exponent);
  return m;
}

std::pair<Monomial, Monomial> Monomial::split(const std::function<bool(Symbol)>& pred) const {
  std::pair<Monomial, Monomial> out;
  for (const auto& f : factors_) (pred(f.first) ? out.first : out.second).factors_.push_back(f);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto i = a.factors_.rbegin();
  auto j = b.factors_.rbegin();
  for (; i != a.factors_.rend() && j != b.factors_.rend(); ++i, ++j) {
    if (i->first != j->first) return i->first <=> j->first;
    if (i->second != j->second) return i->second <=> j->second;
  }
  if (i != a.factors_.rend()) return std::strong_ordering::greater;
  if (j != b.factors_.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> f;
  for (const auto& [s, e] : a.factors()) {
    const unsigned other = b.degree_in(s);
    if (other > 0) f.emplace_back(s, std::min(e, other));
  }
  return Monomial::from_factors(std::move(f));
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) {
    terms_.push_back({Monomial{}, c});
    terms_.back().coef.canonicalize();
  }
}

Polynomial::Polynomial(Symbol s) { terms_.push_back({Monomial(s), Rational(1)}); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0) {
    terms_.push_back({m, c});
    terms_.back().coef.canonicalize();
  }
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
      p.terms_.back().coef.canonicalize();
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty() || !terms_.front().mono.is_one()) return Rational(0);
  return terms_.front().coef;
}

unsigned Polynomial::degree() const { return terms_.empty() ? 0 : terms_.back().mono.degree(); }

unsigned Polynomial::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(s));
  return d;
}

bool Polynomial::contains_if(const std::function<bool(Symbol)>& pred) const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors())
      if (pred(f.first)) return true;
  return false;
}

std::vector<Symbol> Polynomial::symbols() const {
  std::vector<Symbol> out;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) out.push_back(f.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& scale) {
  if (other.terms_.empty() || scale == 0) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() && j != other.terms_.end()) {
    const auto c = i->mono <=> j->mono;
    if (c < 0) {
      merged.push_back(std::move(*i++));
    } else if (c > 0) {
      merged.push_back({j->mono, j->coef * scale});
      ++j;
    } else {
      Rational sum = i->coef + j->coef * scale;
      if (sum != 0) merged.push_back({std::move(i->mono), std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) merged.push_back(std::move(*i));
  for (; j != other.terms_.end(); ++j) merged.push_back({j->mono, j->coef * scale});
  terms_ = std::move(merged);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.multiply_monomial(a.terms_.front().mono, a.terms_.front().coef);
  if (b.size() == 1) return a.multiply_monomial(b.terms_.front().mono, b.terms_.front().coef);
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.mono * t.mono, s.coef * t.coef});
  return Polynomial::from_terms(std::move(terms));
}

Polynomial Polynomial::multiply_monomial(const Monomial& m, const Rational& c) const {
  Polynomial p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::diff(Symbol s) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono.degree_in(s);
    if (e == 0) continue;
    out.push_back({t.mono.with_exponent(s, e - 1), t.coef * e});
  }
  return from_terms(std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients_in(Symbol s) const {
  std::vector<std::vector<Term>> buckets(degree_in(s) + 1);
  for (const auto& t : terms_) {
    const unsigned e = t.mono.degree_in(s);
    buckets[e].push_back({e > 0 ? t.mono.with_exponent(s, 0) : t.mono, t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, Symbol s) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Monomial power(s, static_cast<unsigned>(k));
    for (const auto& t : coeffs[k].terms_) terms.push_back({t.mono * power, t.coef});
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rational inv = 1 / terms_.back().coef;
  return p *= inv;
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.size() == 1) {
    const auto& lt = b.leading_term();
    std::vector<Polynomial::Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) {
      auto m = t.mono.divided_by(lt.mono);
      if (!m) return std::nullopt;
      q.push_back({std::move(*m), t.coef / lt.coef});
    }
    return Polynomial::from_terms(std::move(q));
  }
  std::vector<Polynomial::Term> quotient;
  Polynomial r = a;
  const auto& lb = b.leading_term();
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    auto m = lr.mono.divided_by(lb.mono);
    if (!m) return std::nullopt;
    Rational c = lr.coef / lb.coef;
    r -= b.multiply_monomial(*m, c);
    quotient.push_back({std::move(*m), std::move(c)});
  }
  return Polynomial::from_terms(std::move(quotient));
}

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("expected exact polynomial division");
  return std::move(*q);
}

std::size_t top_degree(const std::vector<Polynomial>& c) {
  std::size_t d = c.size();
  while (d > 0 && c[d - 1].is_zero()) --d;
  return d == 0 ? 0 : d - 1;
}

bool all_zero(const std::vector<Polynomial>& c) {
  return std::all_of(c.begin(), c.end(), [](const Polynomial& p) { return p.is_zero(); });
}

// Pseudo-remainder of a by b as polynomials in the main variable.
std::vector<Polynomial> pseudo_remainder(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  const std::size_t m = top_degree(b);
  const Polynomial& lcb = b[m];
  while (!all_zero(a)) {
    const std::size_t da = top_degree(a);
    if (da < m) break;
    const Polynomial lca = a[da];
    const std::size_t shift = da - m;
    for (auto& c : a) c = c * lcb;
    for (std::size_t i = 0; i <= m; ++i) a[i + shift] -= lca * b[i];
    a.resize(da);  // top coefficient cancels by construction
  }
  return a;
}

Polynomial content_of(const std::vector<Polynomial>& coeffs) {
  Polynomial g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part(const std::vector<Polynomial>& coeffs, Symbol v) {
  const Polynomial content = content_of(coeffs);
  std::vector<Polynomial> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(exact_quotient(c, content));
  return Polynomial::from_coefficients(out, v);
}


// Image of p in Q[v] after substituting the given values for the other symbols.
std::vector<Rational> univariate_image(const Polynomial& p, Symbol v, const std::map<Symbol, Rational>& point) {
  std::vector<Rational> out(p.degree_in(v) + 1);
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    unsigned k = 0;
    for (const auto& [s, e] : t.mono.factors()) {
      if (s == v) {
        k = e;
        continue;
      }
      const Rational& x = point.at(s);
      for (unsigned i = 0; i < e; ++i) c *= x;
    }
    out[k] += c;
  }
  return out;
}

std::size_t univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True when evaluation proves gcd(a, b) is a constant. An image of degree 0 in
// v at a point where both leading coefficients survive rules v out of the gcd.
bool provably_coprime(const Polynomial& a, const Polynomial& b) {
  const auto sa = a.symbols();
  const auto sb = b.symbols();
  std::vector<Symbol> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  std::vector<Symbol> all;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next_value = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return Rational(static_cast<long>((state >> 33) % 97) - 48);
  };
  for (Symbol v : common) {
    bool proved = false;
    for (int attempt = 0; attempt < 3 && !proved; ++attempt) {
      std::map<Symbol, Rational> point;
      for (Symbol s : all)
        if (s != v) point[s] = next_value();
      auto ia = univariate_image(a, v, point);
      auto ib = univariate_image(b, v, point);
      if (ia.back() == 0 || ib.back() == 0) continue;
      if (univariate_gcd_degree(std::move(ia), std::move(ib)) > 0) return false;
      proved = true;
    }
    if (!proved) return false;
  }
  return true;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.size() == 1 && b.size() == 1)
    return Polynomial(gcd(a.leading_term().mono, b.leading_term().mono), Rational(1));
  if (provably_coprime(a, b)) return Polynomial(1);
  if (b.size() <= a.size() && exact_divide(a, b)) return b.monic();
  if (a.size() <= b.size() && exact_divide(b, a)) return a.monic();

  Symbol v = a.leading_term().mono.factors().back().first;
  for (const auto& p : {&a, &b})
    for (Symbol s : p->symbols()) v = std::max(v, s);

  const auto ca = a.coefficients_in(v);
  const auto cb = b.coefficients_in(v);
  if (ca.size() == 1) {
    Polynomial g = a;
    for (const auto& c : cb) {
      if (c.is_zero()) continue;
      g = gcd(g, c);
      if (g.is_constant()) return Polynomial(1);
    }
    return g.monic();
  }
  if (cb.size() == 1) return gcd(b, a);

  const Polynomial cont_a = content_of(ca);
  const Polynomial cont_b = content_of(cb);
  const Polynomial cont = gcd(cont_a, cont_b);

  std::vector<Polynomial> pa;
  std::vector<Polynomial> pb;
  for (const auto& c : ca) pa.push_back(exact_quotient(c, cont_a));
  for (const auto& c : cb) pb.push_back(exact_quotient(c, cont_b));
  if (top_degree(pa) < top_degree(pb)) std::swap(pa, pb);

  while (true) {
    auto r = pseudo_remainder(pa, pb);
    if (all_zero(r)) break;
    if (top_degree(r) == 0) return cont.monic();
    pa = std::move(pb);
    pb = primitive_part(r, v).monic().coefficients_in(v);
  }
  return (cont * primitive_part(pb, v)).monic();
}

}  // namespace jetlaw
