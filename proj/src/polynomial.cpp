#include "polyctrl/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "polyctrl/errors.hpp"
#include "polyctrl/monomial_order.hpp"

namespace polyctrl {
namespace {

// Canonical storage order: descending exponent vectors.
bool canonical_before(const Term& a, const Term& b) { return a.mono > b.mono; }

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), canonical_before);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms = std::move(merged);
}

// Merges two canonical term lists computing a + sign*b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_monomial_fits(const Ring& ring, const Monomial& m) {
  if (m.size() != ring.nvars()) throw DomainError("monomial length does not match ring");
  if (!ring.laurent() && m.has_negative()) {
    throw DomainError("negative exponent in non-Laurent ring");
  }
}

}  // namespace

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_) check_monomial_fits(ring_, t.mono);
  canonicalize(terms_);
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring.nvars()), c});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring.nvars()) throw DomainError("variable index out of range");
  Monomial m(ring.nvars());
  m.set(index, 1);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, const Rational& c) {
  check_monomial_fits(ring, m);
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.mono.has_negative(); });
}

int Polynomial::degree() const {
  int d = kZeroDegree;
  for (const auto& t : terms_) d = std::max(d, t.mono.positive_degree());
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = kZeroDegree;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

std::uint32_t Polynomial::support() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) mask |= t.mono.support();
  return mask;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  check_ring(other);
  if (terms_.empty() || other.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  // Accumulate row by row: each shifted copy of `other` is already sorted.
  std::vector<Term> acc;
  for (const auto& a : terms_) {
    std::vector<Term> row;
    row.reserve(other.terms_.size());
    for (const auto& b : other.terms_) row.push_back({a.mono * b.mono, a.coeff * b.coeff});
    acc = merge(acc, row, +1);
  }
  terms_ = std::move(acc);
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  for (const auto& t : r.terms_) check_monomial_fits(ring_, t.mono);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(1 / leading_term(*this, order).coeff);
}

Polynomial Polynomial::rebased(Ring ring) const {
  if (ring.nvars() != ring_.nvars()) throw DomainError("rebased ring has a different size");
  return Polynomial(std::move(ring), terms_);
}

Polynomial Polynomial::embedded(Ring larger) const {
  if (larger.nvars() < ring_.nvars()) throw DomainError("embedding into a smaller ring");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(larger.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i) m.set(i, t.mono[i]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial(std::move(larger), std::move(terms));
}

Polynomial Polynomial::projected(Ring smaller) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(smaller.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (i < smaller.nvars()) {
        m.set(i, t.mono[i]);
      } else if (t.mono[i] != 0) {
        throw DomainError("projection would drop an occurring variable");
      }
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial(std::move(smaller), std::move(terms));
}

Polynomial Polynomial::permuted(Ring ring, std::span<const std::size_t> perm) const {
  if (perm.size() != ring_.nvars() || ring.nvars() != ring_.nvars()) {
    throw DomainError("permutation size mismatch");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(ring_.nvars());
    for (std::size_t i = 0; i < perm.size(); ++i) m.set(i, t.mono[perm[i]]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial(std::move(ring), std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    Rational magnitude = abs(t.coeff);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << polyctrl::to_string(magnitude);
      continue;
    }
    bool need_star = false;
    if (magnitude != 1) {
      os << polyctrl::to_string(magnitude);
      need_star = true;
    }
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      const int e = t.mono[i];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << ring_.var_name(i);
      if (e != 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial scale(const Polynomial& p, const Rational& c) { return p.scaled(c); }

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("leading term of the zero polynomial");
  if (p.has_negative_exponents()) {
    throw DomainError("leading term needs a polynomial without negative exponents");
  }
  if (order.nvars() != p.ring().nvars()) throw DomainError("order/ring size mismatch");
  const auto terms = p.terms();
  const Term* best = &terms[0];
  for (const auto& t : terms) {
    if (order.less(best->mono, t.mono)) best = &t;
  }
  return *best;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& p, const Polynomial& d,
                                         const MonomialOrder& order) {
  if (!(p.ring() == d.ring())) throw RingMismatch();
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  const Term lead = leading_term(d, order);
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Term lt = leading_term(rest, order);
    if (lead.mono.divides(lt.mono)) {
      const Term q{lt.mono / lead.mono, lt.coeff / lead.coeff};
      rest -= d.shifted(q.mono).scaled(q.coeff);
      quotient.push_back(q);
    } else {
      remainder.push_back(lt);
      rest -= Polynomial::monomial(rest.ring(), lt.mono, lt.coeff);
    }
  }
  return {Polynomial(p.ring(), std::move(quotient)), Polynomial(p.ring(), std::move(remainder))};
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  auto [q, r] = divide(p, d, MonomialOrder::grevlex(p.ring().nvars()));
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

Polynomial gcd_univariate(const Polynomial& p, const Polynomial& q) {
  if (!(p.ring() == q.ring())) throw RingMismatch();
  if (p.ring().nvars() != 1) throw DomainError("gcd_univariate needs a univariate ring");
  if (p.has_negative_exponents() || q.has_negative_exponents()) {
    throw DomainError("gcd_univariate needs polynomials without negative exponents");
  }
  const auto order = MonomialOrder::lex(1);
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divide(a, b, order).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic(order);
}

std::pair<Polynomial, Monomial> laurent_clear(const Polynomial& p) {
  const std::size_t n = p.ring().nvars();
  Monomial unit(n);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) unit.set(i, std::min(unit[i], t.mono[i]));
  }
  if (unit.is_one()) return {p, unit};
  return {p.shifted(unit.inverse()), unit};
}

}  // namespace polyctrl
