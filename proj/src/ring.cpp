#include "polyctrl/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "polyctrl/errors.hpp"

namespace polyctrl {

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw DomainError("too many variables");
}

Monomial::Monomial(std::initializer_list<int> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (int e : exponents) exp_[i++] = e;
}

Monomial Monomial::from_span(std::span<const int> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.exp_[i] = exponents[i];
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += exp_[i];
  return d;
}

int Monomial::positive_degree() const {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += std::max(exp_[i], 0);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

bool Monomial::has_negative() const {
  return std::any_of(exp_.begin(), exp_.end(), [](int e) { return e < 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

bool Monomial::supported_in(std::uint32_t vars) const { return (support() & ~vars) == 0; }

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] += other.exp_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] -= other.exp_[i];
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& e : r.exp_) e = -e;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
  return r;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(std::vector<std::string> var_names, bool laurent) {
  if (var_names.empty()) throw DomainError("a ring needs at least one variable");
  if (var_names.size() > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& name : var_names) {
    if (!valid_identifier(name)) throw DomainError("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw DomainError("duplicate variable name '" + name + "'");
  }
  data_ = std::make_shared<const Data>(Data{std::move(var_names), laurent});
}

Ring Ring::standard(std::size_t n, bool laurent, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Ring(std::move(names), laurent);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  const auto& names = data_->names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

Ring Ring::with_laurent(bool laurent) const {
  if (laurent == data_->laurent) return *this;
  return Ring(data_->names, laurent);
}

Ring Ring::with_extra_variable(std::string_view hint) const {
  std::string name(hint);
  for (int suffix = 0; index_of(name); ++suffix) name = std::string(hint) + std::to_string(suffix);
  auto names = data_->names;
  names.push_back(name);
  return Ring(std::move(names), data_->laurent);
}

Ring Ring::permuted(std::span<const std::size_t> perm) const {
  std::vector<std::string> names;
  for (std::size_t i : perm) names.push_back(data_->names.at(i));
  return Ring(std::move(names), data_->laurent);
}

bool operator==(const Ring& a, const Ring& b) {
  return a.data_ == b.data_ ||
         (a.data_->laurent == b.data_->laurent && a.data_->names == b.data_->names);
}

}  // namespace polyctrl
