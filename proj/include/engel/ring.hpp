#pragma once

// Exact rationals, monomials, monomial orders and sparse multivariate
// polynomials over a fixed variable set z_0, ..., z_{n-1}.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "engel/errors.hpp"

namespace engel {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "7", "-3/2", ... into a canonical rational. Throws
// std::invalid_argument on malformed text or a zero denominator.
inline Rational make_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline Rational make_rational(long numerator, long denominator = 1) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
  }

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
    if (index >= nvars) throw dimension_error("variable index out of range");
    Monomial m(nvars);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  // Monomial with the exponent of `index` removed entirely (x_index -> 1).
  Monomial without(std::size_t index) const {
    Monomial m = *this;
    m.degree_ -= m.exps_[index];
    m.exps_[index] = 0;
    return m;
  }

  Monomial lcm(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
  }

  Monomial operator*(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(e));
  }

  // Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - other.exps_[i];
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

// Graded reverse lexicographic or lexicographic order. The priority vector
// lists variable indices from largest to smallest; an empty priority means
// z_0 > z_1 > ... > z_{n-1}.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex };

  MonomialOrder() = default;
  MonomialOrder(Kind kind, std::vector<std::size_t> priority = {})
      : kind_(kind), priority_(std::move(priority)) {
    std::vector<std::size_t> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw std::invalid_argument("variable priority is not a permutation");
  }

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    if (kind_ == Kind::grevlex) {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t r = n; r-- > 0;) {
        const std::size_t v = var(r);
        if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
      }
      return 0;
    }
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t v = var(r);
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  auto operator<=>(const MonomialOrder&) const = default;

 private:
  std::size_t var(std::size_t rank) const { return priority_.empty() ? rank : priority_[rank]; }

  Kind kind_ = Kind::grevlex;
  std::vector<std::size_t> priority_;
};

// Descending comparator, so ordered containers iterate from the leading term.
struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

// Fixed storage order for polynomials: grevlex with z_0 > z_1 > ...
struct CanonicalGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    static const MonomialOrder order = MonomialOrder::grevlex();
    return order.compare(a, b) > 0;
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, CanonicalGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t ambient) : ambient_(ambient) {}

  static Polynomial constant(std::size_t ambient, const Rational& c) {
    Polynomial p(ambient);
    p.add_term(Monomial(ambient), c);
    return p;
  }
  static Polynomial one(std::size_t ambient) { return constant(ambient, 1); }
  static Polynomial variable(std::size_t ambient, std::size_t index) {
    Polynomial p(ambient);
    p.add_term(Monomial::variable(ambient, index), 1);
    return p;
  }
  static Polynomial term(const Monomial& m, const Rational& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  // Coefficient of the constant monomial.
  Rational constant_term() const {
    auto it = terms_.find(Monomial(ambient_));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Adds c * m in place, keeping the no-stored-zero invariant.
  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != ambient_) throw dimension_error("monomial does not match polynomial ambient");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Largest monomial under `order`. Requires a nonzero polynomial.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const {
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.compare(it->first, best->first) > 0) best = it;
    return *best;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  // Structural check: no stored zeros and every monomial matches the ambient.
  bool is_canonical() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.second != 0 && t.first.size() == ambient_; });
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) {
    check_ambient(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    check_ambient(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_ambient(q);
    Polynomial r(p.ambient_);
    for (const auto& [m1, c1] : p.terms_)
      for (const auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }

  bool operator==(const Polynomial& q) const { return ambient_ == q.ambient_ && terms_ == q.terms_; }

 private:
  void check_ambient(const Polynomial& q) const {
    if (ambient_ != q.ambient_)
      throw dimension_error("polynomial ambient mismatch: " + std::to_string(ambient_) + " vs " +
                            std::to_string(q.ambient_));
  }

  std::size_t ambient_ = 0;
  TermMap terms_;
};

inline Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::one(p.ambient());
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

inline Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
  if (index >= p.ambient())
    throw dimension_error("partial derivative index " + std::to_string(index) + " out of range");
  Polynomial r(p.ambient());
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t e = m[index];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps = m.exponents();
    --exps[index];
    r.add_term(Monomial(std::move(exps)), c * e);
  }
  return r;
}

struct Homogeneity {
  enum class Kind { zero, homogeneous, inhomogeneous };
  Kind kind = Kind::zero;
  std::uint32_t degree = 0;  // meaningful only for Kind::homogeneous

  bool is_homogeneous() const { return kind == Kind::homogeneous; }
  bool operator==(const Homogeneity&) const = default;
};

inline Homogeneity homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return {Homogeneity::Kind::zero, 0};
  const std::uint32_t d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms())
    if (m.degree() != d) return {Homogeneity::Kind::inhomogeneous, 0};
  return {Homogeneity::Kind::homogeneous, d};
}

// p(images[0], ..., images[n-1]). All images must share one ambient.
inline Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.ambient())
    throw dimension_error("substitution needs one image per variable");
  if (images.empty()) return p;
  const std::size_t target = images.front().ambient();
  for (const auto& img : images)
    if (img.ambient() != target) throw dimension_error("substitution images have mixed ambients");

  // Powers are reused across terms.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::one(target));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Polynomial r(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] != 0) t = t * power_of(v, m[v]);
    r += t;
  }
  return r;
}

inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.ambient()) throw dimension_error("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t v = 0; v < m.size(); ++v)
      for (std::uint32_t k = 0; k < m[v]; ++k) t *= point[v];
    total += t;
  }
  return total;
}

// Re-homes p into a larger ambient; the new variables come last.
inline Polynomial embed(const Polynomial& p, std::size_t ambient) {
  if (ambient < p.ambient()) throw dimension_error("cannot embed into a smaller ambient");
  Polynomial r(ambient);
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> e = m.exponents();
    e.resize(ambient, 0);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

// Scales p to integer coefficients with content 1 and a positive leading
// coefficient under `order`. The zero polynomial is returned unchanged.
inline Polynomial primitive_part(const Polynomial& p, const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_term(order).second < 0) scale = -scale;
  return p * scale;
}

}  // namespace engel
