#pragma once

// Random instance generators and small independent oracles shared by the
// test binaries. Everything is seeded so failures reproduce.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "engel/exterior.hpp"
#include "engel/ring.hpp"
#include "engel/text.hpp"

namespace engel {

// gtest printers
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const DiffForm& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << (m.is_one() ? "1" : to_string(m)); }

}  // namespace engel

namespace engel::fixture {

class RandomSource {
 public:
  explicit RandomSource(std::uint32_t seed) : rng_(seed) {}

  std::size_t index(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return index(2) == 1; }

  // Small nonzero rational, occasionally with a denominator.
  Rational coefficient() {
    long num = 0;
    while (num == 0) num = integer(-5, 5);
    const long den = index(4) == 0 ? integer(2, 4) : 1;
    return make_rational(num, den);
  }

  Monomial monomial(std::size_t n, std::uint32_t max_degree) {
    std::vector<std::uint32_t> e(n, 0);
    const std::uint32_t d = static_cast<std::uint32_t>(index(max_degree + 1));
    for (std::uint32_t k = 0; k < d; ++k) ++e[index(n)];
    return Monomial(std::move(e));
  }

  Monomial homogeneous_monomial(std::size_t n, std::uint32_t degree) {
    std::vector<std::uint32_t> e(n, 0);
    for (std::uint32_t k = 0; k < degree; ++k) ++e[index(n)];
    return Monomial(std::move(e));
  }

  Polynomial polynomial(std::size_t n, std::uint32_t max_degree, std::size_t max_terms) {
    Polynomial p(n);
    const std::size_t terms = index(max_terms + 1);
    for (std::size_t t = 0; t < terms; ++t) p += Polynomial::term(monomial(n, max_degree), coefficient());
    return p;
  }

  Polynomial nonzero_polynomial(std::size_t n, std::uint32_t max_degree, std::size_t max_terms) {
    Polynomial p(n);
    while (p.is_zero()) p = polynomial(n, max_degree, max_terms);
    return p;
  }

  Polynomial homogeneous(std::size_t n, std::uint32_t degree, std::size_t max_terms) {
    Polynomial p(n);
    while (p.is_zero()) {
      const std::size_t terms = 1 + index(max_terms);
      for (std::size_t t = 0; t < terms; ++t) p += Polynomial::term(homogeneous_monomial(n, degree), coefficient());
    }
    return p;
  }

  IndexTuple increasing_tuple(std::size_t n, std::size_t q) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng_);
    IndexTuple idx(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(q));
    std::sort(idx.begin(), idx.end());
    return idx;
  }

  DiffForm form(std::size_t n, std::size_t q, std::uint32_t max_degree, std::size_t max_terms) {
    DiffForm f(n, q);
    const std::size_t terms = index(max_terms + 1);
    for (std::size_t t = 0; t < terms; ++t) f.add_term(increasing_tuple(n, q), polynomial(n, max_degree, 2));
    return f;
  }

  DiffForm homogeneous_form(std::size_t n, std::size_t q, std::uint32_t s, std::size_t max_terms) {
    DiffForm f(n, q);
    while (f.is_zero()) {
      const std::size_t terms = 1 + index(max_terms);
      for (std::size_t t = 0; t < terms; ++t) f.add_term(increasing_tuple(n, q), homogeneous(n, s, 2));
    }
    return f;
  }

  VecField vector_field(std::size_t n, std::uint32_t max_degree) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(polynomial(n, max_degree, 2));
    return VecField(std::move(comps));
  }

  PolyMap map(std::size_t source, std::size_t target, std::uint32_t max_degree) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < target; ++i) comps.push_back(polynomial(source, max_degree, 3));
    return PolyMap(source, std::move(comps));
  }

  // Map z_i -> c_i z_i + (linear shear) + (higher-order terms): invertible
  // linear part at the origin, no constant term.
  PolyMap invertible_map(std::size_t n, std::uint32_t max_degree) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial c = coefficient() * Polynomial::variable(n, i);
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin()) c += Polynomial::constant(n, integer(-2, 2)) * Polynomial::variable(n, j);
      for (std::size_t t = 0; t < 2; ++t) {
        Monomial m = monomial(n, max_degree);
        if (m.degree() >= 2) c += Polynomial::term(m, coefficient());
      }
      comps.push_back(std::move(c));
    }
    return PolyMap(n, std::move(comps));
  }

  std::vector<Rational> point(std::size_t n) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(make_rational(integer(-7, 7), integer(1, 3)));
    return p;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Affine dimension of a monomial ideal straight from its generators: the
// largest variable set S such that no generator is supported inside S.
inline long monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.is_one()) return -1;
  long best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v)
        if (g[v] > 0 && !(mask & (1u << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<long>(best, std::popcount(mask));
  }
  return best;
}

// Dense expansion of a polynomial as value table over a grid; two
// polynomials of degree < grid size agree iff their tables agree.
inline std::vector<Rational> value_table(const Polynomial& p, long lo, long hi) {
  const std::size_t n = p.ambient();
  std::vector<Rational> values;
  std::vector<long> x(n, lo);
  for (;;) {
    std::vector<Rational> pt(x.begin(), x.end());
    values.push_back(evaluate(p, pt));
    std::size_t k = 0;
    while (k < n && x[k] == hi) x[k++] = lo;
    if (k == n) break;
    ++x[k];
  }
  return values;
}

}  // namespace engel::fixture
