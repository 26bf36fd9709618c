#pragma once

// Buchberger kernel: reduced Groebner bases, normal forms, ideal and radical
// membership, set-level variety comparison and affine dimension.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "engel/ring.hpp"

namespace engel {

namespace detail {

// A polynomial stored in decreasing order for a specific monomial order, so
// the leading term is always begin().
using OrderedTerms = std::map<Monomial, Rational, OrderGreater>;

inline OrderedTerms to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OrderedTerms t(OrderGreater{&order});
  for (const auto& [m, c] : p.terms()) t.emplace(m, c);
  return t;
}

inline Polynomial from_ordered(const OrderedTerms& t, std::size_t ambient) {
  Polynomial p(ambient);
  for (const auto& [m, c] : t) p.add_term(m, c);
  return p;
}

// t -= scale * shift * g
inline void subtract_multiple(OrderedTerms& t, const Rational& scale, const Monomial& shift,
                              const OrderedTerms& g) {
  for (const auto& [m, c] : g) {
    Monomial key = m * shift;
    Rational delta = scale * c;
    auto [it, inserted] = t.try_emplace(std::move(key), -delta);
    if (!inserted) {
      it->second -= delta;
      if (it->second == 0) t.erase(it);
    }
  }
}

struct BasisElement {
  OrderedTerms terms;
  Monomial lead;
  Rational lead_coeff;
};

inline BasisElement make_element(const Polynomial& p, const MonomialOrder& order) {
  BasisElement e{to_ordered(primitive_part(p, order), order), {}, {}};
  e.lead = e.terms.begin()->first;
  e.lead_coeff = e.terms.begin()->second;
  return e;
}

// Full reduction (leading and tail terms) of p by the elements flagged active.
inline OrderedTerms reduce(OrderedTerms p, const std::vector<BasisElement>& basis,
                           const std::vector<bool>& active, const MonomialOrder& order) {
  OrderedTerms remainder(OrderGreater{&order});
  while (!p.empty()) {
    auto lt = p.begin();
    const BasisElement* divisor = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (active[i] && basis[i].lead.divides(lt->first)) {
        divisor = &basis[i];
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.insert(remainder.end(), *lt);
      p.erase(lt);
      continue;
    }
    const Rational scale = lt->second / divisor->lead_coeff;
    const Monomial shift = lt->first / divisor->lead;
    subtract_multiple(p, scale, shift, divisor->terms);
  }
  return remainder;
}

inline OrderedTerms s_polynomial(const BasisElement& f, const BasisElement& g, const MonomialOrder& order) {
  const Monomial l = f.lead.lcm(g.lead);
  OrderedTerms s(OrderGreater{&order});
  subtract_multiple(s, Rational(-1) / f.lead_coeff, l / f.lead, f.terms);
  subtract_multiple(s, Rational(1) / g.lead_coeff, l / g.lead, g.terms);
  return s;
}

inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, std::size_t ambient,
                                          const MonomialOrder& order) {
  std::vector<BasisElement> basis;
  std::vector<bool> active;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {Polynomial::one(ambient)};
    basis.push_back(make_element(g, order));
    active.push_back(true);
  }
  if (basis.empty()) return {};

  // Pending pairs keyed so that the smallest lcm is processed first (normal
  // selection strategy); ties broken by index for determinism.
  struct Pair {
    Monomial lcm;
    std::size_t i;
    std::size_t j;
  };
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> queued;

  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pending.insert(Pair{basis[i].lead.lcm(basis[k].lead), i, k});
      queued.emplace(i, k);
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

  while (!pending.empty()) {
    const Pair pr = *pending.begin();
    pending.erase(pending.begin());
    queued.erase({pr.i, pr.j});

    const BasisElement& f = basis[pr.i];
    const BasisElement& g = basis[pr.j];
    // Product criterion.
    if (f.lead.coprime(g.lead)) continue;
    // Chain criterion: some third leading monomial divides the lcm and both
    // of its pairs with i and j have already been handled.
    bool chained = false;
    for (std::size_t l = 0; l < basis.size() && !chained; ++l) {
      if (l == pr.i || l == pr.j) continue;
      if (!basis[l].lead.divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair(std::min(a, b), std::max(a, b)); };
      if (!queued.contains(key(pr.i, l)) && !queued.contains(key(pr.j, l))) chained = true;
    }
    if (chained) continue;

    OrderedTerms r = reduce(s_polynomial(f, g, order), basis, active, order);
    if (r.empty()) continue;
    Polynomial rp = from_ordered(r, ambient);
    if (rp.is_constant()) return {Polynomial::one(ambient)};
    basis.push_back(make_element(rp, order));
    active.push_back(true);
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another active lead.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && active[i]; ++j) {
      if (i == j || !active[j]) continue;
      if (basis[j].lead.divides(basis[i].lead)) active[i] = false;
    }
  }

  // Interreduce tails against the remaining elements.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!active[i]) continue;
    std::vector<bool> others = active;
    others[i] = false;
    OrderedTerms tail = basis[i].terms;
    const auto lead = *tail.begin();
    tail.erase(tail.begin());
    OrderedTerms r = reduce(std::move(tail), basis, others, order);
    r.insert(lead);
    reduced.push_back(primitive_part(from_ordered(r, ambient), order));
  }
  std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_term(order).first, b.leading_term(order).first) > 0;
  });
  return reduced;
}

}  // namespace detail

// An ideal of the polynomial ring in `ambient` variables. Zero generators are
// dropped. Reduced Groebner bases are cached per monomial order; copies of an
// Ideal share the cache, which is filled at most once per order.
class Ideal {
 public:
  Ideal() : Ideal(0, {}) {}
  Ideal(std::size_t ambient, std::vector<Polynomial> generators)
      : ambient_(ambient), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (g.ambient() != ambient_) throw dimension_error("ideal generator ambient mismatch");
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  static Ideal unit(std::size_t ambient) { return Ideal(ambient, {Polynomial::one(ambient)}); }

  std::size_t ambient() const { return ambient_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  const std::vector<Polynomial>& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const {
    {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->bases.find(order); it != cache_->bases.end()) return *it->second;
    }
    auto computed = std::make_shared<const std::vector<Polynomial>>(detail::buchberger(generators_, ambient_, order));
    std::lock_guard lock(cache_->mutex);
    auto [it, inserted] = cache_->bases.try_emplace(order, std::move(computed));
    return *it->second;
  }

  bool has_cached_basis(const MonomialOrder& order) const {
    std::lock_guard lock(cache_->mutex);
    return cache_->bases.contains(order);
  }

  bool is_unit() const {
    const auto& gb = basis();
    return gb.size() == 1 && gb.front().is_constant();
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };

  std::size_t ambient_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

// Ideal generated by the reduced basis of I under `order`, with its cache
// already populated for that order.
inline Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex()) {
  Ideal result(ideal.ambient(), ideal.basis(order));
  result.basis(order);
  return result;
}

inline Polynomial normal_form(const Polynomial& p, const Ideal& ideal,
                              const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (p.ambient() != ideal.ambient()) throw dimension_error("normal_form ambient mismatch");
  const auto& gb = ideal.basis(order);
  std::vector<detail::BasisElement> elems;
  for (const auto& g : gb) elems.push_back(detail::make_element(g, order));
  std::vector<bool> active(elems.size(), true);
  return detail::from_ordered(detail::reduce(detail::to_ordered(p, order), elems, active, order), p.ambient());
}

inline bool ideal_member(const Polynomial& p, const Ideal& ideal) {
  if (p.is_zero()) return true;
  return normal_form(p, ideal).is_zero();
}

// Rabinowitsch: p is in the radical of I iff 1 lies in I + <1 - t p> with t a
// fresh variable.
inline bool radical_member(const Polynomial& p, const Ideal& ideal) {
  if (p.ambient() != ideal.ambient()) throw dimension_error("radical_member ambient mismatch");
  if (ideal_member(p, ideal)) return true;
  const std::size_t n = ideal.ambient() + 1;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, n));
  gens.push_back(Polynomial::one(n) - Polynomial::variable(n, n - 1) * embed(p, n));
  return Ideal(n, std::move(gens)).is_unit();
}

inline bool same_variety(const Ideal& a, const Ideal& b) {
  if (a.ambient() != b.ambient()) throw dimension_error("same_variety ambient mismatch");
  for (const auto& g : a.generators())
    if (!radical_member(g, b)) return false;
  for (const auto& g : b.generators())
    if (!radical_member(g, a)) return false;
  return true;
}

struct DimensionVerdict {
  std::size_t ambient = 0;
  bool empty = false;         // unit ideal: V(I) is the empty set
  std::size_t dimension = 0;  // meaningful only when !empty
  std::size_t codimension = 0;

  bool operator==(const DimensionVerdict&) const = default;
};

// Affine dimension of V(I) from the grevlex leading-term ideal: the size of a
// largest variable subset containing the support of no leading monomial.
inline DimensionVerdict ideal_dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ambient();
  if (ideal.is_unit()) return {n, true, 0, 0};
  std::vector<std::uint64_t> supports;
  for (const auto& g : ideal.basis()) {
    const Monomial lead = g.leading_term(MonomialOrder::grevlex()).first;
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (lead[v] != 0) mask |= std::uint64_t{1} << v;
    supports.push_back(mask);
  }
  if (n > 24) throw precondition_error("ideal_dimension supports at most 24 variables");
  std::size_t best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(subset));
    if (size <= best) continue;
    const bool independent =
        std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return {n, false, best, n - best};
}

// If V(I) is a coordinate subspace {z_i = 0 : i in S}, returns S. The unit
// ideal (empty variety) yields nullopt.
inline std::optional<std::vector<std::size_t>> coordinate_subspace(const Ideal& ideal) {
  const std::size_t n = ideal.ambient();
  if (ideal.is_unit()) return std::nullopt;
  std::vector<std::size_t> vars;
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < n; ++v) {
    const bool vanishes = radical_member(Polynomial::variable(n, v), ideal);
    if (vanishes) vars.push_back(v);
    images.push_back(vanishes ? Polynomial(n) : Polynomial::variable(n, v));
  }
  for (const auto& g : ideal.generators())
    if (!substitute(g, images).is_zero()) return std::nullopt;
  return vars;
}

}  // namespace engel
