#pragma once

// Differential forms with polynomial coefficients on the affine space with
// coordinates z_0, ..., z_{n-1}: wedge, exterior derivative, contraction
// with polynomial vector fields and pullback along polynomial maps.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "engel/groebner.hpp"
#include "engel/ring.hpp"

namespace engel {

// Strictly increasing list of variable indices: (1, 3) stands for dz1 ^ dz3.
using IndexTuple = std::vector<std::size_t>;

// Sorts `indices` in place and returns the sign of the sorting permutation,
// or 0 if an index repeats. Every term of every form passes through here.
inline int normalize_indices(IndexTuple& indices) {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  return sign;
}

class DiffForm {
 public:
  using TermMap = std::map<IndexTuple, Polynomial>;

  DiffForm() = default;
  DiffForm(std::size_t ambient, std::size_t degree) : ambient_(ambient), degree_(degree) {}

  // A 0-form.
  static DiffForm function(const Polynomial& p) {
    DiffForm f(p.ambient(), 0);
    f.add_term({}, p);
    return f;
  }

  // dz_{i1} ^ ... ^ dz_{iq}, in any index order.
  static DiffForm basis(std::size_t ambient, IndexTuple indices) {
    DiffForm f(ambient, indices.size());
    f.add_term(std::move(indices), Polynomial::one(ambient));
    return f;
  }

  static DiffForm differential(std::size_t ambient, std::size_t index) { return basis(ambient, {index}); }

  std::size_t ambient() const { return ambient_; }
  std::size_t degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial coefficient(const IndexTuple& indices) const {
    auto it = terms_.find(indices);
    return it == terms_.end() ? Polynomial(ambient_) : it->second;
  }

  // Adds coeff * dz_indices, folding the sort sign into the coefficient.
  void add_term(IndexTuple indices, const Polynomial& coeff) {
    if (indices.size() != degree_) throw dimension_error("term degree does not match form degree");
    if (coeff.ambient() != ambient_) throw dimension_error("coefficient ambient does not match form");
    for (std::size_t i : indices)
      if (i >= ambient_) throw dimension_error("differential index " + std::to_string(i) + " out of range");
    const int sign = normalize_indices(indices);
    if (sign == 0 || coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(indices), Polynomial(ambient_));
    if (sign > 0) {
      it->second += coeff;
    } else {
      it->second -= coeff;
    }
    if (it->second.is_zero()) terms_.erase(it);
  }

  bool is_canonical() const {
    for (const auto& [idx, c] : terms_) {
      if (c.is_zero() || !c.is_canonical() || idx.size() != degree_) return false;
      for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] >= idx[i]) return false;
    }
    return true;
  }

  DiffForm operator-() const {
    DiffForm r = *this;
    for (auto& [idx, c] : r.terms_) c = -c;
    return r;
  }

  DiffForm& operator+=(const DiffForm& other) {
    check_compatible(other);
    for (const auto& [idx, c] : other.terms_) add_term(idx, c);
    return *this;
  }
  DiffForm& operator-=(const DiffForm& other) {
    check_compatible(other);
    for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
    return *this;
  }

  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }

  friend DiffForm operator*(const Polynomial& p, const DiffForm& f) {
    if (p.ambient() != f.ambient_) throw dimension_error("scalar ambient does not match form");
    DiffForm r(f.ambient_, f.degree_);
    for (const auto& [idx, c] : f.terms_) r.add_term(idx, p * c);
    return r;
  }
  friend DiffForm operator*(const Rational& s, const DiffForm& f) {
    return Polynomial::constant(f.ambient_, s) * f;
  }

  bool operator==(const DiffForm& other) const {
    if (ambient_ != other.ambient_) return false;
    // Zero forms of different degree compare unequal; nonzero forms carry their degree in the keys.
    return degree_ == other.degree_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const DiffForm& other) const {
    if (ambient_ != other.ambient_) throw dimension_error("form ambient mismatch");
    if (degree_ != other.degree_) throw dimension_error("cannot add forms of different degree");
  }

  std::size_t ambient_ = 0;
  std::size_t degree_ = 0;
  TermMap terms_;
};

struct VecField {
  std::size_t ambient = 0;
  std::vector<Polynomial> components;

  VecField() = default;
  explicit VecField(std::vector<Polynomial> comps) : components(std::move(comps)) {
    if (components.empty()) throw dimension_error("vector field needs at least one component");
    ambient = components.front().ambient();
    if (components.size() != ambient) throw dimension_error("vector field component count must equal ambient");
    for (const auto& c : components)
      if (c.ambient() != ambient) throw dimension_error("vector field components have mixed ambients");
  }
};

// R = sum_i z_i d/dz_i
inline VecField radial_field(std::size_t ambient) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < ambient; ++i) comps.push_back(Polynomial::variable(ambient, i));
  return VecField(std::move(comps));
}

// A polynomial map from a source space to a target space: components[i] is
// the pullback of target coordinate z_i, written in source variables.
struct PolyMap {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<Polynomial> components;

  PolyMap() = default;
  PolyMap(std::size_t source_ambient, std::vector<Polynomial> comps)
      : source(source_ambient), target(comps.size()), components(std::move(comps)) {
    for (const auto& c : components)
      if (c.ambient() != source) throw dimension_error("map component ambient must equal the source ambient");
  }

  static PolyMap identity(std::size_t ambient) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < ambient; ++i) comps.push_back(Polynomial::variable(ambient, i));
    return PolyMap(ambient, std::move(comps));
  }
};

inline DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.ambient() != b.ambient()) throw dimension_error("wedge ambient mismatch");
  DiffForm r(a.ambient(), a.degree() + b.degree());
  if (r.degree() > r.ambient()) return r;
  for (const auto& [i, ci] : a.terms()) {
    for (const auto& [j, cj] : b.terms()) {
      IndexTuple idx = i;
      idx.insert(idx.end(), j.begin(), j.end());
      r.add_term(std::move(idx), ci * cj);
    }
  }
  return r;
}

// Left fold; returns the constant 0-form 1 for an empty list.
inline DiffForm wedge_all(const std::vector<DiffForm>& forms, std::size_t ambient) {
  DiffForm r = DiffForm::function(Polynomial::one(ambient));
  for (const auto& f : forms) r = wedge(r, f);
  return r;
}

inline DiffForm exterior_derivative(const DiffForm& f) {
  DiffForm r(f.ambient(), f.degree() + 1);
  if (r.degree() > r.ambient()) return r;
  for (const auto& [idx, c] : f.terms()) {
    for (std::size_t i = 0; i < f.ambient(); ++i) {
      Polynomial dc = partial_derivative(c, i);
      if (dc.is_zero()) continue;
      IndexTuple full{i};
      full.insert(full.end(), idx.begin(), idx.end());
      r.add_term(std::move(full), dc);
    }
  }
  return r;
}

inline DiffForm differential(const Polynomial& p) { return exterior_derivative(DiffForm::function(p)); }

inline DiffForm interior_product(const VecField& x, const DiffForm& f) {
  if (x.ambient != f.ambient()) throw dimension_error("interior product ambient mismatch");
  if (f.degree() == 0) return DiffForm(f.ambient(), 0);
  DiffForm r(f.ambient(), f.degree() - 1);
  for (const auto& [idx, c] : f.terms()) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
      IndexTuple rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      Polynomial term = x.components[idx[p]] * c;
      r.add_term(std::move(rest), p % 2 == 0 ? term : -term);
    }
  }
  return r;
}

inline DiffForm pullback(const PolyMap& map, const DiffForm& f) {
  if (f.ambient() != map.target) throw dimension_error("pullback: form ambient must equal the map target");
  std::vector<DiffForm> dfs;
  for (const auto& c : map.components) dfs.push_back(differential(c));
  DiffForm r(map.source, f.degree());
  for (const auto& [idx, c] : f.terms()) {
    DiffForm piece = DiffForm::function(substitute(c, map.components));
    for (std::size_t i : idx) piece = wedge(piece, dfs[i]);
    r += piece;
  }
  return r;
}

// r-fold wedge of f with itself; the constant 1 for r = 0.
inline DiffForm form_power(const DiffForm& f, unsigned r) {
  DiffForm result = DiffForm::function(Polynomial::one(f.ambient()));
  for (unsigned k = 0; k < r; ++k) {
    result = wedge(result, f);
    if (result.is_zero()) break;
  }
  if (result.is_zero()) return DiffForm(f.ambient(), f.degree() * r);
  return result;
}

inline Ideal coefficient_ideal(const DiffForm& f) {
  std::vector<Polynomial> gens;
  for (const auto& [idx, c] : f.terms()) gens.push_back(c);
  return Ideal(f.ambient(), std::move(gens));
}

// A nonzero coefficient certifying f != 0.
struct FormWitness {
  IndexTuple indices;
  Polynomial coefficient;
};

inline std::optional<FormWitness> nonzero_witness(const DiffForm& f) {
  if (f.is_zero()) return std::nullopt;
  const auto& [idx, c] = *f.terms().begin();
  return FormWitness{idx, c};
}

// Common homogeneous degree of all coefficients, or zero/inhomogeneous.
inline Homogeneity coefficient_degree(const DiffForm& f) {
  if (f.is_zero()) return {Homogeneity::Kind::zero, 0};
  std::optional<std::uint32_t> deg;
  for (const auto& [idx, c] : f.terms()) {
    const Homogeneity h = homogeneous_degree(c);
    if (!h.is_homogeneous()) return {Homogeneity::Kind::inhomogeneous, 0};
    if (deg && *deg != h.degree) return {Homogeneity::Kind::inhomogeneous, 0};
    deg = h.degree;
  }
  return {Homogeneity::Kind::homogeneous, *deg};
}

// Value of every coefficient at a point; zero means the form vanishes there.
inline DiffForm evaluate_at(const DiffForm& f, std::span<const Rational> point) {
  DiffForm r(f.ambient(), f.degree());
  for (const auto& [idx, c] : f.terms()) r.add_term(idx, Polynomial::constant(f.ambient(), evaluate(c, point)));
  return r;
}

}  // namespace engel
