#pragma once

// Pfaff systems <w_1, ..., w_k> of polynomial 1-forms and the predicates
// defined on them: singular ideal, integrability, derived-flag membership,
// Engel conditions, class, integral varieties and system equality.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "engel/exterior.hpp"
#include "engel/groebner.hpp"

namespace engel {

class PfaffSystem {
 public:
  // Generators must be 1-forms on a common ambient whose wedge is not
  // identically zero.
  explicit PfaffSystem(std::vector<DiffForm> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw precondition_error("a Pfaff system needs at least one generator");
    ambient_ = generators_.front().ambient();
    for (const auto& g : generators_) {
      if (g.ambient() != ambient_) throw dimension_error("Pfaff system generators have mixed ambients");
      if (g.degree() != 1) throw precondition_error("Pfaff system generators must be 1-forms");
    }
    wedge_ = wedge_all(generators_, ambient_);
    if (wedge_.is_zero()) throw precondition_error("Pfaff system generators are not generically independent");
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<DiffForm>& generators() const { return generators_; }
  const DiffForm& generator(std::size_t i) const { return generators_.at(i); }
  // w_1 ^ ... ^ w_k
  const DiffForm& wedge() const { return wedge_; }

 private:
  std::size_t ambient_ = 0;
  std::vector<DiffForm> generators_;
  DiffForm wedge_;
};

inline Ideal singular_ideal(const PfaffSystem& s) { return coefficient_ideal(s.wedge()); }

inline bool is_integrable(const PfaffSystem& s) {
  for (const auto& w : s.generators())
    if (!wedge(exterior_derivative(w), s.wedge()).is_zero()) return false;
  return true;
}

// d(gamma) ^ w_1 ^ ... ^ w_k == 0
inline bool in_derived(const DiffForm& gamma, const PfaffSystem& s) {
  if (gamma.ambient() != s.ambient()) throw dimension_error("in_derived ambient mismatch");
  if (gamma.degree() != 1) throw precondition_error("in_derived expects a 1-form");
  return wedge(exterior_derivative(gamma), s.wedge()).is_zero();
}

// Largest r with beta ^ (d beta)^r != 0.
inline unsigned class_of(const DiffForm& beta) {
  if (beta.degree() != 1) throw precondition_error("class_of expects a 1-form");
  if (beta.is_zero()) throw precondition_error("the class of the zero form is undefined");
  const DiffForm dbeta = exterior_derivative(beta);
  DiffForm current = beta;  // beta ^ (d beta)^r
  unsigned r = 0;
  for (;;) {
    DiffForm next = wedge(current, dbeta);
    if (next.is_zero()) return r;
    current = std::move(next);
    ++r;
  }
}

// Constant combination lambda*w_1 + mu*w_2 lying in the first derived system,
// for a 2-generator system in which neither generator does.
struct PencilMember {
  Rational lambda;
  Rational mu;
  DiffForm form;
};

namespace detail {

// Scales f so the leading coefficient of its first term is 1.
inline DiffForm monic_form(const DiffForm& f) {
  if (f.is_zero()) return f;
  const Polynomial& c = f.terms().begin()->second;
  const Rational lead = c.terms().begin()->second;
  return Rational(1 / lead) * f;
}

}  // namespace detail

// Solves lambda*A + mu*B == 0 exactly, with A = d(w_1) ^ W and B = d(w_2) ^ W.
inline std::optional<PencilMember> derived_pencil(const PfaffSystem& s) {
  if (s.size() != 2) throw precondition_error("derived_pencil expects a 2-generator system");
  const DiffForm a = wedge(exterior_derivative(s.generator(0)), s.wedge());
  const DiffForm b = wedge(exterior_derivative(s.generator(1)), s.wedge());
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  // Pick any coefficient of B; a proportional A must match it up to the same ratio.
  const auto& [idx, bpoly] = *b.terms().begin();
  const auto& [mono, bcoef] = *bpoly.terms().begin();
  const Rational acoef = a.coefficient(idx).coefficient(mono);
  if (acoef == 0) return std::nullopt;
  const Rational lambda = bcoef;
  const Rational mu = -acoef;
  if (!(lambda * a + mu * b).is_zero()) return std::nullopt;
  DiffForm combo = lambda * s.generator(0) + mu * s.generator(1);
  return PencilMember{lambda, mu, detail::monic_form(combo)};
}

struct EngelReport {
  enum class RoleSource { generator, pencil, none };

  bool condition_i = false;    // alpha ^ beta ^ d alpha != 0
  bool condition_ii = false;   // alpha ^ beta ^ d beta == 0
  bool condition_iii = false;  // beta ^ d beta != 0
  bool extra_iii_prime = false;  // beta ^ (d beta)^2 == 0
  bool is_engel = false;

  RoleSource role_source = RoleSource::none;
  std::optional<std::size_t> beta_index;  // set when a listed generator plays beta
  std::optional<std::pair<Rational, Rational>> pencil;
  DiffForm alpha;
  DiffForm beta;

  std::optional<unsigned> class_of_beta;
  std::optional<unsigned> derived_length;
  DimensionVerdict sing_system;
  DimensionVerdict sing_dbeta;

  // Empty for Engel systems, otherwise the reason the check failed.
  std::string failure;
  std::optional<FormWitness> witness_i;
  std::optional<FormWitness> witness_iii;
};

inline const char* to_string(EngelReport::RoleSource s) {
  switch (s) {
    case EngelReport::RoleSource::generator: return "generator";
    case EngelReport::RoleSource::pencil: return "pencil";
    case EngelReport::RoleSource::none: return "none";
  }
  return "none";
}

// Input order is never trusted: beta is whichever generator (or constant
// recombination) lies in the first derived system.
inline EngelReport engel_check(const PfaffSystem& s) {
  if (s.size() != 2) throw precondition_error("engel_check expects exactly two generators");
  EngelReport rep;
  const bool first_derived = in_derived(s.generator(0), s);
  const bool second_derived = in_derived(s.generator(1), s);

  if (first_derived != second_derived) {
    const std::size_t b = first_derived ? 0 : 1;
    rep.role_source = EngelReport::RoleSource::generator;
    rep.beta_index = b;
    rep.beta = s.generator(b);
    rep.alpha = s.generator(1 - b);
  } else if (!first_derived) {
    if (auto pencil = derived_pencil(s)) {
      rep.role_source = EngelReport::RoleSource::pencil;
      rep.pencil = std::pair(pencil->lambda, pencil->mu);
      rep.beta = pencil->form;
      rep.alpha = s.generator(1);
    } else {
      rep.failure = "no generator or constant recombination lies in the first derived system";
    }
  } else {
    rep.failure = "both generators lie in the first derived system, so condition (i) fails";
  }
  if (rep.role_source == EngelReport::RoleSource::none) {
    rep.alpha = s.generator(0);
    rep.beta = s.generator(1);
  }

  const DiffForm ab = wedge(rep.alpha, rep.beta);
  const DiffForm dalpha = exterior_derivative(rep.alpha);
  const DiffForm dbeta = exterior_derivative(rep.beta);
  const DiffForm form_i = wedge(ab, dalpha);
  const DiffForm form_iii = wedge(rep.beta, dbeta);
  rep.condition_i = !form_i.is_zero();
  rep.condition_ii = wedge(ab, dbeta).is_zero();
  rep.condition_iii = !form_iii.is_zero();
  rep.extra_iii_prime = wedge(form_iii, dbeta).is_zero();
  rep.witness_i = nonzero_witness(form_i);
  rep.witness_iii = nonzero_witness(form_iii);
  rep.is_engel = rep.role_source != EngelReport::RoleSource::none && rep.condition_i && rep.condition_ii &&
                 rep.condition_iii;
  if (rep.failure.empty() && !rep.is_engel) {
    std::string failed;
    if (!rep.condition_i) failed += " (i)";
    if (!rep.condition_ii) failed += " (ii)";
    if (!rep.condition_iii) failed += " (iii)";
    rep.failure = "condition" + failed + " fails";
  }

  if (!rep.beta.is_zero()) rep.class_of_beta = class_of(rep.beta);
  // The first derived system is <beta> and the second vanishes.
  if (rep.is_engel) rep.derived_length = 2;
  rep.sing_system = ideal_dimension(singular_ideal(s));
  rep.sing_dbeta = ideal_dimension(coefficient_ideal(dbeta));
  return rep;
}

// A coefficient of w_i ^ df_1 ^ ... ^ df_r outside <f_1, ..., f_r>, if any.
struct IntegralObstruction {
  std::size_t generator = 0;
  FormWitness witness;
};

inline std::optional<IntegralObstruction> integral_variety_obstruction(const std::vector<Polynomial>& gens,
                                                                        const PfaffSystem& s) {
  for (const auto& g : gens)
    if (g.ambient() != s.ambient()) throw dimension_error("integral variety generator ambient mismatch");
  std::vector<DiffForm> dfs;
  for (const auto& g : gens) dfs.push_back(differential(g));
  const DiffForm df_all = wedge_all(dfs, s.ambient());
  const Ideal ideal(s.ambient(), gens);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const DiffForm restricted = wedge(s.generator(i), df_all);
    for (const auto& [idx, c] : restricted.terms())
      if (!ideal_member(c, ideal)) return IntegralObstruction{i, FormWitness{idx, c}};
  }
  return std::nullopt;
}

inline bool is_integral_variety(const std::vector<Polynomial>& gens, const PfaffSystem& s) {
  return !integral_variety_obstruction(gens, s);
}

// Generic coincidence: each generator of one system wedges to zero against
// the full wedge of the other, and vice versa.
inline bool same_system(const PfaffSystem& s, const PfaffSystem& t) {
  if (s.ambient() != t.ambient()) throw dimension_error("same_system ambient mismatch");
  if (s.size() != t.size()) throw dimension_error("same_system generator count mismatch");
  for (const auto& w : s.generators())
    if (!wedge(w, t.wedge()).is_zero()) return false;
  for (const auto& w : t.generators())
    if (!wedge(w, s.wedge()).is_zero()) return false;
  return true;
}

struct CodimReport {
  DimensionVerdict actual;
  std::size_t expected = 0;  // k + 1
  bool atypical = false;
};

inline CodimReport codim_report(const PfaffSystem& s) {
  CodimReport r;
  r.actual = ideal_dimension(singular_ideal(s));
  r.expected = s.size() + 1;
  r.atypical = !r.actual.empty && r.actual.codimension < r.expected;
  return r;
}

// Whether the system's k-form is nonzero at the origin (pointwise reading of
// "!= 0", as opposed to the generic one used by the predicates above).
inline bool nonsingular_at_origin(const PfaffSystem& s) {
  const std::vector<Rational> origin(s.ambient(), Rational(0));
  return !evaluate_at(s.wedge(), origin).is_zero();
}

// <df4 - f3 df1, df3 - f2 df1> for f = (f1, f2, f3, f4); the derived
// generator comes first, as in the canonical system.
inline PfaffSystem engel_normal_form(std::span<const Polynomial> f) {
  if (f.size() != 4) throw dimension_error("engel_normal_form expects four functions");
  const DiffForm df1 = differential(f[0]);
  const DiffForm beta = differential(f[3]) - f[2] * df1;
  const DiffForm alpha = differential(f[2]) - f[1] * df1;
  return PfaffSystem({beta, alpha});
}

// Verification of the Jacobian identity behind the normal form. With
// beta = df4 - f3 df1 and alpha = a df1 + b df3 + lambda beta:
//   d(alpha) ^ beta ^ alpha == (b da - a db) ^ df1 ^ df4 ^ df3,
// and, when b is a nonzero constant so that f2 = -a/b is a polynomial,
//   d(alpha) ^ beta ^ alpha == -b^2 df2 ^ df1 ^ df4 ^ df3.
struct JacobianIdentityReport {
  DiffForm lhs;
  DiffForm rhs;
  bool holds = false;
  bool dbeta_beta_alpha_vanishes = false;
  bool constant_b = false;
  std::optional<DiffForm> jacobian_form;  // -b^2 df2 ^ df1 ^ df4 ^ df3
  bool jacobian_form_holds = false;
};

inline JacobianIdentityReport jacobian_identity_check(const Polynomial& f1, const Polynomial& f3, const Polynomial& f4,
                                                      const Polynomial& a, const Polynomial& b,
                                                      const Polynomial& lambda) {
  const std::size_t n = f1.ambient();
  for (const Polynomial* p : {&f3, &f4, &a, &b, &lambda})
    if (p->ambient() != n) throw dimension_error("jacobian_identity_check ambient mismatch");
  const DiffForm df1 = differential(f1);
  const DiffForm df3 = differential(f3);
  const DiffForm df4 = differential(f4);
  const DiffForm beta = df4 - f3 * df1;
  const DiffForm alpha = a * df1 + b * df3 + lambda * beta;

  JacobianIdentityReport r;
  const DiffForm beta_alpha = wedge(beta, alpha);
  r.lhs = wedge(exterior_derivative(alpha), beta_alpha);
  const DiffForm jac_tail = wedge(wedge(df1, df4), df3);
  r.rhs = wedge(b * differential(a) - a * differential(b), jac_tail);
  r.holds = r.lhs == r.rhs;
  r.dbeta_beta_alpha_vanishes = wedge(exterior_derivative(beta), beta_alpha).is_zero();
  r.constant_b = b.is_constant() && !b.is_zero();
  if (r.constant_b) {
    const Rational bc = b.constant_term();
    const Polynomial f2 = a * Rational(-1 / bc);
    r.jacobian_form = Rational(-bc * bc) * wedge(differential(f2), jac_tail);
    r.jacobian_form_holds = *r.jacobian_form == r.lhs;
  }
  return r;
}

}  // namespace engel
