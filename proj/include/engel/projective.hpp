#pragma once

// Homogeneous forms on C^{n+1} descending to P^n: Euler contraction, degree
// bookkeeping, the Jouanolou identity and the degeneracy of globally
// decomposable Engel normal forms.
//
// Degrees are coefficient degrees throughout: a q-form "of degree s" has all
// coefficients homogeneous of total degree s, so that
//   i_R d(eta) + d(i_R eta) = (q + s) eta.
// The line-bundle twist of a k-form of coefficient degree s is s + k, i.e.
// d + k + 1 with d = s - 1 the degree of the distribution.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "engel/exterior.hpp"
#include "engel/groebner.hpp"
#include "engel/pfaff.hpp"

namespace engel {

inline bool euler_check(const DiffForm& f) { return interior_product(radial_field(f.ambient()), f).is_zero(); }

struct DegreeInfo {
  std::uint32_t coefficient_degree = 0;
  std::size_t form_degree = 0;  // k
  long distribution_degree = 0;  // d = coefficient_degree - 1
  long twist = 0;                // d + k + 1
};

inline DegreeInfo degree_of(const DiffForm& f) {
  const Homogeneity h = coefficient_degree(f);
  if (!h.is_homogeneous()) throw precondition_error("degree_of needs a nonzero form with homogeneous coefficients");
  if (!euler_check(f)) throw precondition_error("degree_of needs i_R(form) == 0");
  DegreeInfo info;
  info.coefficient_degree = h.degree;
  info.form_degree = f.degree();
  info.distribution_degree = static_cast<long>(h.degree) - 1;
  info.twist = info.distribution_degree + static_cast<long>(f.degree()) + 1;
  return info;
}

struct JouanolouReport {
  std::size_t form_degree = 0;         // q
  std::uint32_t coefficient_degree = 0;  // s
  std::size_t factor = 0;              // q + s
  DiffForm lhs;                        // i_R d(eta) + d(i_R eta)
  bool holds = false;
};

inline JouanolouReport jouanolou_identity_check(const DiffForm& eta) {
  const Homogeneity h = coefficient_degree(eta);
  if (h.kind == Homogeneity::Kind::inhomogeneous) throw precondition_error("Jouanolou identity needs homogeneous coefficients");
  const VecField r = radial_field(eta.ambient());
  JouanolouReport rep;
  rep.form_degree = eta.degree();
  rep.coefficient_degree = h.degree;
  rep.factor = eta.degree() + h.degree;
  rep.lhs = interior_product(r, exterior_derivative(eta));
  const DiffForm second = exterior_derivative(interior_product(r, eta));
  if (eta.degree() > 0) rep.lhs += second;
  rep.holds = rep.lhs == Rational(static_cast<unsigned long>(rep.factor)) * eta;
  return rep;
}

// Builds alpha = df4 - f3 df1 and beta = df3 - f2 df1 from homogeneous f1..f4
// and checks what the Euler condition forces. With k_i = deg f_i, the
// contractions are i_R alpha = k4 f4 - k1 f3 f1 and i_R beta = k3 f3 - k1 f2 f1.
//
// alpha is the derived generator here, so the Engel conditions read
// (iii) alpha ^ d alpha != 0 and (i) beta ^ alpha ^ d beta != 0.
struct DegeneracyReport {
  std::array<std::uint32_t, 4> degrees{};
  bool euler_alpha = false;
  bool euler_beta = false;
  bool relation_alpha = false;  // k4 f4 == k1 f3 f1
  bool relation_beta = false;   // k3 f3 == k1 f2 f1
  bool beta_dbeta_zero = false;
  bool alpha_beta_dalpha_zero = false;
  bool alpha_dalpha_zero = false;        // Engel (iii) fails for the derived generator
  bool alpha_beta_dbeta_zero = false;    // Engel (i) fails for the other one
  bool degenerate = false;               // Euler holds and every check above vanishes
};

struct DegeneracyOptions {
  // Allow f2 == 0 for diagnostics; by default every f_i must be nonzero.
  bool allow_zero_f2 = false;
};

inline DegeneracyReport degeneracy_check(std::span<const Polynomial> f, DegeneracyOptions opts = {}) {
  if (f.size() != 4) throw dimension_error("degeneracy_check expects f1, f2, f3, f4");
  DegeneracyReport rep;
  for (std::size_t i = 0; i < 4; ++i) {
    if (f[i].ambient() != f[0].ambient()) throw dimension_error("degeneracy_check ambient mismatch");
    const Homogeneity h = homogeneous_degree(f[i]);
    if (h.kind == Homogeneity::Kind::inhomogeneous)
      throw precondition_error("f" + std::to_string(i + 1) + " is not homogeneous");
    if (h.kind == Homogeneity::Kind::zero && !(i == 1 && opts.allow_zero_f2))
      throw precondition_error("f" + std::to_string(i + 1) + " must be nonzero");
    rep.degrees[i] = h.degree;
  }
  const auto k = [&](std::size_t i) { return Rational(static_cast<unsigned long>(rep.degrees[i])); };
  const DiffForm df1 = differential(f[0]);
  const DiffForm alpha = differential(f[3]) - f[2] * df1;
  const DiffForm beta = differential(f[2]) - f[1] * df1;
  rep.euler_alpha = euler_check(alpha);
  rep.euler_beta = euler_check(beta);
  rep.relation_alpha = k(3) * f[3] == k(0) * (f[2] * f[0]);
  rep.relation_beta = k(2) * f[2] == k(0) * (f[1] * f[0]);

  const DiffForm dalpha = exterior_derivative(alpha);
  const DiffForm dbeta = exterior_derivative(beta);
  rep.beta_dbeta_zero = wedge(beta, dbeta).is_zero();
  rep.alpha_beta_dalpha_zero = wedge(wedge(alpha, beta), dalpha).is_zero();
  rep.alpha_dalpha_zero = wedge(alpha, dalpha).is_zero();
  rep.alpha_beta_dbeta_zero = wedge(wedge(beta, alpha), dbeta).is_zero();
  rep.degenerate = rep.euler_alpha && rep.euler_beta && rep.beta_dbeta_zero && rep.alpha_beta_dalpha_zero &&
                   rep.alpha_dalpha_zero && rep.alpha_beta_dbeta_zero;
  return rep;
}

// beta ^ (d beta)^2 for an Euler-compatible homogeneous 1-form on C^5. It is
// a 5-form killed by i_R, hence zero.
inline bool five_form_vanishing_check(const DiffForm& beta) {
  if (beta.ambient() != 5) throw dimension_error("five_form_vanishing_check works on 5 variables");
  if (beta.degree() != 1) throw precondition_error("five_form_vanishing_check expects a 1-form");
  if (coefficient_degree(beta).kind == Homogeneity::Kind::inhomogeneous)
    throw precondition_error("five_form_vanishing_check needs homogeneous coefficients");
  if (!euler_check(beta)) throw precondition_error("five_form_vanishing_check needs i_R(beta) == 0");
  const DiffForm dbeta = exterior_derivative(beta);
  return wedge(wedge(beta, dbeta), dbeta).is_zero();
}

// A Pfaff system on C^{n+1} whose generators are homogeneous and killed by
// the radial field.
class ProjectiveSystem {
 public:
  explicit ProjectiveSystem(PfaffSystem system) : system_(std::move(system)) {
    for (std::size_t i = 0; i < system_.size(); ++i) {
      const DiffForm& g = system_.generator(i);
      if (!euler_check(g))
        throw precondition_error("generator " + std::to_string(i + 1) + " violates the Euler condition i_R w = 0");
      const Homogeneity h = coefficient_degree(g);
      if (!h.is_homogeneous())
        throw precondition_error("generator " + std::to_string(i + 1) + " has inhomogeneous coefficients");
      degrees_.push_back(h.degree);
    }
  }

  const PfaffSystem& underlying() const { return system_; }
  const std::vector<std::uint32_t>& coefficient_degrees() const { return degrees_; }
  // Line-bundle twist s + 1 of each generator.
  std::vector<long> twists() const {
    std::vector<long> t;
    for (auto d : degrees_) t.push_back(static_cast<long>(d) + 1);
    return t;
  }

 private:
  PfaffSystem system_;
  std::vector<std::uint32_t> degrees_;
};

struct AtypicalityReport {
  EngelReport engel;
  DimensionVerdict sing_system;
  DimensionVerdict sing_dbeta;
  std::uint32_t beta_coefficient_degree = 0;  // s
  long beta_twist = 0;                       // s + 1
  // i_R(d beta) == (s + 1) beta under the coefficient-degree convention. Under
  // the twist reading of s the factor would be twist + 1; both are recorded.
  bool contraction_identity = false;
  std::size_t factor_coefficient_convention = 0;
  long factor_twist_convention = 0;
  // V(coeff(d beta)) is contained in V(coeff(beta ^ alpha)).
  bool containment = false;
  // "sing-codim-1", "dbeta-codim-2", or "none".
  std::string branch;
};

inline AtypicalityReport atypicality_verdict(const ProjectiveSystem& ps) {
  const PfaffSystem& s = ps.underlying();
  if (s.size() != 2) throw precondition_error("atypicality_verdict expects a 2-generator system");
  AtypicalityReport rep;
  rep.engel = engel_check(s);
  if (!rep.engel.is_engel) throw precondition_error("atypicality_verdict needs an Engel system: " + rep.engel.failure);
  const DiffForm& beta = rep.engel.beta;
  const DiffForm& alpha = rep.engel.alpha;
  const DiffForm dbeta = exterior_derivative(beta);

  rep.sing_system = rep.engel.sing_system;
  rep.sing_dbeta = rep.engel.sing_dbeta;
  rep.beta_coefficient_degree = coefficient_degree(beta).degree;
  rep.beta_twist = static_cast<long>(rep.beta_coefficient_degree) + 1;
  rep.factor_coefficient_convention = rep.beta_coefficient_degree + 1;
  rep.factor_twist_convention = rep.beta_twist + 1;
  rep.contraction_identity =
      interior_product(radial_field(s.ambient()), dbeta) ==
      Rational(static_cast<unsigned long>(rep.factor_coefficient_convention)) * beta;

  const Ideal dbeta_ideal = coefficient_ideal(dbeta);
  rep.containment = true;
  const Ideal sing_ideal = coefficient_ideal(wedge(beta, alpha));
  for (const auto& g : sing_ideal.generators()) {
    if (!radical_member(g, dbeta_ideal)) {
      rep.containment = false;
      break;
    }
  }

  if (!rep.sing_system.empty && rep.sing_system.codimension == 1) {
    rep.branch = "sing-codim-1";
  } else if (!rep.sing_dbeta.empty && rep.sing_dbeta.codimension == 2) {
    rep.branch = "dbeta-codim-2";
  } else {
    rep.branch = "none";
  }
  return rep;
}

}  // namespace engel
