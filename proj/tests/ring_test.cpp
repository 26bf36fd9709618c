#include <gtest/gtest.h>

#include <vector>

#include "engel/ring.hpp"
#include "engel/text.hpp"
#include "support.hpp"

using namespace engel;

namespace {

Polynomial P(const char* text, std::size_t n = 5) { return parse_polynomial(text, n); }

}  // namespace

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(make_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(make_rational("-0"), 0);
  EXPECT_THROW(make_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(make_rational("abc"), std::invalid_argument);
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(MonomialOrder, GrevlexAndLex) {
  const auto g = MonomialOrder::grevlex();
  const auto l = MonomialOrder::lex();
  const Monomial a({1, 0, 2});  // z0 z2^2
  const Monomial b({0, 2, 0});  // z1^2
  const Monomial c({0, 1, 1});  // z1 z2
  EXPECT_GT(g.compare(a, b), 0);  // higher degree
  EXPECT_GT(g.compare(b, c), 0);  // same degree, smaller last exponent wins
  EXPECT_GT(l.compare(a, b), 0);
  EXPECT_GT(l.compare(b, c), 0);
  EXPECT_EQ(g.compare(a, a), 0);
  EXPECT_GT(l.compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})), 0);
  EXPECT_LT(g.compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})), 0);
}

TEST(MonomialOrder, PriorityPermutation) {
  const MonomialOrder o(MonomialOrder::Kind::lex, {2, 1, 0});
  EXPECT_GT(o.compare(Monomial({0, 0, 1}), Monomial({3, 0, 0})), 0);
  EXPECT_THROW(MonomialOrder(MonomialOrder::Kind::lex, {0, 0, 1}), std::invalid_argument);
}

TEST(MonomialOrder, IsMultiplicativeWithOneMinimal) {
  fixture::RandomSource rs(11);
  for (const auto& ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    for (int k = 0; k < 200; ++k) {
      const Monomial u = rs.monomial(4, 4), v = rs.monomial(4, 4), w = rs.monomial(4, 3);
      const int c = ord.compare(u, v);
      EXPECT_EQ(ord.compare(u * w, v * w), c);
      EXPECT_LE(ord.compare(Monomial(4), u), 0);
    }
  }
}

TEST(Polynomial, AddExamples) {
  EXPECT_TRUE((P("z0") + P("-z0")).is_zero());
  EXPECT_EQ(P("z1*z2") + P("z1*z2"), P("2*z1*z2"));
  EXPECT_EQ(P("z1*z3 - z0*z4") + P("z0*z4"), P("z1*z3"));
}

TEST(Polynomial, MulExamples) {
  EXPECT_EQ(P("z0") * P("z0"), P("z0^2"));
  EXPECT_TRUE((Polynomial(5) * P("z1 + 3")).is_zero());
  EXPECT_EQ(P("z0^2") * P("z1*z2 - z0*z3"), P("z0^2*z1*z2 - z0^3*z3"));
}

TEST(Polynomial, AmbientMismatchThrows) {
  EXPECT_THROW(P("z0", 3) + P("z0", 4), dimension_error);
  EXPECT_THROW(P("z0", 3) * P("z0", 4), dimension_error);
  EXPECT_THROW(Polynomial::variable(3, 3), dimension_error);
}

TEST(Polynomial, PartialDerivativeExamples) {
  EXPECT_EQ(partial_derivative(P("z0^2"), 0), P("2*z0"));
  EXPECT_TRUE(partial_derivative(P("z1*z2"), 3).is_zero());
  EXPECT_EQ(partial_derivative(P("z1*z2 - z0*z3"), 2), P("z1"));
  EXPECT_THROW(partial_derivative(P("z1"), 5), dimension_error);
}

TEST(Polynomial, HomogeneousDegreeExamples) {
  EXPECT_EQ(homogeneous_degree(P("z0^2")), (Homogeneity{Homogeneity::Kind::homogeneous, 2}));
  EXPECT_EQ(homogeneous_degree(P("z0 + z0^2")).kind, Homogeneity::Kind::inhomogeneous);
  EXPECT_EQ(homogeneous_degree(P("z1*z2 - z0*z3")), (Homogeneity{Homogeneity::Kind::homogeneous, 2}));
  EXPECT_EQ(homogeneous_degree(Polynomial(5)).kind, Homogeneity::Kind::zero);
  EXPECT_EQ(homogeneous_degree(P("7")), (Homogeneity{Homogeneity::Kind::homogeneous, 0}));
}

TEST(Polynomial, SubstituteExamples) {
  std::vector<Polynomial> id;
  for (std::size_t i = 0; i < 5; ++i) id.push_back(Polynomial::variable(5, i));
  EXPECT_EQ(substitute(P("z0^2"), id), P("z0^2"));

  std::vector<Polynomial> swap = id;
  swap[1] = P("z2");
  EXPECT_EQ(substitute(P("z1"), swap), P("z2"));

  const std::vector<Polynomial> shear = {P("z0 + z1", 2), P("z0", 2)};
  EXPECT_EQ(substitute(P("z0*z1", 2), shear), P("z0^2 + z0*z1", 2));

  EXPECT_THROW(substitute(P("z0", 2), std::vector<Polynomial>{P("z0", 2)}), dimension_error);
  EXPECT_THROW(substitute(P("z0", 2), std::vector<Polynomial>{P("z0", 2), P("z0", 3)}), dimension_error);
}

TEST(Polynomial, SubstituteIntoOtherAmbient) {
  const std::vector<Polynomial> images = {P("z0*z1", 2), P("z1", 2), P("1", 2)};
  EXPECT_EQ(substitute(P("z0 + z1*z2^3", 3), images), P("z0*z1 + z1", 2));
}

TEST(Polynomial, EvaluateAndConstantTerm) {
  const Polynomial p = P("3/2*z0^2 - z1 + 4");
  EXPECT_EQ(p.constant_term(), 4);
  const std::vector<Rational> pt = {2, 1, 0, 0, 0};
  EXPECT_EQ(evaluate(p, pt), 9);
  EXPECT_THROW(evaluate(p, std::vector<Rational>{1}), dimension_error);
}

TEST(Polynomial, PrimitivePart) {
  EXPECT_EQ(primitive_part(P("-4/3*z0^2 + 2*z1")), P("2*z0^2 - 3*z1"));
  EXPECT_TRUE(primitive_part(Polynomial(5)).is_zero());
}

TEST(Polynomial, PowAndEmbed) {
  EXPECT_EQ(pow(P("z0 + z1"), 2), P("z0^2 + 2*z0*z1 + z1^2"));
  EXPECT_EQ(pow(P("z3"), 0), P("1"));
  EXPECT_EQ(embed(P("z1", 2), 4), P("z1", 4));
  EXPECT_THROW(embed(P("z1", 2), 1), dimension_error);
}

// Properties over random sparse polynomials, <= 6 variables, degree <= 5.

class RingProperty : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RingProperty, Axioms) {
  fixture::RandomSource rs(GetParam());
  const std::size_t n = 1 + rs.index(6);
  const Polynomial p = rs.polynomial(n, 5, 5), q = rs.polynomial(n, 5, 5), r = rs.polynomial(n, 5, 5);
  EXPECT_EQ(p + q, q + p);
  EXPECT_EQ(p * q, q * p);
  EXPECT_EQ((p + q) + r, p + (q + r));
  EXPECT_EQ((p * q) * r, p * (q * r));
  EXPECT_EQ(p * (q + r), p * q + p * r);
  EXPECT_TRUE((p - p).is_zero());
  for (const Polynomial& x : {p + q, p * q, p - r, (p + q) * r}) EXPECT_TRUE(x.is_canonical());
}

TEST_P(RingProperty, ProductMatchesPointwiseEvaluation) {
  fixture::RandomSource rs(GetParam() + 1000);
  const std::size_t n = 1 + rs.index(4);
  const Polynomial p = rs.polynomial(n, 4, 4), q = rs.polynomial(n, 4, 4);
  for (int k = 0; k < 5; ++k) {
    const auto pt = rs.point(n);
    EXPECT_EQ(evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt));
    EXPECT_EQ(evaluate(p + q, pt), evaluate(p, pt) + evaluate(q, pt));
  }
}

TEST_P(RingProperty, LeibnizRule) {
  fixture::RandomSource rs(GetParam() + 2000);
  const std::size_t n = 1 + rs.index(6);
  const Polynomial p = rs.polynomial(n, 5, 5), q = rs.polynomial(n, 5, 5);
  const std::size_t i = rs.index(n);
  EXPECT_EQ(partial_derivative(p * q, i), p * partial_derivative(q, i) + q * partial_derivative(p, i));
}

TEST_P(RingProperty, EulerIdentity) {
  fixture::RandomSource rs(GetParam() + 3000);
  const std::size_t n = 1 + rs.index(6);
  const std::uint32_t s = static_cast<std::uint32_t>(rs.index(6));
  const Polynomial p = rs.homogeneous(n, s, 5);
  Polynomial euler(n);
  for (std::size_t i = 0; i < n; ++i) euler += Polynomial::variable(n, i) * partial_derivative(p, i);
  EXPECT_EQ(euler, Rational(s) * p);
}

TEST_P(RingProperty, SubstitutionIsRingHomomorphism) {
  fixture::RandomSource rs(GetParam() + 4000);
  const std::size_t n = 1 + rs.index(4);
  const Polynomial p = rs.polynomial(n, 3, 4), q = rs.polynomial(n, 3, 4);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(rs.polynomial(n, 2, 3));
  EXPECT_EQ(substitute(p * q, images), substitute(p, images) * substitute(q, images));
  EXPECT_EQ(substitute(p + q, images), substitute(p, images) + substitute(q, images));
}

INSTANTIATE_TEST_SUITE_P(Random, RingProperty, ::testing::Range<std::uint32_t>(1, 61));
