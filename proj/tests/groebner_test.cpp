#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "engel/corpus.hpp"
#include "engel/groebner.hpp"
#include "engel/text.hpp"
#include "support.hpp"

using namespace engel;

namespace {

Polynomial P(const char* text, std::size_t n = 5) { return parse_polynomial(text, n); }

Ideal I(std::initializer_list<const char*> gens, std::size_t n = 5) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(g, n));
  return Ideal(n, std::move(ps));
}

Ideal example1_sing() {
  const PfaffSystem s = corpus_system("example1");
  return coefficient_ideal(s.wedge());
}

}  // namespace

TEST(GroebnerBasis, PrincipalIdeal) {
  const Ideal gb = groebner_basis(I({"z0"}));
  ASSERT_EQ(gb.generators().size(), 1u);
  EXPECT_EQ(gb.generators()[0], P("z0"));
}

TEST(GroebnerBasis, AlreadyAGroebnerBasis) {
  const Ideal gb = groebner_basis(I({"z0^2", "z0*z1"}));
  const auto& b = gb.generators();
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], P("z0^2"));
  EXPECT_EQ(b[1], P("z0*z1"));
}

// Gaussian elimination on z0 - z1, z1 - z2 gives the reduced echelon rows
// z0 - z2, z1 - z2.
TEST(GroebnerBasis, LinearFormsUnderLex) {
  const Ideal gb = groebner_basis(I({"z0 - z1", "z1 - z2"}, 3), MonomialOrder::lex());
  const auto& b = gb.generators();
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], P("z0 - z2", 3));
  EXPECT_EQ(b[1], P("z1 - z2", 3));
}

TEST(GroebnerBasis, UnitAndZeroIdeals) {
  EXPECT_TRUE(I({"z0", "z0 + 1"}).is_unit());
  EXPECT_TRUE(Ideal::unit(3).is_unit());
  const Ideal zero(3, {Polynomial(3)});
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(groebner_basis(zero).generators().empty());
  EXPECT_THROW(Ideal(3, {P("z0", 4)}), dimension_error);
}

TEST(GroebnerBasis, TextbookExample) {
  // x^3 - 2xy, x^2 y - 2y^2 + x under grevlex x > y.
  const Ideal gb = groebner_basis(I({"z0^3 - 2*z0*z1", "z0^2*z1 - 2*z1^2 + z0"}, 2));
  const auto& b = gb.generators();
  std::vector<Polynomial> expected = {P("z0^2", 2), P("z0*z1", 2), P("2*z1^2 - z0", 2)};
  EXPECT_EQ(b, expected);
}

TEST(NormalForm, Examples) {
  EXPECT_TRUE(normal_form(P("z0^2"), I({"z0"})).is_zero());
  EXPECT_EQ(normal_form(P("z1"), I({"z0"})), P("z1"));
  EXPECT_EQ(normal_form(P("z0*z3 + z1"), I({"z0"})), P("z1"));
}

TEST(IdealMember, Examples) {
  EXPECT_TRUE(ideal_member(P("z0^4"), I({"z0"})));
  EXPECT_FALSE(ideal_member(P("z1"), I({"z0"})));
  EXPECT_TRUE(ideal_member(P("z0^2*(z1*z2 - z0*z3)"), I({"z0"})));
  EXPECT_TRUE(ideal_member(Polynomial(5), I({"z0"})));
  EXPECT_THROW(ideal_member(P("z0", 4), I({"z0"})), dimension_error);
}

TEST(RadicalMember, Examples) {
  EXPECT_TRUE(radical_member(P("z0"), I({"z0^2"})));
  EXPECT_FALSE(radical_member(P("z1"), I({"z0^2"})));
  EXPECT_TRUE(radical_member(P("z0"), example1_sing()));
  EXPECT_FALSE(radical_member(P("z1"), example1_sing()));
  EXPECT_TRUE(radical_member(P("z0 + z1"), I({"z0^3", "z1^2"})));
  EXPECT_FALSE(radical_member(P("1"), I({"z0^3"})));
}

TEST(SameVariety, Examples) {
  EXPECT_TRUE(same_variety(I({"z0^2"}), I({"z0"})));
  EXPECT_FALSE(same_variety(I({"z0"}), I({"z1"})));
  EXPECT_TRUE(same_variety(example1_sing(), I({"z0"})));
  EXPECT_THROW(same_variety(I({"z0"}, 4), I({"z0"})), dimension_error);
}

TEST(IdealDimension, Examples) {
  const DimensionVerdict a = ideal_dimension(I({"z0"}));
  EXPECT_FALSE(a.empty);
  EXPECT_EQ(a.dimension, 4u);
  EXPECT_EQ(a.codimension, 1u);
  EXPECT_EQ(ideal_dimension(I({"z0", "z1", "z2"})).codimension, 3u);
  EXPECT_TRUE(ideal_dimension(I({"1"})).empty);
  const DimensionVerdict whole = ideal_dimension(Ideal(5, {}));
  EXPECT_EQ(whole.dimension, 5u);
  EXPECT_EQ(whole.codimension, 0u);
  // twisted cubic: dimension 1
  EXPECT_EQ(ideal_dimension(I({"z1 - z0^2", "z2 - z0^3"}, 3)).dimension, 1u);
}

TEST(CoordinateSubspace, RecognizesCoordinatePlanes) {
  const auto s = coordinate_subspace(I({"z0^2", "z0*z4", "z4"}));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, (std::vector<std::size_t>{0, 4}));
  EXPECT_FALSE(coordinate_subspace(I({"z0 - z1"})).has_value());
}

TEST(IdealCache, BasisIsComputedOnceAndSharedAcrossThreads) {
  const Ideal ideal = I({"z0^2*z1 - z3", "z1^3 - z0*z2", "z2*z3 - z4^2"});
  EXPECT_FALSE(ideal.has_cached_basis(MonomialOrder::grevlex()));
  std::vector<const std::vector<Polynomial>*> seen(8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < seen.size(); ++t)
    pool.emplace_back([&, t] { seen[t] = &ideal.basis(MonomialOrder::grevlex()); });
  for (auto& th : pool) th.join();
  EXPECT_TRUE(ideal.has_cached_basis(MonomialOrder::grevlex()));
  for (auto* p : seen) EXPECT_EQ(p, seen[0]);
  EXPECT_FALSE(ideal.has_cached_basis(MonomialOrder::lex()));
}

// Property suites.

class GroebnerProperty : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(GroebnerProperty, MonomialIdealDimensionMatchesBruteForce) {
  fixture::RandomSource rs(GetParam());
  const std::size_t n = 1 + rs.index(4);
  const std::size_t k = 1 + rs.index(6);
  std::vector<Monomial> gens;
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < k; ++i) {
    Monomial m = rs.monomial(n, 3);
    gens.push_back(m);
    polys.push_back(Polynomial::term(m, rs.coefficient()));
  }
  const long expected = fixture::monomial_ideal_dimension(gens, n);
  const DimensionVerdict v = ideal_dimension(Ideal(n, polys));
  if (expected < 0) {
    EXPECT_TRUE(v.empty);
  } else {
    EXPECT_FALSE(v.empty);
    EXPECT_EQ(static_cast<long>(v.dimension), expected);
    EXPECT_EQ(v.dimension + v.codimension, n);
  }
}

TEST_P(GroebnerProperty, ReductionIsLinear) {
  fixture::RandomSource rs(GetParam() + 100);
  const std::size_t n = 2 + rs.index(2);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 2; ++i) gens.push_back(rs.nonzero_polynomial(n, 2, 3));
  const Ideal ideal(n, gens);
  const Polynomial p = rs.polynomial(n, 3, 4), q = rs.polynomial(n, 3, 4);
  EXPECT_EQ(normal_form(p + q, ideal), normal_form(normal_form(p, ideal) + normal_form(q, ideal), ideal));
  EXPECT_EQ(normal_form(normal_form(p, ideal), ideal), normal_form(p, ideal));
}

TEST_P(GroebnerProperty, MembershipAndIdempotence) {
  fixture::RandomSource rs(GetParam() + 200);
  const std::size_t n = 2 + rs.index(2);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 2; ++i) gens.push_back(rs.nonzero_polynomial(n, 2, 3));
  const Ideal ideal(n, gens);
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    const Ideal gb = groebner_basis(ideal, order);
    const Ideal gb2 = groebner_basis(gb, order);
    EXPECT_EQ(gb.generators(), gb2.generators());
  }
  const Ideal gb = groebner_basis(ideal);
  Polynomial combo = rs.polynomial(n, 2, 2) * gens[0] + rs.polynomial(n, 2, 2) * gens[1];
  EXPECT_TRUE(ideal_member(combo, ideal));
  EXPECT_TRUE(ideal_member(combo, gb));
  const Polynomial p = rs.polynomial(n, 3, 3);
  const bool in = ideal_member(p, ideal);
  EXPECT_EQ(in, ideal_member(p, gb));
  if (in) {
    EXPECT_TRUE(radical_member(p, ideal));
  }
  EXPECT_TRUE(radical_member(combo, ideal));
}

TEST_P(GroebnerProperty, PowerOfMemberIsRadicalMember) {
  fixture::RandomSource rs(GetParam() + 300);
  const std::size_t n = 2 + rs.index(2);
  const Polynomial p = rs.nonzero_polynomial(n, 2, 3);
  const unsigned m = 1 + static_cast<unsigned>(rs.index(3));
  const Ideal ideal(n, {pow(p, m), rs.nonzero_polynomial(n, 2, 2)});
  EXPECT_TRUE(radical_member(p, ideal));
}

INSTANTIATE_TEST_SUITE_P(Random, GroebnerProperty, ::testing::Range<std::uint32_t>(1, 61));
