#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "padyn/errors.hpp"
#include "padyn/heisenberg.hpp"

namespace padyn {
namespace {

HeisPoint random_point(std::mt19937& rng) {
  return {testing::random_rational(rng, 20, 9), testing::random_rational(rng, 20, 9),
          testing::random_rational(rng, 20, 9)};
}

HeisElement random_element(std::mt19937& rng, Carrier c, const PrimeContext& ctx) {
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < coordinate_count(c); ++i) coords.push_back(testing::random_rational(rng, 20, 27));
  return make_element(c, coords, ctx);
}

// g^n by repeated multiplication.
HeisPoint power(const HeisPoint& g, long n) {
  HeisPoint acc{0, 0, 0};
  const HeisPoint step = n >= 0 ? g : heis_inv(g);
  for (long i = 0; i < std::abs(n); ++i) acc = heis_mul(acc, step);
  return acc;
}

TEST(HeisenbergLaw, Examples) {
  EXPECT_EQ(heis_mul({1, 0, 0}, {0, 1, 0}), (HeisPoint{1, 1, 1}));
  EXPECT_EQ(heis_mul({0, 1, 0}, {1, 0, 0}), (HeisPoint{1, 1, 0}));
  EXPECT_EQ(heis_inv({1, 2, 3}), (HeisPoint{-1, -2, -1}));
}

TEST(HeisenbergLaw, GroupAxioms) {
  std::mt19937 rng(301);
  const HeisPoint e{0, 0, 0};
  for (int i = 0; i < 300; ++i) {
    const HeisPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
    EXPECT_EQ(heis_mul(heis_mul(a, b), c), heis_mul(a, heis_mul(b, c)));
    EXPECT_EQ(heis_mul(a, heis_inv(a)), e);
    EXPECT_EQ(heis_mul(heis_inv(a), a), e);
    EXPECT_EQ(heis_mul(a, e), a);
    // Matrix model is faithful and multiplicative.
    EXPECT_EQ(heis_matrix(heis_mul(a, b)), heis_matrix(a) * heis_matrix(b));
  }
}

TEST(HeisenbergQuotient, ProjectionIsAHomomorphism) {
  std::mt19937 rng(303);
  for (std::uint64_t p : {2, 3, 5}) {
    const PrimeContext ctx(p);
    for (int i = 0; i < 200; ++i) {
      const HeisPoint a = random_point(rng), b = random_point(rng);
      EXPECT_EQ(project(heis_mul(a, b), ctx), quot_mul(project(a, ctx), project(b, ctx), ctx));
      EXPECT_EQ(project(heis_inv(a), ctx), quot_inv(project(a, ctx), ctx));
      // Moving z by an element of Z_p does not change the class.
      EXPECT_EQ(project(heis_mul(a, {0, 0, Rational(7, 2)}), ctx) == project(a, ctx), p != 2);
    }
  }
}

TEST(DiagAuto, Validation) {
  EXPECT_NO_THROW((DiagAuto{Carrier::H, {1, -2, -1}}).validate());
  EXPECT_THROW((DiagAuto{Carrier::H, {1, 1, 1}}).validate(), InvalidInput);
  EXPECT_THROW((DiagAuto{Carrier::HmodN, {1, 0, 1}}).validate(), InvalidInput);
  EXPECT_THROW((DiagAuto{Carrier::HxH, {1, -2, -1}}).validate(), InvalidInput);
  EXPECT_EQ((DiagAuto{Carrier::H, {1, -2, -1}}).inverse().exponents, (std::vector<long>{-1, 2, 1}));
}

TEST(DiagAuto, IsAnAutomorphism) {
  std::mt19937 rng(307);
  const PrimeContext ctx(3);
  const std::vector<DiagAuto> autos{{Carrier::H, {1, -2, -1}},
                                   {Carrier::HmodN, {1, -1, 0}},
                                   {Carrier::HxH, {1, -2, -1, 2, -1, 1}}};
  for (const auto& a : autos) {
    for (int i = 0; i < 100; ++i) {
      const HeisElement g = random_element(rng, a.carrier, ctx), h = random_element(rng, a.carrier, ctx);
      const long n = testing::uniform(rng, -3, 3);
      EXPECT_EQ(apply(a, mul(g, h, ctx), n, ctx), mul(apply(a, g, n, ctx), apply(a, h, n, ctx), ctx));
      EXPECT_EQ(apply(a, apply(a, g, n, ctx), -n, ctx), g);
      EXPECT_EQ(mul(g, inv(g, ctx), ctx), identity_element(a.carrier));
    }
  }
}

TEST(Membership, QuotientExamples) {
  const PrimeContext ctx(3);
  const DiagAuto a{Carrier::HmodN, {1, -1, 0}};
  const auto el = [&](Rational x, Rational y, Rational z) { return make_element(Carrier::HmodN, {x, y, z}, ctx); };
  EXPECT_TRUE(contraction_membership(el(5, 0, 0), a, Direction::Forward, ctx));
  EXPECT_TRUE(contraction_membership(el(0, 0, 4), a, Direction::Forward, ctx));  // z in Z_p is trivial
  EXPECT_FALSE(contraction_membership(el(0, 1, 0), a, Direction::Forward, ctx));
  EXPECT_TRUE(contraction_membership(el(0, 1, 0), a, Direction::Backward, ctx));
  EXPECT_TRUE(levi_membership(el(0, 0, Rational(1, 3)), a, ctx));
  // (x, y, xy + Z_p) is the product set.
  EXPECT_TRUE(product_set_membership(el(Rational(1, 3), Rational(1, 3), Rational(1, 9)), a, ctx));
  EXPECT_FALSE(product_set_membership(el(Rational(1, 3), Rational(1, 3), 0), a, ctx));
}

TEST(Membership, ProductSetOracleOnFullGroup) {
  // For (1,-2,-1) on H, U_alpha = {(x,0,z)}, U_alpha^-1 = {(0,y,0)} and every
  // (x,y,z) = (x,0,z)(0,y,0) lies in the product set.
  std::mt19937 rng(311);
  const PrimeContext ctx(3);
  const DiagAuto a{Carrier::H, {1, -2, -1}};
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(product_set_membership(random_element(rng, Carrier::H, ctx), a, ctx));
}

TEST(Closure, QuotientProductSetIsNotClosed) {
  const PrimeContext ctx(3);
  const DiagAuto a{Carrier::HmodN, {1, -1, 0}};
  SearchLimits limits;
  limits.depth = 2;
  const ClosureResult r = product_set_closure_witness(a, ctx, limits);
  ASSERT_FALSE(r.closed);
  ASSERT_TRUE(r.first.has_value());
  EXPECT_TRUE(verify(*r.first, a, ctx));
  const HeisElement s1 = make_element(Carrier::HmodN, {0, Rational(1, 3), 0}, ctx);
  const HeisElement s2 = make_element(Carrier::HmodN, {Rational(1, 3), 0, 0}, ctx);
  bool found = false;
  for (const auto& w : r.witnesses) {
    EXPECT_TRUE(verify(w, a, ctx));
    if (w.s1 == s1 && w.s2 == s2) {
      found = true;
      EXPECT_EQ(w.product, make_element(Carrier::HmodN, {Rational(1, 3), Rational(1, 3), 0}, ctx));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Closure, TamperedWitnessFailsVerification) {
  const PrimeContext ctx(3);
  const DiagAuto a{Carrier::HmodN, {1, -1, 0}};
  SearchLimits limits;
  limits.depth = 1;
  ClosureWitness w = *product_set_closure_witness(a, ctx, limits).first;
  w.product = make_element(Carrier::HmodN, {Rational(1, 3), Rational(1, 3), Rational(1, 9)}, ctx);
  EXPECT_FALSE(verify(w, a, ctx));
}

TEST(Normalization, ProductOfHeisenbergGroups) {
  const PrimeContext ctx(3);
  const DiagAuto a{Carrier::HxH, {1, -2, -1, 2, -1, 1}};
  const NormalizationResult r = normalization_witness(a, ctx);
  EXPECT_TRUE(verify(r.u_moves_v, a, Direction::Backward, ctx));
  EXPECT_TRUE(verify(r.v_moves_u, a, Direction::Forward, ctx));
  EXPECT_TRUE(contraction_membership(r.u_moves_v.outer, a, Direction::Forward, ctx));
  EXPECT_FALSE(contraction_membership(r.u_moves_v.conj, a, Direction::Backward, ctx));
}

TEST(Normalization, AbsentForContractiveAutomorphisms) {
  // U_alpha is all of H and U_alpha^-1 is trivial.
  const PrimeContext ctx(3);
  SearchLimits limits;
  limits.depth = 1;
  limits.conjugation_budget = 20000;
  EXPECT_THROW(normalization_witness(DiagAuto{Carrier::H, {1, 1, 2}}, ctx, limits), NoWitness);
}

TEST(CentralSeries, Examples) {
  const PrimeContext ctx(3);
  EXPECT_TRUE(central_series_check(DiagAuto{Carrier::H, {1, -2, -1}}, ctx));
  EXPECT_TRUE(central_series_check(DiagAuto{Carrier::H, {1, 1, 2}}, ctx));
  EXPECT_FALSE(central_series_check(DiagAuto{Carrier::H, {1, -1, 0}}, ctx));
  EXPECT_FALSE(central_series_check(DiagAuto{Carrier::HmodN, {1, -1, 0}}, ctx));
  EXPECT_FALSE(product_set_closure_witness(DiagAuto{Carrier::HmodN, {1, -1, 0}}, ctx).closed);
  EXPECT_TRUE(product_set_closure_witness(DiagAuto{Carrier::H, {1, -2, -1}}, ctx).closed);
}

TEST(OneParameter, AgreesWithRepeatedMultiplication) {
  std::mt19937 rng(313);
  for (int i = 0; i < 100; ++i) {
    const HeisPoint g = random_point(rng);
    const long n = testing::uniform(rng, -6, 6);
    EXPECT_EQ(one_param(g, n), power(g, n));
    // Roots: theta(1/k)^k = g.
    const long k = testing::uniform(rng, 1, 5);
    EXPECT_EQ(power(one_param(g, Rational(1, k)), k), g);
  }
}

TEST(OneParameter, ExponentialOfNilpotents) {
  const Matrix n = Matrix::from_rows({{0, 1, 2}, {0, 0, 3}, {0, 0, 0}});
  // I + N + N^2/2 written out.
  EXPECT_EQ(exp_nilpotent(n), Matrix::from_rows({{1, 1, Rational(7, 2)}, {0, 1, 3}, {0, 0, 1}}));
  EXPECT_THROW(exp_nilpotent(Matrix::from_rows({{1, 0}, {0, 0}})), NotNilpotent);
  std::mt19937 rng(317);
  for (int i = 0; i < 50; ++i) {
    const HeisPoint g = random_point(rng);
    const Rational t = testing::random_rational(rng, 5, 4);
    const Matrix log_g = heis_matrix(g) - Matrix::identity(3);
    const Matrix log_exact = log_g - Rational(1, 2) * (log_g * log_g);
    EXPECT_EQ(exp_nilpotent(t * log_exact), heis_matrix(one_param(g, t)));
  }
}

TEST(Adjoint, KernelIsTheCentre) {
  EXPECT_EQ(adjoint({0, 0, 5}), Matrix::identity(3));
  EXPECT_NE(adjoint({1, 0, 0}), Matrix::identity(3));
  EXPECT_NE(adjoint({0, 1, 0}), Matrix::identity(3));
  std::mt19937 rng(319);
  for (int i = 0; i < 50; ++i) {
    const HeisPoint a = random_point(rng), b = random_point(rng);
    EXPECT_EQ(adjoint(heis_mul(a, b)), adjoint(a) * adjoint(b));
  }
}

TEST(Grid, Ordering) {
  const PrimeContext ctx(3);
  EXPECT_EQ(search_grid(ctx, 1), (std::vector<Rational>{0, 1, -1, Rational(1, 3), Rational(-1, 3)}));
}

}  // namespace
}  // namespace padyn
