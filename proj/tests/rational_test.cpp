#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "padyn/errors.hpp"
#include "padyn/rational.hpp"

namespace padyn {
namespace {

// Trial division; slow but obviously right.
bool prime_by_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(Valuation, InfinityIsLargest) {
  EXPECT_LT(Valuation(5), Valuation::infinity());
  EXPECT_LT(Valuation(-5), Valuation(0));
  EXPECT_EQ(Valuation::infinity(), Valuation());
  EXPECT_EQ(min(Valuation(3), Valuation::infinity()), Valuation(3));
  EXPECT_EQ((Valuation(2) + Valuation::infinity()).is_infinite(), true);
  EXPECT_EQ(Valuation::infinity().to_string(), "inf");
  EXPECT_EQ(Valuation(-4).to_string(), "-4");
}

TEST(Valuation, OfRationals) {
  const PrimeContext ctx(3);
  EXPECT_EQ(valuation(Rational(18), ctx), Valuation(2));
  EXPECT_EQ(valuation(Rational(5, 27), ctx), Valuation(-3));
  EXPECT_EQ(valuation(Rational(7, 5), ctx), Valuation(0));
  EXPECT_TRUE(valuation(Rational(0), ctx).is_infinite());
  EXPECT_THROW(finite_valuation(Rational(0), ctx), InvalidInput);
}

TEST(Valuation, ProductAndUltrametricProperties) {
  std::mt19937 rng(11);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const PrimeContext ctx(p);
    for (int i = 0; i < 300; ++i) {
      const Rational a = testing::random_rational(rng, 200, 60), b = testing::random_rational(rng, 200, 60);
      EXPECT_EQ(valuation(a * b, ctx), valuation(a, ctx) + valuation(b, ctx));
      EXPECT_GE(valuation(a + b, ctx), min(valuation(a, ctx), valuation(b, ctx)));
      if (a != 0) EXPECT_EQ(valuation(unit_part(a, ctx), ctx), Valuation(0));
    }
  }
}

TEST(PrimeContext, RejectsBadParameters) {
  EXPECT_THROW(PrimeContext(4), InvalidInput);
  EXPECT_THROW(PrimeContext(1), InvalidInput);
  EXPECT_THROW(PrimeContext(3, 2), InvalidInput);
  EXPECT_EQ(PrimeContext(5).power(-2), Rational(1, 25));
}

TEST(Primality, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime_u64(n), prime_by_trial_division(n)) << n;
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
  EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Residues, ReduceModuloIsCongruentAndCanonical) {
  std::mt19937 rng(5);
  for (std::uint64_t p : {2, 3, 5}) {
    const PrimeContext ctx(p);
    for (int i = 0; i < 300; ++i) {
      const Rational x = testing::random_rational(rng, 500, 100);
      for (long k : {-2L, 0L, 3L}) {
        const Rational r = reduce_modulo(x, k, ctx);
        EXPECT_GE(valuation(x - r, ctx), Valuation(k));
        EXPECT_EQ(reduce_modulo(r, k, ctx), r);
        // Shifting by p^k Z_p does not change the representative.
        EXPECT_EQ(reduce_modulo(x + ctx.power(k) * 7, k, ctx), r);
      }
    }
  }
}

TEST(Residues, FractionalPart) {
  const PrimeContext ctx(3);
  EXPECT_EQ(fractional_part(Rational(5), ctx), 0);
  EXPECT_EQ(fractional_part(Rational(1, 3), ctx), Rational(1, 3));
  EXPECT_EQ(fractional_part(Rational(4, 3), ctx), Rational(1, 3));
  EXPECT_EQ(fractional_part(Rational(1, 2), ctx), 0);
  EXPECT_EQ(residue(Rational(-1), Integer(9)), Integer(8));
  EXPECT_EQ(symmetric_residue(Integer(8), Integer(9)), Integer(-1));
}

TEST(Format, RoundTrips) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rational x = testing::random_rational(rng, 10000, 999);
    EXPECT_EQ(parse_rational(format_rational(x)), x);
  }
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(format_rational(parse_rational("4/2")), "2");
  EXPECT_EQ(parse_rational(" +6 / 4"), Rational(3, 2));
  EXPECT_THROW(parse_rational("6/-4"), InvalidInput);
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("1.5"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

}  // namespace
}  // namespace padyn
