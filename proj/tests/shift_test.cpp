#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "padyn/errors.hpp"
#include "padyn/shift.hpp"

namespace padyn {
namespace {

Tail random_tail(std::mt19937& rng, const FiniteGroup& f) {
  std::vector<int> word(static_cast<std::size_t>(testing::uniform(rng, 1, 3)));
  for (auto& a : word) a = static_cast<int>(testing::uniform(rng, 0, f.size() - 1));
  return Tail(word);
}

SeqElement random_element(std::mt19937& rng, const FiniteGroup& f) {
  std::vector<int> window(static_cast<std::size_t>(testing::uniform(rng, 0, 5)));
  for (auto& a : window) a = static_cast<int>(testing::uniform(rng, 0, f.size() - 1));
  return SeqElement(testing::uniform(rng, -4, 4), window, random_tail(rng, f), random_tail(rng, f));
}

// Pointwise product on a range of indices, straight from the table.
bool agrees_pointwise(const FiniteGroup& f, const SeqElement& a, const SeqElement& b, const SeqElement& ab) {
  for (long k = -30; k <= 30; ++k) {
    if (ab.value(k) != f.mul(a.value(k), b.value(k))) return false;
  }
  return true;
}

TEST(FiniteGroup, NamedGroups) {
  const FiniteGroup s3 = FiniteGroup::named("S3");
  EXPECT_EQ(s3.size(), 6);
  EXPECT_EQ(s3.exponent(), 6);
  const Subset n = s3.subset_of({"e", "r", "r2"});
  const Subset h = s3.subset_of({"e", "s"});
  EXPECT_TRUE(s3.is_subgroup(n) && s3.is_normal(n));
  EXPECT_TRUE(s3.is_subgroup(h) && !s3.is_normal(h));
  EXPECT_EQ(s3.product(n, h), s3.all());
  EXPECT_EQ(FiniteGroup::named("C5").exponent(), 5);
  EXPECT_EQ(FiniteGroup::direct_power(FiniteGroup::cyclic(2), 3).size(), 8);
  EXPECT_THROW(FiniteGroup::named("Q8"), InvalidInput);
  EXPECT_THROW(FiniteGroup::cyclic(65), InvalidInput);
}

TEST(FiniteGroup, RejectsNonGroupTables) {
  EXPECT_THROW(FiniteGroup({"a", "b"}, {{0, 0}, {0, 1}}), InvalidInput);
  EXPECT_THROW(FiniteGroup({"e", "a", "b"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), InvalidInput);
}

TEST(Splitting, Validation) {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const Splitting sp = s3_splitting(s3);
  EXPECT_FALSE(sp.h_normal);
  EXPECT_THROW(make_splitting(s3, s3.subset_of({"e", "s"}), s3.subset_of({"e", "r", "r2"})), InvalidInput);
}

TEST(Tail, MinimalPeriodAndLimits) {
  EXPECT_EQ(Tail({1, 2, 1, 2}).period(), 2U);
  EXPECT_EQ(Tail({3, 3, 3}).period(), 1U);
  EXPECT_EQ(Tail({0, 1}).value(-3), 1);
  EXPECT_EQ(Tail({0, 1}).shifted(1).value(0), 1);
  std::vector<int> long_word{0, 0, 0, 0, 0, 0, 0, 0, 1};
  EXPECT_THROW(Tail{long_word}, IncompatibleTails);
}

TEST(SeqElement, CanonicalFormIsEquality) {
  std::mt19937 rng(401);
  const FiniteGroup f = FiniteGroup::cyclic(3);
  for (int i = 0; i < 200; ++i) {
    const SeqElement a = random_element(rng, f);
    // Re-encode a through a wider window; same sequence, same representation.
    std::vector<int> window;
    for (long k = a.lo() - 6; k < a.hi() + 6; ++k) window.push_back(a.value(k));
    EXPECT_EQ(SeqElement(a.lo() - 6, window, a.left(), a.right()), a);
  }
}

TEST(SeqElement, GroupAxiomsAndShiftAction) {
  std::mt19937 rng(403);
  for (const char* name : {"C2", "C3", "S3"}) {
    const FiniteGroup f = FiniteGroup::named(name);
    const ShiftSystem sys = ShiftSystem::plain(f, false, false, ShiftDirection::Right);
    for (int i = 0; i < 150; ++i) {
      const SeqElement a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f);
      EXPECT_TRUE(agrees_pointwise(f, a, b, sys.mul(a, b)));
      EXPECT_EQ(sys.mul(sys.mul(a, b), c), sys.mul(a, sys.mul(b, c)));
      EXPECT_EQ(sys.mul(a, sys.inv(a)), sys.identity());
      const long n = testing::uniform(rng, -5, 5);
      EXPECT_EQ(sys.apply(sys.mul(a, b), n), sys.mul(sys.apply(a, n), sys.apply(b, n)));
      EXPECT_EQ(sys.apply(a, 1).value(3), a.value(2));
    }
  }
}

TEST(ShiftSystem, CarrierMembership) {
  const FiniteGroup c3 = FiniteGroup::cyclic(3);
  const ShiftSystem sys = ShiftSystem::plain(c3, true, false, ShiftDirection::Right);
  EXPECT_TRUE(sys.in_carrier(SeqElement(0, {1}, Tail::constant(0), Tail::constant(2))));
  EXPECT_FALSE(sys.in_carrier(SeqElement(0, {1}, Tail::constant(1), Tail::constant(0))));
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  EXPECT_THROW(ShiftSystem::semidirect(s3, make_splitting(s3, s3.subset_of({"e", "r", "r2"}), s3.subset_of({"e"})),
                                       true, false, ShiftDirection::Right),
               InvalidInput);
}

TEST(Nub, FullShiftIsWholeGroup) {
  for (int p : {2, 3, 5}) {
    const ShiftSystem sys = ShiftSystem::plain(FiniteGroup::cyclic(p), false, false, ShiftDirection::Right);
    EXPECT_EQ(nub(sys), carrier_subgroup(sys));
    EXPECT_EQ(closure(sys, contraction_subgroup(sys, true)), carrier_subgroup(sys));
  }
}

TEST(Nub, RestrictedProductsContract) {
  const FiniteGroup c3 = FiniteGroup::cyclic(3);
  const ShiftSystem right = ShiftSystem::plain(c3, true, false, ShiftDirection::Right);
  EXPECT_EQ(contraction_subgroup(right, true), carrier_subgroup(right));
  EXPECT_EQ(contraction_subgroup(right, false), trivial_subgroup(right));
  EXPECT_EQ(nub(right), trivial_subgroup(right));
  const ShiftSystem left = ShiftSystem::plain(c3, true, false, ShiftDirection::Left);
  EXPECT_EQ(contraction_subgroup(left, false), carrier_subgroup(left));
  EXPECT_EQ(contraction_subgroup(left, true), trivial_subgroup(left));
}

TEST(Nub, SemidirectS3IsHZ) {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const ShiftSystem sys = ShiftSystem::semidirect(s3, s3_splitting(s3), true, false, ShiftDirection::Right);
  ProductSubgroup hz = trivial_subgroup(sys);
  hz.parts[1].left = hz.parts[1].right = sys.components()[1].image;
  EXPECT_EQ(nub(sys), hz);
  const NormalizerWitness w = normalizer_witness(sys);
  EXPECT_TRUE(verify(sys, w));
  EXPECT_TRUE(contains(sys, nub(sys), w.u));
  EXPECT_FALSE(contains(sys, nub(sys), w.conjugate));
  EXPECT_TRUE(membership(sys, w.g, ShiftClass::Contraction));
  NormalizerWitness bad = w;
  bad.conjugate = w.u;
  EXPECT_FALSE(verify(sys, bad));
}

TEST(Nub, MirroredProductIsTrivial) {
  const ShiftSystem sys =
      ShiftSystem::product(FiniteGroup::cyclic(2), {{true, false}, {false, true}}, ShiftDirection::Right);
  EXPECT_EQ(nub(sys), trivial_subgroup(sys));
  EXPECT_EQ(closure(sys, contraction_subgroup(sys, true)), contraction_subgroup(sys, true));
}

TEST(Membership, AgreesWithOrbitDefinition) {
  // x in U_alpha iff alpha^n(x) -> e: on C_p^Z with the right shift this is
  // "left tail trivial", checked by looking far along the orbit.
  std::mt19937 rng(409);
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const ShiftSystem sys = ShiftSystem::plain(c2, false, false, ShiftDirection::Right);
  for (int i = 0; i < 200; ++i) {
    const SeqElement x = random_element(rng, c2);
    auto near_identity = [&](long n) {
      const SeqElement y = sys.apply(x, n);
      for (long k = -3; k <= 3; ++k) {
        if (y.value(k) != 0) return false;
      }
      return true;
    };
    EXPECT_EQ(membership(sys, x, ShiftClass::Contraction), near_identity(40) && near_identity(80));
    EXPECT_EQ(membership(sys, x, ShiftClass::InverseContraction), near_identity(-40) && near_identity(-80));
  }
}

TEST(ProductSubgroups, IntersectAndProduct) {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const ShiftSystem sys = ShiftSystem::plain(c2, false, false, ShiftDirection::Right);
  const ProductSubgroup u = contraction_subgroup(sys, true), v = contraction_subgroup(sys, false);
  // Both contraction groups are dense; they meet in the finitely supported
  // sequences.
  const ProductSubgroup finite = intersect(sys, u, v);
  EXPECT_TRUE(finite.parts[0].left_restricted && finite.parts[0].right_restricted);
  EXPECT_EQ(finite.parts[0].left, c2.all());
  EXPECT_TRUE(contains(sys, finite, SeqElement::delta(4, 1, 0)));
  EXPECT_FALSE(contains(sys, finite, SeqElement(0, {}, Tail::constant(0), Tail::constant(1))));
  EXPECT_NO_THROW(validate(sys, product(sys, levi_subgroup(sys), nub(sys))));
  ProductSubgroup bad = trivial_subgroup(sys);
  bad.parts[0].left = 0b10;  // {1} alone is not a subgroup of C2
  EXPECT_THROW(validate(sys, bad), InvalidInput);
}

TEST(ProductSubgroups, NotProductType) {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const ShiftSystem sys = ShiftSystem::product(c2, {{true, false}, {true, false}}, ShiftDirection::Right);
  ProductSubgroup a = carrier_subgroup(sys);
  a.parts[1] = trivial_subgroup(sys).parts[1];
  ProductSubgroup b = trivial_subgroup(sys);
  b.parts[0].left = c2.all();
  b.parts[0].left_restricted = false;
  EXPECT_THROW(product(sys, a, b), NotProductType);
}

TEST(Torsion, FullShift) {
  for (int p : {2, 3, 5}) {
    const ShiftSystem sys = ShiftSystem::plain(FiniteGroup::cyclic(p), false, false, ShiftDirection::Right);
    const TorsionReport t = torsion_divisible_report(sys);
    EXPECT_EQ(t.exponent, p);
    EXPECT_TRUE(t.divisible_trivial);
    ASSERT_TRUE(t.torsion_times_nub.has_value());
    EXPECT_EQ(t.closure_of_torsion, *t.torsion_times_nub);
    EXPECT_TRUE(t.closure_matches);
  }
}

TEST(Density, ApproximantsConvergeWithinTheNub) {
  const FiniteGroup c3 = FiniteGroup::cyclic(3);
  const ShiftSystem sys = ShiftSystem::plain(c3, false, false, ShiftDirection::Right);
  const SeqElement x(0, {1, 2}, Tail({1, 2}), Tail({0, 1}));
  const auto approx = density_approximants(sys, x, 5);
  ASSERT_EQ(approx.size(), 6U);
  for (std::size_t m = 0; m < approx.size(); ++m) {
    EXPECT_TRUE(membership(sys, approx[m], ShiftClass::Contraction));
    for (long k = -static_cast<long>(m); k <= static_cast<long>(m); ++k) EXPECT_EQ(approx[m].value(k), x.value(k));
  }
  const ShiftSystem restricted = ShiftSystem::plain(c3, true, false, ShiftDirection::Right);
  EXPECT_THROW(density_approximants(restricted, SeqElement::delta(0, 1, 0), 2), InvalidInput);
}

}  // namespace
}  // namespace padyn
