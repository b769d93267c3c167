#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "padyn/bs.hpp"
#include "padyn/errors.hpp"

namespace padyn {
namespace {

BSWord random_word(std::mt19937& rng, int syllables, long bound) {
  std::vector<Syllable> s;
  for (int i = 0; i < syllables; ++i) {
    const Gen g = testing::uniform(rng, 0, 1) == 0 ? Gen::A : Gen::T;
    s.push_back({g, Integer(testing::uniform(rng, -bound, bound))});
  }
  return BSWord(s);
}

TEST(BSParams, Validation) {
  EXPECT_NO_THROW(BSParams(2, 3));
  EXPECT_THROW(BSParams(2, 2), InvalidInput);
  EXPECT_THROW(BSParams(4, 3), InvalidInput);
}

TEST(BSWord, ParseAndPrint) {
  const BSWord w = BSWord::parse("ta2Ta-3");
  EXPECT_EQ(w, BSWord::t() * BSWord::a(2) * BSWord::t(-1) * BSWord::a(-3));
  EXPECT_EQ(BSWord::parse(w.to_string()), w);
  EXPECT_EQ(BSWord::parse("aaA").to_string(), "a");
  EXPECT_EQ(BSWord::parse("1"), BSWord());
  EXPECT_EQ(BSWord().to_string(), "1");
  EXPECT_EQ(BSWord::parse("a0 t"), BSWord::t());
  EXPECT_EQ(BSWord::parse("a+3 A-2"), BSWord::a(5));
  EXPECT_THROW(BSWord::parse("ab"), InvalidInput);
  std::mt19937 rng(501);
  for (int i = 0; i < 200; ++i) {
    const BSWord x = random_word(rng, 6, 7);
    EXPECT_EQ(BSWord::parse(x.to_string()), x);
    EXPECT_TRUE((x * x.inverse()).empty());
  }
}

TEST(Britton, Examples) {
  const BSParams params(2, 3);
  EXPECT_TRUE(britton_reduce(relator(params), params).empty());
  EXPECT_EQ(britton_reduce(BSWord::parse("ta4T"), params), BSWord::a(6));
  EXPECT_EQ(britton_reduce(BSWord::parse("Ta6t"), params), BSWord::a(4));
  EXPECT_EQ(britton_reduce(BSWord::parse("ta3T"), params), BSWord::parse("ta3T"));
  // Nested pinches resolve from the inside out.
  EXPECT_EQ(britton_reduce(BSWord::parse("tta4TT"), params), BSWord::a(9));
  const BSWord k = commutator(BSWord::a(), BSWord::parse("taT"));
  EXPECT_FALSE(britton_reduce(k, params).empty());
  EXPECT_TRUE(is_pinch_free(britton_reduce(k, params), params));
}

TEST(Britton, ExponentOverflow) {
  const BSParams params(2, 3);
  // t^n a^(2^n) t^-n expands to a^(3^n); 3^330 is far past 2^512.
  const BSWord w = BSWord::t(330) * BSWord::a(Integer(1) << 330) * BSWord::t(-330);
  EXPECT_THROW(britton_reduce(w, params), ExponentOverflow);
}

TEST(SemiDirect, GroupAxioms) {
  std::mt19937 rng(503);
  const BSParams params(2, 3);
  auto rnd = [&] {
    return SemiDirElement{testing::uniform(rng, -4, 4), testing::random_rational(rng, 20, 8),
                          testing::random_rational(rng, 20, 8)};
  };
  for (int i = 0; i < 200; ++i) {
    const SemiDirElement x = rnd(), y = rnd(), z = rnd();
    EXPECT_EQ(semidir_mul(semidir_mul(x, y, params), z, params), semidir_mul(x, semidir_mul(y, z, params), params));
    EXPECT_TRUE(is_identity(semidir_mul(x, semidir_inv(x, params), params)));
    const long n = testing::uniform(rng, -3, 3);
    const SemiDirElement tn{n, 0, 0};
    EXPECT_EQ(beta_apply(x, n, params), semidir_mul(semidir_mul(tn, x, params), semidir_inv(tn, params), params));
  }
}

TEST(Phi, IsAHomomorphism) {
  std::mt19937 rng(507);
  for (const auto& params : {BSParams(2, 3), BSParams(3, 5)}) {
    for (int i = 0; i < 150; ++i) {
      const BSWord x = random_word(rng, 4, 5), y = random_word(rng, 4, 5);
      EXPECT_EQ(phi_eval(x * y, params), semidir_mul(phi_eval(x, params), phi_eval(y, params), params));
    }
  }
  EXPECT_EQ(phi_eval(BSWord::a(), BSParams(2, 3)), (SemiDirElement{0, 1, 1}));
  EXPECT_EQ(phi_eval(BSWord::t(), BSParams(2, 3)), (SemiDirElement{1, 0, 0}));
}

TEST(Britton, SoundnessOnRandomWords) {
  // Reduction preserves the element: phi(w) = phi(reduce(w)), and
  // reduce(w) empty forces phi(w) = 1.
  std::mt19937 rng(509);
  const BSParams params(2, 3);
  for (int i = 0; i < 2000; ++i) {
    const BSWord w = random_word(rng, static_cast<int>(testing::uniform(rng, 1, 8)), 12);
    const BSWord r = britton_reduce(w, params);
    EXPECT_TRUE(is_pinch_free(r, params));
    EXPECT_EQ(phi_eval(w, params), phi_eval(r, params));
    EXPECT_TRUE(britton_reduce(w * w.inverse(), params).empty());
    EXPECT_EQ(britton_reduce(r, params), r);
  }
}

TEST(Audit, Relations) {
  for (auto [p, q] : {std::pair<int, int>{2, 3}, {3, 5}, {2, 5}, {5, 2}}) {
    EXPECT_TRUE(relation_audit(BSParams(p, q)).ok()) << p << "," << q;
  }
}

TEST(Beta, ExpansivenessReport) {
  const BetaReport r = beta_expansiveness_report(BSParams(2, 3));
  EXPECT_EQ(r.vp_ratio, -1);
  EXPECT_EQ(r.vq_ratio, 1);
  EXPECT_TRUE(r.expansive);
  EXPECT_TRUE(r.levi_discrete);
  ASSERT_EQ(r.samples.size(), 4U);
  EXPECT_TRUE(r.samples[0].in_contraction);
  EXPECT_TRUE(r.samples[1].in_inverse_contraction);
  EXPECT_TRUE(r.samples[2].in_levi);
}

TEST(DerivedSeries, ContrastWithTheMetabelianImage) {
  const BSParams params(2, 3);
  const DerivedProbe probe = derived_series_probe(3, {BSWord::a(), BSWord::t()}, params);
  ASSERT_EQ(probe.levels.size(), 4U);
  EXPECT_TRUE(probe.metabelian_image);
  EXPECT_TRUE(probe.kernel_witness_found);
  for (std::size_t k = 1; k < probe.levels.size(); ++k) {
    EXPECT_LE(probe.levels[k].size(), 8U);
    bool nontrivial = false;
    for (const auto& e : probe.levels[k]) nontrivial = nontrivial || e.nontrivial;
    EXPECT_TRUE(nontrivial) << "level " << k;
  }
  const DerivedProbe abelian = derived_series_probe(1, {BSWord::a(), BSWord::a(3)}, params);
  for (const auto& e : abelian.levels[1]) EXPECT_FALSE(e.nontrivial);
  EXPECT_THROW(derived_series_probe(7, {BSWord::a()}, params), InvalidInput);
}

}  // namespace
}  // namespace padyn
