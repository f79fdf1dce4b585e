#include <gtest/gtest.h>

#include "oreqb/error.hpp"
#include "oreqb/expr.hpp"
#include "oreqb/maps.hpp"
#include "support/oracles.hpp"

using namespace oreqb;

namespace {

std::vector<Elem> images(const FiniteRing& R, std::initializer_list<const char*> names) {
  std::vector<Elem> out;
  for (const char* n : names) out.push_back(parse_element(R, n));
  return out;
}

}  // namespace

TEST(Morphism, IdentityIsAutomorphism) {
  auto R = construct_ring(RingDescriptor::modular(6));
  auto m = validate_morphism(R, R->elements(), true);
  EXPECT_TRUE(m.is_automorphism());
  EXPECT_TRUE(m.is_identity());
}

TEST(Morphism, HalvingCornerOnZ9Subring) {
  auto ctx = oracle::context("EX_2_1");
  const FiniteRing& R = ctx->ring();
  EXPECT_EQ(R.order(), 81u);
  EXPECT_TRUE(ctx->sigma().is_automorphism());
  const Elem a = parse_element(R, "[[2,3],[0,2]]");
  EXPECT_EQ(R.name(ctx->sigma()(a)), "[[2,6],[0,2]]");  // 3*5 = 15 = 6 mod 9
  // 5 has multiplicative order 6 mod 9
  EXPECT_EQ(ctx->sigma().power(6), R.elements());
  EXPECT_NE(ctx->sigma().power(3), R.elements());
}

TEST(Morphism, EvaluationAtZeroIsNotBijective) {
  auto ctx = oracle::context("EX_2_2");
  const FiniteRing& R = ctx->ring();
  EXPECT_EQ(R.order(), 8u);
  EXPECT_FALSE(ctx->sigma().is_automorphism());
  EXPECT_EQ(R.name(ctx->sigma()(parse_element(R, "1+t+t^2"))), "1");
  EXPECT_EQ(R.name(ctx->sigma()(parse_element(R, "t"))), "0");
  EXPECT_THROW(validate_morphism(ctx->ring_ptr(), std::vector<Elem>(ctx->sigma().image().begin(),
                                                                    ctx->sigma().image().end()),
                                 true),
               MapViolation);
}

TEST(Morphism, NonMultiplicativeImageIsRejected) {
  auto R = construct_ring(RingDescriptor::modular(4));
  // x -> 2x is additive but 1 -> 2 breaks unitality
  EXPECT_THROW(validate_morphism(R, images(*R, {"0", "2", "0", "2"}), false), MapViolation);
}

TEST(Derivation, ZeroIsValidForAnySigma) {
  for (const auto& [name, ctx] : oracle::panel()) {
    std::vector<Elem> zero(ctx->ring().order(), ctx->ring().zero());
    EXPECT_NO_THROW(validate_derivation(ctx->ring_ptr(), ctx->sigma_ptr(), zero)) << name;
  }
}

TEST(Derivation, FormalDerivativeOnDualNumbers) {
  auto ctx = oracle::context("EX_3_5");
  const FiniteRing& R = ctx->ring();
  EXPECT_TRUE(ctx->sigma().is_identity());
  EXPECT_EQ(R.name(ctx->delta()(parse_element(R, "t"))), "1");
  EXPECT_EQ(R.name(ctx->delta()(parse_element(R, "1+t"))), "1");
  EXPECT_EQ(R.name(ctx->delta()(R.one())), "0");
}

TEST(Derivation, TriangularCornerDerivation) {
  auto ctx = oracle::context("EX_3_3");
  const FiniteRing& R = ctx->ring();
  // delta([a,b;0,c]) = [0,2b;0,0], sigma negates b
  EXPECT_EQ(R.name(ctx->delta()(parse_element(R, "[[3,4],[0,1]]"))), "[[0,3],[0,0]]");
  EXPECT_EQ(R.name(ctx->sigma()(parse_element(R, "[[3,4],[0,1]]"))), "[[3,1],[0,1]]");
}

TEST(Derivation, LeibnizViolationIsRejected) {
  auto R = construct_ring(RingDescriptor::quotient(RingDescriptor::modular(2), {"0", "0", "1"}, "t"));
  auto sigma = std::make_shared<const RingMorphism>(validate_morphism(R, R->elements(), true));
  // the identity map is additive, but delta(1) = delta(1*1) = 2 delta(1) forces delta(1) = 0
  EXPECT_THROW(validate_derivation(R, sigma, images(*R, {"0", "1", "t", "1+t"})), MapViolation);
}

TEST(WordOperators, HandExamples) {
  for (const auto& [name, ctx] : oracle::panel()) {
    const FiniteRing& R = ctx->ring();
    for (Elem a : R.elements()) {
      EXPECT_EQ(f_word_operator(*ctx, 0, 0)(a), a);
      Elem s = a, d = a;
      for (int n = 1; n <= 4; ++n) {
        s = ctx->sigma()(s);
        d = ctx->delta()(d);
        EXPECT_EQ(f_word_operator(*ctx, n, n)(a), s) << name;
        EXPECT_EQ(f_word_operator(*ctx, 0, n)(a), d) << name;
      }
      const Elem sd = ctx->sigma()(ctx->delta()(a));
      const Elem ds = ctx->delta()(ctx->sigma()(a));
      EXPECT_EQ(f_word_operator(*ctx, 1, 2)(a), R.add(sd, ds)) << name;
    }
  }
}

TEST(WordOperators, OutOfRangeIndices) {
  auto ctx = oracle::context("EX_3_5");
  EXPECT_THROW(f_word_operator(*ctx, 3, 2), IndexOutOfRange);
  EXPECT_THROW(f_word_operator(*ctx, -1, 2), IndexOutOfRange);
}

TEST(WordOperators, RecursionMatchesWordSums) {
  for (const auto& [name, ctx] : oracle::panel()) {
    for (std::size_t j = 0; j <= 4; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        EXPECT_EQ(f_word_operator(*ctx, i, j), f_word_sum_explicit(*ctx, i, j))
            << name << " i=" << i << " j=" << j;
    EXPECT_NO_THROW(cross_check_word_operators(*ctx, 4));
  }
}

TEST(WordOperators, Additive) {
  for (const auto& [name, ctx] : oracle::panel()) {
    const FiniteRing& R = ctx->ring();
    const auto table = ctx->word_table(4);
    for (std::size_t j = 0; j <= 4; ++j)
      for (std::size_t i = 0; i <= j; ++i) {
        const Elem* f = table.f(i, j);
        for (Elem a : R.elements())
          for (Elem b : R.elements())
            ASSERT_EQ(f[R.add(a, b).index], R.add(f[a.index], f[b.index])) << name;
      }
  }
}

TEST(WordOperators, CompatibilityPropagates) {
  for (const auto& [name, ctx] : oracle::panel()) {
    if (!oracle::compatible(*ctx)) continue;
    const FiniteRing& R = ctx->ring();
    const auto table = ctx->word_table(4);
    for (Elem a : R.elements())
      for (Elem b : R.elements()) {
        if (!R.is_zero(R.mul(a, b))) continue;
        for (std::size_t j = 0; j <= 4; ++j)
          for (std::size_t i = 0; i <= j; ++i)
            ASSERT_TRUE(R.is_zero(R.mul(a, table.f(i, j)[b.index]))) << name;
      }
  }
}

TEST(Rules, RuleNamesRoundTrip) {
  for (auto k : {MapRule::Kind::Identity, MapRule::Kind::Zero, MapRule::Kind::Image,
                 MapRule::Kind::NegateCorner, MapRule::Kind::ScaleCorner, MapRule::Kind::EvaluateAtZero,
                 MapRule::Kind::Substitute, MapRule::Kind::Conjugate, MapRule::Kind::ConjugateBy,
                 MapRule::Kind::Inner, MapRule::Kind::IdentityMinusSigma, MapRule::Kind::FormalDerivative})
    EXPECT_EQ(rule_from_name(rule_name(k)), k);
  EXPECT_FALSE(rule_from_name("frobenius"));
}

TEST(Rules, ConjugationOnGaussianField) {
  auto ctx = oracle::context("EX_FINAL");
  const FiniteRing& R = ctx->ring();
  EXPECT_EQ(R.order(), 9u);
  const Elem z = parse_element(R, "1+2*u");
  EXPECT_EQ(R.name(ctx->sigma()(z)), "1+u");
  // delta = id - sigma: (1+2u) - (1+u) = u
  EXPECT_EQ(R.name(ctx->delta()(z)), "u");
  EXPECT_TRUE(ctx->sigma().is_automorphism());
}
