#include <gtest/gtest.h>

#include <random>

#include "oreqb/error.hpp"
#include "oreqb/expr.hpp"
#include "oreqb/ore_poly.hpp"
#include "support/oracles.hpp"

using namespace oreqb;

namespace {

struct DualNumbers : ::testing::Test {
  ContextPtr ctx = oracle::context("EX_3_5");
  OrePoly p(const char* text) const { return parse_poly(ctx, text); }
};

}  // namespace

TEST_F(DualNumbers, MatrixUnitProducts) {
  const OrePoly e11 = p("[0,t]"), e12 = p("[t]"), e21 = p("[0,1,t]"), e22 = p("[1,t]");
  EXPECT_EQ(e12 * e21, e11);
  EXPECT_EQ(e21 * e12, e22);
  EXPECT_EQ(e11 + e22, p("[1]"));
}

TEST_F(DualNumbers, OneIsNeutral) {
  const OrePoly q = p("[1+t,0,t,1]");
  EXPECT_EQ(p("[1]") * q, q);
  EXPECT_EQ(q * p("[1]"), q);
}

TEST_F(DualNumbers, AdditiveInverse) {
  const OrePoly q = p("[t,1,1+t]");
  EXPECT_EQ(q + OrePoly::zero(ctx), q);
  EXPECT_TRUE((q + (-q)).is_zero());
  EXPECT_EQ(ore_sub(q, q), OrePoly::zero(ctx));
  EXPECT_TRUE(ore_eq(ore_add(q, ore_neg(q)), OrePoly::zero(ctx)));
}

TEST_F(DualNumbers, MonomialShiftExamples) {
  const Elem t = parse_element(ctx->ring(), "t");
  EXPECT_EQ(monomial_shift(ctx, 0, t), OrePoly::constant(ctx, t));
  // x t = t x + 1
  EXPECT_EQ(monomial_shift(ctx, 1, t), p("[1,t]"));
  // x^2 t = t x^2 + 2x = t x^2 in characteristic 2
  EXPECT_EQ(monomial_shift(ctx, 2, t), p("[0,0,t]"));
  EXPECT_EQ(pretty_poly(monomial_shift(ctx, 2, t)), "t*x^2");
}

TEST_F(DualNumbers, IdempotentSearchFindsMatrixUnit) {
  const auto found = idempotent_search(ctx, 1);
  EXPECT_NE(std::find(found.begin(), found.end(), p("[0,t]")), found.end());
  bool nonconstant = false;
  for (const auto& e : found) {
    EXPECT_EQ(e * e, e);
    nonconstant = nonconstant || !e.is_constant();
  }
  EXPECT_TRUE(nonconstant);
}

TEST(OrePoly, DegreeZeroSearchIsRingIdempotents) {
  for (const auto& [name, ctx] : oracle::panel()) {
    if (ctx->ring().order() > 512) continue;
    std::vector<OrePoly> want;
    for (const auto& c : idempotent_set(ctx->ring())) want.push_back(OrePoly::constant(ctx, c.element));
    EXPECT_EQ(idempotent_search(ctx, 0), want) << name;
  }
}

TEST(OrePoly, GaussianFieldHasOnlyConstantIdempotents) {
  auto ctx = oracle::context("EX_FINAL");
  const auto found = idempotent_search(ctx, 2);
  ASSERT_EQ(found.size(), 2u);
  EXPECT_TRUE(found[0].is_zero());
  EXPECT_EQ(found[1], OrePoly::constant(ctx, ctx->ring().one()));
}

TEST(OrePoly, SearchBudgetIsEnforced) {
  auto ctx = oracle::context("EX_3_3");
  EXPECT_THROW(idempotent_search(ctx, 3, 1000), BudgetExceeded);
}

TEST(OrePoly, ZeroDegreeIsSentinel) {
  auto ctx = oracle::context("EX_3_5");
  const OrePoly z = OrePoly::zero(ctx);
  EXPECT_TRUE(z.degree().is_neg_inf());
  EXPECT_THROW(z.degree().value(), Error);
  EXPECT_LT(z.degree(), OrePoly::constant(ctx, ctx->ring().one()).degree());
  EXPECT_TRUE((z.degree() + Degree(3)).is_neg_inf());
  EXPECT_EQ(z.degree().to_string(), "-inf");
}

TEST(OrePoly, TrailingZerosAreDropped) {
  auto ctx = oracle::context("EX_3_5");
  EXPECT_EQ(parse_poly(ctx, "[t,0,0]"), parse_poly(ctx, "[t]"));
  EXPECT_EQ(format_poly(parse_poly(ctx, "[0,0]")), "[]");
}

TEST(OrePoly, MixingContextsThrows) {
  auto a = oracle::context("EX_3_5");
  auto b = oracle::context("EX_FINAL");
  EXPECT_THROW(OrePoly::constant(a, a->ring().one()) * OrePoly::constant(b, b->ring().one()),
               ContextMismatch);
}

TEST(OrePoly, LiteralErrors) {
  auto ctx = oracle::context("EX_3_5");
  EXPECT_THROW(parse_poly(ctx, "[t,"), Error);
  EXPECT_THROW(parse_poly(ctx, "t,1"), Error);
  EXPECT_THROW(parse_poly(ctx, "[s]"), Error);
}

// ---------------------------------------------------------------- invariants

class OreInvariants : public ::testing::TestWithParam<std::string> {
 protected:
  ContextPtr ctx() const {
    for (auto& [n, c] : oracle::panel())
      if (n == GetParam()) return c;
    throw Error("missing panel context");
  }
};

TEST_P(OreInvariants, ProductMatchesXMoveOracle) {
  const ContextPtr c = ctx();
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const auto a = oracle::random_coeffs(c->ring(), rng, 3);
    const auto b = oracle::random_coeffs(c->ring(), rng, 3);
    const OrePoly got = OrePoly(c, a) * OrePoly(c, b);
    ASSERT_EQ(got.coeffs(), oracle::naive_mul(*c, a, b))
        << format_coefficient_list(c->ring(), a) << " * " << format_coefficient_list(c->ring(), b);
  }
}

TEST_P(OreInvariants, AssociativeAndDistributive) {
  const ContextPtr c = ctx();
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    const OrePoly p(c, oracle::random_coeffs(c->ring(), rng, 2));
    const OrePoly q(c, oracle::random_coeffs(c->ring(), rng, 2));
    const OrePoly r(c, oracle::random_coeffs(c->ring(), rng, 2));
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_EQ((p + q) * r, p * r + q * r);
  }
}

TEST_P(OreInvariants, MonomialShiftIsRepeatedMultiplicationByX) {
  const ContextPtr c = ctx();
  const OrePoly x = OrePoly::monomial(c, c->ring().one(), 1);
  for (Elem r : c->ring().elements()) {
    OrePoly acc = OrePoly::constant(c, r);
    for (std::size_t n = 0; n <= 6; ++n) {
      ASSERT_EQ(monomial_shift(c, n, r), acc) << "n=" << n << " r=" << c->ring().name(r);
      acc = x * acc;
    }
  }
}

TEST_P(OreInvariants, DegreeIsSubadditive) {
  const ContextPtr c = ctx();
  const FiniteRing& R = c->ring();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const OrePoly p(c, oracle::random_coeffs(R, rng, 3));
    const OrePoly q(c, oracle::random_coeffs(R, rng, 3));
    const OrePoly pq = p * q;
    ASSERT_LE(pq.degree(), p.degree() + q.degree());
    if (p.is_zero() || q.is_zero()) continue;
    const std::size_t n = p.degree().value();
    const Elem lead = R.mul(p.leading(), c->sigma().power(static_cast<std::int64_t>(n))[q.leading().index]);
    if (!R.is_zero(lead)) {
      ASSERT_EQ(pq.degree(), p.degree() + q.degree());
      ASSERT_EQ(pq.leading(), lead);
    }
  }
}

TEST_P(OreInvariants, LiteralsRoundTrip) {
  const ContextPtr c = ctx();
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const OrePoly p(c, oracle::random_coeffs(c->ring(), rng, 3));
    EXPECT_EQ(parse_poly(c, format_poly(p)), p);
  }
}

INSTANTIATE_TEST_SUITE_P(Panel, OreInvariants, ::testing::ValuesIn(oracle::active_examples()));
