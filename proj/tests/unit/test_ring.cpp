#include <gtest/gtest.h>

#include <random>

#include "oreqb/error.hpp"
#include "oreqb/expr.hpp"
#include "oreqb/ring.hpp"
#include "support/oracles.hpp"

using namespace oreqb;

namespace {

RingPtr z2_t2() {
  return construct_ring(RingDescriptor::quotient(RingDescriptor::modular(2), {"0", "0", "1"}, "t"));
}

RingPtr ut_z5() { return construct_ring(RingDescriptor::upper_triangular(RingDescriptor::modular(5))); }

std::vector<std::string> names(const FiniteRing& R, const std::vector<Elem>& elems) {
  std::vector<std::string> out;
  for (Elem e : elems) out.push_back(R.name(e));
  return out;
}

Elem el(const FiniteRing& R, const char* s) { return parse_element(R, s); }

}  // namespace

TEST(Construct, ModularFourHasTwoSquaredZero) {
  auto R = construct_ring(RingDescriptor::modular(4));
  EXPECT_EQ(R->order(), 4u);
  EXPECT_TRUE(R->is_zero(R->mul(el(*R, "2"), el(*R, "2"))));
  EXPECT_EQ(R->characteristic(), 4u);
}

TEST(Construct, TruncatedPolynomialRing) {
  auto R = z2_t2();
  EXPECT_EQ(R->order(), 4u);
  EXPECT_EQ(names(*R, R->elements()), (std::vector<std::string>{"0", "1", "t", "1+t"}));
  EXPECT_TRUE(R->is_zero(R->mul(el(*R, "t"), el(*R, "t"))));
  EXPECT_EQ(R->mul(el(*R, "1+t"), el(*R, "1+t")), R->one());
}

TEST(Construct, UpperTriangularOverZ5) {
  auto R = ut_z5();
  EXPECT_EQ(R->order(), 125u);
  EXPECT_EQ(R->name(R->one()), "[[1,0],[0,1]]");
  EXPECT_FALSE(R->is_commutative());
}

TEST(Construct, OrderCapIsEnforced) {
  RingLimits limits;
  limits.max_order = 100;
  EXPECT_THROW(construct_ring(RingDescriptor::upper_triangular(RingDescriptor::modular(5)), limits),
               OrderLimitExceeded);
}

TEST(Construct, BrokenTableIsRejected) {
  RawTables t;
  t.order = 2;
  t.zero = 0;
  t.one = 1;
  t.add = {{0, 1}, {1, 0}};
  t.mul = {{0, 0}, {0, 0}};  // 1*1 = 0: not unital
  EXPECT_THROW(construct_ring(RingDescriptor::table(t)), RingAxiomViolation);
}

TEST(Annihilator, Examples) {
  auto R = z2_t2();
  const Elem t = el(*R, "t");
  EXPECT_EQ(names(*R, right_annihilator(RingSubset::of(R, std::vector<Elem>{t})).elements()),
            (std::vector<std::string>{"0", "t"}));
  EXPECT_EQ(right_annihilator(RingSubset::of(R, std::vector<Elem>{R->zero()})).size(), 4u);
  EXPECT_EQ(names(*R, right_annihilator(RingSubset::of(R, std::vector<Elem>{R->one()})).elements()),
            (std::vector<std::string>{"0"}));
}

TEST(Closure, Examples) {
  auto R = z2_t2();
  EXPECT_EQ(names(*R, right_ideal_closure(R, std::vector<Elem>{el(*R, "t")}).elements()),
            (std::vector<std::string>{"0", "t"}));
  EXPECT_EQ(right_ideal_closure(R, std::vector<Elem>{R->one()}).size(), 4u);
  auto Z6 = construct_ring(RingDescriptor::modular(6));
  EXPECT_EQ(names(*Z6, right_ideal_closure(Z6, std::vector<Elem>{el(*Z6, "3")}).elements()),
            (std::vector<std::string>{"0", "3"}));
}

TEST(Idempotents, Examples) {
  auto R = z2_t2();
  auto cls = idempotent_set(*R);
  ASSERT_EQ(cls.size(), 2u);
  for (const auto& c : cls) EXPECT_TRUE(c.is_central);

  auto Z6 = construct_ring(RingDescriptor::modular(6));
  std::vector<std::string> got;
  for (const auto& c : idempotent_set(*Z6)) {
    got.push_back(Z6->name(c.element));
    EXPECT_TRUE(c.is_central);
  }
  EXPECT_EQ(got, (std::vector<std::string>{"0", "1", "3", "4"}));

  auto T = ut_z5();
  const Elem e1 = el(*T, "[[1,1],[0,0]]");
  const Elem e2 = el(*T, "[[0,1],[0,1]]");
  EXPECT_TRUE(is_left_semicentral(*T, e1));
  EXPECT_FALSE(is_right_semicentral(*T, e1));
  EXPECT_TRUE(is_right_semicentral(*T, e2));
  EXPECT_FALSE(is_left_semicentral(*T, e2));
}

TEST(IntersectionClosure, Examples) {
  auto R = z2_t2();
  const auto whole = RingSubset::whole(R);
  EXPECT_EQ(intersection_closure({whole}).size(), 1u);
  const auto small = right_ideal_closure(R, std::vector<Elem>{el(*R, "t")});
  const auto fam = intersection_closure({small, whole});
  ASSERT_EQ(fam.size(), 2u);
  EXPECT_EQ(fam[0], small);
  EXPECT_EQ(fam[1], whole);

  auto Z6 = construct_ring(RingDescriptor::modular(6));
  std::vector<RingSubset> anns;
  for (int a = 0; a < 4; ++a)
    anns.push_back(right_annihilator(principal_right_ideal(Z6, Z6->from_int(a))));
  const auto closed = intersection_closure(anns);
  EXPECT_LE(closed.size(), 4u);
  for (const auto& x : closed)
    for (const auto& y : closed)
      EXPECT_NE(std::find(closed.begin(), closed.end(), x.intersect(y)), closed.end());
}

TEST(ParseElement, RejectsUnknownNames) {
  auto R = z2_t2();
  EXPECT_THROW(parse_element(*R, "u"), Error);
  EXPECT_EQ(parse_element(*R, "t+1"), el(*R, "1+t"));
}

// ---------------------------------------------------------------- invariants

class RingInvariants : public ::testing::TestWithParam<std::string> {};

std::vector<std::string> panel_names() {
  std::vector<std::string> out;
  for (const auto& [name, ctx] : oracle::panel()) out.push_back(name);
  return out;
}

RingPtr panel_ring(const std::string& name) {
  for (const auto& [n, ctx] : oracle::panel())
    if (n == name) return ctx->ring_ptr();
  throw Error("no panel ring " + name);
}

TEST_P(RingInvariants, AxiomsHoldExhaustively) {
  auto R = panel_ring(GetParam());
  ASSERT_LE(R->order(), 512u);
  const auto E = R->elements();
  for (Elem a : E) {
    EXPECT_EQ(R->mul(R->one(), a), a);
    EXPECT_EQ(R->mul(a, R->one()), a);
    for (Elem b : E)
      for (Elem c : E) {
        ASSERT_EQ(R->add(R->add(a, b), c), R->add(a, R->add(b, c)));
        ASSERT_EQ(R->mul(a, R->add(b, c)), R->add(R->mul(a, b), R->mul(a, c)));
        ASSERT_EQ(R->mul(R->mul(a, b), c), R->mul(a, R->mul(b, c)));
      }
  }
}

TEST_P(RingInvariants, AnnihilatorOfSetIsIntersection) {
  auto R = panel_ring(GetParam());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, R->order() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Elem> xs;
    for (int k = 0; k < 1 + trial % 4; ++k) xs.push_back(R->element(pick(rng)));
    RingSubset meet = RingSubset::whole(R);
    for (Elem x : xs) meet = meet.intersect(right_annihilator(RingSubset::of(R, std::vector<Elem>{x})));
    EXPECT_EQ(right_annihilator(RingSubset::of(R, xs)), meet);
  }
}

TEST_P(RingInvariants, AnnihilatorOfRightIdealIsTwoSided) {
  auto R = panel_ring(GetParam());
  for (Elem a : R->elements()) {
    const auto ann = right_annihilator(principal_right_ideal(R, a)).with_verified_flags();
    EXPECT_TRUE(ann.is_ideal()) << R->name(a);
    oracle::Set I;
    for (Elem x : principal_right_ideal(R, a).elements()) I.insert(x.index);
    oracle::Set want = oracle::right_annihilator(*R, I);
    oracle::Set got;
    for (Elem x : ann.elements()) got.insert(x.index);
    EXPECT_EQ(got, want);
  }
}

TEST_P(RingInvariants, RightIdealClosureIsIdempotentAndMatchesOracle) {
  auto R = panel_ring(GetParam());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, R->order() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Elem> gens{R->element(pick(rng)), R->element(pick(rng))};
    const auto once = right_ideal_closure(R, gens);
    const auto elems = once.elements();
    EXPECT_EQ(right_ideal_closure(R, elems), once);
    oracle::Set g{gens[0].index, gens[1].index};
    oracle::Set got;
    for (Elem x : elems) got.insert(x.index);
    EXPECT_EQ(got, oracle::right_ideal(*R, g));
  }
}

TEST_P(RingInvariants, IdempotentClassification) {
  auto R = panel_ring(GetParam());
  std::size_t count = 0;
  for (Elem e : R->elements()) count += R->mul(e, e) == e;
  const auto cls = idempotent_set(*R);
  EXPECT_EQ(cls.size(), count);
  bool all_central = true;
  for (const auto& c : cls) {
    EXPECT_EQ(c.is_central, c.is_left_semicentral && c.is_right_semicentral);
    bool left = true;
    for (Elem r : R->elements())
      left = left && R->mul(R->mul(c.element, r), c.element) == R->mul(r, c.element);
    EXPECT_EQ(c.is_left_semicentral, left);
    all_central = all_central && c.is_left_semicentral == c.is_central &&
                  c.is_right_semicentral == c.is_central;
  }
  if (oracle::semiprime(*R)) {
    EXPECT_TRUE(all_central);
  }
}

INSTANTIATE_TEST_SUITE_P(Panel, RingInvariants, ::testing::ValuesIn(panel_names()),
                         [](const auto& info) {
                           std::string s;
                           for (char c : info.param) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return s;
                         });
