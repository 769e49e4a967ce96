#include <gtest/gtest.h>

#include <numeric>

#include "bnpoly/backtrack.hpp"
#include "bnpoly/constructions.hpp"
#include "bnpoly/coxeter_bn.hpp"
#include "bnpoly/normal.hpp"
#include "bnpoly/oracle.hpp"
#include "bnpoly/verifier.hpp"
#include "support.hpp"

using namespace bnpoly;
using testing_support::random_element;

namespace {

// Random subgroups of B_5: either a subset of the betas or the t's, or a few
// random elements.
std::vector<Permutation> random_gens(std::mt19937& rng, const BnContext& ctx) {
  static const auto t = thm12_generators(5);
  std::vector<Permutation> out;
  switch (rng() % 3) {
    case 0:
      for (const auto& b : ctx.betas())
        if (rng() % 2) out.push_back(b);
      break;
    case 1:
      for (const auto& s : t.generators)
        if (rng() % 2) out.push_back(s);
      break;
    default:
      for (unsigned k = 1 + rng() % 2; k > 0; --k) out.push_back(random_element(rng, ctx.group()));
  }
  return out;
}

}  // namespace

TEST(Group, TrivialConventions) {
  auto e = PermutationGroup(10, {});
  EXPECT_EQ(e.order(), 1u);
  EXPECT_TRUE(e.contains(identity(10)));
  EXPECT_EQ(e.orbits().size(), 10u);
  EXPECT_EQ(center(e).order(), 1u);
  EXPECT_EQ(oracle::closure(10, {}).size(), 1u);
}

TEST(Group, FromGeneratorsOrders) {
  BnContext ctx(5);
  EXPECT_EQ(PermutationGroup::from_generators(ctx.betas()).order(), 3840u);
  EXPECT_EQ(PermutationGroup::from_generators(thm12_generators(5).generators).order(), 3840u);
  EXPECT_THROW(PermutationGroup::from_generators({identity(3), identity(4)}), DegreeMismatch);
}

TEST(Group, ChainInvariants) {
  BnContext ctx(6);
  const auto& g = ctx.group();
  std::uint64_t prod = 1;
  for (const auto& l : g.chain().levels()) prod *= l.orbit.size();
  EXPECT_EQ(prod, g.order());
  for (const auto& s : g.generators()) EXPECT_TRUE(g.contains(s));
  // Level i generators fix the earlier base points.
  const auto base = g.chain().base();
  const auto& levels = g.chain().levels();
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (const auto& s : levels[i].generators)
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(s.at0(base[j]), base[j]);
}

TEST(Group, BaseIsAscendingWithoutPrefix) {
  BnContext ctx(5);
  auto base = ctx.group().chain().base();
  EXPECT_TRUE(std::is_sorted(base.begin(), base.end()));
}

TEST(Group, OrderMatchesClosureOnRandomSubgroups) {
  BnContext ctx(5);
  std::mt19937 rng(101);
  for (int i = 0; i < 30; ++i) {
    auto gens = random_gens(rng, ctx);
    PermutationGroup g(10, gens);
    EXPECT_EQ(g.order(), oracle::closure(10, gens).size());
    EXPECT_EQ(enumerate_elements(g).size(), g.order());
  }
}

TEST(Group, MembershipSoundness) {
  BnContext ctx(5);
  std::mt19937 rng(103);
  for (int i = 0; i < 30; ++i) {
    PermutationGroup g(10, random_gens(rng, ctx));
    auto set = oracle::closure(10, g.generators());
    for (int k = 0; k < 10; ++k) {
      auto x = random_element(rng, g);
      EXPECT_TRUE(g.contains(x));
      EXPECT_TRUE(std::binary_search(set.begin(), set.end(), x));
    }
    // Moves a point across orbits: never an element.
    auto orb = g.orbits();
    if (orb.size() > 1) {
      auto h = Permutation::transposition(10, orb[0][0], orb[1][0]);
      EXPECT_FALSE(g.contains(h));
    }
    // Random permutations agree with the explicit set.
    for (int k = 0; k < 20; ++k) {
      auto p = testing_support::random_permutation(rng, 10);
      EXPECT_EQ(g.contains(p), std::binary_search(set.begin(), set.end(), p));
    }
  }
}

TEST(Group, Orbits) {
  auto c = thm12_generators(7);
  auto orb = subgroup_GJ(c, {2, 3, 4}).orbits();
  ASSERT_EQ(orb.size(), 2u);
  EXPECT_EQ(orb[0], (std::vector<Point>{1, 2, 3, 4, 5, 8, 9, 10, 11, 12}));
  EXPECT_EQ(orb[1], (std::vector<Point>{6, 7, 13, 14}));
  auto c5 = thm12_generators(5);
  auto orb5 = subgroup_GJ(c5, {1, 2, 3}).orbits();
  EXPECT_EQ(orb5, (std::vector<std::vector<Point>>{{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}}));
  EXPECT_THROW(subgroup_GJ(c5, {1}).orbit(11), Error);
}

TEST(Group, IntersectionExamples) {
  auto c = thm12_generators(5);
  auto x = subgroup_intersection(subgroup_GJ(c, {1, 2}), subgroup_GJ(c, {2, 3}));
  EXPECT_EQ(x.order(), 2u);
  EXPECT_TRUE(equal_groups(x, subgroup_GJ(c, {2})));
  auto c7 = thm12_generators(7);
  auto y = subgroup_intersection(subgroup_GJ(c7, {1, 2, 3}), subgroup_GJ(c7, {2, 3, 4}));
  EXPECT_EQ(y.order(), 12u);
  EXPECT_TRUE(equal_groups(y, subgroup_GJ(c7, {2, 3})));
  BnContext ctx(5);
  EXPECT_TRUE(equal_groups(subgroup_intersection(ctx.group(), ctx.group()), ctx.group()));
  EXPECT_THROW(subgroup_intersection(ctx.group(), PermutationGroup::trivial(4)), DegreeMismatch);
}

TEST(Group, BacktrackIntersectionMatchesSetIntersection) {
  BnContext ctx(5);
  std::mt19937 rng(107);
  for (int i = 0; i < 30; ++i) {
    auto ga = random_gens(rng, ctx), gb = random_gens(rng, ctx);
    PermutationGroup a(10, ga), b(10, gb);
    auto want = oracle::intersect(oracle::closure(10, ga), oracle::closure(10, gb));
    auto got = intersection_backtrack(a, b);
    EXPECT_EQ(oracle::elements_of(got), want) << "pair " << i;
    EXPECT_EQ(a.order() % got.order(), 0u);
    EXPECT_EQ(b.order() % got.order(), 0u);
  }
}

TEST(Group, BacktrackIntersectionOnLargeGroups) {
  // Both above the brute-force limit: only the backtrack path applies.
  auto c = thm13_generators(12);
  auto a = subgroup_GJ(c, interval_mask(1, 7)), b = subgroup_GJ(c, interval_mask(2, 8));
  ASSERT_GT(std::min(a.order(), b.order()), kBruteForceLimit);
  auto x = subgroup_intersection(a, b);
  EXPECT_TRUE(equal_groups(x, subgroup_GJ(c, interval_mask(2, 7))));
}

TEST(Group, CenterExamples) {
  auto c = thm12_generators(7);
  auto g234 = subgroup_GJ(c, {2, 3, 4});
  auto z = center(g234);
  EXPECT_EQ(z.order(), 2u);
  EXPECT_TRUE(z.contains(word(c, {2, 3, 4}).pow(5)));
  auto ab = PermutationGroup(4, {parse_cycles("(1,2)", 4)});
  EXPECT_TRUE(equal_groups(center(ab), ab));
}

TEST(Group, CenterBacktrackMatchesBruteForce) {
  BnContext ctx(5);
  std::mt19937 rng(109);
  for (int i = 0; i < 20; ++i) {
    PermutationGroup g(10, random_gens(rng, ctx));
    EXPECT_EQ(oracle::elements_of(center_backtrack(g)), oracle::elements_of(center_bruteforce(g)));
  }
  EXPECT_TRUE(equal_groups(center_backtrack(ctx.group()), PermutationGroup(10, {omega0(ctx)})));
}

TEST(Group, NormalClosureAndDerivedSubgroup) {
  BnContext ctx(5);
  const auto& b = ctx.group();
  EXPECT_EQ(normal_closure(b, {identity(10)}).order(), 1u);
  auto w = normal_closure(b, {omega0(ctx)});
  EXPECT_EQ(w.order(), 2u);
  EXPECT_EQ(b.order() / derived_subgroup(b).order(), 4u);
  EXPECT_THROW(normal_closure(b, {parse_cycles("(1,2)", 10)}), Error);
  // Normal closure of a reflection class in Sym(5) is all of it.
  auto s5 = PermutationGroup(5, {parse_cycles("(1,2)", 5), parse_cycles("(1,2,3,4,5)", 5)});
  EXPECT_EQ(normal_closure(s5, {parse_cycles("(1,2)", 5)}).order(), 120u);
  EXPECT_EQ(derived_subgroup(s5).order(), 60u);
}

TEST(Group, KernelOfCharacter) {
  BnContext ctx(5);
  auto k = kernel_of_character(ctx.group(), total_sign_character());
  EXPECT_EQ(k.order(), 1920u);
  EXPECT_TRUE(is_normal(ctx.group(), k));
  const auto& betas = ctx.betas();
  EXPECT_TRUE(k.contains(betas[0] * betas[0].conjugate(betas[1])));
  auto even = oracle::closure(10, ctx.betas());
  std::size_t count = std::count_if(even.begin(), even.end(), [](const Permutation& p) { return p.parity() == 0; });
  EXPECT_EQ(count, k.order());
  Z2Character trivial{"trivial", [](const Permutation&) { return 0; }};
  EXPECT_THROW(kernel_of_character(ctx.group(), trivial), Error);
}

TEST(Group, CharactersAreHomomorphisms) {
  BnContext ctx(6);
  std::mt19937 rng(113);
  for (const auto& chi : {pair_sign_character(ctx), total_sign_character(), product_sign_character(ctx)}) {
    EXPECT_EQ(chi.evaluate(identity(12)), 0);
    for (int i = 0; i < 100; ++i) {
      auto a = random_element(rng, ctx.group()), b = random_element(rng, ctx.group());
      EXPECT_EQ(chi.evaluate(a * b), chi.evaluate(a) ^ chi.evaluate(b)) << chi.name;
    }
    auto k = kernel_of_character(ctx.group(), chi);
    EXPECT_EQ(k.order() * 2, ctx.group().order());
    EXPECT_TRUE(is_normal(ctx.group(), k));
  }
}

TEST(Group, EnumerateAndCosets) {
  BnContext ctx(5);
  auto all = enumerate_elements(ctx.group(), 1000000);
  EXPECT_EQ(all.size(), 3840u);
  std::sort(all.begin(), all.end());
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  EXPECT_THROW(enumerate_elements(ctx.group(), 100), Error);
  auto m1 = M1(ctx);
  EXPECT_TRUE(is_normal(ctx.group(), m1));
  EXPECT_TRUE(coset_equal(m1, ctx.beta(1), ctx.beta(1)));
  EXPECT_TRUE(coset_equal(m1, ctx.beta(0), identity(10)));
  EXPECT_FALSE(coset_equal(m1, ctx.beta(1), ctx.beta(2)));
  EXPECT_TRUE(is_subgroup(M2(ctx), m1));
  EXPECT_FALSE(is_subgroup(m1, M2(ctx)));
}

TEST(Group, BruteForceNormalSubgroups) {
  EXPECT_EQ(enumerate_normal_subgroups_bruteforce(PermutationGroup::trivial(3)).size(), 1u);
  auto z2 = enumerate_normal_subgroups_bruteforce(PermutationGroup(4, {parse_cycles("(1,2)", 4)}));
  ASSERT_EQ(z2.size(), 2u);
  EXPECT_EQ(z2[0].order(), 1u);
  EXPECT_EQ(z2[1].order(), 2u);
  // Sym(4): 1, V4, A4, S4.
  auto s4 = PermutationGroup(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  std::vector<std::uint64_t> orders;
  for (const auto& n : enumerate_normal_subgroups_bruteforce(s4)) orders.push_back(n.order());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{1, 4, 12, 24}));
}

TEST(Group, WithBasePrefixKeepsTheGroup) {
  BnContext ctx(5);
  auto h = ctx.group().with_base_prefix({9, 3, 7});
  EXPECT_EQ(h.order(), 3840u);
  auto base = h.chain().base();
  ASSERT_GE(base.size(), 3u);
  EXPECT_EQ(base[0], 9u);
  EXPECT_EQ(base[1], 3u);
  EXPECT_EQ(base[2], 7u);
}
