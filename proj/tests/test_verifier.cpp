#include <gtest/gtest.h>

#include "bnpoly/theorem.hpp"
#include "bnpoly/verifier.hpp"
#include "support.hpp"

using namespace bnpoly;

namespace {

CStringCandidate tuple(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<Permutation> ps;
  for (const char* g : gens) ps.push_back(parse_cycles(g, degree));
  return CStringCandidate::make(std::move(ps), Family::custom, static_cast<unsigned>(degree / 2));
}

// Tuples that satisfy the involution and string conditions but not the
// intersection property.
std::vector<CStringCandidate> broken_tuples() {
  return {
      tuple(4, {"(1,2)", "(1,2)(3,4)", "(3,4)"}),
      tuple(4, {"(1,2)", "(1,2)"}),
      tuple(4, {"(1,2)", "(2,3)", "(1,2)"}),
      tuple(4, {"(1,2)", "(3,4)", "(1,2)(3,4)"}),
      tuple(6, {"(1,2)", "(3,4)", "(5,6)", "(1,2)(5,6)"}),
      tuple(8, {"(1,2)", "(3,4)", "(5,6)", "(7,8)", "(1,2)(7,8)"}),
  };
}

std::vector<CStringCandidate> random_tuples(std::mt19937& rng, std::size_t count) {
  std::vector<CStringCandidate> out;
  while (out.size() < count) {
    const std::size_t degree = 6, rank = 3 + rng() % 2;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < rank; ++i) {
      auto p = testing_support::random_permutation(rng, degree);
      // Random involution: square-free part of a random cycle structure.
      auto inv = identity(degree);
      for (const auto& c : p.cycles())
        if (c.size() >= 2) inv *= Permutation::transposition(degree, c[0], c[1]);
      gens.push_back(inv);
    }
    if (candidate_defect(gens)) continue;
    out.push_back(CStringCandidate::make(std::move(gens), Family::custom, 3));
  }
  return out;
}

}  // namespace

TEST(Verifier, SchlafliSymbols) {
  EXPECT_EQ(schlafli(thm12_generators(7)), (std::vector<std::uint64_t>{10, 6, 4}));
  EXPECT_EQ(schlafli(thm13_generators(8)), (std::vector<std::uint64_t>{12, 12, 6}));
  EXPECT_EQ(schlafli(thm13_generators(10)), (std::vector<std::uint64_t>{12, 12, 6, 3, 3}));
  EXPECT_THROW(schlafli(tuple(2, {"(1,2)"})), InvalidArgument);
}

TEST(Verifier, ParabolicSubgroups) {
  EXPECT_EQ(subgroup_GJ(thm12_generators(5), {1, 2, 3}).order(), 120u);
  EXPECT_EQ(subgroup_GJ(thm12_generators(7), {2, 3, 4}).order(), 240u);
  EXPECT_EQ(subgroup_GJ(thm12_generators(7), IndexMask{0}).order(), 1u);
  EXPECT_THROW(subgroup_GJ(thm12_generators(7), std::vector<std::size_t>{5}), InvalidArgument);
}

TEST(Verifier, FamiliesAreCStrings) {
  for (unsigned n : {5u, 7u, 9u}) {
    auto c = thm12_generators(n);
    EXPECT_TRUE(is_cstring_full(c).is_cstring) << n;
    EXPECT_TRUE(is_cstring_inductive(c).is_cstring) << n;
  }
  for (unsigned n : {8u, 9u, 10u}) {
    auto c = thm13_generators(n);
    EXPECT_TRUE(is_cstring_full(c).is_cstring) << n;
    EXPECT_TRUE(is_cstring_inductive(c).is_cstring) << n;
  }
}

TEST(Verifier, FullCheckReportsLeastFailingPair) {
  auto c = tuple(4, {"(1,2)", "(1,2)(3,4)", "(3,4)"});
  auto v = is_cstring_full(c);
  ASSERT_FALSE(v.is_cstring);
  ASSERT_TRUE(v.failure_witness);
  // Least (|J|+|K|, J, K): J={1}, K={2,3}, and t1 = t2 t3 lies in both.
  EXPECT_EQ(mask_indices(v.failure_witness->J), (std::vector<std::size_t>{1}));
  EXPECT_EQ(mask_indices(v.failure_witness->K), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(format_cycles(v.failure_witness->element), "(1,2)");
  EXPECT_TRUE(witness_verifies(c, PermutationGroup::trivial(4), *v.failure_witness));
  // The product t1 t3 = t2 is a violation as well, for J={1,3}, K={2}.
  IntersectionWitness other{indices_mask({1, 3}), indices_mask({2}), parse_cycles("(1,2)(3,4)", 4)};
  EXPECT_TRUE(witness_verifies(c, PermutationGroup::trivial(4), other));
}

TEST(Verifier, InductiveBaseCases) {
  EXPECT_TRUE(is_cstring_inductive(tuple(4, {"(1,2)", "(3,4)"})).is_cstring);
  EXPECT_TRUE(is_cstring_full(tuple(4, {"(1,2)", "(3,4)"})).is_cstring);
  EXPECT_FALSE(is_cstring_inductive(tuple(4, {"(1,2)", "(1,2)"})).is_cstring);
  EXPECT_TRUE(is_cstring_inductive(tuple(4, {"(1,2)"})).is_cstring);
}

TEST(Verifier, SubTupleIntersection) {
  auto c = thm13_generators(8);
  auto x = subgroup_intersection(subgroup_GJ(c, {1, 2}), subgroup_GJ(c, {2, 3}));
  EXPECT_TRUE(equal_groups(x, subgroup_GJ(c, {2})));
}

TEST(Verifier, MethodsAgreeOnBrokenTuples) {
  for (const auto& c : broken_tuples()) {
    auto full = is_cstring_full(c), ind = is_cstring_inductive(c);
    EXPECT_FALSE(full.is_cstring);
    EXPECT_FALSE(ind.is_cstring);
    ASSERT_TRUE(full.failure_witness && ind.failure_witness);
    EXPECT_TRUE(witness_verifies(c, PermutationGroup::trivial(c.degree()), *full.failure_witness));
    EXPECT_TRUE(witness_verifies(c, PermutationGroup::trivial(c.degree()), *ind.failure_witness));
  }
}

TEST(Verifier, MethodsAgreeOnRandomTuples) {
  std::mt19937 rng(31);
  int yes = 0, no = 0;
  for (const auto& c : random_tuples(rng, 60)) {
    bool full = is_cstring_full(c).is_cstring;
    EXPECT_EQ(full, is_cstring_inductive(c).is_cstring);
    (full ? yes : no)++;
  }
  EXPECT_GT(yes, 0);
  EXPECT_GT(no, 0);
}

TEST(Verifier, ConsecutiveSubTuplesOfCStringsAreCStrings) {
  for (unsigned n : {8u, 9u, 10u}) {
    auto c = thm13_generators(n);
    for (std::size_t a = 1; a <= c.rank(); ++a)
      for (std::size_t b = a + 1; b <= c.rank(); ++b) {
        std::vector<Permutation> sub(c.generators.begin() + static_cast<long>(a - 1),
                                     c.generators.begin() + static_cast<long>(b));
        auto s = CStringCandidate::make(sub, Family::custom, n);
        EXPECT_TRUE(is_cstring_full(s).is_cstring) << n << " [" << a << "," << b << "]";
      }
  }
}

TEST(Verifier, ThreadCountDoesNotChangeVerdicts) {
  for (const auto& c : broken_tuples()) {
    auto one = is_cstring_full(c, 1), four = is_cstring_full(c, 4);
    ASSERT_TRUE(one.failure_witness && four.failure_witness);
    EXPECT_EQ(one.failure_witness->J, four.failure_witness->J);
    EXPECT_EQ(one.failure_witness->K, four.failure_witness->K);
    EXPECT_EQ(one.failure_witness->element, four.failure_witness->element);
  }
  auto c = thm13_generators(9);
  BnContext ctx(9);
  auto cat = normal_subgroup_catalog(ctx);
  auto a = is_unravelled(c, cat, Method::full, 1), b = is_unravelled(c, cat, Method::full, 3);
  ASSERT_EQ(a.per_N.size(), b.per_N.size());
  for (std::size_t i = 0; i < a.per_N.size(); ++i) {
    EXPECT_EQ(a.per_N[i].result.verdict, b.per_N[i].result.verdict);
    EXPECT_EQ(a.per_N[i].result.witness.has_value(), b.per_N[i].result.witness.has_value());
    if (a.per_N[i].result.witness) EXPECT_EQ(a.per_N[i].result.witness->element, b.per_N[i].result.witness->element);
  }
}

TEST(Verifier, TrivialQuotientReproducesPlainCheck) {
  std::vector<CStringCandidate> all = broken_tuples();
  all.push_back(thm12_generators(5));
  all.push_back(thm13_generators(8));
  for (const auto& c : all) {
    auto q = quotient_cstring_check(c, PermutationGroup::trivial(c.degree()));
    auto v = is_cstring_full(c);
    bool repeated = false;
    for (std::size_t i = 1; i <= c.rank(); ++i)
      for (std::size_t j = i + 1; j <= c.rank(); ++j) repeated = repeated || c.t(i) == c.t(j);
    if (repeated) {
      // Equal generators already merge in the quotient.
      EXPECT_EQ(q.verdict, QuotientVerdict::collapsed);
      continue;
    }
    EXPECT_NE(q.verdict, QuotientVerdict::collapsed);
    EXPECT_EQ(q.verdict == QuotientVerdict::quotient_is_cstring, v.is_cstring);
    EXPECT_EQ(q.witness.has_value(), v.failure_witness.has_value());
    if (q.witness) EXPECT_EQ(q.witness->element, v.failure_witness->element);
  }
}

TEST(Verifier, QuotientExamples) {
  auto c = thm12_generators(7);
  BnContext ctx(7);
  auto cat = normal_subgroup_catalog(ctx);
  auto m1 = quotient_cstring_check(c, catalog_group(cat, "M1"));
  EXPECT_EQ(m1.verdict, QuotientVerdict::quotient_not_cstring);
  ASSERT_TRUE(m1.witness);
  EXPECT_TRUE(witness_verifies(c, catalog_group(cat, "M1"), *m1.witness));
  EXPECT_EQ(quotient_cstring_check(c, catalog_group(cat, "ker-total-sign")).verdict, QuotientVerdict::collapsed);
  EXPECT_THROW(quotient_cstring_check(c, PermutationGroup(14, {parse_cycles("(1,2)", 14)})), Error);

  auto c8 = thm13_generators(8);
  auto cat8 = normal_subgroup_catalog(BnContext(8));
  auto w = quotient_cstring_check(c8, catalog_group(cat8, "omega0"));
  EXPECT_EQ(w.verdict, QuotientVerdict::quotient_not_cstring);
  ASSERT_TRUE(w.witness);
  EXPECT_EQ(mask_indices(w.witness->J), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(mask_indices(w.witness->K), (std::vector<std::size_t>{3, 4}));
}

TEST(Verifier, IndexTwoQuotientsCollapse) {
  std::vector<CStringCandidate> all{thm12_generators(5), thm12_generators(7), thm12_generators(9),
                                    thm13_generators(8), thm13_generators(9), thm13_generators(10)};
  for (const auto& c : all) {
    BnContext ctx(c.n);
    for (const auto& e : normal_subgroup_catalog(ctx))
      if (e.expected_index <= 4)
        EXPECT_EQ(quotient_cstring_check(c, e.group).verdict, QuotientVerdict::collapsed) << c.n << " " << e.label;
  }
}

TEST(Verifier, UnravelledVerdicts) {
  auto run = [](const CStringCandidate& c) { return is_unravelled(c, normal_subgroup_catalog(BnContext(c.n))); };
  EXPECT_TRUE(run(thm12_generators(7)).unravelled);
  EXPECT_TRUE(run(thm12_generators(9)).unravelled);
  auto five = run(thm12_generators(5));
  EXPECT_FALSE(five.unravelled);
  std::vector<std::string> offending;
  for (const auto& e : five.per_N)
    if (e.result.verdict == QuotientVerdict::quotient_is_cstring) offending.push_back(e.label);
  EXPECT_EQ(offending, (std::vector<std::string>{"omega0"}));
  auto eight = run(thm13_generators(8));
  EXPECT_TRUE(eight.unravelled);
  EXPECT_EQ(eight.per_N.size(), 7u);
  EXPECT_FALSE(eight.assumptions.empty());
  EXPECT_THROW(is_unravelled(tuple(10, {"(1,2)", "(3,4)"}), {}), Error);
}

TEST(Verifier, InductiveUnravelAgreesWithFull) {
  for (const auto& c : {thm12_generators(5), thm12_generators(7), thm13_generators(8), thm13_generators(9)}) {
    auto cat = normal_subgroup_catalog(BnContext(c.n));
    auto a = is_unravelled(c, cat, Method::full), b = is_unravelled(c, cat, Method::inductive);
    EXPECT_EQ(a.unravelled, b.unravelled);
    for (std::size_t i = 0; i < a.per_N.size(); ++i) EXPECT_EQ(a.per_N[i].result.verdict, b.per_N[i].result.verdict);
  }
}

TEST(Verifier, Fingerprints) {
  auto g234 = subgroup_GJ(thm12_generators(9), {2, 3, 4});
  auto f = fingerprint(g234);
  EXPECT_EQ(f, fingerprint(reference_s234()));
  EXPECT_EQ(f.order, 240u);
  EXPECT_EQ(f.center_order, 2u);
  EXPECT_EQ(f.derived_order, 60u);
  ASSERT_TRUE(f.histogram);
  EXPECT_NE(f, fingerprint(reference_sym(5)));
  auto c = thm13_generators(10);
  EXPECT_EQ(subgroup_GJ(c, interval_mask(3, 5)).order(), 48u);
  EXPECT_EQ(subgroup_GJ(c, interval_mask(2, 6)).order(), 5760u);
  EXPECT_EQ(fingerprint(subgroup_GJ(c, interval_mask(2, 6))), fingerprint(reference_dih8_sym(6)));
  EXPECT_FALSE(fingerprint(BnContext(9).group()).histogram);
}

TEST(Verifier, TheoremReports) {
  auto r = verify_theorem(Family::thm12, 7);
  EXPECT_TRUE(r.all_asserted_passed());
  EXPECT_EQ(r.schlafli, (std::vector<std::uint64_t>{10, 6, 4}));
  ASSERT_TRUE(r.unravelled);
  EXPECT_EQ(r.unravelled->overall, "unravelled");
  auto r9 = verify_theorem(Family::thm13, 9);
  EXPECT_TRUE(r9.all_asserted_passed());
  EXPECT_EQ(r9.schlafli, (std::vector<std::uint64_t>{12, 12, 6, 3}));
  EXPECT_TRUE(r9.unravelled->expected.empty());
  EXPECT_THROW(verify_theorem(Family::thm12, 6), InvalidArgument);
}

TEST(Verifier, ReportsAreDeterministic) {
  VerifyOptions one, many;
  many.threads = 4;
  EXPECT_EQ(to_json_text(verify_theorem(Family::thm13, 8, one)), to_json_text(verify_theorem(Family::thm13, 8, many)));
  EXPECT_EQ(to_json_text(verify_theorem(Family::thm12, 5)), to_json_text(verify_theorem(Family::thm12, 5)));
}
