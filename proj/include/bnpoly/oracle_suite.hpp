#pragma once

// Chain-based algorithms against explicit element sets on B_n for small n.

#include <random>
#include <string>
#include <vector>

#include "bnpoly/backtrack.hpp"
#include "bnpoly/constructions.hpp"
#include "bnpoly/coxeter_bn.hpp"
#include "bnpoly/normal.hpp"
#include "bnpoly/oracle.hpp"
#include "bnpoly/report.hpp"
#include "bnpoly/verifier.hpp"

namespace bnpoly {

struct OracleOptions {
  unsigned n = 5;
  unsigned random_subgroups = 24;
  unsigned intersection_pairs = 24;
  std::uint32_t seed = 20240611;
};

namespace detail {

// 1..3 uniformly chosen elements, or a random subset of the Coxeter generators.
inline std::vector<Permutation> random_generators(std::mt19937& rng, const std::vector<Permutation>& elements,
                                                  const std::vector<Permutation>& coxeter) {
  std::vector<Permutation> out;
  if (rng() % 3 == 0) {
    for (const auto& s : coxeter)
      if (rng() % 2) out.push_back(s);
    if (out.empty()) out.push_back(coxeter[rng() % coxeter.size()]);
    return out;
  }
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::size_t k = 1 + rng() % 3;
  for (std::size_t i = 0; i < k; ++i) out.push_back(elements[pick(rng)]);
  return out;
}

}  // namespace detail

inline bool oracle_supported(unsigned n) { return n >= 5 && bn_order(n) <= kBruteForceLimit; }

inline std::vector<Check> run_oracle_suite(const OracleOptions& opt = {}) {
  if (!oracle_supported(opt.n)) throw InvalidArgument("oracle suite needs n >= 5 with |B_n| <= 100000 (n = 5 or 6)");
  BnContext ctx(opt.n);
  const std::size_t d = ctx.degree();
  std::vector<Check> out;
  auto check = [&](std::string name, bool ok, std::string expected = {}, std::string observed = {}) {
    out.push_back({std::move(name), ok, true, std::move(expected), std::move(observed), {}});
  };

  auto b_elems = oracle::closure(d, ctx.betas());
  check("|B_n| chain vs closure", b_elems.size() == ctx.group().order(), std::to_string(b_elems.size()),
        std::to_string(ctx.group().order()));
  check("B_n element list vs closure", oracle::elements_of(ctx.group()) == b_elems);

  std::mt19937 rng(opt.seed);
  std::vector<std::vector<Permutation>> pool;
  {
    unsigned bad = 0;
    for (unsigned i = 0; i < opt.random_subgroups; ++i) {
      auto gens = detail::random_generators(rng, b_elems, ctx.betas());
      PermutationGroup g(d, gens);
      auto set = oracle::closure(d, gens);
      if (set.size() != g.order() || oracle::elements_of(g) != set) ++bad;
      pool.push_back(std::move(gens));
    }
    check("random subgroup orders: chain vs closure", bad == 0, "0 mismatches", std::to_string(bad) + " mismatches");
  }

  if (opt.n % 2 == 1) {
    auto c = thm12_generators(opt.n);
    unsigned bad = 0;
    for (IndexMask j = 0; j < (1u << c.rank()); ++j) {
      auto g = subgroup_GJ(c, j);
      std::vector<Permutation> gens;
      for (std::size_t i : mask_indices(j)) gens.push_back(c.t(i));
      if (oracle::closure(d, gens).size() != g.order()) ++bad;
    }
    check("all parabolic G_J orders: chain vs closure", bad == 0, "0 mismatches", std::to_string(bad) + " mismatches");
  }

  {
    unsigned bad = 0, center_bad = 0;
    for (unsigned i = 0; i < opt.intersection_pairs; ++i) {
      const auto& ga = pool[rng() % pool.size()];
      const auto gb = detail::random_generators(rng, b_elems, ctx.betas());
      PermutationGroup a(d, ga), b(d, gb);
      auto want = oracle::intersect(oracle::closure(d, ga), oracle::closure(d, gb));
      if (oracle::elements_of(intersection_backtrack(a, b)) != want) ++bad;
      if (oracle::elements_of(center_backtrack(a)) != oracle::elements_of(center_bruteforce(a))) ++center_bad;
    }
    check("backtrack intersections vs set intersections", bad == 0, "0 mismatches", std::to_string(bad) + " mismatches");
    check("backtrack centers vs brute-force centers", center_bad == 0, "0 mismatches",
          std::to_string(center_bad) + " mismatches");
  }

  {
    auto catalog = normal_subgroup_catalog(ctx);
    auto all = oracle::normal_subgroups(d, ctx.betas());
    std::vector<oracle::ElementSet> proper;
    for (auto& s : all)
      if (s.size() > 1 && s.size() < b_elems.size()) proper.push_back(std::move(s));
    std::vector<oracle::ElementSet> from_catalog;
    for (const auto& e : catalog) from_catalog.push_back(oracle::elements_of(e.group));
    std::sort(proper.begin(), proper.end());
    std::sort(from_catalog.begin(), from_catalog.end());
    check("catalog equals brute-force proper nontrivial normal subgroups", proper == from_catalog,
          std::to_string(proper.size()) + " subgroups", std::to_string(from_catalog.size()) + " catalog entries");
  }
  return out;
}

}  // namespace bnpoly
