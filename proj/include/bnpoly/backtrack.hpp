#pragma once

// Subgroup search over a stabilizer chain.
//
// The wanted set P (intersection, centralizer) must be a subgroup of G. It is
// built bottom-up: at level i the stabilizer K_{i+1} = P fixing b_0..b_i is
// already known, and for every point g in the level-i orbit of G we look for a
// single element of P fixing b_0..b_{i-1} and sending b_i to g. A found element
// extends K_i and its orbit; a failed point rules out its whole K_i-orbit.
//
// A Pruner supplies
//   State initial() const;
//   std::optional<State> extend(const State&, std::size_t level,
//                               std::size_t base, std::size_t image) const;
//   bool accept(const Permutation&) const;
// where extend may reject a partial base image early and accept is the exact
// leaf test.

#include <algorithm>
#include <optional>
#include <vector>

#include "bnpoly/group.hpp"

namespace bnpoly {

namespace detail {

inline std::vector<bool> orbit_mask(std::size_t degree, std::size_t point, const std::vector<Permutation>& gens) {
  std::vector<bool> seen(degree, false);
  std::vector<std::size_t> todo{point};
  seen[point] = true;
  for (std::size_t k = 0; k < todo.size(); ++k)
    for (const auto& s : gens) {
      std::size_t y = s.at0(todo[k]);
      if (!seen[y]) {
        seen[y] = true;
        todo.push_back(y);
      }
    }
  return seen;
}

template <class Pruner>
class SubgroupSearch {
  using State = decltype(std::declval<const Pruner&>().initial());

 public:
  SubgroupSearch(const PermutationGroup& g, const Pruner& pruner)
      : group_(g), levels_(g.chain().levels()), pruner_(pruner) {}

  PermutationGroup run() {
    const std::size_t depth = levels_.size();
    // States along the identity path: prefix[i] has b_0..b_{i-1} fixed.
    std::vector<State> prefix{pruner_.initial()};
    for (std::size_t i = 0; i < depth; ++i) {
      auto next = pruner_.extend(prefix.back(), i, levels_[i].base, levels_[i].base);
      if (!next) {
        // Only possible if P is not a subgroup (identity rejected).
        throw Error("subgroup search: identity rejected by pruner");
      }
      prefix.push_back(std::move(*next));
    }

    std::vector<Permutation> found;
    for (std::size_t i = depth; i-- > 0;) {
      const auto& level = levels_[i];
      std::vector<std::size_t> candidates = level.orbit;
      std::sort(candidates.begin(), candidates.end());
      std::vector<bool> failed(group_.degree(), false);
      auto reached = orbit_mask(group_.degree(), level.base, found);
      for (std::size_t gamma : candidates) {
        if (reached[gamma] || failed[gamma]) continue;
        auto state = pruner_.extend(prefix[i], i, level.base, gamma);
        std::optional<Permutation> hit;
        if (state) hit = descend(i + 1, level.rep(gamma), *state);
        if (hit) {
          found.push_back(std::move(*hit));
          reached = orbit_mask(group_.degree(), level.base, found);
        } else {
          auto lost = orbit_mask(group_.degree(), gamma, found);
          for (std::size_t x = 0; x < lost.size(); ++x)
            if (lost[x]) failed[x] = true;
        }
      }
    }
    return PermutationGroup(group_.degree(), std::move(found));
  }

 private:
  // suffix = v_{j-1} ... v_i; chooses v_j.
  std::optional<Permutation> descend(std::size_t j, const Permutation& suffix, const State& state) {
    if (j == levels_.size()) {
      if (pruner_.accept(suffix)) return suffix;
      return std::nullopt;
    }
    const auto& level = levels_[j];
    for (const auto& u : level.transversal) {
      Permutation s = u * suffix;
      auto next = pruner_.extend(state, j, level.base, s.at0(level.base));
      if (!next) continue;
      if (auto hit = descend(j + 1, s, *next)) return hit;
    }
    return std::nullopt;
  }

  const PermutationGroup& group_;
  const std::vector<StabilizerChain::Level>& levels_;
  const Pruner& pruner_;
};

/// Tracks sifting through H's chain, whose base starts with G's base.
class IntersectionPruner {
 public:
  IntersectionPruner(const PermutationGroup& h_aligned, std::size_t depth)
      : h_(h_aligned), depth_(depth) {}

  // Inverse of the accumulated H-transversal product.
  Permutation initial() const { return Permutation::identity(h_.degree()); }

  std::optional<Permutation> extend(const Permutation& h_inv, std::size_t level, std::size_t base,
                                    std::size_t image) const {
    const auto& hl = h_.chain().levels();
    std::size_t x = h_inv.at0(image);
    if (level >= hl.size() || hl[level].base != base) {
      if (x != base) return std::nullopt;
      return h_inv;
    }
    if (!hl[level].in_orbit(x)) return std::nullopt;
    if (x == base) return h_inv;
    return h_inv * hl[level].inverse_rep(x);
  }

  bool accept(const Permutation& g) const { return h_.contains(g); }

 private:
  const PermutationGroup& h_;
  std::size_t depth_;
};

/// Partial-map consistency for commuting with a fixed element.
class CentralizerPruner {
 public:
  explicit CentralizerPruner(const Permutation& x) : x_(x) {}

  std::vector<std::int32_t> initial() const { return std::vector<std::int32_t>(x_.degree(), -1); }

  std::optional<std::vector<std::int32_t>> extend(const std::vector<std::int32_t>& partial, std::size_t,
                                                  std::size_t base, std::size_t image) const {
    // g commutes with x iff (p^x)^g = (p^g)^x for all p.
    std::size_t bx = x_.at0(base);
    if (partial[bx] >= 0 && static_cast<std::size_t>(partial[bx]) != x_.at0(image)) return std::nullopt;
    for (std::size_t p = 0; p < partial.size(); ++p) {
      if (partial[p] < 0 || x_.at0(p) != base) continue;
      if (x_.at0(static_cast<std::size_t>(partial[p])) != image) return std::nullopt;
    }
    auto next = partial;
    next[base] = static_cast<std::int32_t>(image);
    if (bx == base && x_.at0(image) != image) return std::nullopt;
    return next;
  }

  bool accept(const Permutation& g) const { return x_ * g == g * x_; }

 private:
  const Permutation& x_;
};

}  // namespace detail

/// The subgroup of G whose elements satisfy the pruner's leaf test.
template <class Pruner>
PermutationGroup subgroup_search(const PermutationGroup& g, const Pruner& pruner) {
  return detail::SubgroupSearch<Pruner>(g, pruner).run();
}

/// G ∩ H by backtrack over the smaller group's chain, pruned by sifting
/// through H's chain rebuilt on the same base.
inline PermutationGroup intersection_backtrack(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  const PermutationGroup& g = a.order() <= b.order() ? a : b;
  const PermutationGroup& h = a.order() <= b.order() ? b : a;
  if (g.is_trivial() || h.is_trivial()) return PermutationGroup::trivial(a.degree());
  PermutationGroup h_aligned = h.with_base_prefix(g.chain().base());
  detail::IntersectionPruner pruner(h_aligned, g.chain().levels().size());
  return subgroup_search(g, pruner);
}

/// G ∩ H by filtering the smaller group's elements. Needs min order <= cap.
inline PermutationGroup intersection_bruteforce(const PermutationGroup& a, const PermutationGroup& b,
                                                std::uint64_t cap = kBruteForceLimit) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  const PermutationGroup& g = a.order() <= b.order() ? a : b;
  const PermutationGroup& h = a.order() <= b.order() ? b : a;
  StabilizerChain acc(a.degree());
  std::vector<Permutation> gens;
  for (const auto& x : enumerate_elements(g, cap))
    if (h.contains(x) && acc.add_generator(x)) gens.push_back(x);
  return PermutationGroup(a.degree(), std::move(gens));
}

/// Exact G ∩ H: element filtering when the smaller group is materializable,
/// backtrack otherwise.
inline PermutationGroup subgroup_intersection(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  if (std::min(a.order(), b.order()) <= kBruteForceLimit) return intersection_bruteforce(a, b);
  return intersection_backtrack(a, b);
}

inline PermutationGroup centralizer_of_element(const PermutationGroup& g, const Permutation& x) {
  if (g.degree() != x.degree()) throw DegreeMismatch(g.degree(), x.degree());
  detail::CentralizerPruner pruner(x);
  return subgroup_search(g, pruner);
}

inline PermutationGroup center_backtrack(const PermutationGroup& g) {
  PermutationGroup c = g;
  for (const auto& x : g.generators()) c = centralizer_of_element(c, x);
  return c;
}

inline PermutationGroup center_bruteforce(const PermutationGroup& g, std::uint64_t cap = kBruteForceLimit) {
  StabilizerChain acc(g.degree());
  std::vector<Permutation> gens;
  for (const auto& x : enumerate_elements(g, cap)) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](const Permutation& s) { return x * s == s * x; });
    if (central && acc.add_generator(x)) gens.push_back(x);
  }
  return PermutationGroup(g.degree(), std::move(gens));
}

inline PermutationGroup center(const PermutationGroup& g) {
  return g.order() <= kBruteForceLimit ? center_bruteforce(g) : center_backtrack(g);
}

}  // namespace bnpoly
