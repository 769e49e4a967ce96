#pragma once

// Brute-force reference computations on explicit element sets. Nothing here
// touches stabilizer chains; these are the cross-checks for the chain-based
// algorithms and are only usable for small groups.

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "bnpoly/group.hpp"
#include "bnpoly/permutation.hpp"

namespace bnpoly::oracle {

/// Sorted list of the distinct elements of a subgroup.
using ElementSet = std::vector<Permutation>;

/// Breadth-first closure of the generators under right multiplication.
inline ElementSet closure(std::size_t degree, const std::vector<Permutation>& generators,
                          std::uint64_t cap = kBruteForceLimit) {
  std::unordered_map<Permutation, bool> seen;
  std::vector<Permutation> todo{Permutation::identity(degree)};
  seen.emplace(todo.front(), true);
  for (std::size_t k = 0; k < todo.size(); ++k) {
    for (const auto& s : generators) {
      Permutation y = todo[k] * s;
      if (seen.emplace(y, true).second) {
        if (todo.size() >= cap) throw Error("closure exceeds cap");
        todo.push_back(std::move(y));
      }
    }
  }
  std::sort(todo.begin(), todo.end());
  return todo;
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Elements of a chain-backed group as a sorted set (for comparisons).
inline ElementSet elements_of(const PermutationGroup& g, std::uint64_t cap = kBruteForceLimit) {
  auto e = enumerate_elements(g, cap);
  std::sort(e.begin(), e.end());
  return e;
}

/// Conjugacy classes of the group generated by `generators` (element sets).
inline std::vector<ElementSet> conjugacy_classes(const ElementSet& group, const std::vector<Permutation>& generators) {
  std::unordered_map<Permutation, std::size_t> index;
  for (std::size_t k = 0; k < group.size(); ++k) index.emplace(group[k], k);
  std::vector<bool> done(group.size(), false);
  std::vector<ElementSet> classes;
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (done[k]) continue;
    ElementSet cls{group[k]};
    done[k] = true;
    for (std::size_t q = 0; q < cls.size(); ++q)
      for (const auto& s : generators) {
        Permutation c = cls[q].conjugate(s);
        std::size_t at = index.at(c);
        if (!done[at]) {
          done[at] = true;
          cls.push_back(std::move(c));
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Subgroup generated by `elements`, via a greedily reduced generating set
/// so the closure stays cheap when `elements` is a large conjugacy class.
inline ElementSet generated_subgroup(std::size_t degree, const std::vector<Permutation>& elements,
                                     std::vector<Permutation>* reduced = nullptr,
                                     std::uint64_t cap = kBruteForceLimit) {
  std::vector<Permutation> gens;
  ElementSet current = closure(degree, gens, cap);
  for (const auto& x : elements) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = closure(degree, gens, cap);
  }
  if (reduced) *reduced = gens;
  return current;
}

/// All normal subgroups of <generators>, as element sets ordered by size then
/// content: subgroups generated by single conjugacy classes, closed under joins.
inline std::vector<ElementSet> normal_subgroups(std::size_t degree, const std::vector<Permutation>& generators,
                                                std::uint64_t cap = kBruteForceLimit) {
  ElementSet group = closure(degree, generators, cap);
  std::map<ElementSet, std::vector<Permutation>> found;  // subgroup -> small generating set
  for (const auto& cls : conjugacy_classes(group, generators)) {
    std::vector<Permutation> gens;
    ElementSet n = generated_subgroup(degree, cls, &gens, cap);
    found.emplace(std::move(n), std::move(gens));
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::pair<ElementSet, std::vector<Permutation>>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const auto& a = current[i].first;
        const auto& b = current[j].first;
        if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
            std::includes(b.begin(), b.end(), a.begin(), a.end()))
          continue;
        auto gens = current[i].second;
        gens.insert(gens.end(), current[j].second.begin(), current[j].second.end());
        ElementSet joined = closure(degree, gens, cap);
        if (found.emplace(std::move(joined), std::move(gens)).second) grew = true;
      }
  }
  std::vector<ElementSet> out;
  for (auto& [set, gens] : found) out.push_back(set);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace bnpoly::oracle
