#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bnpoly/group.hpp"
#include "bnpoly/permutation.hpp"

namespace testing_support {

inline bnpoly::Permutation random_permutation(std::mt19937& rng, std::size_t degree) {
  std::vector<bnpoly::Point> img(degree);
  std::iota(img.begin(), img.end(), 1u);
  std::shuffle(img.begin(), img.end(), rng);
  return bnpoly::Permutation::from_images(img);
}

// Product of one random coset representative per chain level.
inline bnpoly::Permutation random_element(std::mt19937& rng, const bnpoly::PermutationGroup& g) {
  auto acc = bnpoly::Permutation::identity(g.degree());
  for (const auto& level : g.chain().levels()) {
    std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
    acc = level.rep(level.orbit[pick(rng)]) * acc;
  }
  return acc;
}

inline std::vector<std::size_t> cycle_type(const bnpoly::Permutation& p) {
  std::vector<std::size_t> out;
  for (const auto& c : p.cycles()) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing_support
