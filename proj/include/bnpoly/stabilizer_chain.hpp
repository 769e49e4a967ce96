#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "bnpoly/permutation.hpp"

namespace bnpoly {

/// Deterministic base and strong generating set.
///
/// Level i has base point b_i and holds every strong generator fixing
/// b_0..b_{i-1}, the orbit of b_i under those generators, and a transversal
/// u with (b_i)u = orbit point. Strong generators are added with
/// `add_generator`, which runs Schreier-Sims until every Schreier generator
/// sifts. Base points come from an optional prefix, then the least point moved
/// by the element being inserted.
class StabilizerChain {
 public:
  static constexpr std::int32_t kNotInOrbit = -1;

  struct Level {
    std::size_t base = 0;  // 0-based
    std::vector<Permutation> generators;
    std::vector<std::size_t> orbit;        // 0-based points, discovery order
    std::vector<std::int32_t> orbit_pos;   // point -> index in orbit, or kNotInOrbit
    std::vector<Permutation> transversal;  // (base)transversal[k] = orbit[k]
    std::vector<Permutation> inverse_transversal;
    std::size_t checked_points = 0;
    std::size_t checked_generators = 0;

    bool in_orbit(std::size_t x) const { return orbit_pos[x] != kNotInOrbit; }
    const Permutation& rep(std::size_t x) const { return transversal[static_cast<std::size_t>(orbit_pos[x])]; }
    const Permutation& inverse_rep(std::size_t x) const {
      return inverse_transversal[static_cast<std::size_t>(orbit_pos[x])];
    }
  };

  explicit StabilizerChain(std::size_t degree, std::vector<std::size_t> base_prefix = {})
      : degree_(degree), prefix_(std::move(base_prefix)) {
    if (degree == 0) throw Error("group degree must be positive");
    for (std::size_t b : prefix_)
      if (b >= degree) throw Error("base point out of range");
    for (std::size_t b : prefix_) push_level(b);
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  std::vector<std::size_t> base() const {
    std::vector<std::size_t> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  /// Product of orbit lengths; throws if it does not fit 64 bits.
  std::uint64_t order() const {
    std::uint64_t acc = 1;
    for (const auto& l : levels_) {
      std::uint64_t s = l.orbit.size();
      if (acc > std::numeric_limits<std::uint64_t>::max() / s) throw Error("group order exceeds 64 bits");
      acc *= s;
    }
    return acc;
  }

  std::vector<Permutation> strong_generators() const {
    return levels_.empty() ? std::vector<Permutation>{} : levels_.front().generators;
  }

  /// Sifts g from `start`; returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t start = 0) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const Level& l = levels_[i];
      std::size_t img = g.at0(l.base);
      if (!l.in_orbit(img)) return {std::move(g), i};
      if (img != l.base) g = g * l.inverse_rep(img);
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    auto [residue, stop] = strip(g);
    return stop == levels_.size() && residue.is_identity();
  }

  /// Adds g to the group. Returns false if g was already an element.
  bool add_generator(const Permutation& g) {
    if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    auto [residue, stop] = strip(g);
    if (stop == levels_.size() && residue.is_identity()) return false;
    insert_strong(residue, stop);
    complete();
    return true;
  }

 private:
  void push_level(std::size_t base) {
    Level l;
    l.base = base;
    l.orbit_pos.assign(degree_, kNotInOrbit);
    l.orbit.push_back(base);
    l.orbit_pos[base] = 0;
    l.transversal.push_back(Permutation::identity(degree_));
    l.inverse_transversal.push_back(Permutation::identity(degree_));
    levels_.push_back(std::move(l));
  }

  // h fixes the base points of levels < from and is not the identity.
  void insert_strong(const Permutation& h, std::size_t from) {
    std::size_t depth = from;
    while (depth < levels_.size() && h.at0(levels_[depth].base) == levels_[depth].base) ++depth;
    if (depth == levels_.size()) {
      // Prefix levels already exist, so h moves some point that is not a base point.
      auto raw = h.raw();
      std::size_t moved = 0;
      while (raw[moved] == moved) ++moved;
      push_level(moved);
    }
    for (std::size_t i = 0; i <= depth; ++i) {
      levels_[i].generators.push_back(h);
      extend_orbit(levels_[i]);
    }
  }

  // Closes the orbit after a generator was appended.
  void extend_orbit(Level& l) {
    const Permutation& h = l.generators.back();
    std::size_t old_size = l.orbit.size();
    for (std::size_t k = 0; k < old_size; ++k) add_orbit_point(l, k, h);
    for (std::size_t k = old_size; k < l.orbit.size(); ++k)
      for (const auto& s : l.generators) add_orbit_point(l, k, s);
  }

  void add_orbit_point(Level& l, std::size_t k, const Permutation& s) {
    std::size_t y = s.at0(l.orbit[k]);
    if (l.in_orbit(y)) return;
    l.orbit_pos[y] = static_cast<std::int32_t>(l.orbit.size());
    l.orbit.push_back(y);
    Permutation u = l.transversal[k] * s;
    l.inverse_transversal.push_back(u.inverse());
    l.transversal.push_back(std::move(u));
  }

  // Schreier-Sims: every Schreier generator u_p s u_{p^s}^-1 must sift
  // through the deeper levels. Deepest levels are brought up to date first.
  void complete() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = levels_.size(); i-- > 0;) {
        if (process_level(i)) {
          changed = true;
          break;
        }
      }
    }
  }

  // Returns true if a strong generator was inserted.
  bool process_level(std::size_t i) {
    for (;;) {
      std::size_t p0 = levels_[i].checked_points, s0 = levels_[i].checked_generators;
      std::size_t p1 = levels_[i].orbit.size(), s1 = levels_[i].generators.size();
      if (p0 == p1 && s0 == s1) return false;
      for (std::size_t p = 0; p < p1; ++p) {
        for (std::size_t s = (p < p0 ? s0 : 0); s < s1; ++s) {
          const Level& l = levels_[i];
          const Permutation& u = l.transversal[p];
          Permutation us = u * l.generators[s];
          std::size_t img = us.at0(l.base);
          Permutation y = us * l.inverse_rep(img);
          if (y.is_identity()) continue;
          auto [residue, stop] = strip(std::move(y), i + 1);
          if (stop == levels_.size() && residue.is_identity()) continue;
          insert_strong(residue, stop);
          return true;
        }
      }
      levels_[i].checked_points = p1;
      levels_[i].checked_generators = s1;
    }
  }

  std::size_t degree_;
  std::vector<std::size_t> prefix_;
  std::vector<Level> levels_;
};

}  // namespace bnpoly
