#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bnpoly/permutation.hpp"
#include "bnpoly/stabilizer_chain.hpp"

namespace bnpoly {

/// Groups of order at most this may be materialized element by element.
inline constexpr std::uint64_t kBruteForceLimit = 100000;

/// A finitely generated permutation group with an eagerly built stabilizer
/// chain. Immutable; copies share the chain.
class PermutationGroup {
 public:
  /// The trivial group. An empty generator list always means the trivial group.
  static PermutationGroup trivial(std::size_t degree) { return PermutationGroup(degree, {}); }

  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::vector<std::size_t> base_prefix = {})
      : degree_(degree), generators_(std::move(generators)) {
    auto chain = std::make_shared<StabilizerChain>(degree, std::move(base_prefix));
    for (const auto& g : generators_) {
      if (g.degree() != degree) throw DegreeMismatch(degree, g.degree());
      chain->add_generator(g);
    }
    chain_ = std::move(chain);
  }

  /// Non-empty generator list; degree taken from the first generator.
  static PermutationGroup from_generators(std::vector<Permutation> generators) {
    if (generators.empty()) throw Error("from_generators needs a degree for an empty generator list");
    std::size_t d = generators.front().degree();
    return PermutationGroup(d, std::move(generators));
  }

  static PermutationGroup from_generators(std::size_t degree, std::vector<Permutation> generators) {
    return PermutationGroup(degree, std::move(generators));
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const noexcept { return *chain_; }
  std::uint64_t order() const { return chain_->order(); }
  bool is_trivial() const { return chain_->levels().empty(); }

  bool contains(const Permutation& p) const { return chain_->contains(p); }

  /// Same group, chain rebuilt with the given base prefix.
  PermutationGroup with_base_prefix(std::vector<std::size_t> prefix) const {
    return PermutationGroup(degree_, chain_->strong_generators(), std::move(prefix), generators_);
  }

  /// Closure of {point} under the generators; sorted, 1-based.
  std::vector<Point> orbit(Point point) const {
    if (point < 1 || point > degree_) throw Error("point out of range: " + std::to_string(point));
    std::vector<bool> seen(degree_, false);
    std::vector<std::size_t> todo{point - 1u};
    seen[point - 1] = true;
    for (std::size_t k = 0; k < todo.size(); ++k)
      for (const auto& g : generators_) {
        std::size_t y = g.at0(todo[k]);
        if (!seen[y]) {
          seen[y] = true;
          todo.push_back(y);
        }
      }
    std::vector<Point> out;
    for (std::size_t x : todo) out.push_back(static_cast<Point>(x + 1));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Orbit partition, ordered by least element.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> done(degree_, false);
    for (Point x = 1; x <= degree_; ++x) {
      if (done[x - 1]) continue;
      auto o = orbit(x);
      for (Point y : o) done[y - 1] = true;
      out.push_back(std::move(o));
    }
    return out;
  }

 private:
  PermutationGroup(std::size_t degree, std::vector<Permutation> strong, std::vector<std::size_t> prefix,
                   std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)) {
    auto chain = std::make_shared<StabilizerChain>(degree, std::move(prefix));
    for (const auto& g : strong) chain->add_generator(g);
    chain_ = std::move(chain);
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
};

inline std::uint64_t group_order(const PermutationGroup& g) { return g.order(); }

inline bool contains(const PermutationGroup& g, const Permutation& p) {
  if (p.degree() != g.degree()) throw DegreeMismatch(g.degree(), p.degree());
  return g.contains(p);
}

inline std::vector<std::vector<Point>> orbits(const PermutationGroup& g) { return g.orbits(); }
inline std::vector<Point> orbit(const PermutationGroup& g, Point x) { return g.orbit(x); }

/// H <= G, by generator membership.
inline bool is_subgroup(const PermutationGroup& h, const PermutationGroup& g) {
  if (h.degree() != g.degree()) throw DegreeMismatch(h.degree(), g.degree());
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const auto& x) { return g.contains(x); });
}

inline bool equal_groups(const PermutationGroup& a, const PermutationGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b) && is_subgroup(b, a);
}

/// a N == b N, i.e. a b^-1 in N.
inline bool coset_equal(const PermutationGroup& n, const Permutation& a, const Permutation& b) {
  return n.contains(a * b.inverse());
}

/// <G, extra>
inline PermutationGroup join(const PermutationGroup& g, const std::vector<Permutation>& extra) {
  auto gens = g.generators();
  for (const auto& x : extra)
    if (!x.is_identity()) gens.push_back(x);
  return PermutationGroup(g.degree(), std::move(gens));
}

inline PermutationGroup join(const PermutationGroup& a, const PermutationGroup& b) {
  return join(a, b.generators());
}

/// Every element, generated from the chain as products of transversal
/// representatives. Throws if the order exceeds `cap`.
inline std::vector<Permutation> enumerate_elements(const PermutationGroup& g, std::uint64_t cap = kBruteForceLimit) {
  if (g.order() > cap) throw Error("group order " + std::to_string(g.order()) + " exceeds enumeration cap");
  const auto& levels = g.chain().levels();
  std::vector<Permutation> out;
  out.reserve(g.order());
  // g = v_k ... v_1 with v_i in transversal i.
  auto rec = [&](auto&& self, std::size_t i, const Permutation& suffix) -> void {
    if (i == 0) {
      out.push_back(suffix);
      return;
    }
    for (const auto& u : levels[i - 1].transversal) self(self, i - 1, suffix * u);
  };
  rec(rec, levels.size(), Permutation::identity(g.degree()));
  return out;
}

}  // namespace bnpoly
