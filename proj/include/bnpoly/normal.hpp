#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bnpoly/backtrack.hpp"
#include "bnpoly/group.hpp"
#include "bnpoly/oracle.hpp"

namespace bnpoly {

/// N normal in G: N <= G and N's generators are closed under conjugation by G's.
inline bool is_normal(const PermutationGroup& g, const PermutationGroup& n) {
  if (!is_subgroup(n, g)) return false;
  for (const auto& x : n.generators())
    for (const auto& s : g.generators())
      if (!n.contains(x.conjugate(s))) return false;
  return true;
}

/// Smallest normal subgroup of G containing S.
inline PermutationGroup normal_closure(const PermutationGroup& g, const std::vector<Permutation>& s) {
  for (const auto& x : s) {
    if (x.degree() != g.degree()) throw DegreeMismatch(g.degree(), x.degree());
    if (!g.contains(x)) throw Error("normal_closure: element not in group");
  }
  StabilizerChain chain(g.degree());
  std::vector<Permutation> gens;
  for (const auto& x : s)
    if (chain.add_generator(x)) gens.push_back(x);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (const auto& t : g.generators()) {
      Permutation c = gens[k].conjugate(t);
      if (chain.add_generator(c)) gens.push_back(std::move(c));
    }
  }
  return PermutationGroup(g.degree(), std::move(gens));
}

inline PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

/// A homomorphism onto the group of order 2, written additively.
struct Z2Character {
  std::string name;
  std::function<int(const Permutation&)> evaluate;
};

/// Kernel of a character that is odd on some generator: Schreier generators
/// for the transversal {e, a}, a the first odd generator. The result is
/// checked to have index exactly 2.
inline PermutationGroup kernel_of_character(const PermutationGroup& g, const Z2Character& chi) {
  const auto& gens = g.generators();
  auto odd = std::find_if(gens.begin(), gens.end(), [&](const Permutation& s) { return chi.evaluate(s) == 1; });
  if (odd == gens.end()) throw Error("character " + chi.name + " is trivial on every generator");
  const Permutation& a = *odd;
  const Permutation a_inv = a.inverse();
  std::vector<Permutation> schreier;
  for (const auto& s : gens) {
    if (chi.evaluate(s) == 0) {
      schreier.push_back(s);
      schreier.push_back(a * s * a_inv);
    } else {
      schreier.push_back(s * a_inv);
      schreier.push_back(a * s);
    }
  }
  std::erase_if(schreier, [](const Permutation& p) { return p.is_identity(); });
  PermutationGroup k(g.degree(), std::move(schreier));
  if (k.order() * 2 != g.order()) throw Error("character " + chi.name + " is not a homomorphism on this group");
  return k;
}

/// Every normal subgroup of G (trivial and G included), ordered by order.
/// Uses explicit element sets, so |G| must not exceed the brute-force limit.
inline std::vector<PermutationGroup> enumerate_normal_subgroups_bruteforce(const PermutationGroup& g) {
  if (g.order() > kBruteForceLimit) throw Error("group too large for brute-force normal subgroup enumeration");
  std::vector<PermutationGroup> out;
  for (const auto& set : oracle::normal_subgroups(g.degree(), g.generators())) {
    StabilizerChain acc(g.degree());
    std::vector<Permutation> gens;
    for (const auto& x : set)
      if (acc.add_generator(x)) gens.push_back(x);
    out.emplace_back(g.degree(), std::move(gens));
  }
  return out;
}

}  // namespace bnpoly
