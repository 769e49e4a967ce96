#pragma once

// C-string predicates, Schlafli symbols, fingerprints and the unravelled
// decision.
//
// Index sets J of {1..rank} are bit masks (bit i-1 for t_i). Quotient checks
// never build G/N: by the correspondence theorem the images satisfy the
// intersection property iff <G_J, N> ∩ <G_K, N> = <G_{J∩K}, N> for all J, K.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bnpoly/backtrack.hpp"
#include "bnpoly/constructions.hpp"
#include "bnpoly/coxeter_bn.hpp"
#include "bnpoly/group.hpp"
#include "bnpoly/normal.hpp"

namespace bnpoly {

using IndexMask = std::uint32_t;

inline std::vector<std::size_t> mask_indices(IndexMask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m >> i; ++i)
    if ((m >> i) & 1u) out.push_back(i + 1);
  return out;
}

inline IndexMask indices_mask(const std::vector<std::size_t>& idx) {
  IndexMask m = 0;
  for (std::size_t i : idx) m |= IndexMask{1} << (i - 1);
  return m;
}

/// {first..last}, empty if last < first.
inline IndexMask interval_mask(std::size_t first, std::size_t last) {
  IndexMask m = 0;
  for (std::size_t i = first; i <= last; ++i) m |= IndexMask{1} << (i - 1);
  return m;
}

inline std::string format_indices(IndexMask m) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : mask_indices(m)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

/// Entry i is order(t_i t_{i+1}).
inline std::vector<std::uint64_t> schlafli(const CStringCandidate& c) {
  if (c.rank() < 2) throw InvalidArgument("Schlafli symbol needs rank >= 2");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < c.rank(); ++i) out.push_back((c.t(i) * c.t(i + 1)).order());
  return out;
}

inline PermutationGroup subgroup_GJ(const CStringCandidate& c, IndexMask j) {
  std::vector<Permutation> gens;
  for (std::size_t i : mask_indices(j)) {
    if (i > c.rank()) throw InvalidArgument("index " + std::to_string(i) + " exceeds rank");
    gens.push_back(c.t(i));
  }
  return PermutationGroup(c.degree(), std::move(gens));
}

inline PermutationGroup subgroup_GJ(const CStringCandidate& c, const std::vector<std::size_t>& j) {
  return subgroup_GJ(c, indices_mask(j));
}

/// Cache of <G_J, N> for a fixed candidate and normal subgroup N (trivial N
/// gives the plain parabolic subgroups). Entries are filled by ensure() and
/// then only read, so parallel phases must call ensure() for everything they
/// touch beforehand.
class ParabolicLattice {
 public:
  ParabolicLattice(const CStringCandidate& c, PermutationGroup normal)
      : c_(c), normal_(std::move(normal)), groups_(std::size_t{1} << c.rank()) {}

  const CStringCandidate& candidate() const noexcept { return c_; }
  const PermutationGroup& normal() const noexcept { return normal_; }

  const PermutationGroup& ensure(IndexMask j) {
    auto& slot = groups_.at(j);
    if (!slot) {
      std::vector<Permutation> gens = normal_.generators();
      for (std::size_t i : mask_indices(j)) gens.push_back(c_.t(i));
      slot.emplace(c_.degree(), std::move(gens));
    }
    return *slot;
  }

  void ensure_all() {
    for (IndexMask j = 0; j < groups_.size(); ++j) ensure(j);
  }

  const PermutationGroup& at(IndexMask j) const {
    const auto& slot = groups_.at(j);
    if (!slot) throw Error("parabolic lattice entry not prepared");
    return *slot;
  }

 private:
  const CStringCandidate& c_;
  PermutationGroup normal_;
  std::vector<std::optional<PermutationGroup>> groups_;
};

enum class Method { full, inductive };

inline std::string to_string(Method m) { return m == Method::full ? "full" : "inductive"; }

/// An element of <G_J,N> ∩ <G_K,N> outside <G_{J∩K},N>.
struct IntersectionWitness {
  IndexMask J = 0;
  IndexMask K = 0;
  Permutation element;
};

struct CStringVerdict {
  bool is_cstring = false;
  Method method = Method::full;
  std::optional<IntersectionWitness> failure_witness;
};

namespace detail {

// Lexicographic (|J|+|K|, J, K) with J < K as index lists.
struct PairKey {
  IndexMask J, K;
  bool operator<(const PairKey& o) const {
    auto sa = std::popcount(J) + std::popcount(K), sb = std::popcount(o.J) + std::popcount(o.K);
    if (sa != sb) return sa < sb;
    auto ja = mask_indices(J), jb = mask_indices(o.J);
    if (ja != jb) return ja < jb;
    return mask_indices(K) < mask_indices(o.K);
  }
};

inline std::vector<PairKey> ordered_subset_pairs(std::size_t rank) {
  const IndexMask all = static_cast<IndexMask>((std::size_t{1} << rank) - 1);
  std::vector<PairKey> out;
  for (IndexMask a = 0; a <= all; ++a)
    for (IndexMask b = a + 1; b <= all; ++b) {
      if ((a & b) == a || (a & b) == b) continue;  // nested pairs hold trivially
      auto ia = mask_indices(a), ib = mask_indices(b);
      out.push_back(ia < ib ? PairKey{a, b} : PairKey{b, a});
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Least index i with fails(i), or size when none. Workers skip indices beyond
// the best failure seen so far; the answer does not depend on thread count.
template <class Pred>
std::size_t first_failure(std::size_t size, unsigned threads, Pred fails) {
  if (threads <= 1 || size < 2) {
    for (std::size_t i = 0; i < size; ++i)
      if (fails(i)) return i;
    return size;
  }
  std::atomic<std::size_t> next{0}, best{size};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= size || i >= best.load()) return;
      if (fails(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return best.load();
}

inline std::optional<IntersectionWitness> intersection_defect(const ParabolicLattice& lat, IndexMask j, IndexMask k) {
  const auto& a = lat.at(j);
  const auto& b = lat.at(k);
  const auto& meet = lat.at(j & k);
  PermutationGroup x = subgroup_intersection(a, b);
  if (x.order() == meet.order()) return std::nullopt;
  for (const auto& g : x.generators())
    if (!meet.contains(g)) return IntersectionWitness{j, k, g};
  throw Error("intersection larger than expected but every generator lies in G_{J∩K}");
}

inline CStringVerdict full_check(ParabolicLattice& lat, unsigned threads) {
  lat.ensure_all();
  const auto pairs = ordered_subset_pairs(lat.candidate().rank());
  std::vector<std::optional<IntersectionWitness>> found(pairs.size());
  std::size_t at = first_failure(pairs.size(), threads, [&](std::size_t i) {
    found[i] = intersection_defect(lat, pairs[i].J, pairs[i].K);
    return found[i].has_value();
  });
  CStringVerdict v{at == pairs.size(), Method::full, std::nullopt};
  if (!v.is_cstring) v.failure_witness = found[at];
  return v;
}

// Intervals [a,b] are checked head then tail then their meet; the first defect
// in that order is reported.
inline CStringVerdict inductive_check(ParabolicLattice& lat) {
  const std::size_t r = lat.candidate().rank();
  std::map<std::pair<std::size_t, std::size_t>, std::optional<IntersectionWitness>> memo;
  auto rec = [&](auto&& self, std::size_t a, std::size_t b) -> std::optional<IntersectionWitness> {
    if (b <= a) return std::nullopt;
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::optional<IntersectionWitness> out;
    if (auto w = self(self, a, b - 1)) out = w;
    else if (auto w2 = self(self, a + 1, b)) out = w2;
    else {
      IndexMask head = interval_mask(a, b - 1), tail = interval_mask(a + 1, b);
      lat.ensure(head);
      lat.ensure(tail);
      lat.ensure(head & tail);
      out = intersection_defect(lat, head, tail);
    }
    memo.emplace(key, out);
    return out;
  };
  auto w = rec(rec, 1, r);
  return CStringVerdict{!w.has_value(), Method::inductive, w};
}

}  // namespace detail

/// All non-nested subset pairs, in tie-break order; the least failing pair wins.
inline CStringVerdict is_cstring_full(const CStringCandidate& c, unsigned threads = 1) {
  ParabolicLattice lat(c, PermutationGroup::trivial(c.degree()));
  return detail::full_check(lat, threads);
}

/// Sub-tuples t_1..t_{r-1} and t_2..t_r, then their single meet, recursively.
inline CStringVerdict is_cstring_inductive(const CStringCandidate& c) {
  ParabolicLattice lat(c, PermutationGroup::trivial(c.degree()));
  return detail::inductive_check(lat);
}

inline CStringVerdict is_cstring(const CStringCandidate& c, Method m, unsigned threads = 1) {
  return m == Method::full ? is_cstring_full(c, threads) : is_cstring_inductive(c);
}

/// Re-derives a witness from scratch: element in both joins, outside their meet.
inline bool witness_verifies(const CStringCandidate& c, const PermutationGroup& n, const IntersectionWitness& w) {
  auto join_n = [&](IndexMask m) {
    std::vector<Permutation> gens = n.generators();
    for (std::size_t i : mask_indices(m)) gens.push_back(c.t(i));
    return PermutationGroup(c.degree(), std::move(gens));
  };
  return join_n(w.J).contains(w.element) && join_n(w.K).contains(w.element) &&
         !join_n(w.J & w.K).contains(w.element);
}

enum class QuotientVerdict { collapsed, quotient_not_cstring, quotient_is_cstring };

inline std::string to_string(QuotientVerdict v) {
  switch (v) {
    case QuotientVerdict::collapsed: return "collapsed";
    case QuotientVerdict::quotient_not_cstring: return "quotient-not-cstring";
    case QuotientVerdict::quotient_is_cstring: return "quotient-is-cstring";
  }
  return "";
}

struct QuotientResult {
  QuotientVerdict verdict = QuotientVerdict::quotient_is_cstring;
  Method method = Method::full;
  std::string collapse_reason;  // set when collapsed
  std::optional<IntersectionWitness> witness;
};

/// Image of the candidate in G/N. N trivial reproduces the plain C-string check.
inline QuotientResult quotient_cstring_check(const CStringCandidate& c, const PermutationGroup& n,
                                             Method method = Method::full, unsigned threads = 1) {
  PermutationGroup g(c.degree(), c.generators);
  if (!is_normal(g, n)) throw Error("N is not normal in <t_1..t_r>");
  QuotientResult out;
  out.method = method;
  for (std::size_t i = 1; i <= c.rank(); ++i)
    if (n.contains(c.t(i))) {
      out.verdict = QuotientVerdict::collapsed;
      out.collapse_reason = "t" + std::to_string(i) + " lies in N";
      return out;
    }
  for (std::size_t i = 1; i <= c.rank(); ++i)
    for (std::size_t j = i + 1; j <= c.rank(); ++j)
      if (coset_equal(n, c.t(i), c.t(j))) {
        out.verdict = QuotientVerdict::collapsed;
        out.collapse_reason = "t" + std::to_string(i) + "N = t" + std::to_string(j) + "N";
        return out;
      }
  // Images are distinct involutions; string relations pass to the quotient.
  ParabolicLattice lat(c, n);
  CStringVerdict v = method == Method::full ? detail::full_check(lat, threads) : detail::inductive_check(lat);
  out.verdict = v.is_cstring ? QuotientVerdict::quotient_is_cstring : QuotientVerdict::quotient_not_cstring;
  out.witness = v.failure_witness;
  return out;
}

struct UnravelledEntry {
  std::string label;
  std::vector<std::string> aliases;
  std::uint64_t index = 0;
  QuotientResult result;
};

struct UnravelledReport {
  std::vector<UnravelledEntry> per_N;
  bool unravelled = false;
  std::vector<std::string> assumptions;
};

inline std::string overall_string(const UnravelledReport& r) { return r.unravelled ? "unravelled" : "not-unravelled"; }

/// Runs the quotient check for every catalog entry of B_n.
inline UnravelledReport is_unravelled(const CStringCandidate& c, const std::vector<NormalSubgroupEntry>& catalog,
                                      Method method = Method::full, unsigned threads = 1) {
  const unsigned n = static_cast<unsigned>(c.degree() / 2);
  if (!identify_bn(PermutationGroup(c.degree(), c.generators), n))
    throw Error("candidate does not generate B_n");
  UnravelledReport rep;
  rep.unravelled = true;
  for (const auto& e : catalog) {
    UnravelledEntry u{e.label, e.aliases, e.expected_index, quotient_cstring_check(c, e.group, method, threads)};
    if (u.result.verdict == QuotientVerdict::quotient_is_cstring) rep.unravelled = false;
    rep.per_N.push_back(std::move(u));
  }
  if (n > 5)
    rep.assumptions.push_back("normal subgroup list of B_n taken as complete (index <= 4, <omega0>, M1, M2); "
                              "completeness is checked by brute force only at n = 5");
  else
    rep.assumptions.push_back("normal subgroup list checked complete by brute-force enumeration at n = 5");
  return rep;
}

/// Isomorphism invariants. The histogram maps element order to count.
struct Fingerprint {
  std::uint64_t order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::optional<std::map<std::uint64_t, std::uint64_t>> histogram;

  bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const PermutationGroup& g, std::uint64_t cap = kBruteForceLimit) {
  Fingerprint f{g.order(), center(g).order(), derived_subgroup(g).order(), std::nullopt};
  if (g.order() <= cap) {
    std::map<std::uint64_t, std::uint64_t> h;
    for (const auto& x : enumerate_elements(g, cap)) ++h[x.order()];
    f.histogram = std::move(h);
  }
  return f;
}

/// Sym(j) on points 1..j by adjacent transpositions.
inline PermutationGroup reference_sym(unsigned j) {
  const std::size_t d = std::max(j, 1u);
  std::vector<Permutation> gens;
  for (unsigned i = 1; i < j; ++i) gens.push_back(Permutation::transposition(d, i, i + 1));
  return PermutationGroup(d, std::move(gens));
}

/// Z2 x Sym(j): Sym(j) on 1..j and (j+1, j+2).
inline PermutationGroup reference_z2_sym(unsigned j) {
  const std::size_t d = j + 2;
  std::vector<Permutation> gens{Permutation::transposition(d, j + 1, j + 2)};
  for (unsigned i = 1; i < j; ++i) gens.push_back(Permutation::transposition(d, i, i + 1));
  return PermutationGroup(d, std::move(gens));
}

/// Dih8 x Sym(k): <(1,2), (1,3)(2,4)> and Sym(k) on 5..k+4.
inline PermutationGroup reference_dih8_sym(unsigned k) {
  const std::size_t d = k + 4;
  std::vector<Permutation> gens{Permutation::transposition(d, 1, 2),
                                Permutation::from_cycles(d, {{1, 3}, {2, 4}})};
  for (unsigned i = 5; i < k + 4; ++i) gens.push_back(Permutation::transposition(d, i, i + 1));
  return PermutationGroup(d, std::move(gens));
}

/// <s2, s3, s4> at degree 10, a copy of Z2 x Sym(5).
inline PermutationGroup reference_s234() {
  return PermutationGroup(10, {parse_cycles("(4,5)(9,10)", 10), parse_cycles("(1,3)(2,4)(6,8)(7,9)", 10),
                               parse_cycles("(1,2)(3,8)(4,9)(5,10)(6,7)", 10)});
}

}  // namespace bnpoly
