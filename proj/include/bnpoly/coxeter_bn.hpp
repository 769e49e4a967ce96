#pragma once

// The hyperoctahedral group B_n inside Sym(2n), preserving the blocks
// {i, n+i}. Generators:
//   beta_0 = (1, n+1),  beta_i = (i, i+1)(n+i, n+i+1)  for 1 <= i < n.

#include <cstdint>
#include <string>
#include <vector>

#include "bnpoly/backtrack.hpp"
#include "bnpoly/group.hpp"
#include "bnpoly/normal.hpp"
#include "bnpoly/permutation.hpp"

namespace bnpoly {

inline std::uint64_t factorial(unsigned k) {
  std::uint64_t acc = 1;
  for (unsigned i = 2; i <= k; ++i) acc *= i;
  return acc;
}

/// 2^n n!
inline std::uint64_t bn_order(unsigned n) { return (std::uint64_t{1} << n) * factorial(n); }

class BnContext {
 public:
  explicit BnContext(unsigned n) : n_(n), group_(PermutationGroup::trivial(2 * std::max(n, 1u))) {
    if (n < 2) throw Error("B_n needs n >= 2");
    if (n > 16) throw Error("B_n order exceeds 64 bits for n > 16");
    const std::size_t d = degree();
    betas_.push_back(Permutation::transposition(d, 1, n + 1));
    for (unsigned i = 1; i < n; ++i)
      betas_.push_back(Permutation::from_cycles(d, {{i, i + 1}, {n + i, n + i + 1}}));
    group_ = PermutationGroup(d, betas_);
    if (group_.order() != bn_order(n)) throw Error("beta generators do not give order 2^n n!");
  }

  unsigned n() const noexcept { return n_; }
  std::size_t degree() const noexcept { return 2u * n_; }
  const std::vector<Permutation>& betas() const noexcept { return betas_; }
  const Permutation& beta(unsigned i) const { return betas_.at(i); }
  const PermutationGroup& group() const noexcept { return group_; }

  std::vector<std::pair<Point, Point>> blocks() const {
    std::vector<std::pair<Point, Point>> out;
    for (unsigned i = 1; i <= n_; ++i) out.emplace_back(i, n_ + i);
    return out;
  }

 private:
  unsigned n_;
  std::vector<Permutation> betas_;
  PermutationGroup group_;
};

inline BnContext make_context(unsigned n) { return BnContext(n); }

/// (i, n+i)
inline Permutation eta(const BnContext& ctx, unsigned i) {
  if (i < 1 || i > ctx.n()) throw Error("eta index out of range: " + std::to_string(i));
  return Permutation::transposition(ctx.degree(), i, ctx.n() + i);
}

/// prod_{i=1}^{k} (i, n+i); omega_0 when k = n.
inline Permutation eta_product(const BnContext& ctx, unsigned first, unsigned last) {
  Permutation acc = Permutation::identity(ctx.degree());
  for (unsigned i = first; i <= last; ++i) acc *= eta(ctx, i);
  return acc;
}

inline Permutation omega0(const BnContext& ctx) { return eta_product(ctx, 1, ctx.n()); }

inline bool preserves_blocks(const BnContext& ctx, const Permutation& p) {
  const unsigned n = ctx.n();
  for (unsigned i = 1; i <= n; ++i) {
    Point a = p.image(i), b = p.image(n + i);
    Point ba = a > n ? a - n : a, bb = b > n ? b - n : b;
    if (ba != bb) return false;
  }
  return true;
}

/// Induced permutation of the block indices 1..n.
inline Permutation block_permutation(const BnContext& ctx, const Permutation& p) {
  if (p.degree() != ctx.degree()) throw DegreeMismatch(ctx.degree(), p.degree());
  if (!preserves_blocks(ctx, p)) throw Error("permutation does not preserve the blocks {i, n+i}");
  const unsigned n = ctx.n();
  std::vector<Point> img(n);
  for (unsigned i = 1; i <= n; ++i) {
    Point a = p.image(i);
    img[i - 1] = a > n ? a - n : a;
  }
  return Permutation::from_images(img);
}

inline int total_sign(const Permutation& p) { return p.parity(); }
inline int pair_sign(const BnContext& ctx, const Permutation& p) { return block_permutation(ctx, p).parity(); }
inline int product_sign(const BnContext& ctx, const Permutation& p) { return pair_sign(ctx, p) ^ total_sign(p); }

inline Z2Character pair_sign_character(const BnContext& ctx) {
  return {"pair-sign", [ctx](const Permutation& p) { return pair_sign(ctx, p); }};
}
inline Z2Character total_sign_character() {
  return {"total-sign", [](const Permutation& p) { return total_sign(p); }};
}
inline Z2Character product_sign_character(const BnContext& ctx) {
  return {"product-sign", [ctx](const Permutation& p) { return product_sign(ctx, p); }};
}

/// All sign changes: <(i, n+i)>.
inline PermutationGroup M1(const BnContext& ctx) {
  std::vector<Permutation> gens;
  for (unsigned i = 1; i <= ctx.n(); ++i) gens.push_back(eta(ctx, i));
  return PermutationGroup(ctx.degree(), std::move(gens));
}

/// Even sign changes: <(1, n+1)(i, n+i) | 1 < i <= n>.
inline PermutationGroup M2(const BnContext& ctx) {
  std::vector<Permutation> gens;
  for (unsigned i = 2; i <= ctx.n(); ++i) gens.push_back(eta(ctx, 1) * eta(ctx, i));
  return PermutationGroup(ctx.degree(), std::move(gens));
}

struct NormalSubgroupEntry {
  std::string label;
  PermutationGroup group;
  std::uint64_t expected_index = 0;
  std::vector<std::string> aliases;  // labels of entries that turned out equal
};

/// Nontrivial proper normal subgroups of B_n: the three index-2 sign kernels,
/// their common index-4 kernel, <omega_0>, M2 and M1. Each entry is checked
/// for normality and index; coinciding entries are merged.
inline std::vector<NormalSubgroupEntry> normal_subgroup_catalog(const BnContext& ctx) {
  if (ctx.n() < 5) throw Error("normal subgroup catalog needs n >= 5");
  const auto& b = ctx.group();
  const std::uint64_t full = b.order();
  const unsigned n = ctx.n();

  auto ker_pair = kernel_of_character(b, pair_sign_character(ctx));
  auto ker_total = kernel_of_character(b, total_sign_character());
  auto ker_product = kernel_of_character(b, product_sign_character(ctx));
  auto index4 = subgroup_intersection(ker_pair, ker_total);

  std::vector<NormalSubgroupEntry> raw;
  raw.push_back({"ker-pair-sign", ker_pair, 2, {}});
  raw.push_back({"ker-total-sign", ker_total, 2, {}});
  raw.push_back({"ker-product-sign", ker_product, 2, {}});
  raw.push_back({"index4-kernel", index4, 4, {}});
  raw.push_back({"omega0", PermutationGroup(ctx.degree(), {omega0(ctx)}), full / 2, {}});
  raw.push_back({"M2", M2(ctx), full >> (n - 1), {}});
  raw.push_back({"M1", M1(ctx), full >> n, {}});

  std::vector<NormalSubgroupEntry> out;
  for (auto& e : raw) {
    if (e.group.order() * e.expected_index != full)
      throw Error("catalog entry " + e.label + " has unexpected index");
    if (!is_normal(b, e.group)) throw Error("catalog entry " + e.label + " is not normal");
    auto same = std::find_if(out.begin(), out.end(), [&](const auto& o) { return equal_groups(o.group, e.group); });
    if (same != out.end())
      same->aliases.push_back(e.label);
    else
      out.push_back(std::move(e));
  }
  return out;
}

/// Entry by label or alias.
inline const PermutationGroup& catalog_group(const std::vector<NormalSubgroupEntry>& cat, const std::string& label) {
  for (const auto& e : cat)
    if (e.label == label || std::find(e.aliases.begin(), e.aliases.end(), label) != e.aliases.end()) return e.group;
  throw Error("no catalog entry " + label);
}

/// G equals <beta_0..beta_{n-1}> as a permutation group.
inline bool identify_bn(const PermutationGroup& g, unsigned n) {
  if (g.degree() != 2u * n) return false;
  BnContext ctx(n);
  return equal_groups(g, ctx.group());
}

/// k involutions with (r_i r_j) of order 3 for |i-j| = 1 and 2 for |i-j| > 1,
/// generating a group of order (k+1)!. Such a group is Sym(k+1).
inline bool identify_sym_by_presentation(const std::vector<Permutation>& gens) {
  if (gens.empty()) return false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_involution()) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      std::uint64_t want = (j - i == 1) ? 3 : 2;
      if ((gens[i] * gens[j]).order() != want) return false;
    }
  }
  PermutationGroup g(gens.front().degree(), gens);
  return g.order() == factorial(static_cast<unsigned>(gens.size() + 1));
}

}  // namespace bnpoly
