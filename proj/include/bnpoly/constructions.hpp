#pragma once

// The two involution families in B_n, written exactly as their defining
// products, plus auxiliary elements used to verify them.
//
// Rank-4 family (n odd, n >= 5):
//   t1 = prod_{i=0}^{floor((n-2)/2)} (1+2i, 2+2i)(n+1+2i, n+2+2i)
//   t2 = prod_{i=1}^{floor((n-3)/2)} (2+2i, 3+2i)(n+2+2i, n+3+2i)
//   t3 = (1,3)(2,4)(n+1,n+3)(n+2,n+4)
//   t4 = (1,2)(n+1,n+2) prod_{i=1}^{n-2} (2+i, n+2+i)
//
// Rank-(n-4) family (n >= 8):
//   t1 = (2,3)(n+2,n+3)(4,5)(n+4,n+5) prod_{i=6}^{n} (i, n+i)
//   t2 = (1,2)(n+1,n+2)(3,4)(n+3,n+4)(5,6)(n+5,n+6) prod_{i=7}^{n} (i, n+i)
//   t3 = (2,3)(n+2,n+3)(6,7)(n+6,n+7)
//   tk = (k+3, k+4)(n+k+3, n+k+4)  for 4 <= k <= n-4

#include <optional>
#include <string>
#include <vector>

#include "bnpoly/coxeter_bn.hpp"
#include "bnpoly/cycle_notation.hpp"
#include "bnpoly/group.hpp"
#include "bnpoly/permutation.hpp"

namespace bnpoly {

enum class Family { thm12, thm13, custom };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::thm12: return "thm12";
    case Family::thm13: return "thm13";
    case Family::custom: return "custom";
  }
  return "custom";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "thm12") return Family::thm12;
  if (s == "thm13") return Family::thm13;
  if (s == "custom") return Family::custom;
  return std::nullopt;
}

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Names the first generator that is not an involution, or the first pair
/// t_i, t_j with |i-j| >= 2 that does not commute (1-based indices).
inline std::optional<std::string> candidate_defect(const std::vector<Permutation>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_involution()) return "t" + std::to_string(i + 1) + " is not an involution";
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 2; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return "t" + std::to_string(i + 1) + " and t" + std::to_string(j + 1) + " do not commute";
  return std::nullopt;
}

class InvalidCandidate : public Error {
 public:
  using Error::Error;
};

/// Ordered involutions t_1..t_rank of degree 2n satisfying the string condition.
struct CStringCandidate {
  unsigned n = 0;
  std::vector<Permutation> generators;
  Family family = Family::custom;

  std::size_t rank() const noexcept { return generators.size(); }
  std::size_t degree() const noexcept { return generators.empty() ? 2u * n : generators.front().degree(); }
  /// 1-based.
  const Permutation& t(std::size_t i) const { return generators.at(i - 1); }

  static CStringCandidate make(std::vector<Permutation> gens, Family family, unsigned n) {
    if (gens.empty()) throw InvalidCandidate("candidate needs at least one generator");
    for (const auto& g : gens)
      if (g.degree() != gens.front().degree()) throw DegreeMismatch(gens.front().degree(), g.degree());
    if (auto defect = candidate_defect(gens)) throw InvalidCandidate(*defect);
    return CStringCandidate{n, std::move(gens), family};
  }
};

namespace detail {

inline Permutation pairs(std::size_t degree, std::initializer_list<std::pair<Point, Point>> ts) {
  Permutation acc = Permutation::identity(degree);
  for (auto [a, b] : ts) acc *= Permutation::transposition(degree, a, b);
  return acc;
}

// (a,b)(n+a,n+b)
inline Permutation doubled(unsigned n, Point a, Point b) { return pairs(2 * n, {{a, b}, {n + a, n + b}}); }

}  // namespace detail

inline void require_thm12(unsigned n) {
  if (n < 5 || n % 2 == 0) throw InvalidArgument("n must be odd and ≥ 5");
}

inline void require_thm13(unsigned n) {
  if (n < 8) throw InvalidArgument("n must be ≥ 8");
  if (n > 16) throw InvalidArgument("n must be <= 16");
}

inline CStringCandidate thm12_generators(unsigned n) {
  require_thm12(n);
  if (n > 15) throw InvalidArgument("n must be <= 15");
  const std::size_t d = 2 * n;
  using detail::doubled;
  Permutation t1 = Permutation::identity(d);
  for (unsigned i = 0; i <= (n - 2) / 2; ++i) t1 *= doubled(n, 1 + 2 * i, 2 + 2 * i);
  Permutation t2 = Permutation::identity(d);
  for (unsigned i = 1; i <= (n - 3) / 2; ++i) t2 *= doubled(n, 2 + 2 * i, 3 + 2 * i);
  Permutation t3 = doubled(n, 1, 3) * doubled(n, 2, 4);
  Permutation t4 = doubled(n, 1, 2);
  for (unsigned i = 1; i <= n - 2; ++i) t4 *= Permutation::transposition(d, 2 + i, n + 2 + i);
  return CStringCandidate::make({t1, t2, t3, t4}, Family::thm12, n);
}

inline CStringCandidate thm13_generators(unsigned n) {
  require_thm13(n);
  using detail::doubled;
  BnContext ctx(n);
  std::vector<Permutation> t;
  t.push_back(doubled(n, 2, 3) * doubled(n, 4, 5) * eta_product(ctx, 6, n));
  t.push_back(doubled(n, 1, 2) * doubled(n, 3, 4) * doubled(n, 5, 6) * eta_product(ctx, 7, n));
  t.push_back(doubled(n, 2, 3) * doubled(n, 6, 7));
  for (unsigned k = 4; k <= n - 4; ++k) t.push_back(doubled(n, k + 3, k + 4));
  return CStringCandidate::make(std::move(t), Family::thm13, n);
}

inline CStringCandidate make_family(Family f, unsigned n) {
  switch (f) {
    case Family::thm12: return thm12_generators(n);
    case Family::thm13: return thm13_generators(n);
    case Family::custom: break;
  }
  throw InvalidArgument("custom candidates are read from a generator file");
}

/// Left-to-right product of the named generators (1-based indices).
inline Permutation word(const CStringCandidate& c, std::initializer_list<std::size_t> letters) {
  Permutation acc = Permutation::identity(c.degree());
  for (std::size_t i : letters) acc *= c.t(i);
  return acc;
}

/// t_first t_{first+1} ... t_last (identity if last < first).
inline Permutation run(const CStringCandidate& c, std::size_t first, std::size_t last) {
  Permutation acc = Permutation::identity(c.degree());
  for (std::size_t i = first; i <= last; ++i) acc *= c.t(i);
  return acc;
}

/// t_0 = t_4^(t_3 t_4 t_2 t_3) t_2 in the rank-(n-4) family.
inline Permutation t0(unsigned n) {
  auto c = thm13_generators(n);
  return c.t(4).conjugate(word(c, {3, 4, 2, 3})) * c.t(2);
}

/// The closed form usually quoted for t_0:
/// (1,2)(n+1,n+2)(3,4)(n+3,n+4) prod_{i=7}^{n} (i, n+i).
/// It does not equal the conjugation word; see t0_closed_form.
inline Permutation t0_quoted_closed_form(unsigned n) {
  require_thm13(n);
  BnContext ctx(n);
  return detail::doubled(n, 1, 2) * detail::doubled(n, 3, 4) * eta_product(ctx, 7, n);
}

/// What the conjugation word evaluates to:
/// (1,2)(n+1,n+2)(3,4)(n+3,n+4) prod_{i=5}^{n} (i, n+i).
inline Permutation t0_closed_form(unsigned n) {
  require_thm13(n);
  BnContext ctx(n);
  return detail::doubled(n, 1, 2) * detail::doubled(n, 3, 4) * eta_product(ctx, 5, n);
}

/// Elements showing a quotient of G is not a C-string: g in G_J, h in G_K
/// with g h^-1 (rank 4) or g h (rank n-4) in the named normal subgroup.
struct Witness {
  std::string label;
  Permutation g;
  Permutation h;
  std::vector<std::size_t> J;  // 1-based
  std::vector<std::size_t> K;
  Permutation relation;  // g h^-1 or g h
};

inline PermutationGroup parabolic(const CStringCandidate& c, const std::vector<std::size_t>& J) {
  std::vector<Permutation> gens;
  for (std::size_t j : J) gens.push_back(c.t(j));
  return PermutationGroup(c.degree(), std::move(gens));
}

/// Rank-4 family. Label "M1" or "M2": g = (t3 t4)^2 in G_234 and
/// h = (1,2)(3,4)(n+1,n+2)(n+3,n+4) in G_123. Label "omega0":
///   g = prod_{i=1}^5 (i,n+i) prod_{j=1}^{floor((n-5)/2)} (4+2j, n+5+2j)(5+2j, n+4+2j)
///   h = prod_{j=1}^{floor((n-5)/2)} (4+2j, 5+2j)(n+4+2j, n+5+2j)
/// with g h^-1 = omega_0. Memberships are verified.
inline Witness witnesses_thm12(unsigned n, const std::string& label) {
  auto c = thm12_generators(n);
  BnContext ctx(n);
  const std::size_t d = c.degree();
  Witness w{label, Permutation::identity(d), Permutation::identity(d), {2, 3, 4}, {1, 2, 3}, Permutation::identity(d)};
  PermutationGroup normal = PermutationGroup::trivial(d);
  if (label == "M1" || label == "M2") {
    w.g = word(c, {3, 4}).pow(2);
    w.h = detail::doubled(n, 1, 2) * detail::doubled(n, 3, 4);
    normal = label == "M1" ? M1(ctx) : M2(ctx);
  } else if (label == "omega0") {
    w.g = eta_product(ctx, 1, 5);
    for (unsigned j = 1; j <= (n - 5) / 2; ++j)
      w.g *= detail::pairs(d, {{4 + 2 * j, n + 5 + 2 * j}, {5 + 2 * j, n + 4 + 2 * j}});
    for (unsigned j = 1; j <= (n - 5) / 2; ++j) w.h *= detail::doubled(n, 4 + 2 * j, 5 + 2 * j);
    normal = PermutationGroup(d, {omega0(ctx)});
  } else {
    throw InvalidArgument("witness label must be M1, M2 or omega0");
  }
  w.relation = w.g * w.h.inverse();
  if (!parabolic(c, w.J).contains(w.g)) throw Error("witness g not in G_234");
  if (!parabolic(c, w.K).contains(w.h)) throw Error("witness h not in G_123");
  if (!normal.contains(w.relation)) throw Error("witness g h^-1 not in " + label);
  return w;
}

/// Rank-(n-4) family: g = t3 (t3 t4)^3 (= beta_6) in G_34 and
/// h = (t1 t2)^2 t1 (t3 t2 t1)^3 t3^t2 (t1 t3 t2)^4 in G_123, with g h = omega_0.
inline Witness witnesses_thm13(unsigned n) {
  auto c = thm13_generators(n);
  BnContext ctx(n);
  Witness w{"omega0", c.t(3) * word(c, {3, 4}).pow(3),
            word(c, {1, 2}).pow(2) * c.t(1) * word(c, {3, 2, 1}).pow(3) * c.t(3).conjugate(c.t(2)) *
                word(c, {1, 3, 2}).pow(4),
            {3, 4}, {1, 2, 3}, Permutation::identity(c.degree())};
  w.relation = w.g * w.h;
  if (!parabolic(c, w.J).contains(w.g)) throw Error("witness g not in G_34");
  if (!parabolic(c, w.K).contains(w.h)) throw Error("witness h not in G_123");
  if (w.relation != omega0(ctx)) throw Error("witness g h is not omega_0");
  return w;
}

/// A named equation between elements, evaluated exactly.
struct IdentityCheck {
  std::string name;
  bool holds = false;
  bool asserted = true;  // false: reported only
  std::string note;
};

/// Element identities for the rank-4 family.
inline std::vector<IdentityCheck> identity_checks_thm12(unsigned n) {
  auto c = thm12_generators(n);
  BnContext ctx(n);
  const std::size_t d = c.degree();
  const auto& b = ctx.betas();
  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, bool holds, bool asserted = true, std::string note = {}) {
    out.push_back({std::move(name), holds, asserted, std::move(note)});
  };

  add("(t1t2t3t4)^n = omega0", word(c, {1, 2, 3, 4}).pow(n) == omega0(ctx));

  {
    auto cs = cycles(word(c, {1, 2}));
    std::vector<std::size_t> lengths;
    for (const auto& cyc : cs) lengths.push_back(cyc.size());
    std::sort(lengths.begin(), lengths.end());
    std::vector<std::size_t> want{2, 2, n - 2, n - 2};
    std::sort(want.begin(), want.end());
    add("t1t2 has cycle type 2,2,n-2,n-2", lengths == want);
  }

  {
    Permutation t1 = Permutation::identity(d), t2 = Permutation::identity(d);
    for (unsigned i = 0; i <= (n - 2) / 2; ++i) t1 *= b[1 + 2 * i];
    for (unsigned i = 1; i <= (n - 3) / 2; ++i) t2 *= b[2 + 2 * i];
    add("t1 = prod beta_{1+2i}", t1 == c.t(1));
    add("t2 = prod_{i>=1} beta_{2+2i}", t2 == c.t(2));
    add("t3 = beta1^beta2 beta2^beta3", b[1].conjugate(b[2]) * b[2].conjugate(b[3]) == c.t(3));
    add("t4 = beta1 prod_{i=3}^n eta_i", b[1] * eta_product(ctx, 3, n) == c.t(4));
  }

  {
    Permutation x = c.t(1) * c.t(2) * c.t(2).conjugate(c.t(3)) * c.t(2).conjugate(word(c, {3, 4}));
    add("(t1 t2 t2^t3 t2^(t3t4))^(n-1) = prod_{i=2}^n eta_i", x.pow(n - 1) == eta_product(ctx, 2, n));
    add("beta0 = omega0 (t1 t2 t2^t3 t2^(t3t4))^-(n-1)", omega0(ctx) * x.pow(-static_cast<long long>(n - 1)) == b[0]);
  }

  if (n == 5) {
    add("t2,t3,t4 equal s2,s3,s4 at n=5",
        c.t(2) == parse_cycles("(4,5)(9,10)", d) && c.t(3) == parse_cycles("(1,3)(2,4)(6,8)(7,9)", d) &&
            c.t(4) == parse_cycles("(1,2)(3,8)(4,9)(5,10)(6,7)", d));
  }

  {
    auto w = witnesses_thm12(n, "M2");
    BnContext cx(n);
    add("(t3t4)^2 = (1,n+2)(2,n+1)(3,n+4)(4,n+3)",
        w.g == detail::pairs(d, {{1, n + 2}, {2, n + 1}, {3, n + 4}, {4, n + 3}}));
    add("M-witness g h^-1 = prod_{i=1}^4 eta_i", w.relation == eta_product(cx, 1, 4));
  }
  {
    auto w = witnesses_thm12(n, "omega0");
    add("omega0-witness g h^-1 = omega0", w.relation == omega0(ctx));
  }
  return out;
}

/// Element identities for the rank-(n-4) family.
inline std::vector<IdentityCheck> identity_checks_thm13(unsigned n) {
  auto c = thm13_generators(n);
  BnContext ctx(n);
  const std::size_t d = c.degree();
  const std::size_t m = c.rank();
  const auto& b = ctx.betas();
  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, bool holds, bool asserted = true, std::string note = {}) {
    out.push_back({std::move(name), holds, asserted, std::move(note)});
  };

  add("t3t4 = (2,3)(n+2,n+3)(6,8,7)(n+6,n+8,n+7)",
      word(c, {3, 4}) == Permutation::from_cycles(d, {{2, 3}, {n + 2, n + 3}, {6, 8, 7}, {n + 6, n + 8, n + 7}}));

  Permutation full = run(c, 1, m) * word(c, {3, 4});
  Permutation shorter = run(c, 1, m - 1) * word(c, {3, 4});
  add("(t1...tm t3t4)^n = omega0", full.pow(n) == omega0(ctx));
  const bool long_enough = n >= 9;
  const std::string short_note = long_enough ? "" : "t1...t_{m-1} has no t4..t_{m-1} factor at n=8; reported only";
  add("(t1...t_{m-1} t3t4)^(n-1) = prod_{i<n} eta_i", shorter.pow(n - 1) == eta_product(ctx, 1, n - 1), long_enough,
      short_note);
  add("(t1...t_{m-1} t3t4)^(n-1) (t1...tm t3t4)^n = (n,2n)",
      shorter.pow(n - 1) * full.pow(n) == Permutation::transposition(d, n, 2 * n), long_enough, short_note);

  {
    bool table = true;
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= m; ++j) {
        std::uint64_t want;
        std::size_t lo = std::min(i, j), hi = std::max(i, j);
        if (i == j) want = 1;
        else if (hi - lo >= 2) want = 2;
        else if (lo == 1 || lo == 2) want = 12;
        else if (lo == 3) want = 6;
        else want = 3;
        if ((c.t(i) * c.t(j)).order() != want) table = false;
      }
    add("order table of t_i t_j", table);
  }

  add("t1 = beta2 beta4 prod_{i=6}^n eta_i", b[2] * b[4] * eta_product(ctx, 6, n) == c.t(1));
  add("t2 = beta1 beta3 beta5 prod_{i=7}^n eta_i", b[1] * b[3] * b[5] * eta_product(ctx, 7, n) == c.t(2));
  add("t3 = beta2 beta6", b[2] * b[6] == c.t(3));
  {
    bool tail = true;
    for (std::size_t i = 4; i <= m; ++i) tail = tail && c.t(i) == b[i + 3];
    add("t_i = beta_{i+3} for i >= 4", tail);
  }

  add("beta2 = (t3t4)^3", word(c, {3, 4}).pow(3) == b[2]);
  add("beta6 = t3 (t3t4)^3", c.t(3) * word(c, {3, 4}).pow(3) == b[6]);
  add("beta1 = beta6^(t2t3t1t2t1t2t3)", b[6].conjugate(word(c, {2, 3, 1, 2, 1, 2, 3})) == b[1]);
  add("beta3 = beta6^(t2t3t1t2t1t3)", b[6].conjugate(word(c, {2, 3, 1, 2, 1, 3})) == b[3]);
  add("beta4 = beta6^(t2t1t2t1t3t2)", b[6].conjugate(word(c, {2, 1, 2, 1, 3, 2})) == b[4]);
  add("beta5 = beta6^(t2t3 eta6)", b[6].conjugate(word(c, {2, 3}) * eta(ctx, 6)) == b[5]);
  {
    Permutation down = Permutation::identity(d);
    for (std::size_t i = m; i >= 3; --i) down *= c.t(i);
    add("eta6 = eta_n^(t_m...t3)", eta(ctx, n).conjugate(down) == eta(ctx, 6));
    Permutation g = down * word(c, {2, 1, 2, 1, 2});
    add("beta0 = eta_n^(t_m...t3 t2t1t2t1t2)", eta(ctx, n).conjugate(g) == b[0]);
  }

  {
    Permutation w0 = t0(n);
    add("t0 word = quoted closed form prod_{i=7}^n", w0 == t0_quoted_closed_form(n), false,
        "the word gives prod_{i=5}^n; the quoted form lies outside G_{2..m}");
    add("t0 word = (1,2)(n+1,n+2)(3,4)(n+3,n+4) prod_{i=5}^n eta_i", w0 == t0_closed_form(n));
    add("t0 beta5 = t2", w0 * b[5] == c.t(2), false, "fails for the word form of t0");
    add("t0 is an involution", w0.is_involution());
  }

  {
    auto w = witnesses_thm13(n);
    add("omega0-witness g = beta6", w.g == b[6]);
    Permutation quoted = eta_product(ctx, 1, 5) * Permutation::from_cycles(d, {{6, 7, n + 6, n + 7}}) *
                         eta_product(ctx, 8, n);
    Permutation evaluated = eta_product(ctx, 1, 5) * detail::pairs(d, {{6, n + 7}, {7, n + 6}}) *
                            eta_product(ctx, 8, n);
    add("omega0-witness h = prod eta_i (6,n+7)(7,n+6) prod eta_i", w.h == evaluated);
    add("omega0-witness h = quoted form with (6,7,n+6,n+7)", w.h == quoted, false,
        "the quoted 4-cycle form is not what the word evaluates to");
    add("omega0-witness g h = omega0", w.relation == omega0(ctx));
  }
  return out;
}

inline std::vector<IdentityCheck> identity_checks(Family f, unsigned n) {
  if (f == Family::thm12) return identity_checks_thm12(n);
  if (f == Family::thm13) return identity_checks_thm13(n);
  return {};
}

}  // namespace bnpoly
