#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnpoly {

/// Points are 1-based at every public interface.
using Point = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// A bijection of {1..degree}, acting on the right: (x)(pq) = ((x)p)q.
class Permutation {
 public:
  using Image = std::uint16_t;

  static Permutation identity(std::size_t degree) {
    if (degree == 0) throw Error("permutation degree must be positive");
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Image{0});
    return p;
  }

  /// `images[k]` is the image of point k+1 (1-based values).
  static Permutation from_images(std::span<const Point> images) {
    if (images.empty()) throw Error("permutation degree must be positive");
    if (images.size() > 0xFFFF) throw Error("degree too large");
    Permutation p;
    p.images_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t k = 0; k < images.size(); ++k) {
      Point x = images[k];
      if (x < 1 || x > images.size()) throw Error("image out of range: " + std::to_string(x));
      if (seen[x - 1]) throw Error("repeated image: " + std::to_string(x));
      seen[x - 1] = true;
      p.images_[k] = static_cast<Image>(x - 1);
    }
    return p;
  }

  /// Product of the given cycles, each applied as a cycle (a1 -> a2 -> ... -> a1).
  /// Cycles need not be disjoint; they are composed left to right.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& c : cycles) p = p * cycle(degree, c);
    return p;
  }

  static Permutation cycle(std::size_t degree, std::span<const Point> points) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (Point x : points) {
      if (x < 1 || x > degree) throw Error("point out of range: " + std::to_string(x));
      if (used[x - 1]) throw Error("repeated point in cycle: " + std::to_string(x));
      used[x - 1] = true;
    }
    for (std::size_t k = 0; k < points.size(); ++k) {
      p.images_[points[k] - 1] = static_cast<Image>(points[(k + 1) % points.size()] - 1);
    }
    return p;
  }

  static Permutation transposition(std::size_t degree, Point a, Point b) {
    const Point pts[] = {a, b};
    return cycle(degree, pts);
  }

  std::size_t degree() const noexcept { return images_.size(); }

  Point image(Point x) const {
    if (x < 1 || x > images_.size()) throw Error("point out of range: " + std::to_string(x));
    return images_[x - 1] + 1u;
  }

  /// Zero-based image table, for algorithms.
  std::span<const Image> raw() const noexcept { return images_; }
  std::size_t at0(std::size_t x) const noexcept { return images_[x]; }

  bool is_identity() const noexcept {
    for (std::size_t k = 0; k < images_.size(); ++k)
      if (images_[k] != k) return false;
    return true;
  }

  bool is_involution() const noexcept { return !is_identity() && (*this * *this).is_identity(); }

  /// Apply *this first, then q.
  Permutation operator*(const Permutation& q) const {
    if (degree() != q.degree()) throw DegreeMismatch(degree(), q.degree());
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) r.images_[k] = q.images_[images_[k]];
    return r;
  }

  Permutation& operator*=(const Permutation& q) { return *this = *this * q; }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) r.images_[images_[k]] = static_cast<Image>(k);
    return r;
  }

  Permutation pow(long long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
    Permutation acc = identity(degree());
    while (e) {
      if (e & 1u) acc *= base;
      base *= base;
      e >>= 1u;
    }
    return acc;
  }

  /// h^-1 p h
  Permutation conjugate(const Permutation& h) const { return h.inverse() * *this * h; }

  std::vector<Point> moved_points() const {
    std::vector<Point> out;
    for (std::size_t k = 0; k < images_.size(); ++k)
      if (images_[k] != k) out.push_back(static_cast<Point>(k + 1));
    return out;
  }

  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (seen[k] || images_[k] == k) continue;
      std::vector<Point> c;
      for (std::size_t x = k; !seen[x]; x = images_[x]) {
        seen[x] = true;
        c.push_back(static_cast<Point>(x + 1));
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t acc = 1;
    for (const auto& c : cycles()) acc = std::lcm(acc, static_cast<std::uint64_t>(c.size()));
    return acc;
  }

  /// 0 for even, 1 for odd.
  int parity() const {
    std::size_t transpositions = 0;
    for (const auto& c : cycles()) transpositions += c.size() - 1;
    return static_cast<int>(transpositions & 1u);
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  std::vector<Image> images_;
};

inline Permutation identity(std::size_t degree) { return Permutation::identity(degree); }
inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }
inline Permutation power(const Permutation& p, long long k) { return p.pow(k); }
inline Permutation conjugate(const Permutation& p, const Permutation& h) { return p.conjugate(h); }
inline std::uint64_t order(const Permutation& p) { return p.order(); }

/// [a,b] = a^-1 b^-1 a b
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// Left-to-right product; identity of `degree` for an empty range.
inline Permutation product(std::size_t degree, std::span<const Permutation> factors) {
  Permutation acc = Permutation::identity(degree);
  for (const auto& f : factors) acc *= f;
  return acc;
}

inline Permutation product(std::size_t degree, std::initializer_list<Permutation> factors) {
  return product(degree, std::span<const Permutation>(factors.begin(), factors.size()));
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = p.degree();
    for (auto x : p.raw()) h = h * 1000003u ^ x;
    return h;
  }
};

}  // namespace bnpoly

template <>
struct std::hash<bnpoly::Permutation> : bnpoly::PermutationHash {};
