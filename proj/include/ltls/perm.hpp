#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ltls::grp {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

/// A bijection of {0, ..., n-1} stored as its image list. Products compose
/// left to right: (a * b)(x) = b(a(x)), matching the row-vector matrix action.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  explicit Permutation(std::span<const Point> images) : Permutation(std::vector<Point>(images.begin(), images.end())) {}

  static Permutation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  Point operator()(std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  bool is_identity() const;
  std::size_t fixed_point_count() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// `a` first, then `b`.
Permutation operator*(const Permutation& a, const Permutation& b);

/// g^-1 h g.
Permutation conjugate(const Permutation& h, const Permutation& g);

}  // namespace ltls::grp
