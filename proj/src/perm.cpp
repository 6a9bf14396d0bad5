#include "ltls/perm.hpp"

#include <numeric>
#include <sstream>

#include "ltls/error.hpp"

namespace ltls::grp {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) throw Error(ErrorCode::DomainTooLarge, "permutation degree exceeds 65535");
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorCode::InvalidPermutation, "image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Point>(x);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) n += images_[x] == x;
  return n;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << "]";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::DomainMismatch, "composing permutations of different degree");
  std::vector<Point> img(a.degree());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = b(a(x));
  return Permutation(std::span<const Point>(img));
}

Permutation conjugate(const Permutation& h, const Permutation& g) { return g.inverse() * h * g; }

}  // namespace ltls::grp
