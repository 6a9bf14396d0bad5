#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ltls/arith.hpp"
#include "ltls/group.hpp"

namespace ltls::ls {

using Line = std::vector<std::uint32_t>;

struct RegularParams {
  std::uint64_t b, v, k, r;
  bool operator==(const RegularParams&) const = default;
};

/// Points 0..v-1 and a set of lines. Lines are stored sorted, and the line
/// list is sorted lexicographically, so equal spaces compare equal.
class LinearSpace {
 public:
  /// Canonicalizes the lines; throws InvalidSpace for out-of-range points or
  /// a point repeated within one line. Pair coverage is checked by validate().
  LinearSpace(std::uint32_t v, std::vector<Line> lines);

  std::uint32_t v() const { return v_; }
  std::size_t b() const { return lines_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  /// Present when all lines have one size k, all points lie on r lines, and
  /// b k (k-1) = v (v-1).
  const std::optional<RegularParams>& regular_params() const { return regular_; }

  std::optional<std::size_t> line_index(const Line& sorted_line) const;
  /// Lines through each point.
  std::vector<std::vector<std::uint32_t>> lines_through_points() const;

  bool operator==(const LinearSpace& other) const { return v_ == other.v_ && lines_ == other.lines_; }

 private:
  std::uint32_t v_;
  std::vector<Line> lines_;
  std::map<Line, std::size_t> index_;
  std::optional<RegularParams> regular_;
};

struct PairViolation {
  std::uint32_t a, b;
  std::size_t lines;  // 0 or >= 2
};

struct ValidationReport {
  bool valid = false;
  bool nontrivial = false;
  bool regular = false;
  std::optional<RegularParams> params;
  std::vector<PairViolation> violations;  // ascending by (a, b)
  std::vector<std::size_t> short_lines;    // lines with fewer than 2 points
};

ValidationReport validate(const LinearSpace& space);

/// Outcome of the parameter arithmetic b = v(v-1)/(k(k-1)), r = (v-1)/(k-1).
struct FisherResult {
  bool feasible = false;
  Rational b, r;
  std::string failed_condition;  // empty when feasible
};

/// Throws DegenerateParams unless v > k >= 2.
FisherResult fisher_regular(const BigInt& v, const BigInt& k);

/// b >= v for a valid space with at least two lines; throws InvalidSpace otherwise.
bool fisher_general(const LinearSpace& space);

bool is_automorphism(const LinearSpace& space, const grp::Permutation& perm);

struct Transitivity {
  bool point = false, line = false, flag = false, two_transitive = false;
  std::size_t point_orbits = 0, line_orbits = 0, flag_orbits = 0, pair_orbits = 0;
};

/// Orbit counts of <generators> on points, lines, flags and ordered pairs of
/// distinct points. Throws DomainMismatch or NotAutomorphism.
Transitivity transitivity(const LinearSpace& space, const grp::PermGroup& group);

struct FixData {
  std::size_t d_p = 0;  // fixed points
  std::size_t d_l = 0;  // setwise-fixed lines
  bool operator==(const FixData&) const = default;
};

FixData fixed_counts(const LinearSpace& space, const grp::Permutation& g);

struct Collinear {
  std::vector<std::uint32_t> fixed_points;
};

/// Fixed points of all of `elements` with the induced lines (intersections of
/// size >= 2), relabelled 0..m-1 in increasing order; Collinear when the fixed
/// points lie on one line.
std::variant<LinearSpace, Collinear> fixed_structure(const LinearSpace& space,
                                                     std::span<const grp::Permutation> elements);
std::variant<LinearSpace, Collinear> fixed_structure(const LinearSpace& space, const grp::Subgroup& sub);

/// Random linear space by greedy pair covering; every pair ends up on exactly
/// one line and no line contains all points (for v >= 3).
LinearSpace random_linear_space(std::uint32_t v, std::mt19937_64& rng);

}  // namespace ltls::ls
