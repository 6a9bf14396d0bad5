#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ltls/gf.hpp"
#include "ltls/group.hpp"

namespace ltls::grp {

/// An invertible n x n matrix over GF(q) taken up to scalars. The stored
/// representative is scaled so its first nonzero entry (row-major) is 1.
class ProjectiveMatrix {
 public:
  /// Row-major field codes. Throws InvalidPermutation for singular input.
  ProjectiveMatrix(gf::FieldPtr field, unsigned dim, std::vector<std::uint64_t> entries);

  static ProjectiveMatrix diagonal(const gf::FieldPtr& field, std::span<const std::uint64_t> diag);
  /// I + t E_{row,col}.
  static ProjectiveMatrix transvection(const gf::FieldPtr& field, unsigned dim, unsigned row, unsigned col,
                                       std::uint64_t t);

  unsigned dim() const { return dim_; }
  const gf::FieldPtr& field() const { return field_; }
  std::uint64_t entry(unsigned row, unsigned col) const { return entries_[row * dim_ + col]; }
  const std::vector<std::uint64_t>& entries() const { return entries_; }
  /// Determinant of the canonical representative.
  std::uint64_t determinant() const;

  ProjectiveMatrix operator*(const ProjectiveMatrix& rhs) const;
  bool operator==(const ProjectiveMatrix& rhs) const { return dim_ == rhs.dim_ && entries_ == rhs.entries_; }

  /// Row vector times matrix (not normalized).
  std::vector<std::uint64_t> apply(std::span<const std::uint64_t> row) const;

 private:
  gf::FieldPtr field_;
  unsigned dim_;
  std::vector<std::uint64_t> entries_;
};

/// Points of PG(n-1, q): nonzero vectors with first nonzero coordinate 1,
/// numbered in lexicographic order of their coordinate codes.
class ProjectiveSpace {
 public:
  ProjectiveSpace(gf::FieldPtr field, unsigned dim);

  const gf::FieldPtr& field() const { return field_; }
  unsigned dim() const { return dim_; }
  std::size_t size() const { return count_; }
  std::span<const std::uint64_t> coords(std::size_t point) const { return {coords_.data() + point * dim_, dim_}; }
  /// Scales `vec` to canonical form and returns its point number.
  std::size_t index_of(std::span<const std::uint64_t> vec) const;

  Permutation permutation_of(const ProjectiveMatrix& m) const;
  /// Coordinatewise x -> x^(p^power); a collineation, not a matrix action.
  Permutation field_automorphism(unsigned power = 1) const;

 private:
  gf::FieldPtr field_;
  unsigned dim_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> coords_;
  std::vector<std::uint32_t> index_;  // by base-q code of canonical vector
};

struct GroupBuildOptions {
  std::size_t cap = kDefaultEnumerationCap;
  bool enumerate = true;
};

/// A projective linear group together with its natural action.
struct ClassicalGroup {
  std::uint64_t q;
  gf::FieldPtr field;
  ProjectiveSpace space;
  std::vector<ProjectiveMatrix> generator_matrices;
  PermGroup group;
};

BigInt psl2_order(std::uint64_t q);
BigInt pgl2_order(std::uint64_t q);
BigInt psl3_order(std::uint64_t q);

/// Throws InvalidQ when q is not a prime power.
gf::FieldPtr field_for_order(std::uint64_t q);

ClassicalGroup psl2(std::uint64_t q, const GroupBuildOptions& opts = {});
ClassicalGroup pgl2(std::uint64_t q, const GroupBuildOptions& opts = {});
ClassicalGroup psl3(std::uint64_t q, const GroupBuildOptions& opts = {});

/// Projective image of diag(a^-2, a, a), a primitive; order (q-1)/gcd(q-1,3).
ProjectiveMatrix subgroup_D_generator(const gf::FieldPtr& field);
Subgroup subgroup_D(const ClassicalGroup& psl3_group);

}  // namespace ltls::grp
