#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ltls/arith.hpp"
#include "ltls/perm.hpp"

namespace ltls::grp {

inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;

/// Index of an element inside an enumerated group's element table.
using ElementId = std::uint32_t;

/// Flat, lexicographically sorted storage of every element of an enumerated
/// group, with an open-addressing hash index for membership lookups.
/// Element 0 is always the identity (the lexicographic minimum).
class ElementTable {
 public:
  /// Closure of <generators> by breadth-first right multiplication.
  static ElementTable closure(std::size_t degree, std::span<const Permutation> generators, std::size_t cap,
                              std::size_t expected_order = 0);

  std::size_t size() const { return count_; }
  std::size_t degree() const { return degree_; }
  std::span<const Point> operator[](std::size_t i) const { return {flat_.data() + i * degree_, degree_}; }
  std::optional<ElementId> find(std::span<const Point> images) const;

 private:
  std::uint64_t hash(std::span<const Point> images) const;
  void push(std::span<const Point> images);
  void insert_slot(ElementId id);
  void rebuild_index();

  std::size_t degree_ = 0;
  std::size_t count_ = 0;
  std::vector<Point> flat_;
  std::vector<std::uint32_t> slots_;  // 0 = empty, otherwise id + 1
};

class PermGroup {
 public:
  /// Enumerates every element; throws EnumerationCapExceeded past `cap`.
  static PermGroup enumerate(std::size_t degree, std::vector<Permutation> generators,
                             std::size_t cap = kDefaultEnumerationCap, std::size_t expected_order = 0);
  /// Generators plus a known order; element-level queries throw NotEnumerated.
  static PermGroup generators_only(std::size_t degree, std::vector<Permutation> generators, BigInt order);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }
  bool is_enumerated() const { return elements_ != nullptr; }

  const ElementTable& elements() const;
  std::size_t size() const { return elements().size(); }
  Permutation element(ElementId id) const { return Permutation(elements()[id]); }
  std::optional<ElementId> index_of(std::span<const Point> images) const { return elements().find(images); }
  std::optional<ElementId> index_of(const Permutation& p) const { return index_of(p.images()); }
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  static constexpr ElementId identity() { return 0; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;
  /// g^-1 h g.
  ElementId conjugate(ElementId h, ElementId g) const;
  std::uint64_t element_order(ElementId a) const;

  /// Element ids of the generators (enumerated groups only).
  std::vector<ElementId> generator_ids() const;

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, BigInt order,
            std::shared_ptr<const ElementTable> elements);
  ElementId lookup(std::span<const Point> images) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  BigInt order_;
  std::shared_ptr<const ElementTable> elements_;
};

/// A subgroup of an enumerated group, stored as a sorted list of element ids.
/// The parent must outlive the subgroup.
class Subgroup {
 public:
  /// `members` must already be closed under multiplication.
  Subgroup(const PermGroup& parent, std::vector<ElementId> members);

  static Subgroup generated_by(const PermGroup& parent, std::span<const ElementId> generators);
  static Subgroup trivial(const PermGroup& parent);
  static Subgroup whole(const PermGroup& parent);

  const PermGroup& parent() const { return *parent_; }
  const std::vector<ElementId>& members() const { return members_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  std::size_t order() const { return members_.size(); }
  bool contains(ElementId id) const;

  /// The subgroup as a permutation group in its own right.
  PermGroup as_perm_group() const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  Subgroup(const PermGroup& parent, std::vector<ElementId> members, std::vector<ElementId> generators);

  const PermGroup* parent_;
  std::vector<ElementId> members_;
  std::vector<ElementId> generators_;
};

struct ConjugacyClass {
  ElementId representative;
  std::size_t size;
};

/// Conjugacy classes of elements of order 2, representatives ascending.
std::vector<ConjugacyClass> involution_class_sizes(const PermGroup& group);

std::vector<ElementId> involutions(const PermGroup& group);

/// All dihedral subgroups of the given (even) order; for order 4 these are
/// the Klein four-subgroups. Sorted by member list.
std::vector<Subgroup> dihedral_subgroups(const PermGroup& group, std::size_t order);

/// One subgroup of order |G|_t, grown greedily through normalizers.
Subgroup sylow_subgroup(const PermGroup& group, std::uint64_t prime);
Subgroup normalizer(const PermGroup& group, const Subgroup& sub);
Subgroup centralizer(const PermGroup& group, const Subgroup& sub);

/// True iff every conjugate H^g equals H or meets H only in the identity.
bool conjugates_intersect_trivially(const PermGroup& group, const Subgroup& sub);

std::vector<Point> orbit(const PermGroup& group, Point start);
bool is_transitive(const PermGroup& group);

inline constexpr std::size_t kMaxOrbitalDomain = 2000;

/// Orbits of the group on ordered pairs (i, j), encoded as i * degree + j.
class OrbitalPartition {
 public:
  OrbitalPartition(std::size_t degree, std::vector<std::uint32_t> block_of_pair);

  std::size_t degree() const { return degree_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::uint32_t>>& blocks() const { return blocks_; }
  std::uint32_t block_of(std::size_t i, std::size_t j) const { return block_of_pair_[i * degree_ + j]; }
  /// Whether a block consists of diagonal pairs only.
  bool is_diagonal_block(std::size_t block) const;

 private:
  std::size_t degree_;
  std::vector<std::uint32_t> block_of_pair_;
  std::vector<std::vector<std::uint32_t>> blocks_;  // ascending by first pair
};

/// Generator-driven orbit computation; throws DomainTooLarge past 2000 points.
OrbitalPartition orbitals(const PermGroup& group);

/// (G, B, domain) is exceptional when the diagonal is the only orbital that
/// B and G share. B must be an enumerated normal subgroup of G and transitive.
bool is_exceptional(const PermGroup& group, const PermGroup& normal_sub);

}  // namespace ltls::grp
