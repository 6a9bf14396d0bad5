#include "ltls/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "ltls/error.hpp"

namespace ltls::grp {

// ---------------------------------------------------------------------------
// ElementTable

std::uint64_t ElementTable::hash(std::span<const Point> images) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : images) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h ^ (h >> 29);
}

void ElementTable::insert_slot(ElementId id) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash((*this)[id]) & mask;
  while (slots_[s] != 0) s = (s + 1) & mask;
  slots_[s] = id + 1;
}

void ElementTable::rebuild_index() {
  std::size_t cap = 16;
  while (cap < 2 * count_ + 2) cap <<= 1;
  slots_.assign(cap, 0);
  for (std::size_t i = 0; i < count_; ++i) insert_slot(static_cast<ElementId>(i));
}

void ElementTable::push(std::span<const Point> images) {
  flat_.insert(flat_.end(), images.begin(), images.end());
  ++count_;
  if (2 * count_ + 2 > slots_.size()) {
    rebuild_index();
  } else {
    insert_slot(static_cast<ElementId>(count_ - 1));
  }
}

std::optional<ElementId> ElementTable::find(std::span<const Point> images) const {
  if (images.size() != degree_ || slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(images) & mask; slots_[s] != 0; s = (s + 1) & mask) {
    const ElementId id = slots_[s] - 1;
    auto cand = (*this)[id];
    if (std::equal(cand.begin(), cand.end(), images.begin())) return id;
  }
  return std::nullopt;
}

ElementTable ElementTable::closure(std::size_t degree, std::span<const Permutation> generators, std::size_t cap,
                                   std::size_t expected_order) {
  if (degree > kMaxDegree) throw Error(ErrorCode::DomainTooLarge, "degree exceeds 65535");
  ElementTable t;
  t.degree_ = degree;
  if (expected_order > 0 && expected_order <= cap) t.flat_.reserve(expected_order * degree);
  t.rebuild_index();

  std::vector<Point> cur(degree), next(degree);
  std::iota(cur.begin(), cur.end(), Point{0});
  t.push(cur);
  for (std::size_t i = 0; i < t.count_; ++i) {
    auto e = t[i];
    std::copy(e.begin(), e.end(), cur.begin());
    for (const auto& g : generators) {
      if (g.degree() != degree) throw Error(ErrorCode::DomainMismatch, "generator degree differs from group degree");
      for (std::size_t x = 0; x < degree; ++x) next[x] = g(cur[x]);
      if (t.find(next)) continue;
      if (t.count_ >= cap) {
        throw Error(ErrorCode::EnumerationCapExceeded, "group has more than " + std::to_string(cap) + " elements");
      }
      t.push(next);
    }
  }

  // Sort lexicographically so element ids are independent of generator order.
  std::vector<ElementId> order(t.count_);
  std::iota(order.begin(), order.end(), ElementId{0});
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    auto x = t[a];
    auto y = t[b];
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::vector<Point> sorted;
  sorted.reserve(t.flat_.size());
  for (auto id : order) {
    auto e = t[id];
    sorted.insert(sorted.end(), e.begin(), e.end());
  }
  t.flat_ = std::move(sorted);
  t.flat_.shrink_to_fit();
  t.rebuild_index();
  return t;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, BigInt order,
                     std::shared_ptr<const ElementTable> elements)
    : degree_(degree), generators_(std::move(generators)), order_(std::move(order)), elements_(std::move(elements)) {}

PermGroup PermGroup::enumerate(std::size_t degree, std::vector<Permutation> generators, std::size_t cap,
                               std::size_t expected_order) {
  auto table = std::make_shared<const ElementTable>(ElementTable::closure(degree, generators, cap, expected_order));
  BigInt order = table->size();
  return PermGroup(degree, std::move(generators), std::move(order), std::move(table));
}

PermGroup PermGroup::generators_only(std::size_t degree, std::vector<Permutation> generators, BigInt order) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorCode::DomainMismatch, "generator degree differs from group degree");
  }
  return PermGroup(degree, std::move(generators), std::move(order), nullptr);
}

const ElementTable& PermGroup::elements() const {
  if (!elements_) throw Error(ErrorCode::NotEnumerated, "group was built in generators-only mode");
  return *elements_;
}

ElementId PermGroup::lookup(std::span<const Point> images) const {
  auto id = elements().find(images);
  if (!id) throw Error(ErrorCode::InvalidPermutation, "product left the group");
  return *id;
}

ElementId PermGroup::multiply(ElementId a, ElementId b) const {
  thread_local std::vector<Point> buf;
  const auto& t = elements();
  auto x = t[a];
  auto y = t[b];
  buf.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = y[x[i]];
  return lookup(buf);
}

ElementId PermGroup::inverse(ElementId a) const {
  thread_local std::vector<Point> buf;
  auto x = elements()[a];
  buf.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) buf[x[i]] = static_cast<Point>(i);
  return lookup(buf);
}

ElementId PermGroup::conjugate(ElementId h, ElementId g) const {
  // (g^-1 h g)(x) = g(h(g^-1(x))); index by y = g^-1(x), i.e. x = g(y).
  thread_local std::vector<Point> buf;
  const auto& t = elements();
  auto hh = t[h];
  auto gg = t[g];
  buf.resize(degree_);
  for (std::size_t y = 0; y < degree_; ++y) buf[gg[y]] = gg[hh[y]];
  return lookup(buf);
}

std::uint64_t PermGroup::element_order(ElementId a) const { return element(a).order(); }

std::vector<ElementId> PermGroup::generator_ids() const {
  std::vector<ElementId> ids;
  ids.reserve(generators_.size());
  for (const auto& g : generators_) ids.push_back(lookup(g.images()));
  return ids;
}

// ---------------------------------------------------------------------------
// Subgroup

namespace {

std::vector<ElementId> close_ids(const PermGroup& parent, std::span<const ElementId> gens) {
  std::vector<ElementId> members{PermGroup::identity()};
  std::unordered_set<ElementId> seen{PermGroup::identity()};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto g : gens) {
      const ElementId n = parent.multiply(members[i], g);
      if (seen.insert(n).second) members.push_back(n);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Greedy generating set: add any member missing from the current closure.
std::vector<ElementId> pick_generators(const PermGroup& parent, const std::vector<ElementId>& members) {
  if (members.size() == parent.size()) return parent.generator_ids();
  std::vector<ElementId> gens;
  std::vector<ElementId> span{PermGroup::identity()};
  for (auto m : members) {
    if (std::binary_search(span.begin(), span.end(), m)) continue;
    gens.push_back(m);
    span = close_ids(parent, gens);
    if (span.size() == members.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup::Subgroup(const PermGroup& parent, std::vector<ElementId> members, std::vector<ElementId> generators)
    : parent_(&parent), members_(std::move(members)), generators_(std::move(generators)) {}

Subgroup::Subgroup(const PermGroup& parent, std::vector<ElementId> members) : parent_(&parent) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != PermGroup::identity()) {
    throw Error(ErrorCode::InvalidPermutation, "subgroup must contain the identity");
  }
  members_ = std::move(members);
  generators_ = pick_generators(parent, members_);
}

Subgroup Subgroup::generated_by(const PermGroup& parent, std::span<const ElementId> generators) {
  std::vector<ElementId> gens;
  for (auto g : generators)
    if (g != PermGroup::identity()) gens.push_back(g);
  auto members = close_ids(parent, gens);
  return Subgroup(parent, std::move(members), std::move(gens));
}

Subgroup Subgroup::trivial(const PermGroup& parent) { return Subgroup(parent, {PermGroup::identity()}, {}); }

Subgroup Subgroup::whole(const PermGroup& parent) {
  std::vector<ElementId> all(parent.size());
  std::iota(all.begin(), all.end(), ElementId{0});
  return Subgroup(parent, std::move(all), parent.generator_ids());
}

bool Subgroup::contains(ElementId id) const { return std::binary_search(members_.begin(), members_.end(), id); }

PermGroup Subgroup::as_perm_group() const {
  std::vector<Permutation> gens;
  for (auto g : generators_) gens.push_back(parent_->element(g));
  return PermGroup::enumerate(parent_->degree(), std::move(gens), members_.size() + 1, members_.size());
}

// ---------------------------------------------------------------------------
// Classes and subgroup searches

std::vector<ElementId> involutions(const PermGroup& group) {
  std::vector<ElementId> out;
  const auto& t = group.elements();
  for (std::size_t i = 1; i < t.size(); ++i) {
    auto e = t[i];
    bool square_is_identity = true;
    for (std::size_t x = 0; x < e.size() && square_is_identity; ++x) square_is_identity = e[e[x]] == x;
    if (square_is_identity) out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

std::vector<ConjugacyClass> involution_class_sizes(const PermGroup& group) {
  const auto invs = involutions(group);
  const auto gens = group.generator_ids();
  std::unordered_set<ElementId> assigned;
  std::vector<ConjugacyClass> classes;
  for (auto rep : invs) {
    if (assigned.count(rep)) continue;
    std::vector<ElementId> cls{rep};
    assigned.insert(rep);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (auto g : gens) {
        const ElementId c = group.conjugate(cls[i], g);
        if (assigned.insert(c).second) cls.push_back(c);
      }
    }
    classes.push_back({rep, cls.size()});
  }
  return classes;
}

std::vector<Subgroup> dihedral_subgroups(const PermGroup& group, std::size_t order) {
  if (order < 2 || order % 2 != 0) throw Error(ErrorCode::InvalidQ, "dihedral order must be even");
  const std::size_t m = order / 2;
  const auto invs = involutions(group);
  std::set<std::vector<ElementId>> found;

  if (m == 1) {
    for (auto s : invs) found.insert({PermGroup::identity(), s});
  } else if (m == 2) {
    for (std::size_t i = 0; i < invs.size(); ++i) {
      for (std::size_t j = i + 1; j < invs.size(); ++j) {
        const ElementId rs = group.multiply(invs[i], invs[j]);
        if (rs != group.multiply(invs[j], invs[i])) continue;
        std::vector<ElementId> v{PermGroup::identity(), invs[i], invs[j], rs};
        std::sort(v.begin(), v.end());
        found.insert(std::move(v));
      }
    }
  } else {
    const auto& t = group.elements();
    for (std::size_t i = 1; i < t.size(); ++i) {
      const auto r = static_cast<ElementId>(i);
      if (group.element_order(r) != m) continue;
      // Visit each cyclic subgroup once, from its smallest generator.
      std::vector<ElementId> powers{PermGroup::identity()};
      bool canonical = true;
      for (std::size_t k = 1; k < m; ++k) {
        powers.push_back(group.multiply(powers.back(), r));
        if (std::gcd(k, m) == 1 && powers.back() < r) canonical = false;
      }
      if (!canonical) continue;
      const ElementId r_inv = powers[m - 1];
      for (auto s : invs) {
        if (group.multiply(group.multiply(s, r), s) != r_inv) continue;
        std::vector<ElementId> v = powers;
        for (auto p : powers) v.push_back(group.multiply(p, s));
        std::sort(v.begin(), v.end());
        found.insert(std::move(v));
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& members : found) out.emplace_back(group, members);
  return out;
}

namespace {

bool normalizes(const PermGroup& group, const Subgroup& sub, ElementId g) {
  for (auto h : sub.generators()) {
    if (!sub.contains(group.conjugate(h, g))) return false;
  }
  return true;
}

bool is_power_of(std::uint64_t n, std::uint64_t prime) {
  while (n % prime == 0) n /= prime;
  return n == 1;
}

}  // namespace

Subgroup sylow_subgroup(const PermGroup& group, std::uint64_t prime) {
  const auto& t = group.elements();
  if (!is_prime(prime) || group.order() % prime != 0) {
    throw Error(ErrorCode::PrimeDoesNotDivideOrder, std::to_string(prime) + " does not divide |G|");
  }
  BigInt n = group.order();
  std::size_t target = 1;
  while (n % prime == 0) {
    n /= prime;
    target *= prime;
  }

  // A t-subgroup H below a Sylow subgroup P has N_P(H) > H, so some t-element
  // g outside H normalizes H, and then H<g> is again a t-group.
  Subgroup h = Subgroup::trivial(group);
  while (h.order() < target) {
    bool grown = false;
    for (std::size_t i = 1; i < t.size() && !grown; ++i) {
      const auto g = static_cast<ElementId>(i);
      if (h.contains(g) || !is_power_of(group.element_order(g), prime) || !normalizes(group, h, g)) continue;
      auto gens = h.generators();
      gens.push_back(g);
      h = Subgroup::generated_by(group, gens);
      grown = true;
    }
    if (!grown) throw Error(ErrorCode::InvalidPermutation, "Sylow search stalled");
  }
  return h;
}

Subgroup normalizer(const PermGroup& group, const Subgroup& sub) {
  std::vector<ElementId> members;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (normalizes(group, sub, static_cast<ElementId>(i))) members.push_back(static_cast<ElementId>(i));
  }
  return Subgroup(group, std::move(members));
}

Subgroup centralizer(const PermGroup& group, const Subgroup& sub) {
  std::vector<ElementId> members;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto g = static_cast<ElementId>(i);
    bool commutes = true;
    for (auto h : sub.generators()) {
      if (group.multiply(g, h) != group.multiply(h, g)) {
        commutes = false;
        break;
      }
    }
    if (commutes) members.push_back(g);
  }
  return Subgroup(group, std::move(members));
}

bool conjugates_intersect_trivially(const PermGroup& group, const Subgroup& sub) {
  const auto& members = sub.members();
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto g = static_cast<ElementId>(i);
    std::size_t inside = 0;
    for (std::size_t j = 1; j < members.size(); ++j) inside += sub.contains(group.conjugate(members[j], g));
    if (inside != 0 && inside != members.size() - 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Orbits and orbitals

std::vector<Point> orbit(const PermGroup& group, Point start) {
  std::vector<Point> out{start};
  std::vector<bool> seen(group.degree(), false);
  seen[start] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : group.generators()) {
      const Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const PermGroup& group) {
  return group.degree() == 0 || orbit(group, 0).size() == group.degree();
}

OrbitalPartition::OrbitalPartition(std::size_t degree, std::vector<std::uint32_t> block_of_pair)
    : degree_(degree), block_of_pair_(std::move(block_of_pair)) {
  std::uint32_t count = 0;
  for (auto b : block_of_pair_) count = std::max(count, b + 1);
  blocks_.resize(count);
  for (std::size_t code = 0; code < block_of_pair_.size(); ++code) {
    blocks_[block_of_pair_[code]].push_back(static_cast<std::uint32_t>(code));
  }
}

bool OrbitalPartition::is_diagonal_block(std::size_t block) const {
  for (auto code : blocks_[block]) {
    if (code / degree_ != code % degree_) return false;
  }
  return true;
}

OrbitalPartition orbitals(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n > kMaxOrbitalDomain) throw Error(ErrorCode::DomainTooLarge, "orbitals need at most 2000 points");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> block(n * n, kUnset);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> queue;
  for (std::size_t code = 0; code < n * n; ++code) {
    if (block[code] != kUnset) continue;
    block[code] = next;
    queue.assign(1, static_cast<std::uint32_t>(code));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t i = queue[qi] / n, j = queue[qi] % n;
      for (const auto& g : group.generators()) {
        const std::size_t img = std::size_t{g(i)} * n + g(j);
        if (block[img] == kUnset) {
          block[img] = next;
          queue.push_back(static_cast<std::uint32_t>(img));
        }
      }
    }
    ++next;
  }
  return OrbitalPartition(n, std::move(block));
}

bool is_exceptional(const PermGroup& group, const PermGroup& normal_sub) {
  if (group.degree() != normal_sub.degree()) throw Error(ErrorCode::DomainMismatch, "G and B act on different domains");
  for (const auto& b : normal_sub.generators()) {
    if (group.is_enumerated() && !group.contains(b)) throw Error(ErrorCode::NotNormal, "B is not contained in G");
    for (const auto& g : group.generators()) {
      if (!normal_sub.contains(conjugate(b, g))) throw Error(ErrorCode::NotNormal, "B is not normal in G");
    }
  }
  if (!is_transitive(normal_sub)) throw Error(ErrorCode::BNotTransitive, "B is not transitive on the domain");

  const auto og = orbitals(group);
  const auto ob = orbitals(normal_sub);
  // Each G-orbital is a union of B-orbitals, so a B-orbital is common exactly
  // when it fills the G-orbital containing it.
  for (std::size_t blk = 0; blk < ob.block_count(); ++blk) {
    if (ob.is_diagonal_block(blk)) continue;
    const auto& pairs = ob.blocks()[blk];
    const auto gblock = og.block_of(pairs.front() / og.degree(), pairs.front() % og.degree());
    if (og.blocks()[gblock].size() == pairs.size()) return false;
  }
  return true;
}

}  // namespace ltls::grp
