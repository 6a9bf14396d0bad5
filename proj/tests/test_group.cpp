#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ltls/classical.hpp"
#include "ltls/error.hpp"
#include "ltls/group.hpp"
#include "oracles.hpp"

using namespace ltls;
using namespace ltls::grp;

namespace {

Permutation perm(std::vector<Point> images) { return Permutation(std::move(images)); }

PermGroup sym3() { return PermGroup::enumerate(3, {perm({1, 0, 2}), perm({1, 2, 0})}); }
PermGroup alt3() { return PermGroup::enumerate(3, {perm({1, 2, 0})}); }

}  // namespace

TEST_CASE("permutations compose left to right") {
  const auto a = perm({1, 2, 0});
  const auto b = perm({1, 0, 2});
  const auto ab = a * b;
  for (Point x = 0; x < 3; ++x) CHECK(ab(x) == b(a(x)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(perm({1, 0, 3, 4, 2}).order() == 6);
  CHECK(perm({0, 1, 3, 2}).fixed_point_count() == 2);
  CHECK_THROWS_AS(perm({0, 0, 1}), Error);
  CHECK_THROWS_AS(perm({0, 3}), Error);
}

TEST_CASE("enumeration and element ids") {
  const auto g = sym3();
  CHECK(g.size() == 6);
  CHECK(g.element(PermGroup::identity()).is_identity());
  for (ElementId a = 0; a < 6; ++a) {
    CHECK(g.multiply(a, g.inverse(a)) == PermGroup::identity());
    for (ElementId b = 0; b < 6; ++b) {
      CHECK(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
      const auto conj = g.element(a).inverse() * g.element(b) * g.element(a);
      CHECK(g.element(g.conjugate(b, a)) == conj);
    }
  }
  CHECK_THROWS_AS(PermGroup::enumerate(6, {perm({1, 2, 3, 4, 5, 0}), perm({1, 0, 2, 3, 4, 5})}, 100), Error);
  const auto lazy = PermGroup::generators_only(3, {perm({1, 2, 0})}, 3);
  CHECK_FALSE(lazy.is_enumerated());
  CHECK_THROWS_AS(lazy.elements(), Error);
}

TEST_CASE("classical group orders") {
  CHECK(psl2_order(8) == 504);
  CHECK(pgl2_order(5) == 120);
  CHECK(psl3_order(2) == 168);
  CHECK(psl3_order(4) == 20160);
  CHECK(psl2_order(64) == 262080);

  const auto g2 = psl3(2);
  CHECK(g2.group.size() == 168);
  CHECK(g2.group.degree() == 7);
  const auto g4 = psl3(4);
  CHECK(g4.group.size() == 20160);
  CHECK(g4.group.degree() == 21);
  CHECK(g4.group.size() / 168 == 120);

  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    CHECK(psl2(q).group.order() == oracle::psl2_order(q));
    CHECK(pgl2(q).group.size() == oracle::pgl2_order(q));
    CHECK(psl2(q).group.size() == oracle::psl2_order(q));
  }
  CHECK_THROWS_AS(psl2(6), Error);
  CHECK_THROWS_AS(psl3(9, {1000, true}), Error);
  const auto lazy = psl3(9, {1000, false});
  CHECK(lazy.group.order() == psl3_order(9));
  CHECK(lazy.group.degree() == 91);
}

TEST_CASE("involution classes") {
  auto one_class = [](const PermGroup& g) {
    auto classes = involution_class_sizes(g);
    REQUIRE(classes.size() == 1);
    return classes.front().size;
  };
  CHECK(one_class(psl3(2).group) == 21);
  CHECK(one_class(psl3(3).group) == 117);
  CHECK(one_class(psl2(64).group) == 4095);
  // PGL(2,q), q odd, has two involution classes: inside and outside PSL(2,q).
  const auto pg = pgl2(5).group;
  const auto classes = involution_class_sizes(pg);
  CHECK(classes.size() == 2);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size;
  CHECK(total == involutions(pg).size());
  CHECK(total == oracle::count_involutions(pg));
}

TEST_CASE("dihedral subgroups") {
  const auto g8 = psl2(8).group;
  CHECK(dihedral_subgroups(g8, 18).size() == 28);
  CHECK(dihedral_subgroups(g8, 14).size() == 36);
  CHECK(dihedral_subgroups(psl2(4).group, 10).size() == 6);
  // Klein four-subgroups of A5: 5.
  CHECK(dihedral_subgroups(psl2(4).group, 4).size() == 5);
  for (const auto& d : dihedral_subgroups(g8, 18)) {
    CHECK(d.order() == 18);
    CHECK(oracle::is_dihedral(g8, d.members()));
  }
}

TEST_CASE("Sylow subgroups, normalizers, centralizers") {
  const auto g = psl3(2).group;
  const auto s7 = sylow_subgroup(g, 7);
  CHECK(s7.order() == 7);
  CHECK(normalizer(g, s7).order() == 21);
  CHECK(centralizer(g, Subgroup::whole(g)).order() == 1);
  CHECK(sylow_subgroup(g, 2).order() == 8);

  const auto a5 = psl2(5).group;
  const auto s5 = sylow_subgroup(a5, 5);
  CHECK(s5.order() == 5);
  CHECK(normalizer(a5, s5).order() == 10);
  CHECK(normalizer(a5, s5).order() == oracle::normalizer_order(a5, s5.members()));
  CHECK(centralizer(a5, s5).order() == 5);
  CHECK_THROWS_AS(sylow_subgroup(a5, 7), Error);
}

TEST_CASE("subgroup D") {
  CHECK(subgroup_D(psl3(4)).order() == 1);
  const auto g5 = psl3(5);
  const auto d5 = subgroup_D(g5);
  CHECK(d5.order() == 4);
  CHECK(conjugates_intersect_trivially(g5.group, d5));
  CHECK(conjugates_intersect_trivially(g5.group, Subgroup::trivial(g5.group)));
  const auto g2 = psl3(2).group;
  CHECK_FALSE(conjugates_intersect_trivially(g2, sylow_subgroup(g2, 2)));
  CHECK(conjugates_intersect_trivially(g2, sylow_subgroup(g2, 7)));
}

TEST_CASE("orbitals") {
  CHECK(orbitals(sym3()).block_count() == 2);
  const auto a3 = orbitals(alt3());
  CHECK(a3.block_count() == 3);
  CHECK(a3.is_diagonal_block(a3.block_of(0, 0)));
  CHECK(a3.block_of(0, 1) != a3.block_of(1, 0));
  const auto triv = orbitals(PermGroup::enumerate(2, {}));
  CHECK(triv.block_count() == 4);
}

TEST_CASE("exceptional triples") {
  CHECK(is_exceptional(sym3(), alt3()));
  CHECK_FALSE(is_exceptional(sym3(), sym3()));
  const auto c4 = PermGroup::enumerate(4, {perm({1, 2, 3, 0})});
  CHECK_FALSE(is_exceptional(c4, c4));
  const auto c2 = PermGroup::enumerate(4, {perm({2, 3, 0, 1})});
  CHECK_THROWS_AS(is_exceptional(c4, c2), Error);
  // Not normal: a transposition subgroup of S3 is not normal (and not transitive).
  CHECK_THROWS_AS(is_exceptional(sym3(), PermGroup::enumerate(3, {perm({1, 0, 2})})), Error);
}

TEST_CASE("is_exceptional agrees with the brute-force scan") {
  std::mt19937_64 rng(20240611);
  std::size_t tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    auto pair = oracle::random_group_pair(rng);
    if (!pair) continue;
    const auto& [g, b] = *pair;
    if (!is_transitive(b)) continue;
    CHECK(is_exceptional(g, b) == oracle::exceptional_brute_force(g, b));
    ++tested;
  }
  CHECK(tested >= 50);
}
