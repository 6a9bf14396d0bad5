#include <doctest.h>

#include <random>

#include "ltls/classical.hpp"
#include "ltls/construct.hpp"
#include "ltls/error.hpp"
#include "ltls/linspace.hpp"
#include "oracles.hpp"

using namespace ltls;
using namespace ltls::ls;

namespace {

LinearSpace fano() { return LinearSpace(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}); }

LinearSpace near_pencil() { return LinearSpace(5, {{0, 1, 2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }

}  // namespace

TEST_CASE("validation") {
  const auto f = validate(fano());
  CHECK(f.valid);
  CHECK(f.nontrivial);
  REQUIRE(f.params);
  CHECK(*f.params == RegularParams{7, 7, 3, 3});

  const auto k4 = validate(LinearSpace(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(k4.valid);
  CHECK_FALSE(k4.nontrivial);

  const auto broken = validate(LinearSpace(4, {{0, 1, 2}, {0, 1, 3}}));
  CHECK_FALSE(broken.valid);
  REQUIRE_FALSE(broken.violations.empty());
  CHECK(broken.violations.front().a == 0);
  CHECK(broken.violations.front().b == 1);
  CHECK(broken.violations.front().lines == 2);

  CHECK_THROWS_AS(LinearSpace(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(LinearSpace(3, {{0, 0, 1}}), Error);
  // Canonical order is independent of input order.
  CHECK(LinearSpace(3, {{2, 1}, {0, 2}, {1, 0}}) == LinearSpace(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("Fisher arithmetic") {
  const auto a = fisher_regular(7, 3);
  CHECK(a.feasible);
  CHECK(a.b == 7);
  CHECK(a.r == 3);
  const auto b = fisher_regular(2080, 12);
  CHECK(b.feasible);
  CHECK(b.b == 32760);
  CHECK(b.r == 189);
  const auto c = fisher_regular(120, 17);
  CHECK_FALSE(c.feasible);
  CHECK(c.r == Rational(119, 16));
  CHECK_THROWS_AS(fisher_regular(3, 3), Error);

  CHECK(fisher_general(fano()));
  CHECK(fisher_general(near_pencil()));
  CHECK(near_pencil().b() == 5);
  CHECK_THROWS_AS(fisher_general(LinearSpace(4, {{0, 1, 2}, {0, 1, 3}})), Error);
}

TEST_CASE("random spaces are valid and satisfy Fisher") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto v = static_cast<std::uint32_t>(3 + rng() % 10);
    const auto s = random_linear_space(v, rng);
    CHECK(oracle::valid_space(v, s.lines()));
    CHECK(validate(s).valid);
    CHECK(fisher_general(s));
  }
}

TEST_CASE("transitivity") {
  const auto pg = construct::pg2(2);
  CHECK(pg.space == fano());
  const auto tp = transitivity(fano(), pg.group);
  CHECK(tp.point);
  CHECK(tp.line);
  CHECK(tp.flag);
  CHECK(tp.two_transitive);

  const auto id = grp::PermGroup::generators_only(7, {grp::Permutation::identity(7)}, 1);
  const auto ti = transitivity(fano(), id);
  CHECK_FALSE(ti.point);
  CHECK_FALSE(ti.line);
  CHECK(ti.point_orbits == 7);
  CHECK(ti.line_orbits == 7);
  CHECK(ti.flag_orbits == 21);

  const auto w = construct::wbs(8);
  const auto tw = transitivity(w.space, w.group);
  CHECK(tw.point);
  CHECK(tw.line);
}

TEST_CASE("transitivity is invariant under relabelling") {
  std::mt19937_64 rng(11);
  const auto pg = construct::pg2(3);
  const auto base = transitivity(pg.space, pg.group);
  for (int trial = 0; trial < 5; ++trial) {
    const auto pi = oracle::random_perm(pg.space.v(), rng);
    std::vector<Line> lines;
    for (const auto& l : pg.space.lines()) {
      Line m;
      for (auto x : l) m.push_back(pi(x));
      lines.push_back(m);
    }
    std::vector<grp::Permutation> gens;
    for (const auto& g : pg.group.generators()) gens.push_back(pi.inverse() * g * pi);
    const auto t = transitivity(LinearSpace(pg.space.v(), lines),
                                grp::PermGroup::generators_only(pg.space.v(), gens, pg.group.order()));
    CHECK(t.point_orbits == base.point_orbits);
    CHECK(t.line_orbits == base.line_orbits);
    CHECK(t.flag_orbits == base.flag_orbits);
    CHECK(t.pair_orbits == base.pair_orbits);
  }
}

TEST_CASE("fixed counts and fixed structures") {
  const auto pg = construct::pg2(2);
  const auto& g = pg.group;
  for (auto inv : grp::involutions(g)) {
    const auto e = g.element(inv);
    const auto fd = fixed_counts(pg.space, e);
    CHECK(fd == FixData{3, 3});
    const auto [dp, dl] = oracle::fixed_points_lines(pg.space, e);
    CHECK(fd.d_p == dp);
    CHECK(fd.d_l == dl);
  }
  const auto id = grp::Permutation::identity(7);
  CHECK(fixed_counts(pg.space, id) == FixData{7, 7});

  const grp::Permutation elation = g.element(grp::involutions(g).front());
  const std::vector<grp::Permutation> one{elation};
  const auto fs = fixed_structure(pg.space, one);
  REQUIRE(std::holds_alternative<Collinear>(fs));
  CHECK(std::get<Collinear>(fs).fixed_points.size() == 3);

  const auto triv = fixed_structure(pg.space, grp::Subgroup::trivial(g));
  REQUIRE(std::holds_alternative<LinearSpace>(triv));
  CHECK(std::get<LinearSpace>(triv) == pg.space);

  // A Baer involution of PG(2,4) fixes a Fano subplane.
  const auto pg4 = construct::pg2(4);
  const auto baer = construct::pg2_frobenius(4);
  CHECK(is_automorphism(pg4.space, baer));
  CHECK_FALSE(pg4.group.contains(baer));
  CHECK(fixed_counts(pg4.space, baer) == FixData{7, 7});
  const std::vector<grp::Permutation> b{baer};
  const auto sub = fixed_structure(pg4.space, b);
  REQUIRE(std::holds_alternative<LinearSpace>(sub));
  const auto rep = validate(std::get<LinearSpace>(sub));
  CHECK(rep.valid);
  REQUIRE(rep.params);
  CHECK(*rep.params == RegularParams{7, 7, 3, 3});

  // Every involution inside PSL(3,4) is an elation.
  for (auto inv : grp::involutions(pg4.group)) CHECK(fixed_counts(pg4.space, pg4.group.element(inv)) == FixData{5, 5});

  const grp::Permutation bad({1, 0, 2, 3, 4, 5, 6});
  CHECK_FALSE(is_automorphism(pg.space, bad));
  CHECK_THROWS_AS(fixed_counts(pg.space, bad), Error);
  CHECK_THROWS_AS(fixed_counts(pg.space, grp::Permutation::identity(5)), Error);
}
