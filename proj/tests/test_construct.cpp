#include <doctest.h>

#include <algorithm>
#include <set>

#include "ltls/construct.hpp"
#include "ltls/error.hpp"
#include "oracles.hpp"

using namespace ltls;
using namespace ltls::construct;

TEST_CASE("projective planes") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const auto c = pg2(q);
    const auto rep = ls::validate(c.space);
    CHECK(oracle::valid_space(c.space.v(), c.space.lines()));
    REQUIRE(rep.params);
    const auto n = q * q + q + 1;
    CHECK(*rep.params == ls::RegularParams{n, n, q + 1, q + 1});
    CHECK(c.group.order() == oracle::psl3_order(q));
  }
  CHECK_THROWS_AS(pg2(6), Error);
}

TEST_CASE("Witt-Bose-Shrikhande spaces") {
  const auto c = wbs(8);
  const auto rep = ls::validate(c.space);
  CHECK(rep.nontrivial);
  REQUIRE(rep.params);
  CHECK(*rep.params == ls::RegularParams{63, 28, 4, 9});
  CHECK(c.group.degree() == 28);
  CHECK(c.group.order() == 504);
  // Faithful action: the conjugation action has as many elements as PSL(2,8).
  CHECK(c.group.size() == 504);

  // Flag orbit of (point 0, first line through it) under every element.
  std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> flags;
  const auto& line0 = c.space.lines()[c.space.lines_through_points()[0][0]];
  for (std::size_t i = 0; i < c.group.size(); ++i) {
    const auto g = c.group.element(static_cast<grp::ElementId>(i));
    std::vector<std::uint32_t> img;
    for (auto x : line0) img.push_back(g(x));
    std::sort(img.begin(), img.end());
    flags.emplace(g(0), img);
  }
  CHECK(flags.size() == 28 * 9);
  CHECK(ls::transitivity(c.space, c.group).flag);

  const auto c16 = wbs(16, {grp::kDefaultEnumerationCap, false});
  const auto r16 = ls::validate(c16.space);
  REQUIRE(r16.params);
  CHECK(*r16.params == ls::RegularParams{255, 120, 8, 17});

  try {
    wbs(4);
    FAIL("expected TooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooSmall);
    CHECK(std::string(e.what()).find("a >= 3 required") != std::string::npos);
  }
  CHECK_THROWS_AS(wbs(9), Error);
  CHECK_THROWS_AS(wbs(12), Error);
}

TEST_CASE("involution fixed-line bounds") {
  auto check_space = [](const Construction& c) {
    const auto p = *c.space.regular_params();
    std::size_t count = 0;
    for (auto inv : grp::involutions(c.group)) {
      const auto [dp, dl] = oracle::fixed_points_lines(c.space, c.group.element(inv));
      CHECK(dl * p.k >= p.v - 1);
      CHECK((dl >= dp || p.v == p.k * p.k));
      ++count;
    }
    return count;
  };
  CHECK(check_space(pg2(2)) == 21);
  CHECK(check_space(pg2(3)) == 117);
  CHECK(check_space(pg2(4)) == 315);
  CHECK(check_space(wbs(8)) == 63);
}
