#include <doctest.h>

#include <numeric>
#include <set>

#include "ltls/classical.hpp"
#include "ltls/error.hpp"
#include "ltls/lemmas.hpp"

using namespace ltls;
using namespace ltls::lemmas;

namespace {

std::string w(const EliminationReport& r, const std::string& key) {
  auto it = r.witnesses.find(key);
  REQUIRE_MESSAGE(it != r.witnesses.end(), key);
  return to_string(it->second);
}

std::vector<BigInt> primes_of(std::uint64_t n) {
  std::vector<BigInt> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

}  // namespace

TEST_CASE("significant primes") {
  CHECK(significant_primes(7, 7).primes.empty());
  CHECK(significant_primes(28, 63).primes == std::vector<BigInt>{3});
  CHECK(significant_primes(2080, 32760).primes == std::vector<BigInt>{3, 7});
  // Both characterizations agree, against trial division of gcd(b, v-1).
  for (std::uint64_t v = 3; v <= 120; ++v)
    for (std::uint64_t k = 3; k * (k - 1) <= v - 1; ++k) {
      if ((v - 1) % (k - 1) || (v * (v - 1)) % (k * (k - 1))) continue;
      const auto b = v * (v - 1) / (k * (k - 1));
      const auto sp = significant_primes(v, b);
      CHECK(sp.agree);
      CHECK(sp.primes == primes_of(std::gcd(b, v - 1)));
    }
}

TEST_CASE("b = 2v and b = 3v/2 congruences") {
  CHECK(lemma_bdoublev(3, BRatio::Two).verdict == Verdict::Excluded);
  CHECK(lemma_bdoublev(65, BRatio::Two).verdict == Verdict::Survives);
  const auto r = lemma_bdoublev(25, BRatio::ThreeHalves);
  CHECK(r.verdict == Verdict::Excluded);
  CHECK(w(r, "offending_prime") == "5");
  CHECK(lemma_bdoublev(5, BRatio::ThreeHalves).verdict == Verdict::Survives);
  CHECK(lemma_bdoublev(2 * 31 * 17, BRatio::ThreeHalves).verdict == Verdict::Survives);
  CHECK(lemma_bdoublev(7, BRatio::ThreeHalves).verdict == Verdict::Excluded);
}

TEST_CASE("large prime lemma") {
  CandidateCase c;
  c.group_order = 20160;
  c.v = 120;
  const auto r = lemma_largeprime(c);
  CHECK(r.verdict == Verdict::Excluded);
  CHECK(w(r, "prime_power[17]") == "17");
  CHECK(w(r, "forced_k_min") == "17");
  CHECK(w(r, "fisher_k_max") == "11");

  CandidateCase fano;
  fano.group_order = 168;
  fano.v = 7;
  const auto f = lemma_largeprime(fano);
  CHECK(f.verdict == Verdict::Survives);
  CHECK(w(f, "smallest_surviving_k") == "3");

  CandidateCase q8;
  q8.group_order = grp::psl3_order(8);
  q8.v = torus_normalizer_v(8);
  q8.k_hint = 171;
  const auto e = lemma_largeprime(q8);
  CHECK(e.verdict == Verdict::Excluded);
  CHECK(w(e, "v-1") == "130815");
  CHECK(w(e, "k-1") == "170");
  CHECK(w(e, "(v-1) mod (k-1)") == "85");

  CandidateCase bad;
  bad.group_order = 100;
  bad.v = 7;
  bad.stabilizer_order = 3;
  CHECK_THROWS_AS(lemma_largeprime(bad), Error);
  CHECK_THROWS_AS(lemma_largeprime(CandidateCase{}), Error);
}

TEST_CASE("involution inequality") {
  const auto iv = invineq_interval(2080, 32760, 4095, 7);
  CHECK(iv.k_max == 4);
  CHECK(iv.k_min == 38);
  const auto r = lemma_invineq(2080, 32760, 4095, 7, BigInt(12));
  CHECK(r.verdict == Verdict::Excluded);
  CHECK(w(r, "k_max") == "4");

  const auto fano = invineq_interval(7, 7, 21, 9);
  CHECK(fano.k_min <= 3);
  CHECK(fano.k_max >= 3);
  CHECK(lemma_invineq(7, 7, 21, 9, BigInt(3)).verdict == Verdict::Survives);

  const auto deg = invineq_interval(13, 13, 5, 5);
  CHECK(deg.k_min == 1);
  CHECK(deg.k_max == 14);
  CHECK_THROWS_AS(invineq_interval(7, 7, 0, 9), Error);
}

TEST_CASE("index congruences") {
  // Any non-plane with an index-2 overgroup is excluded.
  CHECK(lemma_cong(28, 4, 2).verdict == Verdict::Excluded);
  CHECK(lemma_cong(7, 3, 7).verdict == Verdict::Survives);
  const auto q4 = lemma_cong(105, 5, 21);
  CHECK(q4.verdict == Verdict::Excluded);
  CHECK(w(q4, "b") == "546");
  CHECK_THROWS_AS(lemma_cong(105, 9, 21), Error);
  CHECK_THROWS_AS(lemma_cong(7, 3, 1), Error);

  const std::vector<BigInt> two{2};
  CHECK(corollary_supergroups(7, 3, two).verdict == Verdict::Excluded);
  const std::vector<BigInt> three{3};
  CHECK(corollary_supergroups(28, 4, three).verdict == Verdict::Excluded);
  CHECK(corollary_supergroups(7, 3, three).verdict != Verdict::Excluded);
  const std::vector<BigInt> several{7, 13};
  const auto s = corollary_supergroups(7, 3, several);
  CHECK(w(s, "c0") == "6");
}

TEST_CASE("k divides v") {
  CHECK(lemma_kdivv(120, 8).verdict == Verdict::Excluded);
  CHECK(lemma_kdivv(7, 3).verdict == Verdict::Survives);
  const auto r = lemma_kdivv(2080, 12);
  CHECK(r.verdict == Verdict::Survives);
  CHECK(w(r, "v mod k") == "4");
}

TEST_CASE("guillotine tilings") {
  const std::uint64_t areas[] = {2, 2, 4};
  const auto t = guillotine_tiling(2, 4, areas);
  REQUIRE(t);
  CHECK(t->size() == 3);
  const std::uint64_t odd[] = {3, 3, 3};
  CHECK(guillotine_tiling(3, 3, odd));
  const std::uint64_t none[] = {5, 4};
  CHECK_FALSE(guillotine_tiling(3, 3, none));
  // Every first cut needs a part of area 3 or 6.
  const std::uint64_t uncut[] = {4, 4, 1};
  CHECK_FALSE(guillotine_tiling(3, 3, uncut));
}

namespace {

void check_tiling(const BorelCandidate& c, std::uint64_t q) {
  const std::uint64_t areas[] = {q, q, q * q, q * q, q * q * q};
  std::vector<std::vector<int>> grid(c.r, std::vector<int>(c.k - 1, -1));
  std::set<std::size_t> used;
  for (const auto& cell : *c.tiling) {
    CHECK(cell.length * cell.width == areas[cell.item]);
    CHECK(used.insert(cell.item).second);
    REQUIRE(cell.x + cell.length <= c.r);
    REQUIRE(cell.y + cell.width <= c.k - 1);
    for (auto x = cell.x; x < cell.x + cell.length; ++x)
      for (auto y = cell.y; y < cell.y + cell.width; ++y) {
        CHECK(grid[x][y] == -1);
        grid[x][y] = static_cast<int>(cell.item);
      }
  }
  for (const auto& row : grid)
    for (auto v : row) CHECK(v != -1);
}

}  // namespace

TEST_CASE("Borel rectangle exclusion") {
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    CHECK(borel_rectangle_exclusion(q).verdict == Verdict::Excluded);
    for (const auto& c : borel_candidates(q)) {
      CHECK(c.r * (c.k - 1) == q * q * q + 2 * q * q + 2 * q);
      if (c.tiling) check_tiling(c, q);
    }
  }
  CHECK(borel_candidates(3).empty());
  const auto c4 = borel_candidates(4);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].r == 13);
  CHECK(c4[0].k == 9);
  CHECK_FALSE(c4[0].b_integral);
  CHECK(c4[0].tiling);
  const auto c7 = borel_candidates(7);
  REQUIRE(c7.size() == 1);
  CHECK(c7[0].r == 35);
  CHECK(c7[0].k == 14);
  CHECK(c7[0].b_integral);
  CHECK_FALSE(c7[0].tiling);
  CHECK_THROWS_AS(borel_rectangle_exclusion(6), Error);
  CHECK_THROWS_AS(borel_rectangle_exclusion(128), Error);
}

TEST_CASE("gap brackets") {
  const QPoly target{0, -2, 1, -1, 1};
  const QPoly root{1, Rational(-1, 2), 1};
  CHECK(evaluate(target, 8) == 4096 - 512 + 64 - 16);
  const std::uint64_t qs[] = {8, 16, 32, 64};
  CHECK(gap_bracket_exclusion("f", target, root, 2, qs).verdict == Verdict::Excluded);
  // Independent check: x(x-2) = target has no integer root x = 2k.
  for (auto q : qs) {
    const auto t = evaluate(target, q);
    bool root_found = false;
    for (BigInt x = 0; x * (x - 2) <= numerator(t); ++x) root_found |= Rational(x * (x - 2)) == t;
    CHECK_FALSE(root_found);
  }
  // A target that is a product of consecutive integers survives.
  const QPoly square{0, -1, 1};  // q^2 - q
  const std::uint64_t q8[] = {8};
  CHECK(gap_bracket_exclusion("sq", square, QPoly{0, 1}, 1, q8).verdict == Verdict::Survives);
}

TEST_CASE("catalog") {
  CHECK(torus_normalizer_v(8) == 130816);
  CHECK(torus_normalizer_v(11) == 885115);
  const auto reports = run_catalog();
  CHECK(reports.size() == 12);
  for (const auto& r : reports) CHECK_MESSAGE(r.verdict == Verdict::Excluded, r.case_label);
  CHECK(w(reports[0], "k_max") == "4");
  CHECK(w(reports[1], "forced_k_min") == "17");
  CHECK(w(reports[1], "fisher_k_max") == "11");
  CHECK(w(reports[2], "b") == "7966035/2");
  CHECK(reports[2].witnesses.at("b") == Rational(BigInt(885115) * 885114, BigInt(444) * 443));
  CHECK(w(reports[3], "(v-1) mod (k-1)") == "85");
  CHECK(reports[4].lemma == "borel-rectangle");
}

TEST_CASE("eliminate_case") {
  CandidateCase c;
  c.label = "fano";
  c.v = 7;
  c.k_hint = 3;
  const auto reports = eliminate_case(c);
  bool any_excluded = false, any_survives = false;
  for (const auto& r : reports) {
    any_excluded |= r.verdict == Verdict::Excluded;
    any_survives |= r.verdict == Verdict::Survives;
  }
  CHECK_FALSE(any_excluded);
  CHECK(any_survives);

  CandidateCase g;
  g.group_order = 20160;
  g.v = 120;
  bool largeprime_excluded = false;
  for (const auto& r : eliminate_case(g)) largeprime_excluded |= r.lemma == "largeprime" && r.verdict == Verdict::Excluded;
  CHECK(largeprime_excluded);
}
