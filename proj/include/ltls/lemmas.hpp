#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltls/arith.hpp"

namespace ltls::lemmas {

enum class Verdict { Excluded, Survives, Inapplicable };
std::string_view to_string(Verdict v);

/// Data for one candidate line-transitive action. Only the fields a lemma
/// needs have to be present.
struct CandidateCase {
  std::string label;
  std::optional<BigInt> group_order;
  std::optional<BigInt> v;
  std::optional<BigInt> stabilizer_order;  // |G_alpha|, with v |G_alpha| = |G|
  std::vector<BigInt> b_divisors;          // numbers that b must divide
  std::optional<BigInt> k_hint;
  std::optional<BigInt> n_g;
  std::optional<BigInt> r_g_max;
  /// Lower bound on line size; 3 by default, 5 reproduces the usual
  /// "small k already classified" restriction.
  unsigned min_k = 3;

  /// Throws InfeasibleParams if v * stabilizer_order != group_order.
  void check() const;
};

struct EliminationReport {
  std::string case_label;
  std::string lemma;
  Verdict verdict = Verdict::Inapplicable;
  std::map<std::string, Rational> witnesses;
  std::string key_witness;  // witness shown in one-line summaries

  std::string key_witness_text() const;
};

struct SignificantPrimes {
  std::vector<BigInt> primes;     // primes dividing gcd(b, v-1)
  std::vector<BigInt> via_ratio;  // primes dividing c, where b/v = c/d in lowest terms
  bool agree = false;
};

SignificantPrimes significant_primes(const BigInt& v, const BigInt& b);

enum class BRatio { ThreeHalves, Two };

/// Congruence conditions on odd prime divisors of v when b = 3v/2 or b = 2v.
EliminationReport lemma_bdoublev(const BigInt& v, BRatio ratio, std::string label = {});

/// Prime powers of v-1 coprime to |G| must divide k(k-1); intersected with
/// the Fisher-feasible line sizes (and k_hint / b_divisors when given).
EliminationReport lemma_largeprime(const CandidateCase& c);

struct KInterval {
  BigInt k_min, k_max;
};

/// [ceil(n_g (v-1) / (b r_g)), floor(r_g v / n_g) + 1].
KInterval invineq_interval(const BigInt& v, const BigInt& b, const BigInt& n_g, const BigInt& r_g);

EliminationReport lemma_invineq(const BigInt& v, const BigInt& b, const BigInt& n_g, const BigInt& r_g,
                                std::optional<BigInt> k = std::nullopt, std::string label = {});

/// r | (c-1)k/2 and b | (c-1)v/2 for an index c = |K:H| above a point stabilizer.
EliminationReport lemma_cong(const BigInt& v, const BigInt& k, const BigInt& c, std::string label = {});

/// The gcd form over several indices, plus the index-2 and index-3 rules.
EliminationReport corollary_supergroups(const BigInt& v, const BigInt& k, std::span<const BigInt> indices,
                                        std::string label = {});

/// k | v forces flag-transitivity; EXCLUDED under a non-flag-transitive hypothesis.
EliminationReport lemma_kdivv(const BigInt& v, const BigInt& k, std::string label = {});

/// One axis-aligned cell of a rectangle tiling. `length` runs along the side
/// of length r, `width` along the side of length k-1.
struct TileCell {
  std::size_t item;  // index into the area list
  std::uint64_t x, y, length, width;
};

/// Guillotine tiling of a length x width rectangle by cells of exactly the
/// given areas, one cell per area; nullopt if none exists.
std::optional<std::vector<TileCell>> guillotine_tiling(std::uint64_t length, std::uint64_t width,
                                                        std::span<const std::uint64_t> areas);

struct BorelCandidate {
  std::uint64_t r, k;
  Rational b;
  bool b_integral;
  std::optional<std::vector<TileCell>> tiling;
};

/// All (r, k) with r (k-1) = q^3 + 2q^2 + 2q, q+1 < k <= r < q^2+q+1.
std::vector<BorelCandidate> borel_candidates(std::uint64_t q);

/// Borel point stabilizer case: EXCLUDED iff no candidate (r, k) has integral
/// b and a tiling of the r x (k-1) rectangle by the orbit areas q, q, q^2,
/// q^2, q^3. Throws QTooLarge for q > 64.
EliminationReport borel_rectangle_exclusion(std::uint64_t q);

/// Exact polynomial in q with rational coefficients, little-endian.
using QPoly = std::vector<Rational>;
Rational evaluate(const QPoly& p, const Rational& q);

/// Shows x (x - shift) = target(q) has no integer root by checking
/// m (m - shift) < target < (m + 1)(m + 1 - shift) with m = root(q) at every sampled q.
EliminationReport gap_bracket_exclusion(std::string label, const QPoly& target, const QPoly& root, unsigned shift,
                                        std::span<const std::uint64_t> qs);

/// v for the point stabilizer ^(q^2-1).2 in PSL(3,q): q^3 (q^2+q+1)(q-1)/2.
BigInt torus_normalizer_v(std::uint64_t q);

/// The fixed list of numeric exclusions; every entry is expected EXCLUDED.
std::vector<EliminationReport> run_catalog();

/// Every lemma against one case; lemmas whose inputs are missing report INAPPLICABLE.
std::vector<EliminationReport> eliminate_case(const CandidateCase& c);

}  // namespace ltls::lemmas
