#include "ltls/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <tuple>

#include "ltls/classical.hpp"
#include "ltls/error.hpp"
#include "ltls/gf.hpp"
#include "ltls/linspace.hpp"

namespace ltls::lemmas {

namespace mp = boost::multiprecision;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Excluded: return "EXCLUDED";
    case Verdict::Survives: return "SURVIVES";
    case Verdict::Inapplicable: return "INAPPLICABLE";
  }
  return "?";
}

void CandidateCase::check() const {
  if (stabilizer_order && v && group_order && (*v) * (*stabilizer_order) != *group_order) {
    throw Error(ErrorCode::InfeasibleParams, "v * stabilizer_order != group_order");
  }
}

std::string EliminationReport::key_witness_text() const {
  auto it = witnesses.find(key_witness);
  if (it == witnesses.end()) return "-";
  return it->first + "=" + ltls::to_string(it->second);
}

namespace {

EliminationReport make_report(std::string label, std::string lemma) {
  EliminationReport r;
  r.case_label = std::move(label);
  r.lemma = std::move(lemma);
  return r;
}

bool divides(const BigInt& d, const BigInt& n) { return d != 0 && n % d == 0; }

// Largest k with k(k-1) <= n.
BigInt fisher_k_max(const BigInt& n) {
  BigInt k = mp::sqrt(n) + 1;
  while (k * (k - 1) > n) --k;
  return k;
}

}  // namespace

// ---------------------------------------------------------------------------

SignificantPrimes significant_primes(const BigInt& v, const BigInt& b) {
  SignificantPrimes out;
  out.primes = prime_divisors(mp::gcd(b, v - 1));
  const BigInt c = b / mp::gcd(b, v);
  out.via_ratio = prime_divisors(c);
  out.agree = out.primes == out.via_ratio;
  return out;
}

EliminationReport lemma_bdoublev(const BigInt& v, BRatio ratio, std::string label) {
  auto rep = make_report(std::move(label), ratio == BRatio::Two ? "bdoublev(b=2v)" : "bdoublev(b=3v/2)");
  rep.witnesses["v"] = v;
  rep.verdict = Verdict::Survives;
  for (const auto& [p, e] : factorize(v)) {
    if (p == 2) continue;
    bool ok;
    if (ratio == BRatio::Two) {
      ok = p % 4 == 1;
    } else {
      const BigInt m = p % 15;
      ok = (p == 5 && v % 25 != 0) || m == 1 || m == 2 || m == 4 || m == 8;
    }
    if (!ok) {
      rep.verdict = Verdict::Excluded;
      rep.witnesses["offending_prime"] = p;
      rep.key_witness = "offending_prime";
      break;
    }
  }
  return rep;
}

EliminationReport lemma_largeprime(const CandidateCase& c) {
  if (!c.group_order || !c.v) throw Error(ErrorCode::MissingField, "largeprime needs group_order and v");
  c.check();
  auto rep = make_report(c.label, "largeprime");
  const BigInt& v = *c.v;
  const BigInt vm1 = v - 1;

  BigInt forced = 1;
  for (const auto& [t, a] : factorize(vm1)) {
    if (*c.group_order % t == 0) continue;
    const BigInt ta = mp::pow(t, a);
    forced *= ta;
    rep.witnesses["prime_power[" + t.str() + "]"] = ta;
  }
  if (forced > 1) {
    BigInt k = 2;
    while (!divides(forced, k * (k - 1))) ++k;
    rep.witnesses["forced_k_min"] = k;
  }
  const BigInt kmax = fisher_k_max(vm1);
  rep.witnesses["fisher_k_max"] = kmax;

  auto first_failure = [&](const BigInt& k) -> std::optional<std::pair<std::string, Rational>> {
    if (k < std::max<unsigned>(3, c.min_k)) return std::pair{std::string("k"), Rational(k)};
    if (k * (k - 1) > vm1) return std::pair{std::string("k(k-1)"), Rational(k * (k - 1))};
    if (!divides(forced, k * (k - 1))) return std::pair{std::string("k(k-1)"), Rational(k * (k - 1))};
    const Rational r(vm1, k - 1);
    if (!is_integer(r)) return std::pair{std::string("r"), r};
    const Rational b(v * vm1, k * (k - 1));
    if (!is_integer(b)) return std::pair{std::string("b"), b};
    for (const auto& d : c.b_divisors) {
      if (!divides(numerator(b), d)) return std::pair{"b_divides[" + d.str() + "]", b};
    }
    return std::nullopt;
  };

  if (c.k_hint) {
    const BigInt& k = *c.k_hint;
    rep.witnesses["k"] = k;
    rep.witnesses["k-1"] = k - 1;
    rep.witnesses["v-1"] = vm1;
    rep.witnesses["(v-1) mod (k-1)"] = k > 1 ? BigInt(vm1 % (k - 1)) : BigInt(0);
    if (auto fail = first_failure(k)) {
      rep.verdict = Verdict::Excluded;
      rep.witnesses[fail->first] = fail->second;
      rep.key_witness = fail->first;
    } else {
      rep.verdict = Verdict::Survives;
      rep.key_witness = "k";
    }
    return rep;
  }

  BigInt survivors = 0;
  std::optional<BigInt> smallest;
  for (BigInt k = std::max<unsigned>(3, c.min_k); k <= kmax; ++k) {
    if (first_failure(k)) continue;
    ++survivors;
    if (!smallest) smallest = k;
  }
  rep.witnesses["surviving_k_count"] = survivors;
  if (survivors == 0) {
    rep.verdict = Verdict::Excluded;
    rep.key_witness = forced > 1 ? "forced_k_min" : "surviving_k_count";
  } else {
    rep.verdict = Verdict::Survives;
    rep.witnesses["smallest_surviving_k"] = *smallest;
    rep.key_witness = "smallest_surviving_k";
  }
  return rep;
}

KInterval invineq_interval(const BigInt& v, const BigInt& b, const BigInt& n_g, const BigInt& r_g) {
  if (v <= 0 || b <= 0 || n_g <= 0 || r_g <= 0) throw Error(ErrorCode::InfeasibleParams, "inputs must be positive");
  return {ceil(Rational(n_g * (v - 1), b * r_g)), floor(Rational(r_g * v, n_g)) + 1};
}

EliminationReport lemma_invineq(const BigInt& v, const BigInt& b, const BigInt& n_g, const BigInt& r_g,
                                std::optional<BigInt> k, std::string label) {
  auto rep = make_report(std::move(label), "invineq");
  const auto iv = invineq_interval(v, b, n_g, r_g);
  rep.witnesses["k_min"] = iv.k_min;
  rep.witnesses["k_max"] = iv.k_max;
  rep.key_witness = "k_max";
  bool excluded = iv.k_min > iv.k_max || iv.k_max < 3;
  if (k) {
    rep.witnesses["k"] = *k;
    excluded = excluded || *k < iv.k_min || *k > iv.k_max;
    if (*k < iv.k_min && *k <= iv.k_max) rep.key_witness = "k_min";
  }
  rep.verdict = excluded ? Verdict::Excluded : Verdict::Survives;
  return rep;
}

namespace {

struct Params {
  BigInt b, r;
};

Params feasible_params(const BigInt& v, const BigInt& k) {
  const auto f = ls::fisher_regular(v, k);
  if (!f.feasible) throw Error(ErrorCode::InfeasibleParams, f.failed_condition);
  return {numerator(f.b), numerator(f.r)};
}

void apply_cong(EliminationReport& rep, const BigInt& v, const BigInt& k, const Params& p, const BigInt& cm1) {
  const Rational on_r(cm1 * k, 2 * p.r);
  const Rational on_b(cm1 * v, 2 * p.b);
  rep.witnesses["r"] = p.r;
  rep.witnesses["b"] = p.b;
  rep.witnesses["(c-1)k/(2r)"] = on_r;
  rep.witnesses["(c-1)v/(2b)"] = on_b;
  if (!is_integer(on_b)) {
    rep.verdict = Verdict::Excluded;
    rep.key_witness = "(c-1)v/(2b)";
  } else if (!is_integer(on_r)) {
    rep.verdict = Verdict::Excluded;
    rep.key_witness = "(c-1)k/(2r)";
  } else {
    rep.verdict = Verdict::Survives;
    rep.key_witness = "(c-1)v/(2b)";
  }
}

}  // namespace

EliminationReport lemma_cong(const BigInt& v, const BigInt& k, const BigInt& c, std::string label) {
  if (c < 2) throw Error(ErrorCode::InfeasibleParams, "index c must be at least 2");
  const auto p = feasible_params(v, k);
  auto rep = make_report(std::move(label), "cong");
  rep.witnesses["c"] = c;
  apply_cong(rep, v, k, p, c - 1);
  return rep;
}

EliminationReport corollary_supergroups(const BigInt& v, const BigInt& k, std::span<const BigInt> indices,
                                        std::string label) {
  const auto p = feasible_params(v, k);
  auto rep = make_report(std::move(label), "supergroups");
  if (indices.empty()) return rep;
  BigInt c0 = 0;
  for (const auto& c : indices) {
    if (c < 2) throw Error(ErrorCode::InfeasibleParams, "index c must be at least 2");
    c0 = mp::gcd(c0, c - 1);
  }
  rep.witnesses["c0"] = c0;
  apply_cong(rep, v, k, p, c0);
  if (std::find(indices.begin(), indices.end(), BigInt(2)) != indices.end()) {
    rep.witnesses["index"] = 2;
    rep.verdict = Verdict::Excluded;
    rep.key_witness = "index";
  } else if (std::find(indices.begin(), indices.end(), BigInt(3)) != indices.end() && p.b != v) {
    rep.witnesses["index"] = 3;
    rep.verdict = Verdict::Excluded;
    rep.key_witness = "index";
  }
  return rep;
}

EliminationReport lemma_kdivv(const BigInt& v, const BigInt& k, std::string label) {
  auto rep = make_report(std::move(label), "kdivv");
  rep.witnesses["v mod k"] = BigInt(v % k);
  rep.key_witness = "v mod k";
  if (v % k == 0) {
    rep.verdict = Verdict::Excluded;
    rep.witnesses["v/k"] = BigInt(v / k);
  } else {
    rep.verdict = Verdict::Survives;
    // Contrapositive of the fixed-point-free case: every involution fixes a point.
    rep.witnesses["involutions_fix_a_point"] = 1;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rectangle tiling

namespace {

class Tiler {
 public:
  explicit Tiler(std::span<const std::uint64_t> areas) : areas_(areas) {}

  bool can(std::uint64_t len, std::uint64_t wid, unsigned mask) {
    const auto key = std::make_tuple(len, wid, mask);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool ok = search(len, wid, mask, nullptr, 0, 0);
    memo_.emplace(key, ok);
    return ok;
  }

  void build(std::uint64_t len, std::uint64_t wid, unsigned mask, std::uint64_t x, std::uint64_t y,
             std::vector<TileCell>& out) {
    search(len, wid, mask, &out, x, y);
  }

 private:
  std::uint64_t sum(unsigned mask) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < areas_.size(); ++i)
      if (mask >> i & 1) s += areas_[i];
    return s;
  }

  // With `out` set, emits the first tiling found (the search is deterministic).
  bool search(std::uint64_t len, std::uint64_t wid, unsigned mask, std::vector<TileCell>* out, std::uint64_t x,
              std::uint64_t y) {
    if (sum(mask) != len * wid) return false;
    if (std::popcount(mask) == 1) {
      if (out) out->push_back({static_cast<std::size_t>(std::countr_zero(mask)), x, y, len, wid});
      return true;
    }
    const unsigned low = mask & (~mask + 1);
    // Subsets containing the lowest item, so each split is tried once.
    for (unsigned sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      const unsigned rest = mask ^ sub;
      const std::uint64_t a = sum(sub);
      if (a % wid == 0) {
        const std::uint64_t cut = a / wid;
        if (cut > 0 && cut < len && can(cut, wid, sub) && can(len - cut, wid, rest)) {
          if (out) {
            build(cut, wid, sub, x, y, *out);
            build(len - cut, wid, rest, x + cut, y, *out);
          }
          return true;
        }
      }
      if (a % len == 0) {
        const std::uint64_t cut = a / len;
        if (cut > 0 && cut < wid && can(len, cut, sub) && can(len, wid - cut, rest)) {
          if (out) {
            build(len, cut, sub, x, y, *out);
            build(len, wid - cut, rest, x, y + cut, *out);
          }
          return true;
        }
      }
    }
    return false;
  }

  std::span<const std::uint64_t> areas_;
  std::map<std::tuple<std::uint64_t, std::uint64_t, unsigned>, bool> memo_;
};

}  // namespace

std::optional<std::vector<TileCell>> guillotine_tiling(std::uint64_t length, std::uint64_t width,
                                                        std::span<const std::uint64_t> areas) {
  if (areas.empty() || areas.size() > 16 || length == 0 || width == 0) return std::nullopt;
  Tiler tiler(areas);
  const unsigned all = (1u << areas.size()) - 1;
  if (!tiler.can(length, width, all)) return std::nullopt;
  std::vector<TileCell> cells;
  tiler.build(length, width, all, 0, 0, cells);
  std::sort(cells.begin(), cells.end(), [](const TileCell& a, const TileCell& b) { return a.item < b.item; });
  return cells;
}

std::vector<BorelCandidate> borel_candidates(std::uint64_t q) {
  const std::uint64_t n = q * q * q + 2 * q * q + 2 * q;  // v - 1
  const std::uint64_t v = n + 1;
  const std::uint64_t areas[] = {q, q, q * q, q * q, q * q * q};
  std::vector<BorelCandidate> out;
  for (std::uint64_t km1 = 1; km1 <= n; ++km1) {
    if (n % km1 != 0) continue;
    const std::uint64_t r = n / km1, k = km1 + 1;
    if (!(q + 1 < k && k <= r && r < q * q + q + 1)) continue;
    BorelCandidate c{r, k, Rational(BigInt(v) * (v - 1), BigInt(k) * (k - 1)), false, std::nullopt};
    c.b_integral = is_integer(c.b);
    c.tiling = guillotine_tiling(r, km1, areas);
    out.push_back(std::move(c));
  }
  return out;
}

EliminationReport borel_rectangle_exclusion(std::uint64_t q) {
  if (!as_prime_power(q)) throw Error(ErrorCode::InvalidQ, std::to_string(q) + " is not a prime power");
  if (q > 64) throw Error(ErrorCode::QTooLarge, "rectangle search limited to q <= 64");
  auto rep = make_report("PSL(3," + std::to_string(q) + ") Borel stabilizer", "borel-rectangle");
  const auto cands = borel_candidates(q);
  rep.witnesses["q"] = q;
  rep.witnesses["v-1"] = q * q * q + 2 * q * q + 2 * q;
  rep.witnesses["candidate_pairs"] = cands.size();
  std::uint64_t tilings = 0, survivors = 0;
  for (const auto& c : cands) {
    const std::string tag = "(r,k)=(" + std::to_string(c.r) + "," + std::to_string(c.k) + ")";
    rep.witnesses[tag + ".b"] = c.b;
    rep.witnesses[tag + ".tilings"] = c.tiling ? 1 : 0;
    tilings += c.tiling.has_value();
    survivors += c.tiling.has_value() && c.b_integral;
  }
  rep.witnesses["tilings_found"] = tilings;
  rep.witnesses["surviving_pairs"] = survivors;
  const gf::IntPolynomial poly({2, 2, 1});
  rep.witnesses["eisenstein(x^2+2x+2,2)"] = gf::eisenstein_irreducible(poly, 2) ? 1 : 0;
  rep.verdict = survivors == 0 ? Verdict::Excluded : Verdict::Survives;
  rep.key_witness = "surviving_pairs";
  return rep;
}

// ---------------------------------------------------------------------------
// Gap brackets

Rational evaluate(const QPoly& p, const Rational& q) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + p[i];
  return acc;
}

EliminationReport gap_bracket_exclusion(std::string label, const QPoly& target, const QPoly& root, unsigned shift,
                                        std::span<const std::uint64_t> qs) {
  auto rep = make_report(std::move(label), "gap-bracket");
  std::uint64_t failures = 0;
  for (auto qv : qs) {
    const Rational q(qv);
    const Rational t = evaluate(target, q);
    const Rational m = evaluate(root, q);
    const Rational s(shift);
    const bool ok = is_integer(m) && m * (m - s) < t && t < (m + 1) * (m + 1 - s);
    failures += !ok;
    rep.witnesses["q=" + std::to_string(qv) + ".target"] = t;
  }
  rep.witnesses["sampled_q"] = qs.size();
  rep.witnesses["bracket_failures"] = failures;
  rep.key_witness = "bracket_failures";
  rep.verdict = failures == 0 && !qs.empty() ? Verdict::Excluded : Verdict::Survives;
  return rep;
}

BigInt torus_normalizer_v(std::uint64_t q) {
  const BigInt b = q;
  return b * b * b * (b * b + b + 1) * (b - 1) / 2;
}

// ---------------------------------------------------------------------------

std::vector<EliminationReport> run_catalog() {
  std::vector<EliminationReport> out;

  {
    // PSL(2,64) on (v,k) = (2080,12): |G_L| = |G|/b = 8, so at most 7 involutions.
    const std::uint64_t q = 64;
    const BigInt v = 2080, k = 12;
    const auto fr = ls::fisher_regular(v, k);
    const BigInt b = numerator(fr.b);
    const BigInt n_g = BigInt(q) * q - 1;
    const BigInt r_g = grp::psl2_order(q) / b - 1;
    out.push_back(lemma_invineq(v, b, n_g, r_g, k, "PSL(2,64) v=2080 k=12"));
  }
  {
    CandidateCase c;
    c.label = "PSL(3,4) v=120";
    c.group_order = grp::psl3_order(4);
    c.stabilizer_order = 168;
    c.v = *c.group_order / 168;
    out.push_back(lemma_largeprime(c));
  }
  for (auto [q, k] : {std::pair<std::uint64_t, unsigned>{11, 444}, {8, 171}}) {
    CandidateCase c;
    c.group_order = grp::psl3_order(q);
    c.v = torus_normalizer_v(q);
    c.k_hint = k;
    c.label = "PSL(3," + std::to_string(q) + ") v=" + c.v->str() + " k=" + std::to_string(k);
    out.push_back(lemma_largeprime(c));
  }
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) out.push_back(borel_rectangle_exclusion(q));

  const std::uint64_t even_q[] = {8, 16, 32, 64};
  // 2k(2k-2) = q^4 - q^3 + q^2 - 2q, bracketed at 2k = q^2 - q/2 + 1.
  out.push_back(gap_bracket_exclusion("PSL(3,q) q even, 2k(2k-2)=q^4-q^3+q^2-2q", {0, -2, 1, -1, 1},
                                      {1, Rational(-1, 2), 1}, 2, even_q));
  // k(k-1) = q^4 + q^2 - q, bracketed at k = q^2.
  out.push_back(gap_bracket_exclusion("PSL(3,q) q even, k(k-1)=q^4+q^2-q", {0, -1, 1, 0, 1}, {0, 0, 1}, 1, even_q));
  return out;
}

std::vector<EliminationReport> eliminate_case(const CandidateCase& c) {
  c.check();
  std::vector<EliminationReport> out;
  const bool have_vk = c.v && c.k_hint;
  std::optional<Params> params;

  {
    auto rep = make_report(c.label, "fisher");
    if (have_vk && *c.v > *c.k_hint && *c.k_hint >= 2) {
      const auto f = ls::fisher_regular(*c.v, *c.k_hint);
      rep.witnesses["b"] = f.b;
      rep.witnesses["r"] = f.r;
      rep.verdict = f.feasible ? Verdict::Survives : Verdict::Excluded;
      rep.key_witness = !is_integer(f.r) || f.feasible ? "r" : "b";
      if (f.feasible) params = Params{numerator(f.b), numerator(f.r)};
    } else if (have_vk) {
      rep.verdict = Verdict::Excluded;
      rep.witnesses["k"] = *c.k_hint;
      rep.key_witness = "k";
    }
    out.push_back(std::move(rep));
  }

  if (c.group_order && c.v) {
    out.push_back(lemma_largeprime(c));
  } else {
    out.push_back(make_report(c.label, "largeprime"));
  }

  if (params) {
    out.push_back(lemma_kdivv(*c.v, *c.k_hint, c.label));
  } else {
    out.push_back(make_report(c.label, "kdivv"));
  }

  if (params && params->b == 2 * *c.v) {
    out.push_back(lemma_bdoublev(*c.v, BRatio::Two, c.label));
  } else if (params && 2 * params->b == 3 * *c.v) {
    out.push_back(lemma_bdoublev(*c.v, BRatio::ThreeHalves, c.label));
  } else {
    out.push_back(make_report(c.label, "bdoublev"));
  }

  if (params && c.n_g && c.r_g_max) {
    out.push_back(lemma_invineq(*c.v, params->b, *c.n_g, *c.r_g_max, c.k_hint, c.label));
  } else {
    out.push_back(make_report(c.label, "invineq"));
  }

  {
    auto rep = make_report(c.label, "b-divides");
    if (params && !c.b_divisors.empty()) {
      rep.witnesses["b"] = params->b;
      rep.verdict = Verdict::Survives;
      rep.key_witness = "b";
      for (const auto& d : c.b_divisors) {
        if (d % params->b != 0) {
          rep.verdict = Verdict::Excluded;
          rep.witnesses["not_divisible[" + d.str() + "]"] = Rational(d, params->b);
          rep.key_witness = "not_divisible[" + d.str() + "]";
          break;
        }
      }
    }
    out.push_back(std::move(rep));
  }

  if (params) {
    auto rep = make_report(c.label, "significant-primes");
    const auto sp = significant_primes(*c.v, params->b);
    rep.verdict = Verdict::Survives;
    rep.witnesses["count"] = sp.primes.size();
    for (const auto& p : sp.primes) rep.witnesses["prime[" + p.str() + "]"] = p;
    rep.key_witness = "count";
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace ltls::lemmas
