#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ltls {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization; primes in increasing order.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Factorization of an arbitrary-precision positive integer. Trial division,
/// so only meant for the magnitudes the lemma engine meets (up to ~10^15).
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

std::vector<BigInt> prime_divisors(const BigInt& n);

/// Returns (p, a) with q = p^a, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Exact ceil/floor of a rational.
BigInt ceil(const Rational& x);
BigInt floor(const Rational& x);

bool is_integer(const Rational& x);

/// "n" for integers, "n/d" otherwise (lowest terms, sign on numerator).
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

}  // namespace ltls
