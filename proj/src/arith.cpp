#include "ltls/arith.hpp"

#include "ltls/error.hpp"

namespace ltls {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::InvalidQ: return "InvalidQ";
    case ErrorCode::NotEnumerated: return "NotEnumerated";
    case ErrorCode::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::BNotTransitive: return "BNotTransitive";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::EmptyFixedSet: return "EmptyFixedSet";
    case ErrorCode::NotCharacteristicTwo: return "NotCharacteristicTwo";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::QTooLarge: return "QTooLarge";
    case ErrorCode::Schema: return "Schema";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n_in) {
  std::vector<std::pair<BigInt, unsigned>> out;
  BigInt n = abs(n_in);
  if (n <= 1) return out;
  for (BigInt d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
  std::vector<BigInt> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

BigInt floor(const Rational& x) {
  BigInt n = numerator(x);
  BigInt d = denominator(x);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& x) {
  BigInt n = numerator(x);
  BigInt d = denominator(x);
  BigInt q = n / d;
  if (n % d != 0 && n > 0) q += 1;
  return q;
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace ltls
