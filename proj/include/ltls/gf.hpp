#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ltls/arith.hpp"

namespace ltls::gf {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^a) with elements encoded as integers 0..q-1: the element
/// c_0 + c_1 x + ... + c_{a-1} x^{a-1} has code sum c_i p^i.
class Field {
 public:
  /// Builds GF(p^a) using the smallest monic irreducible polynomial of
  /// degree a, comparing coefficient sequences from the constant term up.
  static FieldPtr make(std::uint64_t p, unsigned a);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return a_; }
  std::uint64_t order() const { return q_; }
  /// a+1 coefficients, little-endian, monic.
  const std::vector<std::uint64_t>& reduction_poly() const { return poly_; }

  bool same_as(const Field& other) const {
    return this == &other || (p_ == other.p_ && a_ == other.a_ && poly_ == other.poly_);
  }

  // Raw arithmetic on codes.
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t neg(std::uint64_t x) const;
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t inv(std::uint64_t x) const;
  std::uint64_t pow(std::uint64_t x, std::uint64_t e) const;

  /// Frobenius x -> x^p.
  std::uint64_t frobenius(std::uint64_t x) const { return pow(x, p_); }

  std::vector<std::uint64_t> digits(std::uint64_t code) const;
  std::uint64_t encode(std::span<const std::uint64_t> digits) const;

  /// Multiplicative order of a nonzero code.
  std::uint64_t multiplicative_order(std::uint64_t x) const;

  std::string describe() const;

 private:
  Field(std::uint64_t p, unsigned a, std::vector<std::uint64_t> poly);

  std::uint64_t p_;
  unsigned a_;
  std::uint64_t q_;
  std::vector<std::uint64_t> poly_;
  std::vector<PrimePower> group_order_factors_;
};

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint64_t code);

  static FieldElement zero(const FieldPtr& f) { return {f, 0}; }
  static FieldElement one(const FieldPtr& f) { return {f, 1}; }
  static FieldElement from_coeffs(const FieldPtr& f, std::span<const std::uint64_t> coeffs);

  const FieldPtr& field() const { return field_; }
  std::uint64_t code() const { return code_; }
  std::vector<std::uint64_t> coeffs() const { return field_->digits(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& rhs) const;
  std::strong_ordering operator<=>(const FieldElement& rhs) const;

 private:
  void require_same_field(const FieldElement& rhs) const;

  FieldPtr field_;
  std::uint64_t code_;
};

// Named forms of the arithmetic, for callers that prefer functions.
FieldElement fe_add(const FieldElement& x, const FieldElement& y);
FieldElement fe_mul(const FieldElement& x, const FieldElement& y);
FieldElement fe_inv(const FieldElement& x);
FieldElement fe_pow(const FieldElement& x, std::uint64_t e);

/// Least element of multiplicative order q-1, elements ordered by code.
FieldElement primitive_element(const FieldPtr& field);

/// Exhaustive factor search: no monic factor of degree 1..deg/2 over GF(p).
/// `coeffs` is little-endian with a nonzero leading coefficient.
bool is_irreducible_mod_p(std::span<const std::uint64_t> coeffs, std::uint64_t p);

class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Little-endian; trailing zeros are trimmed.
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt evaluate(const BigInt& x) const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

bool eisenstein_irreducible(const IntPolynomial& f, const BigInt& p);

}  // namespace ltls::gf
