#include "ltls/gf.hpp"

#include <sstream>

#include "ltls/error.hpp"

namespace ltls::gf {
namespace {

using Poly = std::vector<std::uint64_t>;

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

// Remainder of f modulo the monic polynomial g over GF(p). Both little-endian.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = f.size(); i-- > dg;) {
    const std::uint64_t t = f[i] % p;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      const std::uint64_t sub = (t * g[j]) % p;
      std::uint64_t& c = f[i - dg + j];
      c = (c + p - sub) % p;
    }
  }
  f.resize(std::min(f.size(), dg));
  return f;
}

bool all_zero(const Poly& f) {
  for (auto c : f)
    if (c != 0) return false;
  return true;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint64_t> coeffs, std::uint64_t p) {
  if (coeffs.empty() || coeffs.back() % p == 0) return false;
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;

  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  Poly f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c %= p;

  for (std::size_t d = 1; d <= n / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    // Enumerate every monic g of degree d: the low d coefficients run over GF(p)^d.
    while (true) {
      if (all_zero(poly_mod(f, g, p))) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

Field::Field(std::uint64_t p, unsigned a, std::vector<std::uint64_t> poly)
    : p_(p), a_(a), q_(1), poly_(std::move(poly)) {
  for (unsigned i = 0; i < a; ++i) q_ *= p;
  group_order_factors_ = factorize(q_ - 1);
}

FieldPtr Field::make(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (a == 0) throw Error(ErrorCode::DegreeZero, "field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (q > kMaxOrder / p) throw Error(ErrorCode::Overflow, "p^a exceeds 2^32");
    q *= p;
  }

  // Candidates are visited in lexicographic order of (c_0, c_1, ..., c_{a-1}),
  // so c_{a-1} is the fastest-moving coefficient.
  Poly poly(a + 1, 0);
  poly[a] = 1;
  while (true) {
    if (is_irreducible_mod_p(poly, p)) break;
    std::size_t i = a;
    while (i > 0) {
      --i;
      if (++poly[i] < p) break;
      poly[i] = 0;
      if (i == 0) throw Error(ErrorCode::Overflow, "no irreducible polynomial found");
    }
  }
  return FieldPtr(new Field(p, a, std::move(poly)));
}

std::vector<std::uint64_t> Field::digits(std::uint64_t code) const {
  std::vector<std::uint64_t> d(a_, 0);
  for (unsigned i = 0; i < a_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

std::uint64_t Field::encode(std::span<const std::uint64_t> digits) const {
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i] % p_;
  return code;
}

std::uint64_t Field::add(std::uint64_t x, std::uint64_t y) const {
  if (p_ == 2) return x ^ y;
  if (a_ == 1) return (x + y) % p_;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < a_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t Field::neg(std::uint64_t x) const {
  if (p_ == 2) return x;
  if (a_ == 1) return (p_ - x) % p_;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < a_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t Field::sub(std::uint64_t x, std::uint64_t y) const { return add(x, neg(y)); }

std::uint64_t Field::mul(std::uint64_t x, std::uint64_t y) const {
  if (a_ == 1) return (x * y) % p_;
  const auto dx = digits(x);
  const auto dy = digits(y);
  Poly prod(2 * a_ - 1, 0);
  for (unsigned i = 0; i < a_; ++i) {
    if (dx[i] == 0) continue;
    for (unsigned j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
  }
  return encode(poly_mod(std::move(prod), poly_, p_));
}

std::uint64_t Field::pow(std::uint64_t x, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

std::uint64_t Field::inv(std::uint64_t x) const {
  if (x == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(x, q_ - 2);
}

std::uint64_t Field::multiplicative_order(std::uint64_t x) const {
  if (x == 0) throw Error(ErrorCode::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t order = q_ - 1;
  for (const auto& [prime, exp] : group_order_factors_) {
    for (unsigned i = 0; i < exp; ++i) {
      if (pow(x, order / prime) != 1) break;
      order /= prime;
    }
  }
  return order;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ") [";
  for (std::size_t i = poly_.size(); i-- > 0;) {
    os << poly_[i] << (i ? " " : "");
  }
  os << "]";
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, std::uint64_t code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_->order()) code_ = field_->encode(field_->digits(code_));
}

FieldElement FieldElement::from_coeffs(const FieldPtr& f, std::span<const std::uint64_t> coeffs) {
  return {f, f->encode(coeffs)};
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (!field_->same_as(*rhs.field_)) {
    throw Error(ErrorCode::FieldMismatch, field_->describe() + " vs " + rhs.field_->describe());
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_->add(code_, rhs.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_->sub(code_, rhs.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_->mul(code_, rhs.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inv(); }

FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

bool FieldElement::operator==(const FieldElement& rhs) const {
  return field_->same_as(*rhs.field_) && code_ == rhs.code_;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& rhs) const {
  require_same_field(rhs);
  return code_ <=> rhs.code_;
}

FieldElement fe_add(const FieldElement& x, const FieldElement& y) { return x + y; }
FieldElement fe_mul(const FieldElement& x, const FieldElement& y) { return x * y; }
FieldElement fe_inv(const FieldElement& x) { return x.inv(); }
FieldElement fe_pow(const FieldElement& x, std::uint64_t e) { return x.pow(e); }

FieldElement primitive_element(const FieldPtr& field) {
  const std::uint64_t q = field->order();
  for (std::uint64_t c = 1; c < q; ++c) {
    if (field->multiplicative_order(c) == q - 1) return {field, c};
  }
  throw Error(ErrorCode::InvalidQ, "multiplicative group is not cyclic");  // unreachable for a field
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

bool eisenstein_irreducible(const IntPolynomial& f, const BigInt& p) {
  if (f.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "Eisenstein needs a nonconstant polynomial");
  const auto& c = f.coeffs();
  if (c.back() % p == 0) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] % p != 0) return false;
  }
  return c.front() % (p * p) != 0;
}

}  // namespace ltls::gf
