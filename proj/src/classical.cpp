#include "ltls/classical.hpp"

#include "ltls/error.hpp"

namespace ltls::grp {

namespace {

std::uint64_t determinant_of(const gf::Field& f, unsigned n, std::vector<std::uint64_t> m) {
  std::uint64_t det = 1;
  for (unsigned c = 0; c < n; ++c) {
    unsigned pivot = c;
    while (pivot < n && m[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (unsigned j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[c * n + j]);
      det = f.neg(det);
    }
    const std::uint64_t pv = m[c * n + c];
    det = f.mul(det, pv);
    const std::uint64_t pinv = f.inv(pv);
    for (unsigned r = c + 1; r < n; ++r) {
      const std::uint64_t factor = f.mul(m[r * n + c], pinv);
      if (factor == 0) continue;
      for (unsigned j = c; j < n; ++j) m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[c * n + j]));
    }
  }
  return det;
}

std::uint64_t gcd_with_3(std::uint64_t q) { return (q - 1) % 3 == 0 ? 3 : 1; }

}  // namespace

ProjectiveMatrix::ProjectiveMatrix(gf::FieldPtr field, unsigned dim, std::vector<std::uint64_t> entries)
    : field_(std::move(field)), dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != std::size_t{dim_} * dim_) throw Error(ErrorCode::InvalidPermutation, "matrix shape mismatch");
  if (determinant_of(*field_, dim_, entries_) == 0) throw Error(ErrorCode::InvalidPermutation, "singular matrix");
  std::uint64_t lead = 0;
  for (auto e : entries_) {
    if (e != 0) {
      lead = e;
      break;
    }
  }
  const std::uint64_t scale = field_->inv(lead);
  for (auto& e : entries_) e = field_->mul(e, scale);
}

ProjectiveMatrix ProjectiveMatrix::diagonal(const gf::FieldPtr& field, std::span<const std::uint64_t> diag) {
  const auto n = static_cast<unsigned>(diag.size());
  std::vector<std::uint64_t> m(std::size_t{n} * n, 0);
  for (unsigned i = 0; i < n; ++i) m[i * n + i] = diag[i];
  return ProjectiveMatrix(field, n, std::move(m));
}

ProjectiveMatrix ProjectiveMatrix::transvection(const gf::FieldPtr& field, unsigned dim, unsigned row, unsigned col,
                                                std::uint64_t t) {
  std::vector<std::uint64_t> m(std::size_t{dim} * dim, 0);
  for (unsigned i = 0; i < dim; ++i) m[i * dim + i] = 1;
  m[row * dim + col] = t;
  return ProjectiveMatrix(field, dim, std::move(m));
}

std::uint64_t ProjectiveMatrix::determinant() const { return determinant_of(*field_, dim_, entries_); }

ProjectiveMatrix ProjectiveMatrix::operator*(const ProjectiveMatrix& rhs) const {
  if (dim_ != rhs.dim_ || !field_->same_as(*rhs.field_)) throw Error(ErrorCode::FieldMismatch, "matrix product mismatch");
  std::vector<std::uint64_t> out(entries_.size(), 0);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned k = 0; k < dim_; ++k) {
      const auto a = entry(i, k);
      if (a == 0) continue;
      for (unsigned j = 0; j < dim_; ++j)
        out[i * dim_ + j] = field_->add(out[i * dim_ + j], field_->mul(a, rhs.entry(k, j)));
    }
  return ProjectiveMatrix(field_, dim_, std::move(out));
}

std::vector<std::uint64_t> ProjectiveMatrix::apply(std::span<const std::uint64_t> row) const {
  std::vector<std::uint64_t> out(dim_, 0);
  for (unsigned k = 0; k < dim_; ++k) {
    if (row[k] == 0) continue;
    for (unsigned j = 0; j < dim_; ++j) out[j] = field_->add(out[j], field_->mul(row[k], entry(k, j)));
  }
  return out;
}

ProjectiveSpace::ProjectiveSpace(gf::FieldPtr field, unsigned dim) : field_(std::move(field)), dim_(dim) {
  const std::uint64_t q = field_->order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < dim_; ++i) total *= q;
  if ((total - 1) / (q - 1) > kMaxDegree) throw Error(ErrorCode::DomainTooLarge, "projective space too large");
  index_.assign(total, ~std::uint32_t{0});

  // Vectors visited in lexicographic order of coordinates (first coordinate
  // most significant); keep the canonical ones.
  std::vector<std::uint64_t> v(dim_, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (unsigned i = dim_; i-- > 0;) {
      v[i] = rest % q;
      rest /= q;
    }
    unsigned first = 0;
    while (first < dim_ && v[first] == 0) ++first;
    if (first == dim_ || v[first] != 1) continue;
    index_[code] = static_cast<std::uint32_t>(count_++);
    coords_.insert(coords_.end(), v.begin(), v.end());
  }
}

std::size_t ProjectiveSpace::index_of(std::span<const std::uint64_t> vec) const {
  unsigned first = 0;
  while (first < dim_ && vec[first] == 0) ++first;
  if (first == dim_) throw Error(ErrorCode::InvalidPermutation, "zero vector is not a projective point");
  const std::uint64_t scale = field_->inv(vec[first]);
  std::uint64_t code = 0;
  for (unsigned i = 0; i < dim_; ++i) code = code * field_->order() + field_->mul(vec[i], scale);
  return index_[code];
}

Permutation ProjectiveSpace::permutation_of(const ProjectiveMatrix& m) const {
  if (m.dim() != dim_) throw Error(ErrorCode::DomainMismatch, "matrix dimension differs from space");
  std::vector<Point> img(count_);
  for (std::size_t x = 0; x < count_; ++x) img[x] = static_cast<Point>(index_of(m.apply(coords(x))));
  return Permutation(std::move(img));
}

Permutation ProjectiveSpace::field_automorphism(unsigned power) const {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < power; ++i) e *= field_->characteristic();
  std::vector<Point> img(count_);
  std::vector<std::uint64_t> v(dim_);
  for (std::size_t x = 0; x < count_; ++x) {
    auto c = coords(x);
    for (unsigned i = 0; i < dim_; ++i) v[i] = field_->pow(c[i], e);
    img[x] = static_cast<Point>(index_of(v));
  }
  return Permutation(std::move(img));
}

BigInt psl2_order(std::uint64_t q) {
  BigInt b = q;
  return b * (b * b - 1) / (q % 2 == 0 ? 1 : 2);
}

BigInt pgl2_order(std::uint64_t q) {
  BigInt b = q;
  return b * (b * b - 1);
}

BigInt psl3_order(std::uint64_t q) {
  BigInt b = q;
  return b * b * b * (b - 1) * (b - 1) * (b + 1) * (b * b + b + 1) / gcd_with_3(q);
}

gf::FieldPtr field_for_order(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw Error(ErrorCode::InvalidQ, std::to_string(q) + " is not a prime power");
  return gf::Field::make(pp->prime, pp->exponent);
}

namespace {

// Root-subgroup generators I + t E_ij over an additive basis {1, w, ..., w^(a-1)}
// of GF(q); together they generate SL(n, q).
std::vector<ProjectiveMatrix> sl_generators(const gf::FieldPtr& f, unsigned n) {
  const auto w = gf::primitive_element(f).code();
  std::vector<std::uint64_t> basis{1};
  for (unsigned i = 1; i < f->degree(); ++i) basis.push_back(f->mul(basis.back(), w));
  std::vector<ProjectiveMatrix> gens;
  for (unsigned i = 0; i + 1 < n; ++i) {
    for (auto t : basis) {
      gens.push_back(ProjectiveMatrix::transvection(f, n, i, i + 1, t));
      gens.push_back(ProjectiveMatrix::transvection(f, n, i + 1, i, t));
    }
  }
  return gens;
}

ClassicalGroup build(std::uint64_t q, unsigned n, std::vector<ProjectiveMatrix> mats, const BigInt& order,
                     gf::FieldPtr f, const GroupBuildOptions& opts) {
  ProjectiveSpace space(f, n);
  std::vector<Permutation> gens;
  for (const auto& m : mats) gens.push_back(space.permutation_of(m));
  const std::size_t degree = space.size();
  if (!opts.enumerate) {
    auto group = PermGroup::generators_only(degree, std::move(gens), order);
    return {q, f, std::move(space), std::move(mats), std::move(group)};
  }
  if (order > opts.cap) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                "group of order " + order.str() + " exceeds cap " + std::to_string(opts.cap));
  }
  auto group = PermGroup::enumerate(degree, std::move(gens), opts.cap, static_cast<std::size_t>(order));
  if (group.order() != order) {
    throw Error(ErrorCode::InvalidQ, "enumerated order " + group.order().str() + " differs from " + order.str());
  }
  return {q, f, std::move(space), std::move(mats), std::move(group)};
}

}  // namespace

ClassicalGroup psl2(std::uint64_t q, const GroupBuildOptions& opts) {
  auto f = field_for_order(q);
  return build(q, 2, sl_generators(f, 2), psl2_order(q), f, opts);
}

ClassicalGroup pgl2(std::uint64_t q, const GroupBuildOptions& opts) {
  auto f = field_for_order(q);
  auto mats = sl_generators(f, 2);
  const std::uint64_t diag[] = {gf::primitive_element(f).code(), 1};
  mats.push_back(ProjectiveMatrix::diagonal(f, diag));
  return build(q, 2, std::move(mats), pgl2_order(q), f, opts);
}

ClassicalGroup psl3(std::uint64_t q, const GroupBuildOptions& opts) {
  auto f = field_for_order(q);
  return build(q, 3, sl_generators(f, 3), psl3_order(q), f, opts);
}

ProjectiveMatrix subgroup_D_generator(const gf::FieldPtr& field) {
  const auto a = gf::primitive_element(field);
  const std::uint64_t diag[] = {a.pow(2).inv().code(), a.code(), a.code()};
  return ProjectiveMatrix::diagonal(field, diag);
}

Subgroup subgroup_D(const ClassicalGroup& psl3_group) {
  const auto& g = psl3_group.group;
  const auto perm = psl3_group.space.permutation_of(subgroup_D_generator(psl3_group.field));
  auto id = g.index_of(perm);
  if (!id) throw Error(ErrorCode::InvalidPermutation, "D generator is not in the group");
  const ElementId gens[] = {*id};
  return Subgroup::generated_by(g, gens);
}

}  // namespace ltls::grp
