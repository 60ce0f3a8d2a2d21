#include "hopfxyz/tensor.hpp"

#include <algorithm>

#include "hopfxyz/errors.hpp"

namespace hopf {

void canonicalize(SparseVec& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const Term& a, const Term& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Term acc{v[i].index, std::move(v[i].coef)};
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].index == acc.index; ++j) acc.coef += v[j].coef;
    if (!acc.coef.is_zero()) v[out++] = std::move(acc);
    i = j;
  }
  v.resize(out);
}

SparseVec to_sparse(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({static_cast<Index>(i), v[i]});
  }
  return out;
}

Vector to_dense(const SparseVec& v, FieldSpec field, std::size_t n) {
  Vector out = zeros(field, n);
  for (const Term& t : v) out.at(t.index) += t.coef;
  return out;
}

void axpy(Vector& acc, const Scalar& c, std::span<const Term> v) {
  for (const Term& t : v) acc[t.index].add_mul(c, t.coef);
}

void append_scaled(SparseVec& out, const Scalar& c, std::span<const Term> v) {
  for (const Term& t : v) out.push_back({t.index, c * t.coef});
}

// --- SparseColumns ---------------------------------------------------------

SparseColumns::SparseColumns(FieldSpec field, Index src_dim, Index dst_dim)
    : field_(field), dst_dim_(dst_dim), cols_(src_dim) {}

void SparseColumns::set_column(Index j, SparseVec v) {
  canonicalize(v);
  for (const Term& t : v) {
    if (t.index >= dst_dim_) throw InvalidInput("column entry index out of range");
  }
  cols_.at(j) = std::move(v);
}

SparseVec SparseColumns::apply(std::span<const Term> x) const {
  SparseVec out;
  for (const Term& t : x) append_scaled(out, t.coef, cols_.at(t.index));
  canonicalize(out);
  return out;
}

Vector SparseColumns::apply(const Vector& x) const {
  if (x.size() != cols_.size()) throw DimensionMismatch("SparseColumns::apply");
  Vector out = zeros(field_, dst_dim_);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!x[j].is_zero()) axpy(out, x[j], cols_[j]);
  }
  return out;
}

namespace {
bool same_terms(std::span<const Term> a, std::span<const Term> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const Term& x, const Term& y) {
    return x.index == y.index && x.coef == y.coef;
  });
}
}  // namespace

bool operator==(const SparseColumns& a, const SparseColumns& b) {
  if (a.field_ != b.field_ || a.dst_dim_ != b.dst_dim_ || a.cols_.size() != b.cols_.size())
    return false;
  for (std::size_t j = 0; j < a.cols_.size(); ++j) {
    if (!same_terms(a.cols_[j], b.cols_[j])) return false;
  }
  return true;
}

// --- BilinearTable ---------------------------------------------------------

BilinearTable::Builder::Builder(FieldSpec field, Index left, Index right, Index out)
    : field_(field),
      left_(left),
      right_(right),
      out_(out),
      rows_(static_cast<std::size_t>(left) * right) {}

void BilinearTable::Builder::add(Index i, Index j, Index k, const Scalar& s) {
  if (i >= left_ || j >= right_ || k >= out_) {
    throw InvalidInput("structure constant index out of range: (" + std::to_string(i) + ", " +
                       std::to_string(j) + ", " + std::to_string(k) + ")");
  }
  if (s.field() != field_) throw FieldMismatch("structure constant in wrong field");
  rows_[static_cast<std::size_t>(i) * right_ + j].push_back({k, s});
}

void BilinearTable::Builder::set(Index i, Index j, SparseVec v) {
  if (i >= left_ || j >= right_) throw InvalidInput("structure constant index out of range");
  rows_[static_cast<std::size_t>(i) * right_ + j] = std::move(v);
}

BilinearTable BilinearTable::Builder::build() && {
  return from_rows(field_, left_, right_, out_, std::move(rows_));
}

BilinearTable BilinearTable::from_rows(FieldSpec field, Index left, Index right, Index out,
                                       std::vector<SparseVec> rows) {
  if (rows.size() != static_cast<std::size_t>(left) * right) {
    throw DimensionMismatch("BilinearTable::from_rows: row count");
  }
  BilinearTable t;
  t.field_ = field;
  t.left_ = left;
  t.right_ = right;
  t.out_ = out;
  t.offsets_.assign(rows.size() + 1, 0);
  std::size_t total = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    canonicalize(rows[r]);
    total += rows[r].size();
  }
  t.terms_.reserve(total);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (Term& term : rows[r]) {
      if (term.index >= out) throw InvalidInput("structure constant output index out of range");
      t.terms_.push_back(std::move(term));
    }
    t.offsets_[r + 1] = t.terms_.size();
  }
  return t;
}

SparseVec BilinearTable::apply(std::span<const Term> x, std::span<const Term> y) const {
  SparseVec out;
  for (const Term& a : x) {
    for (const Term& b : y) {
      const auto row = at(a.index, b.index);
      if (row.empty()) continue;
      append_scaled(out, a.coef * b.coef, row);
    }
  }
  canonicalize(out);
  return out;
}

bool operator==(const BilinearTable& a, const BilinearTable& b) {
  return a.field_ == b.field_ && a.left_ == b.left_ && a.right_ == b.right_ &&
         a.out_ == b.out_ && a.offsets_ == b.offsets_ && same_terms(a.terms_, b.terms_);
}

// --- LinearMap -------------------------------------------------------------

LinearMap::LinearMap(FieldSpec field, Index src_dim, Index dst_dim)
    : field_(field),
      src_(src_dim),
      dst_(dst_dim),
      data_(static_cast<std::size_t>(src_dim) * dst_dim, Scalar::zero(field)) {}

LinearMap LinearMap::identity(FieldSpec field, Index n) {
  LinearMap m(field, n, n);
  for (Index i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

LinearMap LinearMap::from_columns(const SparseColumns& cols) {
  LinearMap m(cols.field(), cols.src_dim(), cols.dst_dim());
  for (Index c = 0; c < cols.src_dim(); ++c) m.set_column(c, cols.column(c));
  return m;
}

SparseVec LinearMap::column(Index c) const {
  SparseVec out;
  for (Index r = 0; r < dst_; ++r) {
    const Scalar& s = at(r, c);
    if (!s.is_zero()) out.push_back({r, s});
  }
  return out;
}

void LinearMap::set_column(Index c, std::span<const Term> v) {
  if (c >= src_) throw DimensionMismatch("LinearMap::set_column");
  for (Index r = 0; r < dst_; ++r) at(r, c) = Scalar::zero(field_);
  for (const Term& t : v) {
    if (t.index >= dst_) throw DimensionMismatch("LinearMap::set_column: row index");
    at(t.index, c) += t.coef;
  }
}

SparseColumns LinearMap::to_columns() const {
  SparseColumns cols(field_, src_, dst_);
  for (Index c = 0; c < src_; ++c) cols.set_column(c, column(c));
  return cols;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(field_, dst_, src_);
  for (Index r = 0; r < dst_; ++r) {
    for (Index c = 0; c < src_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

LinearMap kronecker(const LinearMap& a, const LinearMap& b) {
  if (a.field() != b.field()) throw FieldMismatch("kronecker");
  LinearMap k(a.field(), a.src_dim() * b.src_dim(), a.dst_dim() * b.dst_dim());
  for (Index r1 = 0; r1 < a.dst_dim(); ++r1) {
    for (Index c1 = 0; c1 < a.src_dim(); ++c1) {
      const Scalar& x = a.at(r1, c1);
      if (x.is_zero()) continue;
      for (Index r2 = 0; r2 < b.dst_dim(); ++r2) {
        for (Index c2 = 0; c2 < b.src_dim(); ++c2) {
          const Scalar& y = b.at(r2, c2);
          if (y.is_zero()) continue;
          k.at(r1 * b.dst_dim() + r2, c1 * b.src_dim() + c2) = x * y;
        }
      }
    }
  }
  return k;
}

}  // namespace hopf
