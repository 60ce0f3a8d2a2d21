#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hopfxyz/scalar.hpp"

namespace hopf {

using Index = std::uint32_t;

struct Term {
  Index index;
  Scalar coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sorted by index, no repeated indices, no zero coefficients (after canonicalize).
using SparseVec = std::vector<Term>;

void canonicalize(SparseVec& v);
SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, FieldSpec field, std::size_t n);
/// acc += c * v, for a dense accumulator.
void axpy(Vector& acc, const Scalar& c, std::span<const Term> v);
/// out += c * v, appending terms (not canonical).
void append_scaled(SparseVec& out, const Scalar& c, std::span<const Term> v);

/// Sparse linear map stored by source columns: column j is the image of e_j.
class SparseColumns {
 public:
  SparseColumns() = default;
  SparseColumns(FieldSpec field, Index src_dim, Index dst_dim);

  FieldSpec field() const { return field_; }
  Index src_dim() const { return static_cast<Index>(cols_.size()); }
  Index dst_dim() const { return dst_dim_; }

  const SparseVec& column(Index j) const { return cols_.at(j); }
  /// Replaces column j; the vector is canonicalized and range-checked.
  void set_column(Index j, SparseVec v);

  SparseVec apply(std::span<const Term> x) const;
  Vector apply(const Vector& x) const;

  friend bool operator==(const SparseColumns&, const SparseColumns&);

 private:
  FieldSpec field_;
  Index dst_dim_ = 0;
  std::vector<SparseVec> cols_;
};

/// A bilinear map k^L x k^R -> k^O given by structure constants
/// (i, j) -> sum_k t_{ij}^k e_k, in compressed row form.
class BilinearTable {
 public:
  BilinearTable() = default;

  class Builder {
   public:
    Builder(FieldSpec field, Index left, Index right, Index out);
    void add(Index i, Index j, Index k, const Scalar& s);
    void set(Index i, Index j, SparseVec v);
    BilinearTable build() &&;

   private:
    FieldSpec field_;
    Index left_, right_, out_;
    std::vector<SparseVec> rows_;
  };

  /// rows[i * right + j] is the product of e_i and e_j.
  static BilinearTable from_rows(FieldSpec field, Index left, Index right, Index out,
                                 std::vector<SparseVec> rows);

  FieldSpec field() const { return field_; }
  Index left_dim() const { return left_; }
  Index right_dim() const { return right_; }
  Index out_dim() const { return out_; }
  std::size_t nnz() const { return terms_.size(); }

  std::span<const Term> at(Index i, Index j) const {
    const std::size_t r = static_cast<std::size_t>(i) * right_ + j;
    return {terms_.data() + offsets_[r], terms_.data() + offsets_[r + 1]};
  }

  /// Bilinear extension to sparse arguments (result canonical).
  SparseVec apply(std::span<const Term> x, std::span<const Term> y) const;

  friend bool operator==(const BilinearTable&, const BilinearTable&);

 private:
  FieldSpec field_;
  Index left_ = 0, right_ = 0, out_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Term> terms_;
};

/// Dense matrix between based spaces; entry (r, c) is the e_r coefficient of
/// the image of e_c.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(FieldSpec field, Index src_dim, Index dst_dim);
  static LinearMap identity(FieldSpec field, Index n);
  static LinearMap from_columns(const SparseColumns& cols);

  FieldSpec field() const { return field_; }
  Index src_dim() const { return src_; }
  Index dst_dim() const { return dst_; }

  Scalar& at(Index r, Index c) { return data_[static_cast<std::size_t>(r) * src_ + c]; }
  const Scalar& at(Index r, Index c) const {
    return data_[static_cast<std::size_t>(r) * src_ + c];
  }

  SparseVec column(Index c) const;
  void set_column(Index c, std::span<const Term> v);
  SparseColumns to_columns() const;
  LinearMap transpose() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  FieldSpec field_;
  Index src_ = 0, dst_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product: (A (x) B)(e_i (x) e_j) = A e_i (x) B e_j, left factor major.
LinearMap kronecker(const LinearMap& a, const LinearMap& b);

}  // namespace hopf
