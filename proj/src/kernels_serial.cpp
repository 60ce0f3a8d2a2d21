#include "hopfxyz/errors.hpp"
#include "hopfxyz/kernels.hpp"

namespace hopf::kernels::serial {

Vector bilinear(const BilinearTable& t, const Vector& x, const Vector& y) {
  if (x.size() != t.left_dim() || y.size() != t.right_dim()) {
    throw DimensionMismatch("bilinear: argument sizes");
  }
  Vector acc = zeros(t.field(), t.out_dim());
  Scalar xy;
  for (Index i = 0; i < t.left_dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < t.right_dim(); ++j) {
      if (y[j].is_zero()) continue;
      const auto row = t.at(i, j);
      if (row.empty()) continue;
      xy = x[i] * y[j];
      axpy(acc, xy, row);
    }
  }
  return acc;
}

Vector apply(const LinearMap& m, const Vector& x) {
  if (x.size() != m.src_dim()) throw DimensionMismatch("apply: argument size");
  Vector out = zeros(m.field(), m.dst_dim());
  for (Index r = 0; r < m.dst_dim(); ++r) {
    for (Index c = 0; c < m.src_dim(); ++c) {
      const Scalar& a = m.at(r, c);
      if (!a.is_zero() && !x[c].is_zero()) out[r].add_mul(a, x[c]);
    }
  }
  return out;
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
  if (a.src_dim() != b.dst_dim()) throw DimensionMismatch("compose: inner dimensions");
  LinearMap out(a.field(), b.src_dim(), a.dst_dim());
  for (Index r = 0; r < a.dst_dim(); ++r) {
    for (Index k = 0; k < a.src_dim(); ++k) {
      const Scalar& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (Index c = 0; c < b.src_dim(); ++c) {
        const Scalar& y = b.at(k, c);
        if (!y.is_zero()) out.at(r, c).add_mul(x, y);
      }
    }
  }
  return out;
}

BilinearTable tabulate(FieldSpec field, Index left, Index right, Index out,
                       const BasisOracle& oracle) {
  std::vector<SparseVec> rows(static_cast<std::size_t>(left) * right);
  for (Index i = 0; i < left; ++i) {
    for (Index j = 0; j < right; ++j) rows[static_cast<std::size_t>(i) * right + j] = oracle(i, j);
  }
  return BilinearTable::from_rows(field, left, right, out, std::move(rows));
}

}  // namespace hopf::kernels::serial
