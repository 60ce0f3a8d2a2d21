#include "hopfxyz/linalg.hpp"

#include <utility>

#include "hopfxyz/errors.hpp"

namespace hopf {

namespace {

using Rows = std::vector<Vector>;

Rows to_rows(const LinearMap& m) {
  Rows rows(m.dst_dim(), zeros(m.field(), m.src_dim()));
  for (Index r = 0; r < m.dst_dim(); ++r) {
    for (Index c = 0; c < m.src_dim(); ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(Rows& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c].is_zero()) continue;
      const Scalar f = -rows[o][c];
      for (std::size_t k = c; k < rows[o].size(); ++k) {
        if (!rows[r][k].is_zero()) rows[o][k].add_mul(f, rows[r][k]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const LinearMap& m) {
  Rows rows = to_rows(m);
  return rref(rows, m.src_dim()).size();
}

std::vector<Vector> kernel(const LinearMap& m) {
  Rows rows = to_rows(m);
  const auto pivots = rref(rows, m.src_dim());
  std::vector<bool> is_pivot(m.src_dim(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.src_dim(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zeros(m.field(), m.src_dim());
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearMap> try_inverse(const LinearMap& m) {
  if (m.src_dim() != m.dst_dim()) throw DimensionMismatch("inverse of a non-square matrix");
  const Index n = m.src_dim();
  Rows rows = to_rows(m);
  for (Index r = 0; r < n; ++r) {
    rows[r].resize(2 * n, Scalar::zero(m.field()));
    rows[r][n + r] = Scalar::one(m.field());
  }
  const auto pivots = rref(rows, n);
  if (pivots.size() != n) return std::nullopt;
  LinearMap inv(m.field(), n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) inv.at(r, c) = rows[r][n + c];
  }
  return inv;
}

}  // namespace hopf
