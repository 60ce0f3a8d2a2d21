#pragma once

#include <gtest/gtest.h>

#include "hopfxyz/algebra.hpp"
#include "hopfxyz/catalog.hpp"
#include "hopfxyz/kernels.hpp"
#include "hopfxyz/linalg.hpp"

namespace hopf {
inline void PrintTo(const Term& t, std::ostream* os) { *os << t.coef << "*e" << t.index; }
}  // namespace hopf

namespace hopf::testing {

inline const FieldSpec Q = FieldSpec::rationals();

inline Scalar sc(std::int64_t v, FieldSpec f = Q) { return Scalar::from_int(f, v); }

inline LinearMap mat(FieldSpec f, const std::vector<std::vector<std::int64_t>>& rows) {
  const auto dst = static_cast<Index>(rows.size());
  const auto src = static_cast<Index>(rows.front().size());
  LinearMap m(f, src, dst);
  for (Index r = 0; r < dst; ++r) {
    for (Index c = 0; c < src; ++c) m.at(r, c) = sc(rows[r][c], f);
  }
  return m;
}

inline LinearMap compose(const LinearMap& a, const LinearMap& b) {
  return kernels::serial::compose(a, b);
}

inline LinearMap power(const LinearMap& m, int e) {
  LinearMap out = LinearMap::identity(m.field(), m.src_dim());
  for (int i = 0; i < e; ++i) out = compose(m, out);
  return out;
}

/// Span membership via rank.
inline bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  const auto n = static_cast<Index>(v.size());
  const FieldSpec f = v.front().field();
  LinearMap a(f, static_cast<Index>(basis.size()), n), b(f, static_cast<Index>(basis.size() + 1), n);
  for (Index c = 0; c < basis.size(); ++c) {
    for (Index r = 0; r < n; ++r) a.at(r, c) = b.at(r, c) = basis[c][r];
  }
  for (Index r = 0; r < n; ++r) b.at(r, static_cast<Index>(basis.size())) = v[r];
  return basis.empty() ? std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })
                       : rank(a) == rank(b);
}

inline std::vector<CatalogSpec> small_catalog() {
  std::vector<CatalogSpec> out;
  for (const char* s : {"cyclic:1", "cyclic:2", "cyclic:3", "dual_cyclic:2", "dual_cyclic:3",
                        "sweedler4", "taft:2:5", "taft:3:7", "cyclic:4@5", "sweedler4@7"}) {
    out.push_back(CatalogSpec::parse(s));
  }
  return out;
}

}  // namespace hopf::testing
