#pragma once

#include <functional>

#include "hopfxyz/tensor.hpp"

// Hot loops of the library. Each kernel exists twice: a plain serial version
// kept as the reference, and an OpenMP version used by default. Results are
// identical because all arithmetic is exact.
namespace hopf::kernels {

using BasisOracle = std::function<SparseVec(Index, Index)>;

namespace serial {

/// sum_{i,j} x_i y_j T(e_i, e_j)
Vector bilinear(const BilinearTable& t, const Vector& x, const Vector& y);
Vector apply(const LinearMap& m, const Vector& x);
/// a o b
LinearMap compose(const LinearMap& a, const LinearMap& b);
/// Structure constants of a bilinear oracle on all basis pairs.
BilinearTable tabulate(FieldSpec field, Index left, Index right, Index out,
                       const BasisOracle& oracle);

}  // namespace serial

namespace parallel {

Vector bilinear(const BilinearTable& t, const Vector& x, const Vector& y);
Vector apply(const LinearMap& m, const Vector& x);
LinearMap compose(const LinearMap& a, const LinearMap& b);
/// The oracle must be safe to call concurrently.
BilinearTable tabulate(FieldSpec field, Index left, Index right, Index out,
                       const BasisOracle& oracle);

}  // namespace parallel

int max_threads();

}  // namespace hopf::kernels
