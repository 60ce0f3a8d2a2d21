#include <exception>
#include <mutex>

#include "hopfxyz/errors.hpp"
#include "hopfxyz/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopf::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

namespace {

// Exceptions must not escape an OpenMP region; park the first one and
// rethrow after the join.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!ptr_) ptr_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (ptr_) std::rethrow_exception(ptr_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr ptr_;
};

}  // namespace

Vector bilinear(const BilinearTable& t, const Vector& x, const Vector& y) {
  if (x.size() != t.left_dim() || y.size() != t.right_dim()) {
    throw DimensionMismatch("bilinear: argument sizes");
  }
  const long left = t.left_dim();
  Vector total = zeros(t.field(), t.out_dim());
  std::mutex mu;
#pragma omp parallel
  {
    Vector acc = zeros(t.field(), t.out_dim());
    Scalar xy;
#pragma omp for schedule(dynamic, 4) nowait
    for (long i = 0; i < left; ++i) {
      if (x[i].is_zero()) continue;
      for (Index j = 0; j < t.right_dim(); ++j) {
        if (y[j].is_zero()) continue;
        const auto row = t.at(static_cast<Index>(i), j);
        if (row.empty()) continue;
        xy = x[i] * y[j];
        axpy(acc, xy, row);
      }
    }
    std::lock_guard lock(mu);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (!acc[k].is_zero()) total[k] += acc[k];
    }
  }
  return total;
}

Vector apply(const LinearMap& m, const Vector& x) {
  if (x.size() != m.src_dim()) throw DimensionMismatch("apply: argument size");
  Vector out = zeros(m.field(), m.dst_dim());
  const long rows = m.dst_dim();
#pragma omp parallel for schedule(static)
  for (long r = 0; r < rows; ++r) {
    for (Index c = 0; c < m.src_dim(); ++c) {
      const Scalar& a = m.at(static_cast<Index>(r), c);
      if (!a.is_zero() && !x[c].is_zero()) out[r].add_mul(a, x[c]);
    }
  }
  return out;
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
  if (a.src_dim() != b.dst_dim()) throw DimensionMismatch("compose: inner dimensions");
  LinearMap out(a.field(), b.src_dim(), a.dst_dim());
  const long rows = a.dst_dim();
#pragma omp parallel for schedule(dynamic, 8)
  for (long r = 0; r < rows; ++r) {
    for (Index k = 0; k < a.src_dim(); ++k) {
      const Scalar& x = a.at(static_cast<Index>(r), k);
      if (x.is_zero()) continue;
      for (Index c = 0; c < b.src_dim(); ++c) {
        const Scalar& y = b.at(k, c);
        if (!y.is_zero()) out.at(static_cast<Index>(r), c).add_mul(x, y);
      }
    }
  }
  return out;
}

BilinearTable tabulate(FieldSpec field, Index left, Index right, Index out,
                       const BasisOracle& oracle) {
  const long pairs = static_cast<long>(left) * right;
  std::vector<SparseVec> rows(pairs);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
  for (long r = 0; r < pairs; ++r) {
    slot.run([&] { rows[r] = oracle(static_cast<Index>(r / right), static_cast<Index>(r % right)); });
  }
  slot.rethrow();
  return BilinearTable::from_rows(field, left, right, out, std::move(rows));
}

}  // namespace parallel
}  // namespace hopf::kernels
