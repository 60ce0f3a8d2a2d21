#pragma once

#include <exception>
#include <mutex>

namespace hopf {

template <class Body>
CheckReport check_over(std::size_t n, Body&& body) {
  std::vector<CheckReport> parts(n);
  std::exception_ptr error;
  std::mutex mu;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i), parts[i]);
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  CheckReport total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace hopf
