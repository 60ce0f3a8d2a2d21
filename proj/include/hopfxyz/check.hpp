#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hopfxyz/tensor.hpp"

namespace hopf {

/// Coordinates of random test vectors are drawn uniformly from
/// [-kRandomCoordBound, kRandomCoordBound]. By Schwartz-Zippel a nonzero
/// polynomial identity of degree d survives one trial with probability at
/// most d / (2 * kRandomCoordBound + 1); every identity checked here has d <= 4.
inline constexpr std::int64_t kRandomCoordBound = 1'000'000;

struct CheckMode {
  enum class Kind { exhaustive, random };

  Kind kind = Kind::exhaustive;
  std::size_t trials = 20;
  std::uint64_t seed = 0;

  static CheckMode exhaustive() { return {}; }
  static CheckMode random(std::size_t trials, std::uint64_t seed = 0) {
    return {Kind::random, trials, seed};
  }
  /// Exhaustive when dim <= threshold, otherwise `trials` random trials.
  static CheckMode automatic(std::size_t dim, std::size_t threshold, std::size_t trials,
                             std::uint64_t seed = 0) {
    return dim <= threshold ? CheckMode{Kind::exhaustive, trials, seed} : random(trials, seed);
  }

  bool is_exhaustive() const { return kind == Kind::exhaustive; }
  std::string to_string() const;
};

/// Exhaustive algebra-axiom checks are used up to this dimension by default.
inline constexpr std::size_t kExhaustiveAxiomDim = 32;
inline constexpr std::size_t kDefaultTrials = 20;

Vector random_vector(FieldSpec field, std::size_t n, std::mt19937_64& rng);

/// Independent generator for trial `trial` of a run seeded with `seed`, so
/// trials can be evaluated in any order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
  Vector lhs;
  Vector rhs;

  std::string to_string() const;
};

class CheckReport {
 public:
  static constexpr std::size_t kMaxStored = 16;

  bool passed() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t checked() const { return checked_; }
  std::size_t violation_count() const { return violation_count_; }

  /// Counts one checked instance and records a violation when lhs != rhs.
  bool expect_equal(const std::string& axiom, std::vector<std::size_t> witness, const Vector& lhs,
                    const Vector& rhs);
  bool expect_equal(const std::string& axiom, std::vector<std::size_t> witness,
                    const SparseVec& lhs, const SparseVec& rhs, FieldSpec field, std::size_t dim);
  void fail(Violation v);
  void count(std::size_t n = 1) { checked_ += n; }
  void merge(const CheckReport& other);

  /// "pass (N checks)" or "FAIL (k violations); first: ..."
  std::string summary() const;

 private:
  std::vector<Violation> violations_;
  std::size_t checked_ = 0;
  std::size_t violation_count_ = 0;
};

/// Runs body(i, report_i) for i in [0, n) (possibly in parallel) and merges the
/// per-index reports in index order, so the result does not depend on scheduling.
template <class Body>
CheckReport check_over(std::size_t n, Body&& body);

}  // namespace hopf

#include "hopfxyz/check_impl.hpp"
