#include "hopfxyz/check.hpp"

#include <algorithm>
#include <sstream>

namespace hopf {

std::string CheckMode::to_string() const {
  if (is_exhaustive()) return "exhaustive";
  return "random:" + std::to_string(trials) + " (seed " + std::to_string(seed) + ")";
}

Vector random_vector(FieldSpec field, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-kRandomCoordBound, kRandomCoordBound);
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_int(field, dist(rng)));
  return v;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

std::string Violation::to_string() const {
  std::ostringstream os;
  os << axiom << " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i];
  os << "): lhs = " << hopf::to_string(lhs) << ", rhs = " << hopf::to_string(rhs);
  return os.str();
}

bool CheckReport::expect_equal(const std::string& axiom, std::vector<std::size_t> witness,
                               const Vector& lhs, const Vector& rhs) {
  ++checked_;
  if (lhs == rhs) return true;
  fail({axiom, std::move(witness), lhs, rhs});
  return false;
}

bool CheckReport::expect_equal(const std::string& axiom, std::vector<std::size_t> witness,
                               const SparseVec& lhs, const SparseVec& rhs, FieldSpec field,
                               std::size_t dim) {
  ++checked_;
  const bool same = std::equal(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                               [](const Term& a, const Term& b) {
                                 return a.index == b.index && a.coef == b.coef;
                               });
  if (same) return true;
  fail({axiom, std::move(witness), to_dense(lhs, field, dim), to_dense(rhs, field, dim)});
  return false;
}

void CheckReport::fail(Violation v) {
  ++violation_count_;
  if (violations_.size() < kMaxStored) violations_.push_back(std::move(v));
}

void CheckReport::merge(const CheckReport& other) {
  checked_ += other.checked_;
  violation_count_ += other.violation_count_;
  for (const auto& v : other.violations_) {
    if (violations_.size() < kMaxStored) violations_.push_back(v);
  }
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  if (passed()) {
    os << "pass (" << checked_ << " checks)";
  } else {
    os << "FAIL (" << violation_count_ << " of " << checked_
       << " checks); first: " << violations_.front().to_string();
  }
  return os.str();
}

}  // namespace hopf
