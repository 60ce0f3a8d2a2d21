#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hopf {

/// The ground field: the rationals (p == 0) or a prime field F_p.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }
  /// Throws InvalidInput unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint32_t characteristic() const { return p_; }

  std::string to_string() const;

  friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

 private:
  friend class Scalar;
  explicit constexpr FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element.
///
/// Rationals are stored inline as a reduced int64 fraction while they fit and
/// spill to a GMP rational otherwise, so every value has exactly one
/// representation. Prime-field elements are residues in [0, p).
class Scalar {
 public:
  Scalar() noexcept = default;  // rational zero
  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  static Scalar zero(FieldSpec field);
  static Scalar one(FieldSpec field);
  static Scalar from_int(FieldSpec field, std::int64_t value);
  static Scalar from_mpq(FieldSpec field, const mpq_class& value);
  /// Accepts "3", "-5/7", "+4". Over F_p the value is reduced mod p.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Rationals only.
  mpq_class to_mpq() const;
  /// Prime fields only.
  std::uint32_t residue() const;

  std::string to_string() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  /// *this += a * b without a temporary on the fast paths.
  void add_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

 private:
  using i128 = __int128;

  bool is_small() const { return big_ == nullptr; }
  void check_same_field(const Scalar& other) const;
  void assign_i128(i128 num, i128 den);
  void assign_mpq(mpq_class value);
  mpq_class as_mpq() const;

  std::uint32_t p_ = 0;
  std::int64_t num_ = 0;  // residue when p_ != 0
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

Vector zeros(FieldSpec field, std::size_t n);
Vector basis_vector(FieldSpec field, std::size_t n, std::size_t i);
std::string to_string(const Vector& v);

}  // namespace hopf
