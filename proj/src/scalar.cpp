#include "hopfxyz/scalar.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include "hopfxyz/errors.hpp"

namespace hopf {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so negation never overflows.
bool fits(i128 v) { return v > kMin && v <= kMax; }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 mag = abs128(v);
  mpz_class out(static_cast<unsigned long>(mag >> 64));
  out <<= 64;
  out += mpz_class(static_cast<unsigned long>(mag & 0xffffffffffffffffULL));
  if (neg) out = -out;
  return out;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw InvalidInput("field characteristic must be a prime below 2^31, got " +
                       std::to_string(p));
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(const Scalar& other)
    : p_(other.p_),
      num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    p_ = other.p_;
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Scalar Scalar::zero(FieldSpec field) {
  Scalar s;
  s.p_ = field.characteristic();
  return s;
}

Scalar Scalar::one(FieldSpec field) { return from_int(field, 1); }

Scalar Scalar::from_int(FieldSpec field, std::int64_t value) {
  Scalar s;
  s.p_ = field.characteristic();
  if (s.p_ != 0) {
    std::int64_t r = value % static_cast<std::int64_t>(s.p_);
    if (r < 0) r += s.p_;
    s.num_ = r;
  } else {
    s.assign_i128(value, 1);
  }
  return s;
}

Scalar Scalar::from_mpq(FieldSpec field, const mpq_class& value) {
  Scalar s;
  s.p_ = field.characteristic();
  if (s.p_ == 0) {
    mpq_class v = value;
    v.canonicalize();
    s.assign_mpq(std::move(v));
    return s;
  }
  const std::uint32_t den = reduce_mod(value.get_den(), s.p_);
  if (den == 0) throw DivisionByZero("denominator vanishes in " + field.to_string());
  const std::uint64_t num = reduce_mod(value.get_num(), s.p_);
  s.num_ = static_cast<std::int64_t>(num * mod_inverse(den, s.p_) % s.p_);
  return s;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string t(text);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  const auto slash = t.find('/');
  std::string num_text = t.substr(0, slash);
  std::string den_text = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!valid_int(num_text, true) || !valid_int(den_text, false)) {
    throw ParseError("malformed scalar literal '" + std::string(text) + "'");
  }
  mpz_class num(num_text, 10);
  mpz_class den(den_text, 10);
  if (den == 0) throw DivisionByZero("zero denominator in literal '" + std::string(text) + "'");
  return from_mpq(field, mpq_class(num, den));
}

FieldSpec Scalar::field() const {
  return FieldSpec(p_);
}

bool Scalar::is_zero() const { return is_small() && num_ == 0; }

bool Scalar::is_one() const { return is_small() && num_ == 1 && den_ == 1; }

mpq_class Scalar::to_mpq() const {
  if (p_ != 0) throw FieldMismatch("to_mpq on a prime-field element");
  return as_mpq();
}

std::uint32_t Scalar::residue() const {
  if (p_ == 0) throw FieldMismatch("residue of a rational");
  return static_cast<std::uint32_t>(num_);
}

std::string Scalar::to_string() const {
  if (p_ != 0 || is_small()) {
    if (den_ == 1 || p_ != 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  return big_->get_str(10);
}

void Scalar::check_same_field(const Scalar& other) const {
  if (p_ != other.p_) {
    throw FieldMismatch("mixed fields: " + field().to_string() + " and " +
                        other.field().to_string());
  }
}

mpq_class Scalar::as_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(mpq_numref(q.get_mpq_t()), num_);
  mpz_set_si(mpq_denref(q.get_mpq_t()), den_);
  return q;
}

void Scalar::assign_i128(i128 num, i128 den) {
  // den > 0
  if (den != 1) {
    const u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
  }
  if (fits(num) && fits(den)) {
    big_.reset();
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    return;
  }
  assign_mpq(mpq_class(to_mpz(num), to_mpz(den)));
}

void Scalar::assign_mpq(mpq_class value) {
  // value is canonical
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
    big_.reset();
    num_ = n.get_si();
    den_ = d.get_si();
    return;
  }
  if (big_) {
    *big_ = std::move(value);
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
  num_ = 0;
  den_ = 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar out;
  out.p_ = p_;
  if (p_ != 0) {
    out.num_ = mod_inverse(static_cast<std::uint32_t>(num_), p_);
    return out;
  }
  if (is_small()) {
    out.num_ = num_ < 0 ? -den_ : den_;
    out.den_ = num_ < 0 ? -num_ : num_;
    return out;
  }
  mpq_class inv = 1 / *big_;
  out.assign_mpq(std::move(inv));
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (p_ != 0) {
    out.num_ = num_ == 0 ? 0 : p_ - num_;
  } else if (is_small()) {
    out.num_ = -num_;
  } else {
    *out.big_ = -*big_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    num_ = (num_ + rhs.num_) % p_;
    return *this;
  }
  if (is_small() && rhs.is_small()) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign_i128(static_cast<i128>(num_) + rhs.num_, 1);
    } else {
      const i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
      assign_i128(n, static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_mpq(as_mpq() + rhs.as_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
  lhs.check_same_field(rhs);
  Scalar out;
  out.p_ = lhs.p_;
  if (lhs.p_ != 0) {
    out.num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(lhs.num_) *
                                         static_cast<std::uint64_t>(rhs.num_) % lhs.p_);
    return out;
  }
  if (lhs.is_small() && rhs.is_small()) {
    if (lhs.den_ == 1 && rhs.den_ == 1) {
      out.assign_i128(static_cast<Scalar::i128>(lhs.num_) * rhs.num_, 1);
      return out;
    }
    // cross-reduce so the result is already canonical
    const std::uint64_t g1 = gcd64(lhs.num_ < 0 ? -lhs.num_ : lhs.num_, rhs.den_);
    const std::uint64_t g2 = gcd64(rhs.num_ < 0 ? -rhs.num_ : rhs.num_, lhs.den_);
    const std::int64_t a = g1 ? lhs.num_ / static_cast<std::int64_t>(g1) : 0;
    const std::int64_t d2 = g1 ? rhs.den_ / static_cast<std::int64_t>(g1) : rhs.den_;
    const std::int64_t b = g2 ? rhs.num_ / static_cast<std::int64_t>(g2) : 0;
    const std::int64_t d1 = g2 ? lhs.den_ / static_cast<std::int64_t>(g2) : lhs.den_;
    const Scalar::i128 num = static_cast<Scalar::i128>(a) * b;
    const Scalar::i128 den = num == 0 ? 1 : static_cast<Scalar::i128>(d1) * d2;
    if (fits(num) && fits(den)) {
      out.num_ = static_cast<std::int64_t>(num);
      out.den_ = static_cast<std::int64_t>(den);
    } else {
      out.assign_i128(num, den);
    }
    return out;
  }
  out.assign_mpq(lhs.as_mpq() * rhs.as_mpq());
  return out;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  *this = *this * rhs;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  a.check_same_field(b);
  if (p_ != 0) {
    num_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(a.num_) *
                                          static_cast<std::uint64_t>(b.num_) +
                                      static_cast<std::uint64_t>(num_)) %
                                     p_);
    return;
  }
  if (is_small() && a.is_small() && b.is_small() && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    // |a*b| < 2^126 so the sum cannot overflow 128 bits
    assign_i128(static_cast<i128>(a.num_) * b.num_ + num_, 1);
    return;
  }
  *this += a * b;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.p_ != rhs.p_) return false;
  if (lhs.is_small() != rhs.is_small()) return false;
  if (lhs.is_small()) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  return *lhs.big_ == *rhs.big_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Vector zeros(FieldSpec field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector basis_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v = zeros(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ']';
  return os.str();
}

}  // namespace hopf
