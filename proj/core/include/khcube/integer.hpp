#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace khcube {

/// Arbitrary-precision signed integer with an inline 64-bit fast path.
///
/// Values that fit in int64_t never allocate; arithmetic that would overflow
/// transparently promotes to GMP and demotes again once the result fits.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v);
  static Integer parse(std::string_view text);

  Integer(const Integer& other);
  Integer& operator=(const Integer& other);
  Integer(Integer&&) noexcept = default;
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  bool is_small() const { return !big_; }
  std::int64_t small_value() const { return small_; }
  mpz_class to_mpz() const;
  std::string to_string() const;

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_unit() const { return !big_ && (small_ == 1 || small_ == -1); }
  int sign() const;
  Integer abs() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);
  Integer operator-() const;

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  /// Truncating quotient and remainder (C semantics); divisor must be nonzero.
  static void divmod(const Integer& a, const Integer& b, Integer& quot, Integer& rem);
  /// a / b where b is known to divide a.
  static Integer exact_div(const Integer& a, const Integer& b);
  static Integer gcd(const Integer& a, const Integer& b);

  /// Value modulo p in [0, p).
  std::uint32_t mod(std::uint32_t p) const;

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);
  /// Compares |a| with |b|.
  static std::strong_ordering compare_abs(const Integer& a, const Integer& b);

 private:
  void assign_mpz(const mpz_class& v);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace khcube
