#include "khcube/integer.hpp"

#include <limits>
#include <ostream>

#include "khcube/errors.hpp"

namespace khcube {

namespace {

bool fits_int64(const mpz_class& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

mpz_class to_mpz_small(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Integer::Integer(const mpz_class& v) { assign_mpz(v); }

Integer Integer::parse(std::string_view text) {
  mpz_class v;
  if (text.empty() || v.set_str(std::string(text), 10) != 0) {
    throw ValidationError("not a decimal integer: '" + std::string(text) + "'");
  }
  return Integer(v);
}

Integer::Integer(const Integer& other) : small_(other.small_) {
  if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
  if (this != &other) {
    small_ = other.small_;
    if (other.big_) {
      big_ = std::make_unique<mpz_class>(*other.big_);
    } else {
      big_.reset();
    }
  }
  return *this;
}

void Integer::assign_mpz(const mpz_class& v) {
  if (fits_int64(v)) {
    small_ = v.get_si();
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : to_mpz_small(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

Integer Integer::abs() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) {
    return Integer(small_ < 0 ? -small_ : small_);
  }
  mpz_class v = to_mpz();
  mpz_abs(v.get_mpz_t(), v.get_mpz_t());
  return Integer(v);
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_mpz(to_mpz() + rhs.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_mpz(to_mpz() - rhs.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_mpz(to_mpz() * rhs.to_mpz());
  return *this;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

void Integer::divmod(const Integer& a, const Integer& b, Integer& quot, Integer& rem) {
  if (b.is_zero()) throw ContractViolation("Integer::divmod: division by zero");
  if (!a.big_ && !b.big_ &&
      !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    quot = Integer(a.small_ / b.small_);
    rem = Integer(a.small_ % b.small_);
    return;
  }
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  quot = Integer(q);
  rem = Integer(r);
}

Integer Integer::exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw ContractViolation("Integer::exact_div: division by zero");
  if (!a.big_ && !b.big_ &&
      !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<std::int64_t>::min() &&
      b.small_ != std::numeric_limits<std::int64_t>::min()) {
    std::int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    std::int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

std::uint32_t Integer::mod(std::uint32_t p) const {
  if (!big_) {
    std::int64_t r = small_ % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }
  return static_cast<std::uint32_t>(mpz_fdiv_ui(big_->get_mpz_t(), p));
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never fits in int64
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering Integer::compare_abs(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<std::int64_t>::min() &&
      b.small_ != std::numeric_limits<std::int64_t>::min()) {
    std::int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    std::int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    return x <=> y;
  }
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  int c = mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace khcube
