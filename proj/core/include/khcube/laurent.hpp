#pragma once

#include <map>
#include <string>

#include "khcube/integer.hpp"

namespace khcube {

/// Integer Laurent polynomial in one variable; zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(const Integer& c, int exponent);
  static Laurent constant(const Integer& c) { return monomial(c, 0); }

  const std::map<int, Integer>& terms() const { return terms_; }
  Integer coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;  // requires nonzero
  int max_degree() const;

  void add(int exponent, const Integer& c);
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent pow(int n) const;
  Laurent shifted(int by) const;

  /// Exact division; ContractViolation if the divisor does not divide.
  Laurent divided_by(const Laurent& divisor) const;

  /// e.g. "q^-1 + q", "-q^3 + 2 - q^-2"... terms in ascending exponent order.
  std::string to_string(char var = 'q') const;

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  std::map<int, Integer> terms_;
};

}  // namespace khcube
