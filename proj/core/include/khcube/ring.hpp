#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace khcube {

/// Coefficient ring tag: the integers, the rationals, or a prime field.
struct Ring {
  enum class Kind { Z, Q, Fp };
  Kind kind = Kind::Z;
  std::uint32_t p = 0;

  static Ring integers() { return {Kind::Z, 0}; }
  static Ring rationals() { return {Kind::Q, 0}; }
  /// Throws ValidationError unless p is a prime below 2^31.
  static Ring prime_field(std::uint32_t p);
  /// Accepts Z, Q, F2, F<p> and Fp=<p>.
  static Ring parse(std::string_view text);

  bool is_field() const { return kind != Kind::Z; }
  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

}  // namespace khcube
