#include "khcube/ring.hpp"

#include <charconv>

#include "khcube/errors.hpp"

namespace khcube {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw ValidationError("F_p needs a prime p below 2^31, got " + std::to_string(p));
  return {Kind::Fp, p};
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp=")) digits = text.substr(3);
  else if (text.starts_with("F")) digits = text.substr(1);
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw ValidationError("unknown ring '" + std::string(text) + "' (use Z, Q, F2 or Fp=<p>)");
  return prime_field(p);
}

std::string Ring::to_string() const {
  switch (kind) {
    case Kind::Z: return "Z";
    case Kind::Q: return "Q";
    case Kind::Fp: return p == 2 ? "F2" : "Fp=" + std::to_string(p);
  }
  return "?";
}

}  // namespace khcube
