#include "khcube/laurent.hpp"

#include <sstream>

#include "khcube/errors.hpp"

namespace khcube {

Laurent Laurent::monomial(const Integer& c, int exponent) {
  Laurent p;
  p.add(exponent, c);
  return p;
}

Integer Laurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int Laurent::min_degree() const {
  if (terms_.empty()) throw ContractViolation("degree of the zero polynomial");
  return terms_.begin()->first;
}

int Laurent::max_degree() const {
  if (terms_.empty()) throw ContractViolation("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

void Laurent::add(int exponent, const Integer& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add(ea + eb, ca * cb);
  return p;
}

Laurent Laurent::pow(int n) const {
  if (n < 0) throw ContractViolation("negative power of a Laurent polynomial");
  Laurent r = constant(1), base = *this;
  for (; n; n >>= 1, base = base * base)
    if (n & 1) r = r * base;
  return r;
}

Laurent Laurent::shifted(int by) const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + by, c);
  return p;
}

Laurent Laurent::divided_by(const Laurent& divisor) const {
  if (divisor.is_zero()) throw ContractViolation("division by the zero polynomial");
  Laurent rem = *this, quot;
  const int dmax = divisor.max_degree();
  const Integer& lead = divisor.terms_.rbegin()->second;
  const int dspan = dmax - divisor.min_degree();
  while (!rem.is_zero() && rem.max_degree() - rem.min_degree() >= dspan) {
    int shift = rem.max_degree() - dmax;
    Integer q, r;
    Integer::divmod(rem.terms_.rbegin()->second, lead, q, r);
    if (!r.is_zero()) break;
    Laurent step = monomial(q, shift);
    quot += step;
    rem -= step * divisor;
  }
  if (!rem.is_zero()) throw ContractViolation("Laurent division is not exact");
  return quot;
}

std::string Laurent::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << '-';
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Integer(1);
    if (e == 0) {
      out << mag;
      continue;
    }
    if (!unit) out << mag;
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace khcube
