#include "bott/clifford.hpp"

#include <bit>

namespace bott {

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
  int swaps = 0;
  for (std::uint32_t rest = b.support; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    // Moving e_j left past every e_i (i > j) of a.
    swaps += std::popcount(a.support >> (j + 1));
  }
  swaps += std::popcount(a.support & b.support);
  const int sign = a.sign * b.sign * ((swaps & 1) ? -1 : 1);
  return {sign, a.support ^ b.support};
}

CliffordElement clifford_inverse(const CliffordElement& a) {
  // e_I^2 is a scalar +-1, so e_I^{-1} = e_I^2 * e_I.
  const CliffordElement sq = clifford_mul(a, a);
  return {a.sign * sq.sign, a.support};
}

std::string format_clifford(const CliffordElement& a) {
  std::string s = a.sign < 0 ? "-" : "+";
  if (a.support == 0) return s + "1";
  for (std::uint32_t rest = a.support; rest; rest &= rest - 1) s += "e" + std::to_string(std::countr_zero(rest) + 1);
  return s;
}

}  // namespace bott
