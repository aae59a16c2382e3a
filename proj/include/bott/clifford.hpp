#pragma once

// Signed basis monomials +-e_I of the Clifford algebra with e_i^2 = -1 and
// e_i e_j = -e_j e_i. They form a finite group containing the lifts of the
// diagonal matrices in SO(n) to Spin(n).

#include <cstdint>
#include <string>

namespace bott {

struct CliffordElement {
  int sign = 1;               ///< +1 or -1
  std::uint32_t support = 0;  ///< bit i stands for e_{i+1}; 0 is the scalar

  static CliffordElement scalar(int s) { return {s, 0}; }
  static CliffordElement basis(std::uint32_t support) { return {1, support}; }
  bool is_scalar() const { return support == 0; }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
};

/// Product in sorted-support form. The sign picks up one factor -1 per
/// transposition needed to merge the sorted supports and one per shared index.
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b);
CliffordElement clifford_inverse(const CliffordElement& a);

std::string format_clifford(const CliffordElement& a);

}  // namespace bott
