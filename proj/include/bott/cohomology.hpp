#pragma once

// Mod-2 cohomology rings of real Bott manifolds:
//   H*(M(A); Z_2) = Z_2[x_1..x_n] / (x_j^2 = x_j * sum_i a_{i,j} x_i).
// Elements are kept in square-free normal form, so a class is a set of
// monomials and two classes are equal iff their normal forms are.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bott/bott_matrix.hpp"

namespace bott {

/// Square-free monomial; bit k stands for x_{k+1}.
using Monomial = std::uint32_t;

/// Degree-then-lexicographic order on monomials (x1*x2 < x1*x3 < x2*x3).
bool monomial_less(Monomial a, Monomial b);

class Gf2Poly {
 public:
  Gf2Poly() = default;
  static Gf2Poly one() { return from_terms({0}); }
  static Gf2Poly var(int k) { return from_terms({Monomial{1} << k}); }
  /// Repeated monomials cancel in pairs.
  static Gf2Poly from_terms(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Terms of exactly the given degree.
  Gf2Poly homogeneous(int degree) const;

  Gf2Poly& operator+=(const Gf2Poly& o);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  std::vector<Monomial> terms_;  // sorted by monomial_less, no repeats
};

class CohomRing {
 public:
  /// Non-strictly-upper input is first brought to strictly upper form; the
  /// permutation used is kept in normalization(), and ring variable x_{p(i)+1}
  /// corresponds to the original index i.
  explicit CohomRing(const BottMatrix& m);

  int dim() const { return matrix_.dim(); }
  const BottMatrix& matrix() const { return matrix_; }
  const Permutation& normalization() const { return normalization_; }
  /// y_i = sum_k a_{k,i} x_k, the first Stiefel-Whitney class of the i-th line bundle.
  const std::vector<Gf2Poly>& y() const { return y_; }

  Gf2Poly multiply(const Gf2Poly& p, const Gf2Poly& q) const;
  Gf2Poly multiply_monomials(Monomial s, Monomial t) const;

 private:
  void multiply_by_var(Monomial u, int k, std::vector<std::uint8_t>& acc) const;

  BottMatrix matrix_;
  Permutation normalization_;
  std::vector<std::uint8_t> columns_;
  std::vector<Gf2Poly> y_;
};

CohomRing ring_of(const BottMatrix& m);
Gf2Poly multiply(const CohomRing& r, const Gf2Poly& p, const Gf2Poly& q);

/// w_k = sigma_k(y_1, ..., y_n) in normal form. 0 <= k <= n.
Gf2Poly stiefel_whitney(const CohomRing& r, int k);

/// Dimension of H^k, computed as the rank of the reduced degree-k words in the
/// generators. Throws InvariantViolation unless it equals C(n,k).
int betti_z2(const CohomRing& r, int k);

/// True iff no two columns of m are equal (no 2-subset of columns sums to 0).
bool h2_real_is_zero(const BottMatrix& m);

/// Unreduced expression: each term is a list of 0-based variable indices,
/// repeats allowed; the empty list is the unit.
using PolyExpr = std::vector<std::vector<int>>;

/// Parses text like "x1*x3 + x2^2 + 1" or "0". Throws InputError.
PolyExpr parse_poly_expr(std::string_view text);
/// Normal form of an expression in r. Variables past r.dim() are rejected.
Gf2Poly reduce(const CohomRing& r, const PolyExpr& expr);
/// "x1*x2 + x1*x3", "1", or "0".
std::string format_poly(const Gf2Poly& p);

}  // namespace bott
