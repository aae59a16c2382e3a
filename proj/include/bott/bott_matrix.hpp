#pragma once

// Bott matrices, the three moves that generate diffeomorphism of real Bott
// manifolds, and enumeration of strictly upper triangular representatives.
//
// Storage: an n x n binary matrix with n <= 8 packed into one 64-bit word,
// row i in byte i, entry (i,j) at bit 8*i + j. Indices are 0-based.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bott/gf2.hpp"

namespace bott {

inline constexpr int kMaxDim = 8;
inline constexpr int kDefaultEnumerateBound = 7;

/// A permutation of {0..n-1}; image(i) is the new position of index i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  static Permutation reversal(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }
  Permutation inverse() const;
  /// (this * o)(i) = this(o(i)).
  Permutation compose(const Permutation& o) const;
  bool is_identity() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

class BottMatrix {
 public:
  BottMatrix() = default;

  /// Checks the Bott property and throws NotBottMatrix naming the offending
  /// diagonal entry or cycle.
  static BottMatrix validate(int n, std::uint64_t packed);
  static BottMatrix validate(const gf2::Gf2Mat& m);
  /// Wraps `packed` without checking. Caller guarantees the Bott property.
  static BottMatrix unchecked(int n, std::uint64_t packed) { return BottMatrix(n, packed); }

  static BottMatrix zero(int n);
  /// a_{i,i+1} = 1, everything else 0.
  static BottMatrix superdiagonal(int n);

  int dim() const { return n_; }
  std::uint64_t packed() const { return bits_; }
  bool at(int i, int j) const { return (bits_ >> (8 * i + j)) & 1U; }
  /// Row i as a column bitmask.
  std::uint8_t row(int i) const { return static_cast<std::uint8_t>(bits_ >> (8 * i)); }
  /// Column j as a row bitmask.
  std::uint8_t col(int j) const;
  bool is_strict_upper() const;

  gf2::Gf2Mat to_gf2() const;
  /// Rows as '0'/'1' strings.
  std::vector<std::string> row_strings() const;

  friend bool operator==(const BottMatrix&, const BottMatrix&) = default;

 private:
  BottMatrix(int n, std::uint64_t bits) : n_(n), bits_(bits) {}
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Byte-wise mask of the n x n block.
std::uint64_t block_mask(int n);
/// Mask of the entries on or below the diagonal of the n x n block.
std::uint64_t lower_mask(int n);

struct StrictForm {
  Permutation perm;  ///< op1(m, perm) == matrix
  BottMatrix matrix;
};

/// Topological sort of the digraph k -> i (a_{k,i} = 1), smallest available
/// original index first.
StrictForm to_strict_upper(const BottMatrix& m);

/// Conjugation P m P^{-1}: entry (i,j) moves to (p(i), p(j)).
BottMatrix op1(const BottMatrix& m, const Permutation& p);
/// Column j becomes A_{*,j} + a_{k,j} A_{*,k} for every j at once.
BottMatrix op2(const BottMatrix& m, int k);
/// Requires equal columns l and m_idx; row m_idx becomes row l + row m_idx.
BottMatrix op3(const BottMatrix& m, int l, int m_idx);

bool is_orientable(const BottMatrix& m);
std::size_t rank(const BottMatrix& m);
/// rank = n - 1 with n >= 2. On strictly upper input this is cross-checked
/// against the product of superdiagonal entries.
bool is_ghw_rbm(const BottMatrix& m);

/// Number of strictly upper triangular entries, n(n-1)/2.
int strict_upper_bits(int n);
/// Index of a strictly upper matrix. Entry (0,1) is the most significant bit
/// and entries follow row-major order, so index order is the lexicographic
/// order of the row strings read top to bottom.
std::uint64_t strict_upper_index(const BottMatrix& m);
BottMatrix from_strict_upper_index(int n, std::uint64_t index);

/// Visits all 2^{n(n-1)/2} strictly upper triangular matrices in index order.
void enumerate_strict_upper(int n, const std::function<bool(const BottMatrix&)>& visit,
                            int bound = kDefaultEnumerateBound);

/// Lexicographic comparison of row strings read top to bottom.
bool lex_less(const BottMatrix& a, const BottMatrix& b);

}  // namespace bott
