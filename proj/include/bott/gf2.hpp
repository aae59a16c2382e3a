#pragma once

// Dense linear algebra over the two-element field on packed 64-bit words.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bott::gf2 {

class Gf2Vec {
 public:
  Gf2Vec() = default;
  explicit Gf2Vec(std::size_t dim);
  /// Low `dim` bits of `bits`; bit k is coordinate k.
  static Gf2Vec from_bits(std::size_t dim, std::uint64_t bits);
  static Gf2Vec unit(std::size_t dim, std::size_t k);

  std::size_t size() const { return dim_; }
  bool get(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1U; }
  void set(std::size_t k, bool v = true);
  void flip(std::size_t k) { words_[k >> 6] ^= std::uint64_t{1} << (k & 63); }

  bool is_zero() const;
  std::size_t weight() const;
  /// Index of the lowest set coordinate, or size() when zero.
  std::size_t lowest() const;
  /// First 64 coordinates as an integer (bit k is coordinate k).
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  std::span<const std::uint64_t> words() const { return words_; }

  Gf2Vec& operator^=(const Gf2Vec& o);
  Gf2Vec& operator&=(const Gf2Vec& o);
  friend Gf2Vec operator^(Gf2Vec a, const Gf2Vec& b) { return a ^= b; }
  friend Gf2Vec operator&(Gf2Vec a, const Gf2Vec& b) { return a &= b; }
  friend bool operator==(const Gf2Vec&, const Gf2Vec&) = default;

  /// Inner product over GF(2).
  bool dot(const Gf2Vec& o) const;
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

class Gf2Mat {
 public:
  Gf2Mat() = default;
  Gf2Mat(std::size_t rows, std::size_t cols);
  explicit Gf2Mat(std::vector<Gf2Vec> rows);
  static Gf2Mat identity(std::size_t n);
  /// rows[i] holds row i as bits (bit j is column j).
  static Gf2Mat from_row_bits(std::size_t cols, std::span<const std::uint64_t> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
  const Gf2Vec& row(std::size_t i) const { return rows_[i]; }
  Gf2Vec& row(std::size_t i) { return rows_[i]; }
  Gf2Vec col(std::size_t j) const;

  Gf2Mat transpose() const;
  Gf2Vec operator*(const Gf2Vec& x) const;
  Gf2Mat operator*(const Gf2Mat& o) const;
  friend bool operator==(const Gf2Mat&, const Gf2Mat&) = default;

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Gf2Vec> rows_;
};

/// Reduced row echelon form; `pivots[r]` is the pivot column of row r.
struct Echelon {
  Gf2Mat reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const Gf2Mat& m);
std::size_t rank(const Gf2Mat& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Gf2Vec> kernel_basis(const Gf2Mat& m);

struct Solution {
  Gf2Vec particular;
  std::vector<Gf2Vec> kernel_basis;
};

/// Solves m x = b. Absent when the system is inconsistent.
std::optional<Solution> solve(const Gf2Mat& m, const Gf2Vec& b);

/// Inverse of a square matrix; absent when singular.
std::optional<Gf2Mat> inverse(const Gf2Mat& m);

/// |GL(n,2)| = prod_{i<n} (2^n - 2^i).
std::uint64_t gl_order(int n);

inline constexpr int kDefaultInvertibleBound = 6;

/// Visits every invertible n x n matrix exactly once, as packed rows (bit j of
/// rows[i] is entry (i,j)). Rows are chosen in increasing integer order, so the
/// visit order is lexicographic in (rows[0], rows[1], ...). The visitor returns
/// false to stop early. Throws BoundExceeded when n > bound.
void for_each_invertible_rows(int n, const std::function<bool(std::span<const std::uint32_t>)>& visit,
                              int bound = kDefaultInvertibleBound);

/// Same enumeration materialized as matrices.
void enumerate_invertible(int n, const std::function<bool(const Gf2Mat&)>& visit,
                          int bound = kDefaultInvertibleBound);

}  // namespace bott::gf2
