#pragma once

// Diffeomorphism classes of real Bott manifolds: orbits of the strictly upper
// triangular matrices under the closure of op1, op2 and op3.

#include <cstdint>
#include <optional>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/kernels.hpp"

namespace bott {

inline constexpr int kDefaultClassifyBound = 6;

struct Fingerprint {
  bool orientable = false;
  int holonomy_rank = 0;
  bool ghw = false;
  std::optional<bool> w2_zero;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct DiffeoClass {
  BottMatrix canonical;              ///< lexicographically least member
  std::vector<BottMatrix> members;   ///< strictly upper, in index order
  Fingerprint fingerprint;
};

struct ClassifyOptions {
  /// Also compute w_2 for every member and require it to be constant on orbits.
  bool check_w2 = true;
  int bound = kDefaultClassifyBound;
  kernels::Isa isa = kernels::active_isa();
};

struct Classification {
  int n = 0;
  std::vector<DiffeoClass> classes;  ///< ordered by canonical representative
  std::vector<std::int32_t> class_of;  ///< strict-upper index -> class position
};

Fingerprint fingerprint_of(const BottMatrix& m, bool with_w2);

/// Every strictly upper matrix one move away from m: all strictly upper
/// conjugates, op2 for each k, and op3 for each eligible ordered pair followed
/// by renormalization.
std::vector<BottMatrix> move_neighbors(const BottMatrix& m);

/// Breadth-first orbit closure over all 2^{n(n-1)/2} strictly upper matrices.
/// Throws InvariantViolation if a fingerprint varies within an orbit.
Classification classify(int n, const ClassifyOptions& options = {});
std::vector<DiffeoClass> diffeo_classes(int n, const ClassifyOptions& options = {});

/// Number of classes whose members have rank n - 1.
int count_ghw_rbm_classes(int n, const ClassifyOptions& options = {});
int count_ghw_rbm_classes(const Classification& c);

/// 2^{(n-2)(n-3)/2}, defined for n >= 2.
std::uint64_t ghw_rbm_formula(int n);

}  // namespace bott
