#pragma once

// Graded isomorphism of mod-2 cohomology rings of real Bott manifolds, and the
// experiment comparing ring isomorphism with the diffeomorphism partition.
//
// The rings are generated in degree 1 with relations in degree 2, so a graded
// isomorphism is an invertible substitution x_i -> sum_j m_{ij} x_j under which
// every source relation reduces to 0 in the target. Both rings are taken on the
// strictly upper normalization of their matrices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/gf2.hpp"

namespace bott::rigidity {

inline constexpr int kExhaustiveBound = 5;
inline constexpr int kPrunedBound = 6;

struct RingIsoWitness {
  gf2::Gf2Mat map;  ///< row i is the image of x_{i+1}
};

struct IsoOptions {
  /// Discard candidates through ring invariants and partial relation checks.
  /// Never changes the verdict or the witness found.
  bool prune = true;
};

/// First witness in the lexicographic enumeration of GL(n,2), or absent.
std::optional<RingIsoWitness> ring_isomorphic(const BottMatrix& a, const BottMatrix& b,
                                              const IsoOptions& options = {});

/// Re-checks a witness with the general polynomial arithmetic.
bool witness_is_valid(const BottMatrix& a, const BottMatrix& b, const RingIsoWitness& w);
/// The inverse substitution, a witness for (b, a).
RingIsoWitness inverse_witness(const RingIsoWitness& w);

struct RigidityOptions {
  int sample = 10;  ///< inter-class pairs drawn at n = 5
  std::uint64_t seed = 1;
  bool prune = true;
};

struct PairCheck {
  BottMatrix a;
  BottMatrix b;
  bool same_class = false;
  bool isomorphic = false;
};

struct RigidityReport {
  int dim = 0;
  int classes = 0;
  std::string mode;  ///< "exhaustive" (every pair of matrices) or "sampled"
  int pairs_checked = 0;
  std::vector<PairCheck> violations;
};

/// n <= 4: every pair of strictly upper matrices. n = 5: all pairs of
/// rank-(n-1) class representatives, every rank-(n-1) member against its
/// representative, and `sample` random inter-class pairs.
RigidityReport rigidity_experiment(int n, const RigidityOptions& options = {});

}  // namespace bott::rigidity
