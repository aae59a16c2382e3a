#pragma once

// Spin and Spin^c obstructions for orientable real Bott manifolds.
//
// Three independent routes:
//  * the row-pattern detectors (part I: two rows with odd overlap and
//    a_{i,j} = 0; part II: two disjoint rows of weight 2 mod 4 with a_{i,j} = 1),
//  * the cohomological criterion w_2 = 0,
//  * an exhaustive search for a homomorphism Gamma(A) -> Spin(n) covering the
//    holonomy, built from signed Clifford monomials.
//
// Matrices that are not strictly upper are normalized first; row indices in
// witnesses refer to the normalized matrix and are 0-based.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bott/bieberbach.hpp"
#include "bott/bott_matrix.hpp"
#include "bott/clifford.hpp"

namespace bott::spin {

enum class WitnessKind { kPartI, kPartII };

const char* witness_kind_name(WitnessKind k);

struct ObstructionWitness {
  WitnessKind kind = WitnessKind::kPartI;
  int i = 0;
  int j = 0;
  /// Part I: {l}, the odd overlap. Part II: {2k, 2l}, the two row weights.
  std::vector<int> data;
  friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

/// First (i < j) in lexicographic order with a_{i,j} = 0 and odd row overlap.
std::optional<ObstructionWitness> thm1_part1(const BottMatrix& m);
/// First (i < j) with a_{i,j} = 1 and disjoint rows whose weights are both 2 mod 4.
std::optional<ObstructionWitness> thm1_part2(const BottMatrix& m);
/// Re-checks a witness against the matrix.
bool witness_holds(const BottMatrix& m, const ObstructionWitness& w);

/// w_2(M(A)) = 0.
bool has_spin(const BottMatrix& m);
/// Part I fires and H^2(M(A); R) = 0.
bool spinc_obstructed(const BottMatrix& m);

struct SpinLift {
  /// Sign sigma_i in eps(s_i) = sigma_i e_{supp(row i)}, for generators with
  /// nontrivial linear part (0-based generator index).
  std::map<int, int> generator_signs;
  /// Doubled basis of the translation lattice N and the character on it.
  std::vector<group::IntVec> lattice_basis2;
  std::vector<int> lattice_character;
};

/// Searches all sign choices and all characters of N in a fixed order and
/// returns the first assignment satisfying every defining relation of
/// Gamma(A), or absent when none does.
std::optional<SpinLift> spin_lift_search(const BottMatrix& m);
/// Checks a candidate lift against all relations.
bool lift_is_valid(const BottMatrix& m, const SpinLift& lift);

}  // namespace bott::spin
