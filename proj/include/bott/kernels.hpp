#pragma once

// Batch kernels over packed 8x8 binary matrices (row i in byte i).
//
// Each kernel has a portable scalar reference and, on x86-64 builds, an AVX2
// variant processing four matrices per register. The variant is picked at
// runtime from CPUID; setting BOTT_FORCE_SCALAR=1 in the environment pins the
// scalar path. Both paths produce the same multiset of results.

#include <cstdint>
#include <span>
#include <vector>

namespace bott::kernels {

enum class Isa { kScalar, kAvx2 };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);
/// Best available variant, honoring BOTT_FORCE_SCALAR.
Isa active_isa();

/// Adjacent-transposition positions visiting all n! orderings (plain changes,
/// Steinhaus-Johnson-Trotter). Step t swaps positions steps[t] and steps[t]+1.
const std::vector<std::uint8_t>& plain_changes(int n);

/// Conjugates a packed matrix by the transposition (pos pos+1).
std::uint64_t swap_adjacent(std::uint64_t packed, int pos);

struct Conjugate {
  std::uint64_t packed;
  std::uint32_t source;  ///< index into the input batch
  friend auto operator<=>(const Conjugate&, const Conjugate&) = default;
};

/// Appends every strictly upper triangular conjugate P m P^{-1} of each
/// mats[k] (over all n! permutations, including the identity). A conjugate is
/// reported once per permutation producing it, so automorphisms of m show up
/// as repeats.
void strict_upper_conjugates(int n, std::span<const std::uint64_t> mats, std::vector<Conjugate>& out,
                             Isa isa = active_isa());

/// out[k] has bit 8*i set iff row i of mats[k] has odd weight.
void row_parity(std::span<const std::uint64_t> mats, std::span<std::uint64_t> out, Isa isa = active_isa());

namespace detail {
void strict_upper_conjugates_scalar(int n, std::span<const std::uint64_t> mats, std::vector<Conjugate>& out);
void row_parity_scalar(std::span<const std::uint64_t> mats, std::span<std::uint64_t> out);
#if defined(BOTT_HAVE_AVX2)
void strict_upper_conjugates_avx2(int n, std::span<const std::uint64_t> mats, std::vector<Conjugate>& out);
void row_parity_avx2(std::span<const std::uint64_t> mats, std::span<std::uint64_t> out);
#endif
}  // namespace detail

}  // namespace bott::kernels
