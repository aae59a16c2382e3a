// Compiled with -mavx2; only reached after a CPUID check in dispatch.cpp.

#include <immintrin.h>

#include <array>

#include "bott/bott_matrix.hpp"
#include "bott/kernels.hpp"

namespace bott::kernels::detail {

namespace {

constexpr int kLanes = 4;

// Delta swap of bit groups at distance `shift` selected by `mask`.
template <int Shift>
inline __m256i delta_swap(__m256i x, __m256i mask) {
  __m256i t = _mm256_and_si256(_mm256_xor_si256(_mm256_srli_epi64(x, Shift), x), mask);
  return _mm256_xor_si256(x, _mm256_xor_si256(t, _mm256_slli_epi64(t, Shift)));
}

}  // namespace

void strict_upper_conjugates_avx2(int n, std::span<const std::uint64_t> mats, std::vector<Conjugate>& out) {
  const auto& steps = plain_changes(n);
  const __m256i lower = _mm256_set1_epi64x(static_cast<long long>(lower_mask(n)));
  const __m256i zero = _mm256_setzero_si256();

  __m256i row_masks[8];
  __m256i col_masks[8];
  for (int p = 0; p + 1 < 8; ++p) {
    row_masks[p] = _mm256_set1_epi64x(static_cast<long long>(0xFFULL << (8 * p)));
    col_masks[p] = _mm256_set1_epi64x(static_cast<long long>(0x0101010101010101ULL << p));
  }

  alignas(32) std::array<std::uint64_t, kLanes> lane{};
  for (std::size_t base = 0; base < mats.size(); base += kLanes) {
    const std::size_t live = std::min<std::size_t>(kLanes, mats.size() - base);
    lane.fill(0);
    for (std::size_t l = 0; l < live; ++l) lane[l] = mats[base + l];
    const int live_bits = (1 << live) - 1;

    __m256i x = _mm256_load_si256(reinterpret_cast<const __m256i*>(lane.data()));
    auto emit = [&]() {
      const __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(x, lower), zero);
      int bits = _mm256_movemask_pd(_mm256_castsi256_pd(hit)) & live_bits;
      if (!bits) return;
      _mm256_store_si256(reinterpret_cast<__m256i*>(lane.data()), x);
      while (bits) {
        const int l = __builtin_ctz(static_cast<unsigned>(bits));
        out.push_back({lane[l], static_cast<std::uint32_t>(base + static_cast<std::size_t>(l))});
        bits &= bits - 1;
      }
    };

    emit();
    for (auto pos : steps) {
      x = delta_swap<8>(x, row_masks[pos]);
      x = delta_swap<1>(x, col_masks[pos]);
      emit();
    }
  }
}

void row_parity_avx2(std::span<const std::uint64_t> mats, std::span<std::uint64_t> out) {
  const __m256i ones = _mm256_set1_epi64x(0x0101010101010101LL);
  std::size_t k = 0;
  for (; k + kLanes <= mats.size(); k += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mats.data() + k));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 4));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 2));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 1));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), _mm256_and_si256(x, ones));
  }
  row_parity_scalar(mats.subspan(k), out.subspan(k));
}

}  // namespace bott::kernels::detail
