#include <array>
#include <cstdlib>
#include <mutex>
#include <string_view>

#include "bott/bott_matrix.hpp"
#include "bott/errors.hpp"
#include "bott/kernels.hpp"

namespace bott::kernels {

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(BOTT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa chosen = [] {
    const char* force = std::getenv("BOTT_FORCE_SCALAR");
    if (force && std::string_view(force) != "0") return Isa::kScalar;
    return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  }();
  return chosen;
}

const std::vector<std::uint8_t>& plain_changes(int n) {
  if (n < 1 || n > kMaxDim) throw InputError("plain changes need 1 <= n <= 8");
  static std::array<std::vector<std::uint8_t>, kMaxDim + 1> cache;
  static std::array<std::once_flag, kMaxDim + 1> once;
  std::call_once(once[static_cast<std::size_t>(n)], [n] {
    // Johnson-Trotter with directed elements; records the swapped position.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<int> dir(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    auto& steps = cache[static_cast<std::size_t>(n)];
    for (;;) {
      int mobile = -1;
      for (int i = 0; i < n; ++i) {
        const int j = i + dir[static_cast<std::size_t>(i)];
        if (j < 0 || j >= n) continue;
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)] &&
            (mobile < 0 || perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(mobile)])) {
          mobile = i;
        }
      }
      if (mobile < 0) break;
      const int j = mobile + dir[static_cast<std::size_t>(mobile)];
      const int value = perm[static_cast<std::size_t>(mobile)];
      std::swap(perm[static_cast<std::size_t>(mobile)], perm[static_cast<std::size_t>(j)]);
      std::swap(dir[static_cast<std::size_t>(mobile)], dir[static_cast<std::size_t>(j)]);
      steps.push_back(static_cast<std::uint8_t>(std::min(mobile, j)));
      for (int i = 0; i < n; ++i) {
        if (perm[static_cast<std::size_t>(i)] > value) dir[static_cast<std::size_t>(i)] = -dir[static_cast<std::size_t>(i)];
      }
    }
  });
  return cache[static_cast<std::size_t>(n)];
}

std::uint64_t swap_adjacent(std::uint64_t x, int pos) {
  const std::uint64_t rows = 0xFFULL << (8 * pos);
  std::uint64_t t = ((x >> 8) ^ x) & rows;
  x ^= t ^ (t << 8);
  const std::uint64_t cols = 0x0101010101010101ULL << pos;
  t = ((x >> 1) ^ x) & cols;
  return x ^ t ^ (t << 1);
}

void strict_upper_conjugates(int n, std::span<const std::uint64_t> mats, std::vector<Conjugate>& out, Isa isa) {
#if defined(BOTT_HAVE_AVX2)
  if (isa == Isa::kAvx2 && isa_available(Isa::kAvx2)) {
    detail::strict_upper_conjugates_avx2(n, mats, out);
    return;
  }
#endif
  (void)isa;
  detail::strict_upper_conjugates_scalar(n, mats, out);
}

void row_parity(std::span<const std::uint64_t> mats, std::span<std::uint64_t> out, Isa isa) {
  if (out.size() < mats.size()) throw InputError("row_parity output too small");
#if defined(BOTT_HAVE_AVX2)
  if (isa == Isa::kAvx2 && isa_available(Isa::kAvx2)) {
    detail::row_parity_avx2(mats, out);
    return;
  }
#endif
  (void)isa;
  detail::row_parity_scalar(mats, out);
}

}  // namespace bott::kernels
