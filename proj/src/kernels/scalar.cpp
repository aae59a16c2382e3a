#include "bott/bott_matrix.hpp"
#include "bott/kernels.hpp"

namespace bott::kernels::detail {

void strict_upper_conjugates_scalar(int n, std::span<const std::uint64_t> mats, std::vector<Conjugate>& out) {
  const auto& steps = plain_changes(n);
  const std::uint64_t lower = lower_mask(n);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    std::uint64_t x = mats[k];
    const auto src = static_cast<std::uint32_t>(k);
    if ((x & lower) == 0) out.push_back({x, src});
    for (auto pos : steps) {
      x = swap_adjacent(x, pos);
      if ((x & lower) == 0) out.push_back({x, src});
    }
  }
}

void row_parity_scalar(std::span<const std::uint64_t> mats, std::span<std::uint64_t> out) {
  for (std::size_t k = 0; k < mats.size(); ++k) {
    std::uint64_t x = mats[k];
    x ^= x >> 4;
    x ^= x >> 2;
    x ^= x >> 1;
    out[k] = x & 0x0101010101010101ULL;
  }
}

}  // namespace bott::kernels::detail
