#pragma once

// Shared helpers for the test binaries: fixtures and matrices from row strings.

#include <cstdint>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/io.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(BOTT_FIXTURE_DIR) + "/" + name; }

inline bott::BottMatrix load(const std::string& name) { return bott::io::read_matrix_file(fixture(name + ".txt")); }

inline bott::BottMatrix rows(const std::vector<std::string>& r) {
  std::string text = std::to_string(r.size()) + "\n";
  for (const auto& s : r) text += s + "\n";
  return bott::io::parse_matrix(text);
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace testing
