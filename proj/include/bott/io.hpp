#pragma once

// Matrix input formats.
//
// Text:  first line n, then n lines of n characters from {0,1}.
// JSON:  {"n": 5, "rows": ["01010", ...]}; detected by a leading '{'.
// Family: the text form where '*' marks a free entry; expands to every
// assignment of the stars.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bott/bott_matrix.hpp"

namespace bott::io {

BottMatrix parse_matrix(std::string_view text);
BottMatrix read_matrix_file(const std::string& path);

struct MatrixFamily {
  int n = 0;
  std::vector<std::string> rows;  // characters '0', '1', '*'
  int star_count() const;
};

MatrixFamily parse_family(std::string_view text);
MatrixFamily read_family_file(const std::string& path);

/// Stars are filled in row-major order; assignment bit s (from the least
/// significant end) fills star s. Every assignment must give a Bott matrix.
BottMatrix family_member(const MatrixFamily& f, std::uint64_t assignment);
void for_each_member(const MatrixFamily& f, const std::function<void(const BottMatrix&)>& visit);

std::string format_matrix_text(const BottMatrix& m);
std::string read_file(const std::string& path);

}  // namespace bott::io
