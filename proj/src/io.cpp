#include "bott/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bott/errors.hpp"

namespace bott::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Non-empty, trimmed lines; '#' starts a comment line.
std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    if (!line.empty() && line.front() != '#') out.emplace_back(line);
    pos = nl + 1;
  }
  return out;
}

int parse_dim(const std::string& s) {
  int n = 0;
  std::size_t used = 0;
  try {
    n = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InputError("expected the dimension on the first line, got '" + s + "'");
  }
  if (used != s.size()) throw InputError("expected the dimension on the first line, got '" + s + "'");
  if (n < 1 || n > kMaxDim) throw InputError("dimension " + std::to_string(n) + " outside 1..8");
  return n;
}

void check_rows(int n, const std::vector<std::string>& rows, std::string_view alphabet) {
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw InputError("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(n)) {
      throw InputError("row " + std::to_string(i + 1) + " has length " + std::to_string(rows[i].size()));
    }
    for (char c : rows[i]) {
      if (alphabet.find(c) == std::string_view::npos) {
        throw InputError("row " + std::to_string(i + 1) + " contains '" + std::string(1, c) + "'");
      }
    }
  }
}

MatrixFamily parse_rows(std::string_view text, std::string_view alphabet) {
  MatrixFamily f;
  const auto t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
      f.n = j.at("n").get<int>();
      f.rows = j.at("rows").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("bad matrix JSON: ") + e.what());
    }
    if (f.n < 1 || f.n > kMaxDim) throw InputError("dimension " + std::to_string(f.n) + " outside 1..8");
  } else {
    auto lines = lines_of(t);
    if (lines.empty()) throw InputError("empty matrix input");
    f.n = parse_dim(lines.front());
    f.rows.assign(lines.begin() + 1, lines.end());
  }
  check_rows(f.n, f.rows, alphabet);
  return f;
}

BottMatrix from_rows(int n, const std::vector<std::string>& rows) {
  std::uint64_t packed = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == '1') {
        packed |= std::uint64_t{1} << (8 * i + j);
      }
    }
  }
  return BottMatrix::validate(n, packed);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BottMatrix parse_matrix(std::string_view text) {
  const auto f = parse_rows(text, "01");
  return from_rows(f.n, f.rows);
}

BottMatrix read_matrix_file(const std::string& path) { return parse_matrix(read_file(path)); }

int MatrixFamily::star_count() const {
  int c = 0;
  for (const auto& r : rows) c += static_cast<int>(std::count(r.begin(), r.end(), '*'));
  return c;
}

MatrixFamily parse_family(std::string_view text) {
  auto f = parse_rows(text, "01*");
  if (f.star_count() > 20) throw BoundExceeded("family has more than 20 free entries");
  for (int i = 0; i < f.n; ++i) {
    if (f.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] == '*') {
      throw InputError("free entry on the diagonal at (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
    }
  }
  family_member(f, 0);  // validates the fixed entries
  return f;
}

MatrixFamily read_family_file(const std::string& path) { return parse_family(read_file(path)); }

BottMatrix family_member(const MatrixFamily& f, std::uint64_t assignment) {
  auto rows = f.rows;
  int s = 0;
  for (auto& r : rows) {
    for (char& c : r) {
      if (c == '*') c = ((assignment >> s++) & 1U) ? '1' : '0';
    }
  }
  return from_rows(f.n, rows);
}

void for_each_member(const MatrixFamily& f, const std::function<void(const BottMatrix&)>& visit) {
  const std::uint64_t total = std::uint64_t{1} << f.star_count();
  for (std::uint64_t a = 0; a < total; ++a) visit(family_member(f, a));
}

std::string format_matrix_text(const BottMatrix& m) {
  std::string out = std::to_string(m.dim()) + "\n";
  for (const auto& r : m.row_strings()) out += r + "\n";
  return out;
}

}  // namespace bott::io
