#include "bott/bott_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bott/errors.hpp"

namespace bott {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) {
    throw InputError("matrix dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
  }
}

void check_index(int n, int k, const char* what) {
  if (k < 0 || k >= n) throw InputError(std::string(what) + " index " + std::to_string(k) + " out of range");
}

// Returns a directed cycle in k -> i (a_{k,i} = 1) as a vertex list whose last
// element repeats the first, or an empty list when acyclic.
std::vector<int> find_cycle(int n, std::uint64_t bits) {
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> cycle;

  std::function<bool(int)> dfs = [&](int u) {
    color[u] = 1;
    for (int v = 0; v < n; ++v) {
      if (!((bits >> (8 * u + v)) & 1U)) continue;
      if (color[v] == 1) {
        cycle.push_back(v);
        for (int w = u; w != v; w = parent[w]) cycle.push_back(w);
        cycle.push_back(v);
        std::reverse(cycle.begin(), cycle.end());
        return true;
      }
      if (color[v] == 0) {
        parent[v] = u;
        if (dfs(v)) return true;
      }
    }
    color[u] = 2;
    return false;
  };
  for (int s = 0; s < n; ++s) {
    if (color[s] == 0 && dfs(s)) return cycle;
  }
  return {};
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) throw InputError("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - 1 - i;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto img = identity(n).image_;
  std::swap(img.at(static_cast<std::size_t>(a)), img.at(static_cast<std::size_t>(b)));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (o.size() != size()) throw InputError("permutation size mismatch");
  std::vector<int> img(image_.size());
  for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>(i)] = (*this)(o(i));
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (image_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::uint64_t block_mask(int n) {
  const std::uint64_t row = (std::uint64_t{1} << n) - 1;
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i) m |= row << (8 * i);
  return m;
}

std::uint64_t lower_mask(int n) {
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) m |= std::uint64_t{1} << (8 * i + j);
  }
  return m;
}

BottMatrix BottMatrix::validate(int n, std::uint64_t packed) {
  check_dim(n);
  if (packed & ~block_mask(n)) throw InputError("matrix has entries outside its " + std::to_string(n) + "x" + std::to_string(n) + " block");
  for (int i = 0; i < n; ++i) {
    if ((packed >> (9 * i)) & 1U) {
      throw NotBottMatrix("not a Bott matrix: nonzero diagonal entry (" + std::to_string(i + 1) + "," +
                          std::to_string(i + 1) + ")");
    }
  }
  if (auto cycle = find_cycle(n, packed); !cycle.empty()) {
    std::string msg = "not a Bott matrix: cycle ";
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) msg += " -> ";
      msg += std::to_string(cycle[k] + 1);
    }
    throw NotBottMatrix(msg);
  }
  return BottMatrix(n, packed);
}

BottMatrix BottMatrix::validate(const gf2::Gf2Mat& m) {
  if (m.rows() != m.cols()) throw InputError("Bott matrix must be square");
  const int n = static_cast<int>(m.rows());
  check_dim(n);
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) bits |= std::uint64_t{1} << (8 * i + j);
    }
  }
  return validate(n, bits);
}

BottMatrix BottMatrix::zero(int n) {
  check_dim(n);
  return BottMatrix(n, 0);
}

BottMatrix BottMatrix::superdiagonal(int n) {
  check_dim(n);
  std::uint64_t bits = 0;
  for (int i = 0; i + 1 < n; ++i) bits |= std::uint64_t{1} << (8 * i + i + 1);
  return BottMatrix(n, bits);
}

std::uint8_t BottMatrix::col(int j) const {
  std::uint8_t c = 0;
  for (int i = 0; i < n_; ++i) {
    if (at(i, j)) c |= static_cast<std::uint8_t>(1U << i);
  }
  return c;
}

bool BottMatrix::is_strict_upper() const { return (bits_ & lower_mask(n_)) == 0; }

gf2::Gf2Mat BottMatrix::to_gf2() const {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) rows[static_cast<std::size_t>(i)] = row(i);
  return gf2::Gf2Mat::from_row_bits(static_cast<std::size_t>(n_), rows);
}

std::vector<std::string> BottMatrix::row_strings() const {
  std::vector<std::string> out;
  for (int i = 0; i < n_; ++i) {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int j = 0; j < n_; ++j) {
      if (at(i, j)) s[static_cast<std::size_t>(j)] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

StrictForm to_strict_upper(const BottMatrix& m) {
  const int n = m.dim();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) indegree[static_cast<std::size_t>(j)] = std::popcount(m.col(j));

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::uint32_t placed = 0;
  for (int pos = 0; pos < n; ++pos) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!((placed >> v) & 1U) && indegree[static_cast<std::size_t>(v)] == 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw InvariantViolation("topological sort on a cyclic matrix");
    placed |= 1U << pick;
    image[static_cast<std::size_t>(pick)] = pos;
    for (int v = 0; v < n; ++v) {
      if (m.at(pick, v)) --indegree[static_cast<std::size_t>(v)];
    }
  }
  Permutation p(std::move(image));
  BottMatrix b = op1(m, p);
  return {std::move(p), b};
}

BottMatrix op1(const BottMatrix& m, const Permutation& p) {
  const int n = m.dim();
  if (p.size() != n) throw InputError("permutation size does not match matrix dimension");
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j)) bits |= std::uint64_t{1} << (8 * p(i) + p(j));
    }
  }
  return BottMatrix::unchecked(n, bits);
}

BottMatrix op2(const BottMatrix& m, int k) {
  check_index(m.dim(), k, "op2");
  // a'_{i,j} = a_{i,j} + a_{i,k} a_{k,j}: every row with a 1 in column k gains row k.
  const std::uint64_t row_k = m.row(k);
  std::uint64_t bits = m.packed();
  for (int i = 0; i < m.dim(); ++i) {
    if (m.at(i, k)) bits ^= row_k << (8 * i);
  }
  return BottMatrix::unchecked(m.dim(), bits);
}

BottMatrix op3(const BottMatrix& m, int l, int m_idx) {
  check_index(m.dim(), l, "op3");
  check_index(m.dim(), m_idx, "op3");
  if (l == m_idx) throw PreconditionError("op3 needs two distinct indices");
  if (m.col(l) != m.col(m_idx)) {
    throw PreconditionError("op3 needs equal columns " + std::to_string(l + 1) + " and " + std::to_string(m_idx + 1));
  }
  const std::uint64_t bits = m.packed() ^ (static_cast<std::uint64_t>(m.row(l)) << (8 * m_idx));
  return BottMatrix::unchecked(m.dim(), bits);
}

bool is_orientable(const BottMatrix& m) {
  for (int i = 0; i < m.dim(); ++i) {
    if (std::popcount(m.row(i)) & 1) return false;
  }
  return true;
}

std::size_t rank(const BottMatrix& m) { return gf2::rank(m.to_gf2()); }

bool is_ghw_rbm(const BottMatrix& m) {
  const int n = m.dim();
  // Holonomy (Z_2)^{n-1} needs n - 1 >= 1.
  if (n < 2) return false;
  const bool by_rank = rank(m) == static_cast<std::size_t>(n - 1);
  if (m.is_strict_upper()) {
    bool chain = true;
    for (int i = 0; i + 1 < n; ++i) chain = chain && m.at(i, i + 1);
    if (chain != by_rank) throw InvariantViolation("rank n-1 disagrees with the superdiagonal product");
  }
  return by_rank;
}

int strict_upper_bits(int n) { return n * (n - 1) / 2; }

std::uint64_t strict_upper_index(const BottMatrix& m) {
  if (!m.is_strict_upper()) throw PreconditionError("index requested for a matrix that is not strictly upper");
  std::uint64_t idx = 0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = i + 1; j < m.dim(); ++j) idx = (idx << 1) | (m.at(i, j) ? 1U : 0U);
  }
  return idx;
}

BottMatrix from_strict_upper_index(int n, std::uint64_t index) {
  check_dim(n);
  int t = strict_upper_bits(n);
  if (t < 64 && index >> t) throw InputError("strict upper index out of range");
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      --t;
      if ((index >> t) & 1U) bits |= std::uint64_t{1} << (8 * i + j);
    }
  }
  return BottMatrix::unchecked(n, bits);
}

void enumerate_strict_upper(int n, const std::function<bool(const BottMatrix&)>& visit, int bound) {
  check_dim(n);
  if (n > bound) {
    throw BoundExceeded("refusing to enumerate dimension " + std::to_string(n) + ": bound is " + std::to_string(bound));
  }
  const std::uint64_t count = std::uint64_t{1} << strict_upper_bits(n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (!visit(from_strict_upper_index(n, idx))) return;
  }
}

bool lex_less(const BottMatrix& a, const BottMatrix& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (a.at(i, j) != b.at(i, j)) return b.at(i, j);
    }
  }
  return false;
}

}  // namespace bott
