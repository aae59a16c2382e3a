#include "bott/gf2.hpp"

#include <bit>
#include <utility>

#include "bott/errors.hpp"

namespace bott::gf2 {

namespace {

std::size_t word_count(std::size_t dim) { return (dim + 63) / 64; }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string("dimension mismatch in ") + what + ": " + std::to_string(a) +
                     " vs " + std::to_string(b));
  }
}

}  // namespace

Gf2Vec::Gf2Vec(std::size_t dim) : dim_(dim), words_(word_count(dim), 0) {}

Gf2Vec Gf2Vec::from_bits(std::size_t dim, std::uint64_t bits) {
  Gf2Vec v(dim);
  if (dim == 0) return v;
  if (dim < 64) bits &= (std::uint64_t{1} << dim) - 1;
  v.words_[0] = bits;
  return v;
}

Gf2Vec Gf2Vec::unit(std::size_t dim, std::size_t k) {
  Gf2Vec v(dim);
  v.set(k);
  return v;
}

void Gf2Vec::set(std::size_t k, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (k & 63);
  if (value) {
    words_[k >> 6] |= bit;
  } else {
    words_[k >> 6] &= ~bit;
  }
}

bool Gf2Vec::is_zero() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t Gf2Vec::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t Gf2Vec::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return dim_;
}

Gf2Vec& Gf2Vec::operator^=(const Gf2Vec& o) {
  require_same_size(dim_, o.dim_, "xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

Gf2Vec& Gf2Vec::operator&=(const Gf2Vec& o) {
  require_same_size(dim_, o.dim_, "and");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

bool Gf2Vec::dot(const Gf2Vec& o) const {
  require_same_size(dim_, o.dim_, "dot");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
  return (std::popcount(acc) & 1) != 0;
}

std::string Gf2Vec::to_string() const {
  std::string s(dim_, '0');
  for (std::size_t k = 0; k < dim_; ++k) {
    if (get(k)) s[k] = '1';
  }
  return s;
}

Gf2Mat::Gf2Mat(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf2Vec(cols)) {}

Gf2Mat::Gf2Mat(std::vector<Gf2Vec> rows) : cols_(rows.empty() ? 0 : rows.front().size()), rows_(std::move(rows)) {
  for (const auto& r : rows_) require_same_size(r.size(), cols_, "matrix rows");
}

Gf2Mat Gf2Mat::identity(std::size_t n) {
  Gf2Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Mat Gf2Mat::from_row_bits(std::size_t cols, std::span<const std::uint64_t> rows) {
  std::vector<Gf2Vec> out;
  out.reserve(rows.size());
  for (auto r : rows) out.push_back(Gf2Vec::from_bits(cols, r));
  Gf2Mat m(std::move(out));
  m.cols_ = cols;
  return m;
}

Gf2Vec Gf2Mat::col(std::size_t j) const {
  Gf2Vec c(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (get(i, j)) c.set(i);
  }
  return c;
}

Gf2Mat Gf2Mat::transpose() const {
  Gf2Mat t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) t.set(j, i);
    }
  }
  return t;
}

Gf2Vec Gf2Mat::operator*(const Gf2Vec& x) const {
  require_same_size(cols_, x.size(), "matrix-vector product");
  Gf2Vec y(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (rows_[i].dot(x)) y.set(i);
  }
  return y;
}

Gf2Mat Gf2Mat::operator*(const Gf2Mat& o) const {
  require_same_size(cols_, o.rows(), "matrix product");
  Gf2Mat p(rows(), o.cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (get(i, k)) p.rows_[i] ^= o.rows_[k];
    }
  }
  return p;
}

std::string Gf2Mat::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

Echelon row_reduce(const Gf2Mat& m) {
  Echelon e{m, {}};
  Gf2Mat& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    std::swap(a.row(p), a.row(r));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && a.get(i, c)) a.row(i) ^= a.row(r);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const Gf2Mat& m) { return row_reduce(m).pivots.size(); }

std::vector<Gf2Vec> kernel_basis(const Gf2Mat& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<Gf2Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Gf2Vec v = Gf2Vec::unit(m.cols(), f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.reduced.get(r, f)) v.set(e.pivots[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Solution> solve(const Gf2Mat& m, const Gf2Vec& b) {
  require_same_size(m.rows(), b.size(), "solve");
  // Reduce the augmented matrix [m | b].
  Gf2Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.get(i, j)) aug.set(i, j);
    }
    if (b.get(i)) aug.set(i, m.cols());
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;

  Gf2Vec x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.reduced.get(r, m.cols())) x.set(e.pivots[r]);
  }
  return Solution{std::move(x), kernel_basis(m)};
}

std::optional<Gf2Mat> inverse(const Gf2Mat& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Gf2Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.get(i, j)) aug.set(i, j);
    }
    aug.set(i, n + i);
  }
  const Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Gf2Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (e.reduced.get(i, n + j)) inv.set(i, j);
    }
  }
  return inv;
}

std::uint64_t gl_order(int n) {
  std::uint64_t order = 1;
  const std::uint64_t q = std::uint64_t{1} << n;
  for (int i = 0; i < n; ++i) order *= q - (std::uint64_t{1} << i);
  return order;
}

void for_each_invertible_rows(int n, const std::function<bool(std::span<const std::uint32_t>)>& visit,
                              int bound) {
  if (n < 1) throw InputError("dimension must be at least 1");
  if (n > bound) {
    throw BoundExceeded("refusing to enumerate GL(" + std::to_string(n) + ",2): bound is " +
                        std::to_string(bound));
  }
  const std::uint32_t size = std::uint32_t{1} << n;
  // span[level] marks the elements of the span of rows[0..level).
  std::vector<std::vector<std::uint8_t>> span(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint8_t>(size, 0));
  span[0][0] = 1;
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);

  bool keep_going = true;
  std::function<void(int)> descend = [&](int level) {
    if (level == n) {
      keep_going = visit(rows);
      return;
    }
    const auto& cur = span[level];
    auto& next = span[level + 1];
    for (std::uint32_t v = 1; v < size && keep_going; ++v) {
      if (cur[v]) continue;
      rows[level] = v;
      for (std::uint32_t u = 0; u < size; ++u) next[u] = cur[u] | cur[u ^ v];
      descend(level + 1);
    }
  };
  descend(0);
}

void enumerate_invertible(int n, const std::function<bool(const Gf2Mat&)>& visit, int bound) {
  std::vector<std::uint64_t> wide(static_cast<std::size_t>(n > 0 ? n : 0));
  for_each_invertible_rows(
      n,
      [&](std::span<const std::uint32_t> rows) {
        for (std::size_t i = 0; i < rows.size(); ++i) wide[i] = rows[i];
        return visit(Gf2Mat::from_row_bits(static_cast<std::size_t>(n), wide));
      },
      bound);
}

}  // namespace bott::gf2
