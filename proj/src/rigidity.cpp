#include "bott/rigidity.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <utility>

#include "bott/classify.hpp"
#include "bott/cohomology.hpp"
#include "bott/errors.hpp"

namespace bott::rigidity {

namespace {

// Bilinear product H^1 x H^1 -> H^2 of one ring, tabulated on packed vectors.
// H^2 has basis x_a x_b (a < b); bit p of a value is the p-th such pair.
class Degree2 {
 public:
  explicit Degree2(const CohomRing& r) : n_(r.dim()), size_(1U << n_) {
    std::vector<int> pair_bit(std::size_t{1} << n_, -1);
    int next = 0;
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) pair_bit[(1U << a) | (1U << b)] = next++;
    }
    // basis[a][b] = normal form of x_a x_b.
    std::vector<std::uint32_t> basis(static_cast<std::size_t>(n_ * n_), 0);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        std::uint32_t bits = 0;
        const Gf2Poly prod = r.multiply_monomials(Monomial{1} << a, Monomial{1} << b);
        for (auto t : prod.terms()) {
          if (std::popcount(t) != 2) throw InvariantViolation("degree-2 product left degree 2");
          bits |= 1U << pair_bit[t];
        }
        basis[static_cast<std::size_t>(a * n_ + b)] = bits;
      }
    }
    // row[a][v] = x_a * v, then table[u][v] by linearity in u.
    std::vector<std::uint32_t> row(static_cast<std::size_t>(n_) * size_, 0);
    for (int a = 0; a < n_; ++a) {
      for (std::uint32_t v = 1; v < size_; ++v) {
        const int b = std::countr_zero(v);
        row[a * size_ + v] = row[a * size_ + (v & (v - 1))] ^ basis[static_cast<std::size_t>(a * n_ + b)];
      }
    }
    table_.assign(static_cast<std::size_t>(size_) * size_, 0);
    for (std::uint32_t u = 1; u < size_; ++u) {
      const int a = std::countr_zero(u);
      for (std::uint32_t v = 0; v < size_; ++v) {
        table_[u * size_ + v] = table_[(u & (u - 1)) * size_ + v] ^ row[a * size_ + v];
      }
    }
  }

  int dim() const { return n_; }
  std::uint32_t product(std::uint32_t u, std::uint32_t v) const { return table_[u * size_ + v]; }

  // (v^2 == 0, #{u : u v = 0}) is preserved by any graded isomorphism.
  std::pair<bool, int> profile(std::uint32_t v) const {
    int ann = 0;
    for (std::uint32_t u = 0; u < size_; ++u) ann += product(u, v) == 0 ? 1 : 0;
    return {product(v, v) == 0, ann};
  }

  std::vector<std::pair<bool, int>> profile_multiset() const {
    std::vector<std::pair<bool, int>> all;
    for (std::uint32_t v = 1; v < size_; ++v) all.push_back(profile(v));
    std::sort(all.begin(), all.end());
    return all;
  }

 private:
  int n_;
  std::uint32_t size_;
  std::vector<std::uint32_t> table_;
};

struct Problem {
  std::vector<std::uint8_t> source_columns;  // column j of the source matrix
  Degree2 target;

  // Relation j: l_j * (l_j + sum_{i in column j} l_i) = 0 in the target.
  bool relation_holds(int j, std::span<const std::uint32_t> rows) const {
    std::uint32_t y = 0;
    for (unsigned col = source_columns[static_cast<std::size_t>(j)]; col; col &= col - 1) {
      y ^= rows[static_cast<std::size_t>(std::countr_zero(col))];
    }
    const std::uint32_t l = rows[static_cast<std::size_t>(j)];
    return target.product(l, l ^ y) == 0;
  }
};

RingIsoWitness to_witness(int n, std::span<const std::uint32_t> rows) {
  std::vector<std::uint64_t> wide(rows.begin(), rows.end());
  return {gf2::Gf2Mat::from_row_bits(static_cast<std::size_t>(n), wide)};
}

std::optional<RingIsoWitness> search_exhaustive(const Problem& p, int n) {
  std::optional<RingIsoWitness> found;
  gf2::for_each_invertible_rows(
      n,
      [&](std::span<const std::uint32_t> rows) {
        for (int j = 0; j < n; ++j) {
          if (!p.relation_holds(j, rows)) return true;
        }
        found = to_witness(n, rows);
        return false;
      },
      kExhaustiveBound);
  return found;
}

// Same enumeration order as the exhaustive search; a prefix is abandoned as
// soon as its last row fails a per-element invariant or the relation that the
// prefix already determines.
std::optional<RingIsoWitness> search_pruned(const Problem& p, const Degree2& source, int n) {
  const std::uint32_t size = 1U << n;
  std::vector<std::pair<bool, int>> wanted(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) wanted[static_cast<std::size_t>(i)] = source.profile(1U << i);
  std::vector<std::vector<std::uint32_t>> allowed(static_cast<std::size_t>(n));
  for (std::uint32_t v = 1; v < size; ++v) {
    const auto prof = p.target.profile(v);
    for (int i = 0; i < n; ++i) {
      if (prof == wanted[static_cast<std::size_t>(i)]) allowed[static_cast<std::size_t>(i)].push_back(v);
    }
  }

  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<std::uint8_t>> span(static_cast<std::size_t>(n) + 1, std::vector<std::uint8_t>(size, 0));
  span[0][0] = 1;
  std::optional<RingIsoWitness> found;

  std::function<bool(int)> descend = [&](int level) {
    if (level == n) {
      found = to_witness(n, rows);
      return true;
    }
    const auto& cur = span[static_cast<std::size_t>(level)];
    auto& next = span[static_cast<std::size_t>(level) + 1];
    for (auto v : allowed[static_cast<std::size_t>(level)]) {
      if (cur[v]) continue;
      rows[static_cast<std::size_t>(level)] = v;
      if (!p.relation_holds(level, std::span<const std::uint32_t>(rows.data(), static_cast<std::size_t>(level) + 1))) {
        continue;
      }
      for (std::uint32_t u = 0; u < size; ++u) next[u] = cur[u] | cur[u ^ v];
      if (descend(level + 1)) return true;
    }
    return false;
  };
  descend(0);
  return found;
}

}  // namespace

std::optional<RingIsoWitness> ring_isomorphic(const BottMatrix& a, const BottMatrix& b, const IsoOptions& options) {
  if (a.dim() != b.dim()) throw InputError("ring comparison needs equal dimensions");
  const int n = a.dim();
  if (!options.prune && n > kExhaustiveBound) {
    throw BoundExceeded("exhaustive ring search is limited to n <= 5; enable pruning for n = 6");
  }
  if (n > kPrunedBound) throw BoundExceeded("ring search is limited to n <= 6");

  const CohomRing ra = ring_of(a);
  const CohomRing rb = ring_of(b);
  Problem p{{}, Degree2(rb)};
  for (int j = 0; j < n; ++j) p.source_columns.push_back(ra.matrix().col(j));

  if (!options.prune) return search_exhaustive(p, n);
  const Degree2 source(ra);
  if (source.profile_multiset() != p.target.profile_multiset()) return std::nullopt;
  return search_pruned(p, source, n);
}

bool witness_is_valid(const BottMatrix& a, const BottMatrix& b, const RingIsoWitness& w) {
  const int n = a.dim();
  if (b.dim() != n || w.map.rows() != static_cast<std::size_t>(n) || w.map.cols() != static_cast<std::size_t>(n)) {
    return false;
  }
  if (gf2::rank(w.map) != static_cast<std::size_t>(n)) return false;
  const CohomRing ra = ring_of(a);
  const CohomRing rb = ring_of(b);
  std::vector<Gf2Poly> image;
  for (int i = 0; i < n; ++i) {
    Gf2Poly p;
    for (int j = 0; j < n; ++j) {
      if (w.map.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) p += Gf2Poly::var(j);
    }
    image.push_back(std::move(p));
  }
  for (int j = 0; j < n; ++j) {
    // x_j^2 - x_j * y_j with y_j = sum_i a_{i,j} x_i, pushed through the map.
    Gf2Poly y;
    for (int i = 0; i < n; ++i) {
      if (ra.matrix().at(i, j)) y += image[static_cast<std::size_t>(i)];
    }
    const auto& l = image[static_cast<std::size_t>(j)];
    if (!(rb.multiply(l, l) + rb.multiply(l, y)).is_zero()) return false;
  }
  return true;
}

RingIsoWitness inverse_witness(const RingIsoWitness& w) {
  auto inv = gf2::inverse(w.map);
  if (!inv) throw PreconditionError("witness map is singular");
  return {std::move(*inv)};
}

RigidityReport rigidity_experiment(int n, const RigidityOptions& options) {
  if (n < 1 || n > kExhaustiveBound) throw InputError("rigidity experiment supports 1 <= n <= 5");
  const Classification cls = classify(n);
  RigidityReport report;
  report.dim = n;
  report.classes = static_cast<int>(cls.classes.size());
  const IsoOptions iso{options.prune};

  auto check = [&](const BottMatrix& a, const BottMatrix& b) {
    const bool same = cls.class_of[strict_upper_index(a)] == cls.class_of[strict_upper_index(b)];
    const auto w = ring_isomorphic(a, b, iso);
    bool ok = w.has_value() == same;
    if (w) {
      ok = ok && witness_is_valid(a, b, *w) && witness_is_valid(b, a, inverse_witness(*w));
    }
    ++report.pairs_checked;
    if (!ok) report.violations.push_back({a, b, same, w.has_value()});
  };

  if (n <= 4) {
    report.mode = "exhaustive";
    std::vector<BottMatrix> all;
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      all.push_back(m);
      return true;
    });
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) check(all[i], all[j]);
    }
    return report;
  }

  report.mode = "sampled";
  std::vector<const DiffeoClass*> ghw;
  for (const auto& c : cls.classes) {
    if (c.fingerprint.ghw) ghw.push_back(&c);
  }
  for (std::size_t i = 0; i < ghw.size(); ++i) {
    for (std::size_t j = i + 1; j < ghw.size(); ++j) check(ghw[i]->canonical, ghw[j]->canonical);
    for (const auto& m : ghw[i]->members) check(ghw[i]->canonical, m);
  }
  // Raw engine output keeps the sample identical across standard libraries.
  std::mt19937_64 rng(options.seed);
  const std::size_t k = cls.classes.size();
  for (int s = 0; s < options.sample && k > 1; ++s) {
    const std::size_t ca = rng() % k;
    std::size_t cb = rng() % (k - 1);
    if (cb >= ca) ++cb;
    const auto& ma = cls.classes[ca].members;
    const auto& mb = cls.classes[cb].members;
    check(ma[rng() % ma.size()], mb[rng() % mb.size()]);
  }
  return report;
}

}  // namespace bott::rigidity
