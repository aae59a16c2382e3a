#include <algorithm>
#include <numeric>
#include <set>

#include "bott/classify.hpp"
#include "bott/cohomology.hpp"
#include "bott/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bott;

namespace {

struct UnionFind {
  std::vector<std::uint64_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint64_t find(std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Partition by brute force: every permutation renormalized with
// to_strict_upper, every op2, every eligible op3.
std::vector<std::uint64_t> partition_by_union_find(int n) {
  const std::uint64_t total = std::uint64_t{1} << strict_upper_bits(n);
  UnionFind uf(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto m = from_strict_upper_index(n, idx);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
      uf.unite(idx, strict_upper_index(to_strict_upper(op1(m, Permutation(img))).matrix));
    } while (std::next_permutation(img.begin(), img.end()));
    for (int k = 0; k < n; ++k) uf.unite(idx, strict_upper_index(op2(m, k)));
    for (int l = 0; l < n; ++l) {
      for (int q = 0; q < n; ++q) {
        if (l != q && m.col(l) == m.col(q)) uf.unite(idx, strict_upper_index(to_strict_upper(op3(m, l, q)).matrix));
      }
    }
  }
  std::vector<std::uint64_t> root(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) root[idx] = uf.find(idx);
  return root;
}

}  // namespace

TEST_CASE("class counts") {
  const std::size_t classes[] = {0, 1, 2, 4, 12, 54, 472};
  const int oriented[] = {0, 1, 1, 2, 3, 8, 29};
  for (int n = 1; n <= 6; ++n) {
    const auto c = classify(n);
    CHECK(c.classes.size() == classes[n]);
    const auto o = std::count_if(c.classes.begin(), c.classes.end(),
                                 [](const DiffeoClass& d) { return d.fingerprint.orientable; });
    CHECK(o == oriented[n]);
  }
}

TEST_CASE("partition matches the union-find oracle") {
  for (int n = 1; n <= 5; ++n) {
    const auto c = classify(n);
    const auto root = partition_by_union_find(n);
    for (std::uint64_t a = 0; a < root.size(); ++a) {
      // Each class root is its least index, which is also the canonical member.
      CHECK(strict_upper_index(c.classes[static_cast<std::size_t>(c.class_of[a])].canonical) == root[a]);
    }
  }
}

TEST_CASE("classes are closed, disjoint and canonical") {
  for (int n = 1; n <= 5; ++n) {
    const auto c = classify(n);
    std::size_t total = 0;
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
      const auto& d = c.classes[k];
      total += d.members.size();
      for (const auto& m : d.members) {
        CHECK_FALSE(lex_less(m, d.canonical));
        CHECK(c.class_of[strict_upper_index(m)] == static_cast<std::int32_t>(k));
        for (const auto& b : move_neighbors(m)) CHECK(c.class_of[strict_upper_index(b)] == static_cast<std::int32_t>(k));
      }
      if (k) CHECK(lex_less(c.classes[k - 1].canonical, d.canonical));
    }
    CHECK(total == (std::size_t{1} << strict_upper_bits(n)));
  }
}

TEST_CASE("fingerprints are orbit invariants") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& d : classify(n).classes) {
      for (const auto& m : d.members) {
        CHECK(is_orientable(m) == d.fingerprint.orientable);
        CHECK(static_cast<int>(rank(m)) == d.fingerprint.holonomy_rank);
        CHECK(is_ghw_rbm(m) == d.fingerprint.ghw);
        CHECK(stiefel_whitney(ring_of(m), 2).is_zero() == *d.fingerprint.w2_zero);
      }
    }
  }
}

TEST_CASE("GHW intersection counts") {
  const int expected[] = {0, 0, 1, 1, 2, 8, 64};
  for (int n = 2; n <= 6; ++n) {
    CHECK(count_ghw_rbm_classes(n) == expected[n]);
    if (n >= 3) CHECK(static_cast<std::uint64_t>(count_ghw_rbm_classes(n)) == ghw_rbm_formula(n));
  }
  CHECK(count_ghw_rbm_classes(1) == 0);
  CHECK(ghw_rbm_formula(2) == 1);
  CHECK_THROWS_AS(ghw_rbm_formula(1), InputError);
}

TEST_CASE("kernel variant does not change the classification") {
  for (int n = 3; n <= 5; ++n) {
    ClassifyOptions scalar;
    scalar.isa = kernels::Isa::kScalar;
    ClassifyOptions best;
    const auto a = classify(n, scalar);
    const auto b = classify(n, best);
    CHECK(a.class_of == b.class_of);
  }
}

TEST_CASE("bounds and neighbours") {
  CHECK_THROWS_AS(classify(7), BoundExceeded);
  CHECK_THROWS_AS(classify(0), InputError);
  CHECK(diffeo_classes(3).size() == 4);
  CHECK_THROWS_AS(move_neighbors(op1(BottMatrix::superdiagonal(3), Permutation::reversal(3))), PreconditionError);
  for (const auto& b : move_neighbors(testing::load("A4"))) CHECK(b.is_strict_upper());
}

TEST_CASE("oriented five-dimensional representatives") {
  // Seven oriented classes besides the torus, one per listed example.
  const auto c = classify(5);
  std::set<std::int32_t> seen;
  for (const char* name : {"A4", "A23", "A29", "A37", "A40", "A48", "A49"}) {
    seen.insert(c.class_of[strict_upper_index(testing::load(name))]);
  }
  seen.insert(c.class_of[0]);
  CHECK(seen.size() == 8);
}
