#include <algorithm>
#include <random>
#include <set>

#include "bott/bott_matrix.hpp"
#include "bott/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bott;
using testing::rows;

namespace {

// Acyclicity by repeatedly deleting sources, independent of the DFS used by validate.
bool acyclic_by_peeling(int n, std::uint64_t bits) {
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  for (int round = 0; round < n; ++round) {
    int src = -1;
    for (int v = 0; v < n && src < 0; ++v) {
      if (gone[static_cast<std::size_t>(v)]) continue;
      bool has_in = false;
      for (int u = 0; u < n; ++u) {
        if (!gone[static_cast<std::size_t>(u)] && ((bits >> (8 * u + v)) & 1U)) has_in = true;
      }
      if (!has_in) src = v;
    }
    if (src < 0) return false;
    gone[static_cast<std::size_t>(src)] = true;
  }
  return true;
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(BottMatrix::zero(4));
  CHECK_NOTHROW(testing::load("A4"));
  CHECK_THROWS_AS(rows({"01", "10"}), NotBottMatrix);
  try {
    rows({"01", "10"});
  } catch (const NotBottMatrix& e) {
    CHECK(std::string(e.what()).find("cycle 1 -> 2 -> 1") != std::string::npos);
  }
  try {
    rows({"000", "010", "000"});
    FAIL("diagonal entry accepted");
  } catch (const NotBottMatrix& e) {
    CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(rows({"010", "001", "100"}), NotBottMatrix);
  CHECK_THROWS_AS(BottMatrix::validate(9, 0), InputError);
}

TEST_CASE("validate matches an independent acyclicity test on all 4x4 matrices") {
  for (std::uint32_t w = 0; w < (1U << 16); ++w) {
    std::uint64_t bits = 0;
    bool diag = false;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if ((w >> (4 * i + j)) & 1U) {
          bits |= std::uint64_t{1} << (8 * i + j);
          diag = diag || i == j;
        }
      }
    }
    bool ok = true;
    try {
      BottMatrix::validate(4, bits);
    } catch (const NotBottMatrix&) {
      ok = false;
    }
    CHECK(ok == (!diag && acyclic_by_peeling(4, bits)));
  }
}

TEST_CASE("to_strict_upper") {
  const auto a4 = testing::load("A4");
  const auto sf = to_strict_upper(a4);
  CHECK(sf.perm.is_identity());
  CHECK(sf.matrix == a4);

  for (int n = 2; n <= 8; ++n) {
    const auto sup = BottMatrix::superdiagonal(n);
    // The transpose is the subdiagonal matrix, which is also the reversal conjugate.
    const auto sub = op1(sup, Permutation::reversal(n));
    for (int i = 0; i + 1 < n; ++i) CHECK(sub.at(i + 1, i));
    const auto back = to_strict_upper(sub);
    CHECK(back.matrix == sup);
    CHECK(back.perm == Permutation::reversal(n));
    CHECK(op1(sub, back.perm) == back.matrix);
  }
}

TEST_CASE("to_strict_upper on random conjugates") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto m = from_strict_upper_index(n, rng() & ((std::uint64_t{1} << strict_upper_bits(n)) - 1));
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    std::shuffle(img.begin(), img.end(), rng);
    const auto c = op1(m, Permutation(img));
    CHECK_NOTHROW(BottMatrix::validate(n, c.packed()));
    const auto sf = to_strict_upper(c);
    CHECK(sf.matrix.is_strict_upper());
    CHECK(op1(c, sf.perm) == sf.matrix);
  }
}

TEST_CASE("op1") {
  const auto a23 = testing::load("A23");
  CHECK(op1(a23, Permutation::identity(5)) == a23);
  const auto swapped = op1(a23, Permutation::transposition(5, 3, 4));
  CHECK(swapped.row_strings()[2] == "00011");
  CHECK(swapped == a23);
  const auto sub = op1(BottMatrix::superdiagonal(4), Permutation::reversal(4));
  CHECK(sub.row_strings() == std::vector<std::string>{"0000", "1000", "0100", "0010"});
}

TEST_CASE("op2") {
  const auto sup3 = BottMatrix::superdiagonal(3);
  CHECK(op2(sup3, 0) == sup3);
  // Row 2 of the zero-row case: nothing in column k means no change.
  const auto a29 = testing::load("A29");
  CHECK(op2(a29, 0) == a29);
  // Column 3 gains a_{2,3} * column 2 for the superdiagonal matrix: a_{1,3} becomes 1.
  CHECK(op2(sup3, 1).row_strings() == std::vector<std::string>{"011", "001", "000"});
}

TEST_CASE("op2 is an involution and keeps strict upper form") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      for (int k = 0; k < n; ++k) {
        const auto once = op2(m, k);
        CHECK(once.is_strict_upper());
        CHECK(op2(once, k) == m);
        // Column form of the definition, computed entry by entry.
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) CHECK(once.at(i, j) == (m.at(i, j) != (m.at(k, j) && m.at(i, k))));
        }
      }
      return true;
    });
  }
}

TEST_CASE("op3") {
  const auto a23 = testing::load("A23");
  CHECK_THROWS_AS(op3(a23, 0, 1), PreconditionError);
  CHECK_THROWS_AS(op3(a23, 2, 2), PreconditionError);
  CHECK(op3(BottMatrix::zero(4), 0, 3) == BottMatrix::zero(4));
  // Columns 4 and 5 of A23 agree, rows 4 and 5 are both zero.
  CHECK(op3(a23, 3, 4) == a23);
  // Equal rows and equal columns: the target row vanishes.
  const auto m = rows({"0011", "0011", "0000", "0000"});
  CHECK(op3(m, 0, 1).row_strings()[1] == "0000");
}

TEST_CASE("moves always give Bott matrices") {
  for (int n = 2; n <= 5; ++n) {
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      for (int k = 0; k < n; ++k) CHECK_NOTHROW(BottMatrix::validate(n, op2(m, k).packed()));
      for (int l = 0; l < n; ++l) {
        for (int q = 0; q < n; ++q) {
          if (l == q || m.col(l) != m.col(q)) continue;
          const auto b = op3(m, l, q);
          CHECK_NOTHROW(BottMatrix::validate(n, b.packed()));
          CHECK(rank(b) == rank(m));
        }
      }
      return true;
    });
  }
}

TEST_CASE("orientability and rank") {
  CHECK(is_orientable(BottMatrix::zero(5)));
  CHECK(is_orientable(testing::load("A29")));
  for (int n = 2; n <= 8; ++n) CHECK_FALSE(is_orientable(BottMatrix::superdiagonal(n)));
  CHECK(rank(testing::load("A4")) == 3);

  for (int n = 2; n <= 8; ++n) {
    CHECK(is_ghw_rbm(BottMatrix::superdiagonal(n)));
    CHECK_FALSE(is_ghw_rbm(BottMatrix::zero(n)));
  }
  CHECK_FALSE(is_ghw_rbm(BottMatrix::zero(1)));
  CHECK_FALSE(is_ghw_rbm(testing::load("A4")));
}

TEST_CASE("rank n-1 coincides with the superdiagonal product") {
  for (int n = 2; n <= 6; ++n) {
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      bool chain = true;
      for (int i = 0; i + 1 < n; ++i) chain = chain && m.at(i, i + 1);
      CHECK(is_ghw_rbm(m) == chain);
      return true;
    });
  }
}

TEST_CASE("strict upper enumeration") {
  const std::uint64_t expected[] = {0, 1, 2, 8, 64, 1024, 32768};
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    std::set<std::uint64_t> packed;
    BottMatrix prev;
    bool ordered = true;
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      CHECK(m.is_strict_upper());
      if (count && !lex_less(prev, m)) ordered = false;
      prev = m;
      CHECK(from_strict_upper_index(n, strict_upper_index(m)) == m);
      packed.insert(m.packed());
      ++count;
      return true;
    });
    CHECK(count == expected[n]);
    CHECK(packed.size() == count);
    CHECK(ordered);
  }
  CHECK_THROWS_AS(enumerate_strict_upper(8, [](const BottMatrix&) { return true; }), BoundExceeded);
}

TEST_CASE("permutation algebra") {
  const Permutation p({2, 0, 1});
  CHECK(p.compose(p.inverse()).is_identity());
  CHECK(p.inverse().compose(p).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
  const auto m = rows({"011", "001", "000"});
  const Permutation q({1, 2, 0});
  CHECK(op1(op1(m, p), q) == op1(m, q.compose(p)));
}
