#include <random>
#include <set>

#include "bott/errors.hpp"
#include "bott/gf2.hpp"
#include "doctest.h"

using namespace bott::gf2;

namespace {

Gf2Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Gf2Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1U);
  }
  return m;
}

Gf2Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Gf2Vec v(n);
  for (std::size_t k = 0; k < n; ++k) v.set(k, rng() & 1U);
  return v;
}

// Brute force: the row space has 2^rank elements.
std::size_t rank_by_span(const Gf2Mat& m) {
  std::set<std::string> span;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.rows()); ++s) {
    Gf2Vec acc(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if ((s >> i) & 1U) acc ^= m.row(i);
    }
    span.insert(acc.to_string());
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("vector basics") {
  Gf2Vec v = Gf2Vec::from_bits(70, 0b1011);
  v.set(69);
  CHECK(v.weight() == 4);
  CHECK(v.lowest() == 0);
  CHECK(v.get(69));
  v.flip(0);
  CHECK(v.lowest() == 1);
  CHECK(Gf2Vec(5).is_zero());
  CHECK(Gf2Vec(5).lowest() == 5);
  CHECK(Gf2Vec::from_bits(3, 0b101).dot(Gf2Vec::from_bits(3, 0b111)) == false);
  CHECK(Gf2Vec::from_bits(3, 0b101).to_string() == "101");
}

TEST_CASE("rank examples") {
  CHECK(rank(Gf2Mat(3, 3)) == 0);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(rank(Gf2Mat::identity(n)) == n);
  // Rows 01010 / 00101 / 00011 / 0 / 0: three independent rows.
  const std::uint64_t a4[] = {0b01010, 0b10100, 0b11000, 0, 0};
  CHECK(rank(Gf2Mat::from_row_bits(5, a4)) == 3);
}

TEST_CASE("rank agrees with transpose and with the span count") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 8;
    const std::size_t c = 1 + rng() % 8;
    const Gf2Mat m = random_mat(rng, r, c);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rank(m) == rank_by_span(m));
  }
}

TEST_CASE("solve on trivial systems") {
  const Gf2Vec b = Gf2Vec::from_bits(4, 0b0110);
  auto s = solve(Gf2Mat::identity(4), b);
  REQUIRE(s);
  CHECK(s->particular == b);
  CHECK(s->kernel_basis.empty());

  auto z = solve(Gf2Mat(3, 4), Gf2Vec(3));
  REQUIRE(z);
  CHECK(z->particular.is_zero());
  CHECK(z->kernel_basis.size() == 4);
  CHECK_FALSE(solve(Gf2Mat(3, 4), Gf2Vec::from_bits(3, 1)));
  CHECK_THROWS_AS(solve(Gf2Mat(3, 4), Gf2Vec(4)), bott::InputError);
}

TEST_CASE("solve returns genuine solutions and kernels") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 400; ++t) {
    const std::size_t r = 1 + rng() % 8;
    const std::size_t c = 1 + rng() % 8;
    const Gf2Mat m = random_mat(rng, r, c);
    // Half of the right-hand sides are consistent by construction.
    const Gf2Vec b = (t & 1) ? m * random_vec(rng, c) : random_vec(rng, r);
    const auto s = solve(m, b);
    bool solvable = false;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << c); ++x) {
      if (m * Gf2Vec::from_bits(c, x) == b) solvable = true;
    }
    CHECK(s.has_value() == solvable);
    if (!s) continue;
    CHECK(m * s->particular == b);
    CHECK(s->kernel_basis.size() == c - rank(m));
    for (const auto& k : s->kernel_basis) CHECK((m * k).is_zero());
    CHECK(rank(Gf2Mat(s->kernel_basis.empty() ? std::vector<Gf2Vec>{Gf2Vec(c)} : s->kernel_basis)) ==
          s->kernel_basis.size());
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(3);
  int invertible = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const Gf2Mat m = random_mat(rng, n, n);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == n));
    if (!inv) continue;
    ++invertible;
    CHECK(m * *inv == Gf2Mat::identity(n));
    CHECK(*inv * m == Gf2Mat::identity(n));
  }
  CHECK(invertible > 0);
}

TEST_CASE("GL(n,2) enumeration") {
  std::size_t count = 0;
  enumerate_invertible(1, [&](const Gf2Mat& m) {
    CHECK(m == Gf2Mat::identity(1));
    ++count;
    return true;
  });
  CHECK(count == 1);

  // Order formula as the oracle.
  const std::uint64_t expected[] = {0, 1, 6, 168, 20160};
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t prod = 1;
    for (int i = 0; i < n; ++i) prod *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
    CHECK(gl_order(n) == prod);
    CHECK(prod == expected[n]);

    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> last;
    bool ordered = true;
    for_each_invertible_rows(n, [&](std::span<const std::uint32_t> rows) {
      std::vector<std::uint32_t> v(rows.begin(), rows.end());
      std::vector<std::uint64_t> wide(rows.begin(), rows.end());
      CHECK(rank(Gf2Mat::from_row_bits(static_cast<std::size_t>(n), wide)) == static_cast<std::size_t>(n));
      if (!last.empty() && !(last < v)) ordered = false;
      last = v;
      seen.insert(std::move(v));
      return true;
    });
    CHECK(ordered);
    CHECK(seen.size() == prod);
  }
}

TEST_CASE("enumeration stops early and respects its bound") {
  int visits = 0;
  for_each_invertible_rows(3, [&](std::span<const std::uint32_t>) { return ++visits < 5; });
  CHECK(visits == 5);
  CHECK_THROWS_AS(enumerate_invertible(7, [](const Gf2Mat&) { return true; }), bott::BoundExceeded);
}
