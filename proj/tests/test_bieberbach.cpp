#include <map>
#include <random>
#include <set>

#include "bott/bieberbach.hpp"
#include "bott/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bott;
using namespace bott::group;

namespace {

IntVec unit2(int n, int k, std::int64_t scale) {
  IntVec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(k)] = scale;
  return v;
}

// All group elements reachable by words of length <= radius in the generators
// and their inverses.
std::set<std::pair<std::vector<int>, IntVec>> ball(const std::vector<AffineIso>& gens, int radius) {
  std::vector<AffineIso> letters;
  for (const auto& g : gens) {
    letters.push_back(g);
    letters.push_back(inverse(g));
  }
  const int n = gens.front().dim();
  std::set<std::pair<std::vector<int>, IntVec>> seen;
  std::vector<AffineIso> frontier{AffineIso::identity(n)};
  seen.insert({frontier[0].signs(), frontier[0].trans2()});
  for (int r = 0; r < radius; ++r) {
    std::vector<AffineIso> next;
    for (const auto& x : frontier) {
      for (const auto& l : letters) {
        const AffineIso y = compose(x, l);
        if (seen.insert({y.signs(), y.trans2()}).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<IntVec> translations_in(const std::set<std::pair<std::vector<int>, IntVec>>& elems) {
  std::vector<IntVec> out;
  for (const auto& [s, t] : elems) {
    if (std::all_of(s.begin(), s.end(), [](int x) { return x == 1; })) out.push_back(t);
  }
  return out;
}

void check_lattice_against_words(const GroupPresentation& p, int radius) {
  const auto elems = ball(p.generators, radius);
  const auto trans = translations_in(elems);
  for (const auto& t : trans) CHECK(p.lattice.contains2(t));
  // The translations found by words span the whole lattice.
  CHECK(TransLattice::span(p.lattice.dim(), trans) == p.lattice);
}

}  // namespace

TEST_CASE("affine group law") {
  const AffineIso a({1, -1, -1}, {1, 0, 3});
  const AffineIso b({-1, 1, -1}, {0, 1, 2});
  CHECK(compose(a, inverse(a)) == AffineIso::identity(3));
  CHECK(compose(inverse(a), a) == AffineIso::identity(3));
  CHECK(compose(AffineIso::translation2({1, 2, 3}), AffineIso::translation2({1, 0, -1})) ==
        AffineIso::translation2({2, 2, 2}));
  CHECK(compose(a, b) == AffineIso({-1, -1, 1}, {1, -1, 1}));
  CHECK_THROWS_AS(compose(a, AffineIso::identity(2)), InputError);
  CHECK_THROWS_AS(AffineIso({2, 1}, {0, 0}), InputError);

  std::mt19937_64 rng(41);
  auto rnd = [&] {
    std::vector<int> s(4);
    IntVec t(4);
    for (int k = 0; k < 4; ++k) {
      s[static_cast<std::size_t>(k)] = (rng() & 1U) ? -1 : 1;
      t[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(rng() % 7) - 3;
    }
    return AffineIso(s, t);
  };
  for (int i = 0; i < 500; ++i) {
    const auto x = rnd();
    const auto y = rnd();
    const auto z = rnd();
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
  }
}

TEST_CASE("text form") {
  const AffineIso g({1, -1, 1, 1, -1}, {1, 0, 0, 1, 0});
  CHECK(format_affine(g) == "signs=+-++- ; t2=[1,0,0,1,0]");
  CHECK(parse_affine("signs=+-++- ; t2=[1,0,0,1,0]") == g);
  CHECK(parse_affine(format_affine(AffineIso({-1}, {-3}))) == AffineIso({-1}, {-3}));
  CHECK_THROWS_AS(parse_affine("signs=+x ; t2=[0,0]"), InputError);
  CHECK_THROWS_AS(parse_affine("signs=++ ; t2=[0]"), InputError);
}

TEST_CASE("generators of Gamma(A)") {
  const auto z = generators_of(BottMatrix::zero(4));
  REQUIRE(z.generators.size() == 4);
  for (int i = 0; i < 3; ++i) CHECK(z.generators[static_cast<std::size_t>(i)] == AffineIso::translation2(unit2(4, i, 1)));
  CHECK(z.generators[3] == AffineIso::translation2(unit2(4, 3, 2)));

  const auto s = generators_of(BottMatrix::superdiagonal(4));
  for (int i = 0; i < 3; ++i) {
    std::vector<int> signs(4, 1);
    signs[static_cast<std::size_t>(i + 1)] = -1;
    CHECK(s.generators[static_cast<std::size_t>(i)] == AffineIso(signs, unit2(4, i, 1)));
  }
  CHECK_THROWS_AS(generators_of(op1(BottMatrix::superdiagonal(3), Permutation::reversal(3))), PreconditionError);
}

TEST_CASE("squares of generators") {
  for (int n = 2; n <= 5; ++n) {
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      const auto p = generators_of(m);
      for (int i = 0; i + 1 < n; ++i) {
        const auto& g = p.generators[static_cast<std::size_t>(i)];
        CHECK(compose(g, g) == AffineIso::translation2(unit2(n, i, 2)));
      }
      // s_i s_j and s_j s_i differ by a pure translation.
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto& a = p.generators[static_cast<std::size_t>(i)];
          const auto& b = p.generators[static_cast<std::size_t>(j)];
          CHECK(compose(compose(a, b), inverse(compose(b, a))).is_translation());
        }
      }
      return true;
    });
  }
}

TEST_CASE("Gamma_n generators") {
  CHECK_THROWS_AS(ls_generators(1), InputError);
  const auto k = ls_generators(2);
  REQUIRE(k.generators.size() == 2);
  CHECK(k.generators[0] == AffineIso::translation2({2, 0}));
  CHECK(k.generators[1] == AffineIso({-1, 1}, {0, 1}));
  CHECK(k.lattice.basis2() == std::vector<IntVec>{{2, 0}, {0, 2}});
  for (int n = 2; n <= 8; ++n) {
    const auto p = ls_generators(n);
    for (int i = 1; i < n; ++i) {
      const auto& g = p.generators[static_cast<std::size_t>(i)];
      CHECK(compose(g, g) == AffineIso::translation2(unit2(n, i, 2)));
    }
  }
  const auto g3 = ls_generators(3);
  int flips = 0;
  for (const auto& g : g3.generators) flips += g.is_translation() ? 0 : 1;
  CHECK(flips == 2);
}

TEST_CASE("lattice matches closure of short words") {
  // Torus in dimension 2: N = (1/2)Z x Z.
  const auto t2 = generators_of(BottMatrix::zero(2));
  CHECK(t2.lattice.basis2() == std::vector<IntVec>{{1, 0}, {0, 2}});
  check_lattice_against_words(t2, 4);
  check_lattice_against_words(ls_generators(2), 4);
  check_lattice_against_words(ls_generators(3), 6);
  for (int n = 2; n <= 3; ++n) {
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      check_lattice_against_words(generators_of(m), 2 * n);
      return true;
    });
  }
  for (const char* name : {"A4", "A23", "A40"}) {
    // Radius 6 suffices for these to realize every basis vector.
    check_lattice_against_words(generators_of(testing::load(name)), 6);
  }
}

TEST_CASE("lattice contains Z^n and is closed under the holonomy") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      const auto p = generators_of(m);
      CHECK(p.lattice.rank() == n);
      for (int k = 0; k < n; ++k) CHECK(p.lattice.contains2(unit2(n, k, 2)));
      for (const auto& b : p.lattice.basis2()) {
        for (const auto& g : p.generators) {
          IntVec moved = b;
          for (int k = 0; k < n; ++k) moved[static_cast<std::size_t>(k)] *= g.signs()[static_cast<std::size_t>(k)];
          CHECK(p.lattice.contains2(moved));
        }
      }
      return true;
    });
  }
}

TEST_CASE("membership") {
  const auto p = generators_of(testing::load("A4"));
  for (const auto& g : p.generators) CHECK(member(g, p));
  CHECK_FALSE(member(AffineIso::translation2({1, 1}), generators_of(BottMatrix::zero(2))));
  CHECK(member(AffineIso::translation2({1, 2}), generators_of(BottMatrix::zero(2))));

  std::mt19937_64 rng(43);
  for (const char* name : {"A4", "A23", "A37", "A48"}) {
    const auto q = generators_of(testing::load(name));
    for (int t = 0; t < 200; ++t) {
      AffineIso w = AffineIso::identity(5);
      for (int l = 0; l < 6; ++l) {
        const auto& g = q.generators[rng() % q.generators.size()];
        w = compose(w, (rng() & 1U) ? g : inverse(g));
      }
      CHECK(member(w, q));
      // A translation outside N: perturb a coordinate by 1/2 where N is integral.
      for (int k = 0; k < 5; ++k) {
        IntVec t = unit2(5, k, 1);
        if (!q.lattice.contains2(t)) CHECK_FALSE(member(AffineIso::translation2(t), q));
      }
    }
  }
}

TEST_CASE("torsion") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      CHECK(is_torsion_free(generators_of(m)));
      return true;
    });
  }
  for (int n = 2; n <= 8; ++n) CHECK(is_torsion_free(ls_generators(n)));
  const auto bad = presentation_of({AffineIso({-1, 1}, {0, 0}), AffineIso::translation2({0, 2})});
  CHECK_FALSE(is_torsion_free(bad));
  const auto point_reflection = presentation_of({AffineIso({-1, -1}, {1, 1}), AffineIso::translation2({2, 0}),
                                                 AffineIso::translation2({0, 2})});
  CHECK_FALSE(is_torsion_free(point_reflection));
}

TEST_CASE("holonomy representation") {
  const auto torus = holonomy_rep(generators_of(BottMatrix::zero(3)));
  CHECK(torus == std::vector<std::vector<int>>{{1, 1, 1}});
  const auto klein = holonomy_rep(ls_generators(2));
  CHECK(klein == std::vector<std::vector<int>>{{1, 1}, {-1, 1}});
  for (int n = 1; n <= 5; ++n) {
    enumerate_strict_upper(n, [&](const BottMatrix& m) {
      const auto p = generators_of(m);
      CHECK(p.point_rank == static_cast<int>(rank(m)));
      const auto h = holonomy_rep(p);
      CHECK(h.size() == (std::size_t{1} << rank(m)));
      std::set<std::vector<int>> distinct(h.begin(), h.end());
      CHECK(distinct.size() == h.size());
      return true;
    });
  }
}

TEST_CASE("conjugation by a permutation") {
  const AffineIso g({1, -1, 1}, {1, 0, 2});
  const auto p = Permutation::reversal(3);
  CHECK(conjugate_by_permutation(g, p) == AffineIso({1, -1, 1}, {2, 0, 1}));
  CHECK(conjugate_by_permutation(conjugate_by_permutation(g, p), p.inverse()) == g);
}

TEST_CASE("Proposition 1") {
  for (int n = 2; n <= 8; ++n) {
    const auto r = prop1_report(n);
    CHECK(r.holds);
    CHECK(r.checks.size() == static_cast<std::size_t>(2 * n));
    for (const auto& c : r.checks) CHECK(c.member);
  }
  CHECK_THROWS_AS(verify_prop1(1), InputError);
  CHECK_THROWS_AS(verify_prop1(9), InputError);
}
