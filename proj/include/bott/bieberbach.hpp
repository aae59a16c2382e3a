#pragma once

// Exact arithmetic in Bieberbach groups with diagonal holonomy: the groups
// Gamma(A) of real Bott manifolds and the groups Gamma_n of Example-1 type.
//
// Every element is (D, t) with D = diag(+-1) and t in (1/2)Z^n. Translations
// are stored doubled, so all arithmetic stays in the integers.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/gf2.hpp"

namespace bott::group {

using IntVec = std::vector<std::int64_t>;

class AffineIso {
 public:
  AffineIso() = default;
  /// signs entries must be +1 or -1; trans2 is twice the translation part.
  AffineIso(std::vector<int> signs, IntVec trans2);
  static AffineIso identity(int n);
  static AffineIso translation2(IntVec trans2);

  int dim() const { return static_cast<int>(signs_.size()); }
  const std::vector<int>& signs() const { return signs_; }
  const IntVec& trans2() const { return trans2_; }
  bool is_translation() const;
  /// Bit j set iff the linear part flips coordinate j.
  gf2::Gf2Vec sign_exponents() const;

  friend bool operator==(const AffineIso&, const AffineIso&) = default;

 private:
  std::vector<int> signs_;
  IntVec trans2_;
};

/// (D1,t1)(D2,t2) = (D1 D2, D1 t2 + t1).
AffineIso compose(const AffineIso& a, const AffineIso& b);
/// (D,t)^{-1} = (D, -D t).
AffineIso inverse(const AffineIso& a);
/// a b a^{-1} b^{-1}.
AffineIso commutator(const AffineIso& a, const AffineIso& b);
/// (P,0) g (P,0)^{-1} for the permutation matrix P e_i = e_{p(i)}.
AffineIso conjugate_by_permutation(const AffineIso& g, const Permutation& p);

/// "signs=+-++- ; t2=[1,0,0,1,0]".
std::string format_affine(const AffineIso& g);
AffineIso parse_affine(std::string_view text);

/// A lattice of translations, stored as the Hermite normal form of twice its
/// basis (pivots positive, entries above each pivot reduced modulo it).
class TransLattice {
 public:
  TransLattice() = default;
  /// Lattice spanned by the given doubled vectors, all of length n.
  static TransLattice span(int n, const std::vector<IntVec>& generators2);

  int dim() const { return n_; }
  int rank() const { return static_cast<int>(basis2_.size()); }
  const std::vector<IntVec>& basis2() const { return basis2_; }

  /// Integer coefficients of v2 in the basis, or absent when v2 is not in the lattice.
  std::optional<IntVec> coordinates2(const IntVec& v2) const;
  bool contains2(const IntVec& v2) const { return coordinates2(v2).has_value(); }
  /// Image under the coordinate projection onto `coords` (in the given order).
  TransLattice project(const std::vector<int>& coords) const;

  friend bool operator==(const TransLattice&, const TransLattice&) = default;

 private:
  int n_ = 0;
  std::vector<IntVec> basis2_;
};

struct GroupPresentation {
  std::vector<AffineIso> generators;
  TransLattice lattice;  ///< all pure translations in the group
  int point_rank = 0;    ///< the point group has order 2^point_rank
};

/// Ordered product g_S = prod_{i in subset, ascending} gens[i].
AffineIso ordered_product(const std::vector<AffineIso>& gens, const gf2::Gf2Vec& subset);

/// Translation subgroup of the group generated by `gens` (diagonal linear
/// parts, translations in (1/2)Z^n). Generated by squares, commutators and the
/// products g_K for K in the kernel of the sign-exponent map, then closed under
/// the action of the linear parts.
TransLattice lattice_of(const std::vector<AffineIso>& gens);

/// Presentation data for an arbitrary diagonal generating set.
GroupPresentation presentation_of(std::vector<AffineIso> gens);

/// s_i = (diag((-1)^{a_{i,j}}), e_i/2) for i < n and s_n = (I, e_n).
/// Requires strictly upper input (throws PreconditionError otherwise).
GroupPresentation generators_of(const BottMatrix& m);

/// gamma_0 = (I, e_1) and gamma_i = (diag with -1 at i, e_{i+1}/2), i = 1..n-1.
GroupPresentation ls_generators(int n);

bool member(const AffineIso& g, const GroupPresentation& p);

/// One representative g_S per point-group element, identity first. The subset
/// S is the least (as a bit pattern) reaching that linear part.
std::vector<AffineIso> coset_representatives(const GroupPresentation& p);

bool is_torsion_free(const GroupPresentation& p);

/// Holonomy matrices phi(g), computed by conjugating the unit translations and
/// returned as their diagonals. Throws InvariantViolation if some image is not
/// diagonal.
std::vector<std::vector<int>> holonomy_rep(const GroupPresentation& p);

struct Prop1Check {
  std::string direction;  ///< "G*Gamma_n*G^-1 in Gamma(A)" or "G^-1*Gamma(A)*G in Gamma_n"
  int generator = 0;      ///< 0-based generator index within its family
  AffineIso image;
  bool member = false;
};

struct Prop1Report {
  int n = 0;
  bool holds = false;
  std::vector<Prop1Check> checks;
};

/// Conjugates Gamma_n by the anti-diagonal permutation and compares with
/// Gamma(A) for the superdiagonal matrix A, both inclusions. 2 <= n <= 8.
Prop1Report prop1_report(int n);
bool verify_prop1(int n);

}  // namespace bott::group
