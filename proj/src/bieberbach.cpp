#include "bott/bieberbach.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <utility>

#include "bott/errors.hpp"

namespace bott::group {

namespace {

void require_dim(int a, int b) {
  if (a != b) throw InputError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(IntVec& y, std::int64_t a, const IntVec& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// Row-style Hermite normal form of the lattice spanned by `rows`.
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows, int n) {
  std::size_t top = 0;
  for (int c = 0; c < n && top < rows.size(); ++c) {
    // Euclid on column c among rows[top..].
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool reduced_all = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        axpy(rows[r], -floor_div(rows[r][c], rows[top][c]), rows[top]);
        if (rows[r][c] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0) {
      for (auto& x : rows[top]) x = -x;
    }
    for (std::size_t r = 0; r < top; ++r) axpy(rows[r], -floor_div(rows[r][c], rows[top][c]), rows[top]);
    ++top;
  }
  rows.resize(top);
  return rows;
}

int maybe_sign(char c) {
  if (c == '+') return 1;
  if (c == '-') return -1;
  throw InputError(std::string("bad sign character '") + c + "'");
}

}  // namespace

AffineIso::AffineIso(std::vector<int> signs, IntVec trans2) : signs_(std::move(signs)), trans2_(std::move(trans2)) {
  require_dim(static_cast<int>(signs_.size()), static_cast<int>(trans2_.size()));
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InputError("linear part must be diagonal with entries +-1");
  }
}

AffineIso AffineIso::identity(int n) {
  return AffineIso(std::vector<int>(static_cast<std::size_t>(n), 1), IntVec(static_cast<std::size_t>(n), 0));
}

AffineIso AffineIso::translation2(IntVec trans2) {
  std::vector<int> signs(trans2.size(), 1);
  return AffineIso(std::move(signs), std::move(trans2));
}

bool AffineIso::is_translation() const {
  return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
}

gf2::Gf2Vec AffineIso::sign_exponents() const {
  gf2::Gf2Vec v(signs_.size());
  for (std::size_t j = 0; j < signs_.size(); ++j) {
    if (signs_[j] < 0) v.set(j);
  }
  return v;
}

AffineIso compose(const AffineIso& a, const AffineIso& b) {
  require_dim(a.dim(), b.dim());
  std::vector<int> signs(static_cast<std::size_t>(a.dim()));
  IntVec t(static_cast<std::size_t>(a.dim()));
  for (std::size_t j = 0; j < signs.size(); ++j) {
    signs[j] = a.signs()[j] * b.signs()[j];
    t[j] = a.signs()[j] * b.trans2()[j] + a.trans2()[j];
  }
  return AffineIso(std::move(signs), std::move(t));
}

AffineIso inverse(const AffineIso& a) {
  IntVec t(a.trans2().size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = -a.signs()[j] * a.trans2()[j];
  return AffineIso(a.signs(), std::move(t));
}

AffineIso commutator(const AffineIso& a, const AffineIso& b) {
  return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

AffineIso conjugate_by_permutation(const AffineIso& g, const Permutation& p) {
  require_dim(g.dim(), p.size());
  std::vector<int> signs(g.signs().size());
  IntVec t(g.trans2().size());
  for (int i = 0; i < g.dim(); ++i) {
    signs[static_cast<std::size_t>(p(i))] = g.signs()[static_cast<std::size_t>(i)];
    t[static_cast<std::size_t>(p(i))] = g.trans2()[static_cast<std::size_t>(i)];
  }
  return AffineIso(std::move(signs), std::move(t));
}

std::string format_affine(const AffineIso& g) {
  std::string s = "signs=";
  for (int x : g.signs()) s += x > 0 ? '+' : '-';
  s += " ; t2=[";
  for (std::size_t j = 0; j < g.trans2().size(); ++j) {
    if (j) s += ',';
    s += std::to_string(g.trans2()[j]);
  }
  s += "]";
  return s;
}

AffineIso parse_affine(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const auto semi = s.find(';');
  if (s.rfind("signs=", 0) != 0 || semi == std::string::npos) throw InputError("expected 'signs=... ; t2=[...]'");
  std::vector<int> signs;
  for (char c : s.substr(6, semi - 6)) signs.push_back(maybe_sign(c));

  const std::string rest = s.substr(semi + 1);
  if (rest.rfind("t2=[", 0) != 0 || rest.back() != ']') throw InputError("expected 't2=[...]'");
  IntVec t;
  const std::string body = rest.substr(4, rest.size() - 5);
  std::size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    const auto comma = body.find(',', pos);
    const std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      t.push_back(std::stoll(item, &used));
      if (used != item.size()) throw InputError("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad integer '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (t.size() != signs.size()) throw InputError("signs and t2 lengths differ");
  return AffineIso(std::move(signs), std::move(t));
}

TransLattice TransLattice::span(int n, const std::vector<IntVec>& generators2) {
  std::vector<IntVec> rows;
  for (const auto& g : generators2) {
    require_dim(static_cast<int>(g.size()), n);
    if (!is_zero(g)) rows.push_back(g);
  }
  TransLattice l;
  l.n_ = n;
  l.basis2_ = hermite_normal_form(std::move(rows), n);
  return l;
}

std::optional<IntVec> TransLattice::coordinates2(const IntVec& v2) const {
  require_dim(static_cast<int>(v2.size()), n_);
  IntVec rest = v2;
  IntVec coeff(basis2_.size(), 0);
  std::size_t k = 0;
  for (int c = 0; c < n_; ++c) {
    if (k < basis2_.size() && basis2_[k][c] != 0) {
      const std::int64_t p = basis2_[k][c];
      if (rest[c] % p != 0) return std::nullopt;
      coeff[k] = rest[c] / p;
      axpy(rest, -coeff[k], basis2_[k]);
      ++k;
    } else if (rest[c] != 0) {
      return std::nullopt;
    }
  }
  return coeff;
}

TransLattice TransLattice::project(const std::vector<int>& coords) const {
  std::vector<IntVec> rows;
  for (const auto& b : basis2_) {
    IntVec r;
    for (int c : coords) r.push_back(b.at(static_cast<std::size_t>(c)));
    rows.push_back(std::move(r));
  }
  return span(static_cast<int>(coords.size()), rows);
}

AffineIso ordered_product(const std::vector<AffineIso>& gens, const gf2::Gf2Vec& subset) {
  if (gens.empty()) throw InputError("empty generating set");
  AffineIso g = AffineIso::identity(gens.front().dim());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (subset.get(i)) g = compose(g, gens[i]);
  }
  return g;
}

namespace {

// Columns are the sign-exponent vectors of the generators.
gf2::Gf2Mat sign_matrix(const std::vector<AffineIso>& gens) {
  const int n = gens.front().dim();
  gf2::Gf2Mat c(static_cast<std::size_t>(n), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      if (gens[i].signs()[static_cast<std::size_t>(j)] < 0) c.set(static_cast<std::size_t>(j), i);
    }
  }
  return c;
}

IntVec act(const AffineIso& g, const IntVec& v2) {
  IntVec out(v2.size());
  for (std::size_t j = 0; j < v2.size(); ++j) out[j] = g.signs()[j] * v2[j];
  return out;
}

}  // namespace

TransLattice lattice_of(const std::vector<AffineIso>& gens) {
  if (gens.empty()) throw InputError("empty generating set");
  const int n = gens.front().dim();
  for (const auto& g : gens) require_dim(g.dim(), n);

  std::vector<IntVec> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(compose(gens[i], gens[i]).trans2());
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]).trans2());
  }
  for (const auto& k : gf2::kernel_basis(sign_matrix(gens))) {
    const AffineIso g = ordered_product(gens, k);
    if (!g.is_translation()) throw InvariantViolation("kernel product is not a translation");
    seeds.push_back(g.trans2());
  }

  // Normal closure: conjugation by a generator acts on translations by its linear part.
  TransLattice lat = TransLattice::span(n, seeds);
  for (;;) {
    std::vector<IntVec> grown = lat.basis2();
    for (const auto& b : lat.basis2()) {
      for (const auto& g : gens) grown.push_back(act(g, b));
    }
    TransLattice next = TransLattice::span(n, grown);
    if (next == lat) return lat;
    lat = std::move(next);
  }
}

GroupPresentation presentation_of(std::vector<AffineIso> gens) {
  if (gens.empty()) throw InputError("empty generating set");
  GroupPresentation p;
  p.lattice = lattice_of(gens);
  p.point_rank = static_cast<int>(gf2::rank(sign_matrix(gens)));
  p.generators = std::move(gens);
  return p;
}

GroupPresentation generators_of(const BottMatrix& m) {
  if (!m.is_strict_upper()) throw PreconditionError("generators_of needs a strictly upper matrix; normalize first");
  const int n = m.dim();
  std::vector<AffineIso> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<int> signs(static_cast<std::size_t>(n), 1);
    IntVec t(static_cast<std::size_t>(n), 0);
    if (i + 1 < n) {
      for (int j = i + 1; j < n; ++j) signs[static_cast<std::size_t>(j)] = m.at(i, j) ? -1 : 1;
      t[static_cast<std::size_t>(i)] = 1;
    } else {
      t[static_cast<std::size_t>(i)] = 2;
    }
    gens.emplace_back(std::move(signs), std::move(t));
  }
  return presentation_of(std::move(gens));
}

GroupPresentation ls_generators(int n) {
  if (n < 2) throw InputError("Gamma_n needs n >= 2");
  std::vector<AffineIso> gens;
  IntVec t0(static_cast<std::size_t>(n), 0);
  t0[0] = 2;
  gens.push_back(AffineIso::translation2(std::move(t0)));
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> signs(static_cast<std::size_t>(n), 1);
    signs[static_cast<std::size_t>(i)] = -1;
    IntVec t(static_cast<std::size_t>(n), 0);
    t[static_cast<std::size_t>(i + 1)] = 1;
    gens.emplace_back(std::move(signs), std::move(t));
  }
  return presentation_of(std::move(gens));
}

bool member(const AffineIso& g, const GroupPresentation& p) {
  require_dim(g.dim(), p.lattice.dim());
  const auto sol = gf2::solve(sign_matrix(p.generators), g.sign_exponents());
  if (!sol) return false;
  const AffineIso rest = compose(g, inverse(ordered_product(p.generators, sol->particular)));
  if (!rest.is_translation()) throw InvariantViolation("coset representative has the wrong linear part");
  return p.lattice.contains2(rest.trans2());
}

std::vector<AffineIso> coset_representatives(const GroupPresentation& p) {
  const std::size_t m = p.generators.size();
  if (m > 20) throw BoundExceeded("too many generators to list cosets");
  std::vector<AffineIso> reps;
  std::set<std::vector<int>> seen;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    const AffineIso g = ordered_product(p.generators, gf2::Gf2Vec::from_bits(m, s));
    if (seen.insert(g.signs()).second) reps.push_back(g);
  }
  if (reps.size() != (std::size_t{1} << p.point_rank)) throw InvariantViolation("point group order differs from 2^rank");
  return reps;
}

bool is_torsion_free(const GroupPresentation& p) {
  // Every element with linear part D != I has order 2 or infinity; g_S tau has
  // order 2 iff tau + v_S vanishes on the coordinates D fixes.
  for (const auto& g : coset_representatives(p)) {
    if (g.is_translation()) continue;
    std::vector<int> fixed;
    IntVec target;
    for (int j = 0; j < g.dim(); ++j) {
      if (g.signs()[static_cast<std::size_t>(j)] > 0) {
        fixed.push_back(j);
        target.push_back(-g.trans2()[static_cast<std::size_t>(j)]);
      }
    }
    if (fixed.empty()) return false;  // -I fixes a point whatever the translation
    if (p.lattice.project(fixed).contains2(target)) return false;
  }
  return true;
}

std::vector<std::vector<int>> holonomy_rep(const GroupPresentation& p) {
  std::vector<std::vector<int>> images;
  for (const auto& g : coset_representatives(p)) {
    const int n = g.dim();
    std::vector<int> diag(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      IntVec e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 2;
      const AffineIso c = compose(compose(g, AffineIso::translation2(e)), inverse(g));
      if (!c.is_translation()) throw InvariantViolation("conjugate of a translation is not a translation");
      for (int j = 0; j < n; ++j) {
        const std::int64_t v = c.trans2()[static_cast<std::size_t>(j)];
        if (j == i && (v == 2 || v == -2)) {
          diag[static_cast<std::size_t>(i)] = static_cast<int>(v / 2);
        } else if (v != 0) {
          throw InvariantViolation("holonomy image is not diagonal");
        }
      }
    }
    images.push_back(std::move(diag));
  }
  return images;
}

Prop1Report prop1_report(int n) {
  if (n < 2 || n > kMaxDim) throw InputError("Proposition check needs 2 <= n <= 8");
  const GroupPresentation ls = ls_generators(n);
  const GroupPresentation bott = generators_of(BottMatrix::superdiagonal(n));
  const Permutation g = Permutation::reversal(n);
  const Permutation g_inv = g.inverse();

  Prop1Report report;
  report.n = n;
  report.holds = true;
  for (std::size_t i = 0; i < ls.generators.size(); ++i) {
    Prop1Check c{"G*Gamma_n*G^-1 in Gamma(A)", static_cast<int>(i),
                 conjugate_by_permutation(ls.generators[i], g), false};
    c.member = member(c.image, bott);
    report.holds = report.holds && c.member;
    report.checks.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < bott.generators.size(); ++i) {
    Prop1Check c{"G^-1*Gamma(A)*G in Gamma_n", static_cast<int>(i),
                 conjugate_by_permutation(bott.generators[i], g_inv), false};
    c.member = member(c.image, ls);
    report.holds = report.holds && c.member;
    report.checks.push_back(std::move(c));
  }
  return report;
}

bool verify_prop1(int n) { return prop1_report(n).holds; }

}  // namespace bott::group
