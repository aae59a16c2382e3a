#include "bott/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <iterator>

#include "bott/errors.hpp"
#include "bott/gf2.hpp"

namespace bott {

bool monomial_less(Monomial a, Monomial b) {
  const int da = std::popcount(a);
  const int db = std::popcount(b);
  if (da != db) return da < db;
  if (a == b) return false;
  // The smallest variable on which they differ decides.
  const Monomial d = (a ^ b) & (~(a ^ b) + 1);
  return (a & d) != 0;
}

Gf2Poly Gf2Poly::from_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), monomial_less);
  Gf2Poly p;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) & 1U) p.terms_.push_back(terms[i]);
    i = j;
  }
  return p;
}

Gf2Poly Gf2Poly::homogeneous(int degree) const {
  Gf2Poly out;
  for (auto t : terms_) {
    if (std::popcount(t) == degree) out.terms_.push_back(t);
  }
  return out;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(merged), monomial_less);
  terms_ = std::move(merged);
  return *this;
}

CohomRing::CohomRing(const BottMatrix& m) {
  StrictForm sf = to_strict_upper(m);
  matrix_ = sf.matrix;
  normalization_ = std::move(sf.perm);
  const int n = matrix_.dim();
  columns_.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    columns_[static_cast<std::size_t>(j)] = matrix_.col(j);
    std::vector<Monomial> terms;
    for (int i = 0; i < n; ++i) {
      if (matrix_.at(i, j)) terms.push_back(Monomial{1} << i);
    }
    y_.push_back(Gf2Poly::from_terms(std::move(terms)));
  }
}

// x_U * x_k. When x_k divides x_U the square x_k^2 is rewritten to
// x_k * sum_{i in column k} x_i, which only introduces indices i < k because
// the matrix is strictly upper; recursion depth is therefore at most k.
void CohomRing::multiply_by_var(Monomial u, int k, std::vector<std::uint8_t>& acc) const {
  const Monomial bit = Monomial{1} << k;
  if (!(u & bit)) {
    acc[u | bit] ^= 1U;
    return;
  }
  std::uint32_t col = columns_[static_cast<std::size_t>(k)];
  while (col) {
    const int i = std::countr_zero(col);
    col &= col - 1;
    if (i >= k) throw InvariantViolation("rewrite of x_k^2 introduced an index >= k");
    multiply_by_var(u, i, acc);
  }
}

Gf2Poly CohomRing::multiply_monomials(Monomial s, Monomial t) const {
  const std::size_t size = std::size_t{1} << dim();
  std::vector<Monomial> cur{s};
  std::vector<std::uint8_t> acc(size, 0);
  // Multiply in the variables of t from the highest index down.
  while (t) {
    const int k = 31 - std::countl_zero(t);
    t &= ~(Monomial{1} << k);
    std::fill(acc.begin(), acc.end(), 0);
    for (auto u : cur) multiply_by_var(u, k, acc);
    cur.clear();
    for (std::size_t v = 0; v < size; ++v) {
      if (acc[v]) cur.push_back(static_cast<Monomial>(v));
    }
  }
  return Gf2Poly::from_terms(std::move(cur));
}

Gf2Poly CohomRing::multiply(const Gf2Poly& p, const Gf2Poly& q) const {
  std::vector<Monomial> all;
  for (auto s : p.terms()) {
    for (auto t : q.terms()) {
      const Gf2Poly st = multiply_monomials(s, t);
      all.insert(all.end(), st.terms().begin(), st.terms().end());
    }
  }
  return Gf2Poly::from_terms(std::move(all));
}

CohomRing ring_of(const BottMatrix& m) { return CohomRing(m); }

Gf2Poly multiply(const CohomRing& r, const Gf2Poly& p, const Gf2Poly& q) { return r.multiply(p, q); }

Gf2Poly stiefel_whitney(const CohomRing& r, int k) {
  const int n = r.dim();
  if (k < 0) throw InputError("Stiefel-Whitney degree out of range");
  if (k > n) return {};
  // Elementary symmetric polynomials by the recurrence e_j += e_{j-1} * y_i.
  std::vector<Gf2Poly> e(static_cast<std::size_t>(k) + 1);
  e[0] = Gf2Poly::one();
  for (int i = 0; i < n; ++i) {
    for (int j = std::min(k, i + 1); j >= 1; --j) {
      e[static_cast<std::size_t>(j)] += r.multiply(e[static_cast<std::size_t>(j - 1)], r.y()[static_cast<std::size_t>(i)]);
    }
  }
  return e[static_cast<std::size_t>(k)];
}

int betti_z2(const CohomRing& r, int k) {
  const int n = r.dim();
  if (k < 0 || k > n) throw InputError("degree out of range");

  std::vector<Monomial> basis;
  for (Monomial s = 0; s < (Monomial{1} << n); ++s) {
    if (std::popcount(s) == k) basis.push_back(s);
  }
  std::vector<int> position(std::size_t{1} << n, -1);
  for (std::size_t b = 0; b < basis.size(); ++b) position[basis[b]] = static_cast<int>(b);

  // Reduce every degree-k word x_{i1} ... x_{ik}, i1 <= ... <= ik.
  std::vector<gf2::Gf2Vec> rows;
  std::vector<int> word(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> build = [&](int slot, int from) {
    if (slot == k) {
      Gf2Poly p = Gf2Poly::one();
      for (int v : word) p = r.multiply(p, Gf2Poly::var(v));
      gf2::Gf2Vec row(basis.size());
      for (auto t : p.terms()) {
        if (std::popcount(t) != k) throw InvariantViolation("reduction changed the degree of a word");
        row.set(static_cast<std::size_t>(position[t]));
      }
      rows.push_back(std::move(row));
      return;
    }
    for (int v = from; v < n; ++v) {
      word[static_cast<std::size_t>(slot)] = v;
      build(slot + 1, v);
    }
  };
  build(0, 0);

  const int dim = rows.empty() ? 0 : static_cast<int>(gf2::rank(gf2::Gf2Mat(std::move(rows))));
  if (dim != static_cast<int>(basis.size())) {
    throw InvariantViolation("degree-" + std::to_string(k) + " dimension " + std::to_string(dim) +
                             " differs from the number of square-free monomials");
  }
  return dim;
}

bool h2_real_is_zero(const BottMatrix& m) {
  for (int a = 0; a < m.dim(); ++a) {
    for (int b = a + 1; b < m.dim(); ++b) {
      if (m.col(a) == m.col(b)) return false;
    }
  }
  return true;
}

PolyExpr parse_poly_expr(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw InputError("empty polynomial");
  PolyExpr expr;
  if (s == "0") return expr;

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number at offset " + std::to_string(start));
    return std::stoi(s.substr(start, pos - start));
  };

  for (;;) {
    std::vector<int> term;
    for (;;) {
      if (pos < s.size() && s[pos] == '1' && (pos + 1 == s.size() || s[pos + 1] == '+' || s[pos + 1] == '*')) {
        ++pos;
      } else {
        if (pos >= s.size() || s[pos] != 'x') fail("expected 'x' at offset " + std::to_string(pos));
        ++pos;
        const int var = read_int();
        if (var < 1) fail("variables are numbered from 1");
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          power = read_int();
        }
        for (int p = 0; p < power; ++p) term.push_back(var - 1);
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    expr.push_back(std::move(term));
    if (pos == s.size()) break;
    if (s[pos] != '+') fail("unexpected '" + std::string(1, s[pos]) + "'");
    ++pos;
  }
  return expr;
}

Gf2Poly reduce(const CohomRing& r, const PolyExpr& expr) {
  Gf2Poly total;
  for (const auto& term : expr) {
    Gf2Poly p = Gf2Poly::one();
    for (int v : term) {
      if (v < 0 || v >= r.dim()) throw InputError("variable x" + std::to_string(v + 1) + " not in the ring");
      p = r.multiply(p, Gf2Poly::var(v));
    }
    total += p;
  }
  return total;
}

std::string format_poly(const Gf2Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto t : p.terms()) {
    if (!out.empty()) out += " + ";
    if (t == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (Monomial rest = t; rest; rest &= rest - 1) {
      if (!first) out += "*";
      out += "x" + std::to_string(std::countr_zero(rest) + 1);
      first = false;
    }
  }
  return out;
}

}  // namespace bott
