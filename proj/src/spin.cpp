#include "bott/spin.hpp"

#include <bit>

#include "bott/cohomology.hpp"
#include "bott/errors.hpp"

namespace bott::spin {

namespace {

BottMatrix oriented_strict(const BottMatrix& m) {
  if (!is_orientable(m)) throw PreconditionError("Spin criteria need an orientable matrix (all row weights even)");
  return m.is_strict_upper() ? m : to_strict_upper(m).matrix;
}

struct Letter {
  int generator;
  bool inverted;
};

// A defining relation  word = translation,  with the character mask of the
// translation precomputed.
struct Relation {
  std::vector<Letter> word;
  std::uint32_t tau_mask;
};

// All data the lift condition depends on, derived from the group engine.
class LiftProblem {
 public:
  explicit LiftProblem(const BottMatrix& strict) : pres_(group::generators_of(strict)) {
    if (pres_.lattice.rank() > 31) throw BoundExceeded("lattice too large for the lift search");
    const auto& gens = pres_.generators;
    const int n = strict.dim();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto support = static_cast<std::uint32_t>(gens[i].sign_exponents().low_word());
      supports_.push_back(support);
      if (support) {
        sign_slot_.push_back(static_cast<int>(nontrivial_.size()));
        nontrivial_.push_back(static_cast<int>(i));
      } else {
        sign_slot_.push_back(-1);
      }
      trans_mask_.push_back(support ? 0 : mask_of(gens[i].trans2()));
    }

    const int gi_count = static_cast<int>(gens.size());
    for (int i = 0; i < gi_count; ++i) {
      relations_.push_back({{{i, false}, {i, false}}, mask_of(group::compose(gens[i], gens[i]).trans2())});
    }
    for (int i = 0; i < gi_count; ++i) {
      for (int j = i + 1; j < gi_count; ++j) {
        relations_.push_back({{{i, false}, {j, false}, {i, true}, {j, true}},
                              mask_of(group::commutator(gens[i], gens[j]).trans2())});
      }
    }
    gf2::Gf2Mat signs(static_cast<std::size_t>(n), gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (int j = 0; j < n; ++j) {
        if ((supports_[i] >> j) & 1U) signs.set(static_cast<std::size_t>(j), i);
      }
    }
    for (const auto& k : gf2::kernel_basis(signs)) {
      Relation r{{}, mask_of(group::ordered_product(gens, k).trans2())};
      for (int i = 0; i < gi_count; ++i) {
        if (k.get(static_cast<std::size_t>(i))) r.word.push_back({i, false});
      }
      relations_.push_back(std::move(r));
    }
    // Conjugation invariance of the character: chi(D_g b) = chi(b).
    for (const auto& g : gens) {
      for (std::size_t k = 0; k < pres_.lattice.basis2().size(); ++k) {
        group::IntVec moved = pres_.lattice.basis2()[k];
        for (std::size_t c = 0; c < moved.size(); ++c) moved[c] *= g.signs()[c];
        invariance_.push_back(mask_of(moved) ^ (std::uint32_t{1} << k));
      }
    }
  }

  const group::GroupPresentation& presentation() const { return pres_; }
  int sign_count() const { return static_cast<int>(nontrivial_.size()); }
  int character_bits() const { return pres_.lattice.rank(); }
  const std::vector<int>& nontrivial() const { return nontrivial_; }

  bool satisfied(std::uint32_t sigma_bits, std::uint32_t chi_bits) const {
    for (auto mask : invariance_) {
      if (std::popcount(mask & chi_bits) & 1) return false;
    }
    for (const auto& r : relations_) {
      CliffordElement acc = CliffordElement::scalar(1);
      for (const auto& letter : r.word) {
        const CliffordElement e = image(letter.generator, sigma_bits, chi_bits);
        acc = clifford_mul(acc, letter.inverted ? clifford_inverse(e) : e);
      }
      if (!acc.is_scalar()) throw InvariantViolation("relation word has nontrivial linear part");
      if (acc.sign != character(r.tau_mask, chi_bits)) return false;
    }
    return true;
  }

 private:
  std::uint32_t mask_of(const group::IntVec& tau2) const {
    const auto coords = pres_.lattice.coordinates2(tau2);
    if (!coords) throw InvariantViolation("relation translation outside the lattice");
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < coords->size(); ++k) {
      if ((*coords)[k] & 1) mask |= std::uint32_t{1} << k;
    }
    return mask;
  }

  static int character(std::uint32_t mask, std::uint32_t chi_bits) {
    return (std::popcount(mask & chi_bits) & 1) ? -1 : 1;
  }

  CliffordElement image(int g, std::uint32_t sigma_bits, std::uint32_t chi_bits) const {
    const int slot = sign_slot_[static_cast<std::size_t>(g)];
    if (slot < 0) return CliffordElement::scalar(character(trans_mask_[static_cast<std::size_t>(g)], chi_bits));
    return {((sigma_bits >> slot) & 1U) ? -1 : 1, supports_[static_cast<std::size_t>(g)]};
  }

  group::GroupPresentation pres_;
  std::vector<std::uint32_t> supports_;
  std::vector<int> sign_slot_;
  std::vector<int> nontrivial_;
  std::vector<std::uint32_t> trans_mask_;
  std::vector<Relation> relations_;
  std::vector<std::uint32_t> invariance_;
};

}  // namespace

const char* witness_kind_name(WitnessKind k) { return k == WitnessKind::kPartI ? "Part I" : "Part II"; }

std::optional<ObstructionWitness> thm1_part1(const BottMatrix& input) {
  const BottMatrix m = oriented_strict(input);
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = i + 1; j < m.dim(); ++j) {
      const int overlap = std::popcount(static_cast<unsigned>(m.row(i) & m.row(j)));
      if (!m.at(i, j) && (overlap & 1)) return ObstructionWitness{WitnessKind::kPartI, i, j, {overlap}};
    }
  }
  return std::nullopt;
}

std::optional<ObstructionWitness> thm1_part2(const BottMatrix& input) {
  const BottMatrix m = oriented_strict(input);
  for (int i = 0; i < m.dim(); ++i) {
    const int wi = std::popcount(static_cast<unsigned>(m.row(i)));
    if (wi % 4 != 2) continue;
    for (int j = i + 1; j < m.dim(); ++j) {
      const int wj = std::popcount(static_cast<unsigned>(m.row(j)));
      // s_i must invert s_j, otherwise s_i^2 != (s_i s_j)^2 and the argument fails.
      if (wj % 4 == 2 && m.at(i, j) && (m.row(i) & m.row(j)) == 0) return ObstructionWitness{WitnessKind::kPartII, i, j, {wi, wj}};
    }
  }
  return std::nullopt;
}

bool witness_holds(const BottMatrix& input, const ObstructionWitness& w) {
  const BottMatrix m = oriented_strict(input);
  if (w.i < 0 || w.j <= w.i || w.j >= m.dim()) return false;
  const unsigned ri = m.row(w.i);
  const unsigned rj = m.row(w.j);
  if (w.kind == WitnessKind::kPartI) {
    const int overlap = std::popcount(ri & rj);
    return !m.at(w.i, w.j) && (overlap & 1) && w.data == std::vector<int>{overlap};
  }
  const int wi = std::popcount(ri);
  const int wj = std::popcount(rj);
  return m.at(w.i, w.j) && (ri & rj) == 0 && wi % 4 == 2 && wj % 4 == 2 && w.data == std::vector<int>{wi, wj};
}

bool has_spin(const BottMatrix& m) {
  const BottMatrix strict = oriented_strict(m);
  return stiefel_whitney(ring_of(strict), 2).is_zero();
}

bool spinc_obstructed(const BottMatrix& m) {
  const BottMatrix strict = oriented_strict(m);
  return thm1_part1(strict).has_value() && h2_real_is_zero(strict);
}

std::optional<SpinLift> spin_lift_search(const BottMatrix& m) {
  const LiftProblem problem(oriented_strict(m));
  const int sign_bits = problem.sign_count();
  const int chi_bits = problem.character_bits();
  if (sign_bits + chi_bits > 24) throw BoundExceeded("lift search space too large");

  for (std::uint32_t chi = 0; chi < (std::uint32_t{1} << chi_bits); ++chi) {
    for (std::uint32_t sigma = 0; sigma < (std::uint32_t{1} << sign_bits); ++sigma) {
      if (!problem.satisfied(sigma, chi)) continue;
      SpinLift lift;
      for (int s = 0; s < sign_bits; ++s) {
        lift.generator_signs[problem.nontrivial()[static_cast<std::size_t>(s)]] = ((sigma >> s) & 1U) ? -1 : 1;
      }
      lift.lattice_basis2 = problem.presentation().lattice.basis2();
      for (int k = 0; k < chi_bits; ++k) lift.lattice_character.push_back(((chi >> k) & 1U) ? -1 : 1);
      return lift;
    }
  }
  return std::nullopt;
}

bool lift_is_valid(const BottMatrix& m, const SpinLift& lift) {
  const LiftProblem problem(oriented_strict(m));
  if (lift.lattice_basis2 != problem.presentation().lattice.basis2()) return false;
  if (static_cast<int>(lift.lattice_character.size()) != problem.character_bits()) return false;
  if (static_cast<int>(lift.generator_signs.size()) != problem.sign_count()) return false;

  std::uint32_t chi = 0;
  for (std::size_t k = 0; k < lift.lattice_character.size(); ++k) {
    if (lift.lattice_character[k] < 0) chi |= std::uint32_t{1} << k;
  }
  std::uint32_t sigma = 0;
  for (int s = 0; s < problem.sign_count(); ++s) {
    const auto it = lift.generator_signs.find(problem.nontrivial()[static_cast<std::size_t>(s)]);
    if (it == lift.generator_signs.end()) return false;
    if (it->second < 0) sigma |= std::uint32_t{1} << s;
  }
  return problem.satisfied(sigma, chi);
}

}  // namespace bott::spin
