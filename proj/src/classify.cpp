#include "bott/classify.hpp"

#include <algorithm>
#include <deque>

#include "bott/cohomology.hpp"
#include "bott/errors.hpp"

namespace bott {

namespace {

constexpr std::size_t kSweepChunk = 64;

void append_op2_op3(const BottMatrix& m, std::vector<BottMatrix>& out) {
  const int n = m.dim();
  for (int k = 0; k < n; ++k) {
    const BottMatrix b = op2(m, k);
    if (!b.is_strict_upper()) throw InvariantViolation("op2 left the strictly upper matrices");
    out.push_back(b);
  }
  for (int l = 0; l < n; ++l) {
    for (int mi = 0; mi < n; ++mi) {
      if (l == mi || m.col(l) != m.col(mi)) continue;
      out.push_back(to_strict_upper(op3(m, l, mi)).matrix);
    }
  }
}

}  // namespace

Fingerprint fingerprint_of(const BottMatrix& m, bool with_w2) {
  Fingerprint f;
  f.orientable = is_orientable(m);
  f.holonomy_rank = static_cast<int>(rank(m));
  f.ghw = is_ghw_rbm(m);
  if (with_w2) f.w2_zero = stiefel_whitney(ring_of(m), 2).is_zero();
  return f;
}

std::vector<BottMatrix> move_neighbors(const BottMatrix& m) {
  if (!m.is_strict_upper()) throw PreconditionError("move_neighbors needs a strictly upper matrix");
  std::vector<BottMatrix> out;
  std::vector<kernels::Conjugate> conj;
  const std::uint64_t packed = m.packed();
  kernels::strict_upper_conjugates(m.dim(), std::span<const std::uint64_t>(&packed, 1), conj);
  for (const auto& c : conj) out.push_back(BottMatrix::unchecked(m.dim(), c.packed));
  append_op2_op3(m, out);
  return out;
}

Classification classify(int n, const ClassifyOptions& options) {
  if (n < 1 || n > kMaxDim) throw InputError("dimension outside 1..8");
  if (n > options.bound) {
    throw BoundExceeded("refusing to classify dimension " + std::to_string(n) + ": bound is " +
                        std::to_string(options.bound));
  }
  const std::uint64_t total = std::uint64_t{1} << strict_upper_bits(n);
  Classification result;
  result.n = n;
  result.class_of.assign(total, -1);

  std::vector<kernels::Conjugate> conj;
  std::vector<std::uint64_t> chunk;
  std::vector<BottMatrix> moves;

  for (std::uint64_t seed = 0; seed < total; ++seed) {
    if (result.class_of[seed] >= 0) continue;
    const auto id = static_cast<std::int32_t>(result.classes.size());
    DiffeoClass cls;
    std::deque<BottMatrix> queue;
    auto visit = [&](const BottMatrix& b) {
      const std::uint64_t idx = strict_upper_index(b);
      std::int32_t& slot = result.class_of[idx];
      if (slot == id) return;
      if (slot >= 0) throw InvariantViolation("orbit closure reached an earlier class");
      slot = id;
      queue.push_back(b);
      cls.members.push_back(b);
    };
    visit(from_strict_upper_index(n, seed));

    while (!queue.empty()) {
      chunk.clear();
      moves.clear();
      while (!queue.empty() && chunk.size() < kSweepChunk) {
        chunk.push_back(queue.front().packed());
        append_op2_op3(queue.front(), moves);
        queue.pop_front();
      }
      conj.clear();
      kernels::strict_upper_conjugates(n, chunk, conj, options.isa);
      for (const auto& c : conj) visit(BottMatrix::unchecked(n, c.packed));
      for (const auto& b : moves) visit(b);
    }

    std::sort(cls.members.begin(), cls.members.end(),
              [](const BottMatrix& a, const BottMatrix& b) { return strict_upper_index(a) < strict_upper_index(b); });
    cls.canonical = cls.members.front();
    cls.fingerprint = fingerprint_of(cls.canonical, options.check_w2);
    for (const auto& m : cls.members) {
      if (!(fingerprint_of(m, options.check_w2) == cls.fingerprint)) {
        throw InvariantViolation("fingerprint varies within the orbit of " + std::to_string(strict_upper_index(m)));
      }
    }
    result.classes.push_back(std::move(cls));
  }
  return result;
}

std::vector<DiffeoClass> diffeo_classes(int n, const ClassifyOptions& options) {
  return classify(n, options).classes;
}

int count_ghw_rbm_classes(const Classification& c) {
  return static_cast<int>(std::count_if(c.classes.begin(), c.classes.end(),
                                        [](const DiffeoClass& d) { return d.fingerprint.ghw; }));
}

int count_ghw_rbm_classes(int n, const ClassifyOptions& options) {
  return count_ghw_rbm_classes(classify(n, options));
}

std::uint64_t ghw_rbm_formula(int n) {
  if (n < 2) throw InputError("the count formula is stated for n >= 2");
  return std::uint64_t{1} << ((n - 2) * (n - 3) / 2);
}

}  // namespace bott
