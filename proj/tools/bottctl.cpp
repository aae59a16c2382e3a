// bottctl: command-line front end for the real Bott manifold library.
//
// Every command writes JSON to stdout (one document, or JSON lines for
// `enumerate`); `table --csv` writes CSV. Exit codes: 0 ok, 2 usage or input
// error, 3 internal invariant violation.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bott/bieberbach.hpp"
#include "bott/classify.hpp"
#include "bott/cohomology.hpp"
#include "bott/errors.hpp"
#include "bott/io.hpp"
#include "bott/rigidity.hpp"
#include "bott/spin.hpp"

#ifndef BOTT_VERSION
#define BOTT_VERSION "0.0.0"
#endif

namespace {

using json = nlohmann::ordered_json;
using namespace bott;

json rows_json(const BottMatrix& m) { return m.row_strings(); }

json report(const std::string& command, json inputs, json results) {
  json r;
  r["command"] = command;
  r["version"] = BOTT_VERSION;
  r["inputs"] = std::move(inputs);
  r["results"] = std::move(results);
  return r;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json fingerprint_json(const Fingerprint& f) {
  json j;
  j["orientable"] = f.orientable;
  j["holonomy_rank"] = f.holonomy_rank;
  j["ghw"] = f.ghw;
  j["w2_zero"] = f.w2_zero ? json(*f.w2_zero) : json(nullptr);
  return j;
}

json permutation_json(const Permutation& p) {
  json j = json::array();
  for (int i = 0; i < p.size(); ++i) j.push_back(p(i) + 1);
  return j;
}

json witness_json(const spin::ObstructionWitness& w) {
  json j;
  j["kind"] = spin::witness_kind_name(w.kind);
  j["i"] = w.i + 1;
  j["j"] = w.j + 1;
  j["data"] = w.data;
  return j;
}

json invariants_json(const BottMatrix& m) {
  const CohomRing ring = ring_of(m);
  json j;
  j["matrix"] = rows_json(m);
  j["n"] = m.dim();
  j["strict_form"] = rows_json(ring.matrix());
  j["normalization"] = permutation_json(ring.normalization());
  j["orientable"] = is_orientable(m);
  j["rank"] = rank(m);
  j["ghw"] = is_ghw_rbm(m);
  j["w1"] = format_poly(stiefel_whitney(ring, 1));
  j["w2"] = format_poly(stiefel_whitney(ring, 2));
  j["h2_real_zero"] = h2_real_is_zero(m);
  json betti = json::array();
  for (int k = 0; k <= m.dim(); ++k) betti.push_back(betti_z2(ring, k));
  j["betti_z2"] = betti;
  const auto pres = group::generators_of(ring.matrix());
  j["point_group_order"] = std::uint64_t{1} << pres.point_rank;
  j["torsion_free"] = group::is_torsion_free(pres);
  return j;
}

json spin_json(const BottMatrix& m) {
  const CohomRing ring = ring_of(m);
  json j;
  j["matrix"] = rows_json(m);
  j["orientable"] = is_orientable(m);
  j["w1"] = format_poly(stiefel_whitney(ring, 1));
  j["w2"] = format_poly(stiefel_whitney(ring, 2));
  if (!is_orientable(m)) {
    j["spin"] = nullptr;
    j["spinc_obstructed"] = nullptr;
    j["witnesses"] = json::array();
    j["lift_found"] = nullptr;
    return j;
  }
  j["spin"] = spin::has_spin(m);
  j["spinc_obstructed"] = spin::spinc_obstructed(m);
  json ws = json::array();
  if (auto w = spin::thm1_part1(m)) ws.push_back(witness_json(*w));
  if (auto w = spin::thm1_part2(m)) ws.push_back(witness_json(*w));
  j["witnesses"] = ws;
  j["lift_found"] = spin::spin_lift_search(m).has_value();
  return j;
}

int cmd_enumerate(int dim, bool orientable, bool ghw, bool canonical) {
  if (dim < 1 || dim > kDefaultEnumerateBound) throw InputError("--dim must be in 1..7");
  auto keep = [&](const BottMatrix& m) { return (!orientable || is_orientable(m)) && (!ghw || is_ghw_rbm(m)); };
  std::uint64_t seen = 0;
  std::uint64_t kept = 0;
  auto line = [&](const BottMatrix& m) {
    json j;
    j["index"] = strict_upper_index(m);
    j["rows"] = rows_json(m);
    std::cout << j.dump() << "\n";
  };
  if (canonical) {
    for (const auto& c : classify(dim).classes) {
      ++seen;
      if (!keep(c.canonical)) continue;
      ++kept;
      line(c.canonical);
    }
  } else {
    enumerate_strict_upper(dim, [&](const BottMatrix& m) {
      ++seen;
      if (keep(m)) {
        ++kept;
        line(m);
      }
      return true;
    });
  }
  json summary = report("enumerate", {{"dim", dim}, {"orientable", orientable}, {"ghw", ghw}, {"canonical", canonical}},
                        {{"scanned", seen}, {"count", kept}});
  std::cout << summary.dump() << "\n";
  return 0;
}

int cmd_classify(int dim, bool members) {
  const Classification c = classify(dim);
  json classes = json::array();
  for (const auto& d : c.classes) {
    json j;
    j["canonical"] = rows_json(d.canonical);
    j["size"] = d.members.size();
    j["fingerprint"] = fingerprint_json(d.fingerprint);
    if (members) {
      json ms = json::array();
      for (const auto& m : d.members) ms.push_back(strict_upper_index(m));
      j["member_indices"] = ms;
    }
    classes.push_back(std::move(j));
  }
  int oriented = 0;
  for (const auto& d : c.classes) oriented += d.fingerprint.orientable ? 1 : 0;
  emit(report("classify", {{"dim", dim}},
              {{"classes", c.classes.size()},
               {"oriented", oriented},
               {"ghw_rbm", count_ghw_rbm_classes(c)},
               {"list", classes}}));
  return 0;
}

int cmd_table(int max_dim, bool csv) {
  if (max_dim < 1 || max_dim > kDefaultClassifyBound) throw InputError("--max-dim must be in 1..6");
  json rows = json::array();
  if (csv) std::cout << "n,rbm,oriented_rbm,ghw_rbm,formula\n";
  for (int n = 1; n <= max_dim; ++n) {
    ClassifyOptions opts;
    opts.check_w2 = false;
    const Classification c = classify(n, opts);
    int oriented = 0;
    for (const auto& d : c.classes) oriented += d.fingerprint.orientable ? 1 : 0;
    const int ghw = count_ghw_rbm_classes(c);
    const json formula = n >= 2 ? json(ghw_rbm_formula(n)) : json(nullptr);
    if (csv) {
      std::cout << n << ',' << c.classes.size() << ',' << oriented << ',' << ghw << ','
                << (formula.is_null() ? std::string() : formula.dump()) << "\n";
    }
    rows.push_back({{"n", n},
                    {"rbm", c.classes.size()},
                    {"oriented_rbm", oriented},
                    {"ghw_rbm", ghw},
                    {"formula", formula}});
  }
  if (!csv) emit(report("table", {{"max_dim", max_dim}}, {{"rows", rows}}));
  return 0;
}

int cmd_prop1(int dim) {
  const auto r = group::prop1_report(dim);
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"direction", c.direction},
                      {"generator", c.generator},
                      {"image", group::format_affine(c.image)},
                      {"member", c.member}});
  }
  emit(report("prop1", {{"dim", dim}}, {{"holds", r.holds}, {"checks", checks}}));
  return r.holds ? 0 : 3;
}

int cmd_rigidity(int dim, int sample, std::uint64_t seed, bool no_prune) {
  rigidity::RigidityOptions opts;
  opts.sample = sample;
  opts.seed = seed;
  opts.prune = !no_prune;
  const auto r = rigidity::rigidity_experiment(dim, opts);
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"a", rows_json(v.a)},
                          {"b", rows_json(v.b)},
                          {"same_class", v.same_class},
                          {"isomorphic", v.isomorphic}});
  }
  emit(report("rigidity", {{"dim", dim}, {"sample", sample}, {"seed", seed}, {"prune", !no_prune}},
              {{"dim", r.dim},
               {"classes", r.classes},
               {"mode", r.mode},
               {"pairs_checked", r.pairs_checked},
               {"violations", violations}}));
  return r.violations.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real Bott manifolds: classification, cohomology, Spin structures"};
  app.set_version_flag("--version", BOTT_VERSION);
  app.require_subcommand(1);

  int dim = 0;
  int max_dim = 6;
  std::string matrix_file;
  std::string family_file;
  bool orientable = false;
  bool ghw = false;
  bool canonical = false;
  bool members = false;
  bool csv = false;
  bool json_flag = false;
  int sample = 10;
  std::uint64_t seed = 1;
  bool no_prune = false;

  auto* enumerate = app.add_subcommand("enumerate", "Stream strictly upper triangular Bott matrices as JSON lines");
  enumerate->add_option("--dim", dim, "Dimension (1..7)")->required();
  enumerate->add_flag("--orientable", orientable, "Only orientable matrices");
  enumerate->add_flag("--ghw", ghw, "Only matrices of rank n-1");
  enumerate->add_flag("--canonical", canonical, "Only canonical class representatives (dim <= 6)");

  auto* classify_cmd = app.add_subcommand("classify", "Diffeomorphism classes");
  classify_cmd->add_option("--dim", dim, "Dimension (1..6)")->required();
  classify_cmd->add_flag("--members", members, "List member indices of each class");

  auto* table = app.add_subcommand("table", "Class counts per dimension");
  table->add_option("--max-dim", max_dim, "Largest dimension (1..6)");
  table->add_flag("--csv", csv, "CSV instead of JSON");

  auto* invariants = app.add_subcommand("invariants", "Cohomology and group invariants of one matrix");
  invariants->add_option("--matrix", matrix_file, "Matrix file (text or JSON)")->required();

  auto* spin_cmd = app.add_subcommand("spin", "Spin and Spin^c report");
  auto* matrix_opt = spin_cmd->add_option("--matrix", matrix_file, "Matrix file (text or JSON)");
  auto* family_opt = spin_cmd->add_option("--family", family_file, "Family file with '*' entries");
  matrix_opt->excludes(family_opt);
  spin_cmd->require_option(1);

  auto* prop1 = app.add_subcommand("prop1", "Conjugation of Gamma_n onto Gamma(A) for the superdiagonal A");
  prop1->add_option("--dim", dim, "Dimension (2..8)")->required();

  auto* rigidity_cmd = app.add_subcommand("rigidity", "Compare ring isomorphism with diffeomorphism");
  rigidity_cmd->add_option("--dim", dim, "Dimension (1..5)")->required();
  rigidity_cmd->add_option("--sample", sample, "Random inter-class pairs at dim 5");
  rigidity_cmd->add_option("--seed", seed, "Seed for the sampled pairs");
  rigidity_cmd->add_flag("--no-prune", no_prune, "Plain enumeration of GL(n,2)");

  for (auto* sub : {enumerate, classify_cmd, table, invariants, spin_cmd, prop1, rigidity_cmd}) {
    sub->add_flag("--json", json_flag, "JSON output (default)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return cmd_enumerate(dim, orientable, ghw, canonical);
    if (*classify_cmd) return cmd_classify(dim, members);
    if (*table) return cmd_table(max_dim, csv);
    if (*invariants) {
      emit(report("invariants", {{"matrix", matrix_file}}, invariants_json(io::read_matrix_file(matrix_file))));
      return 0;
    }
    if (*spin_cmd) {
      if (!matrix_file.empty()) {
        emit(report("spin", {{"matrix", matrix_file}}, spin_json(io::read_matrix_file(matrix_file))));
        return 0;
      }
      const auto fam = io::read_family_file(family_file);
      json list = json::array();
      int oriented = 0;
      int spin_count = 0;
      io::for_each_member(fam, [&](const BottMatrix& m) {
        if (!is_orientable(m)) return;
        ++oriented;
        json j = spin_json(m);
        spin_count += j["spin"].get<bool>() ? 1 : 0;
        list.push_back(std::move(j));
      });
      emit(report("spin", {{"family", family_file}},
                  {{"assignments", std::uint64_t{1} << fam.star_count()},
                   {"orientable", oriented},
                   {"with_spin", spin_count},
                   {"members", list}}));
      return 0;
    }
    if (*prop1) return cmd_prop1(dim);
    if (*rigidity_cmd) return cmd_rigidity(dim, sample, seed, no_prune);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
