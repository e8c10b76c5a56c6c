// amst: workbench CLI over the finite abstract-model-structure library.
//
// Exit codes: 0 = all checks verified or vacuous, 1 = a violation or failed
// validation, 2 = usage error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "amst/adapters.hpp"
#include "amst/compactness.hpp"
#include "amst/consequence.hpp"
#include "amst/counterexample.hpp"
#include "amst/cpl.hpp"
#include "amst/generate.hpp"
#include "amst/json_io.hpp"
#include "amst/suite.hpp"
#include "amst/topology.hpp"
#include "amst/ultra.hpp"

namespace {

using amst::FiniteAmst;
using amst::Mask;
using nlohmann::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("AMST_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw amst::Error(amst::ErrorKind::Argument, "AMST_SEED must be an integer");
    }
  }
  return 1;
}

int cmd_check(const std::string& path) {
  const FiniteAmst a = amst::io::amst_from_json(amst::io::load_file(path));
  json rep;
  rep["sentences"] = a.sentence_count();
  rep["models"] = a.model_count();
  const auto normal = amst::is_normal(a);
  rep["normal"] = normal.normal;
  if (!normal.normal) {
    rep["normality_witness"] = {
        {"model", a.model_labels()[normal.witness->first]},
        {"set", amst::format_set(normal.witness->second, a.sentence_labels())}};
  }
  const auto l_model = amst::is_satisfiable(a, a.all_sentences());
  rep["l_satisfiable"] = l_model.has_value();
  if (l_model) rep["l_witness"] = a.model_labels()[*l_model];
  rep["l_finitely_satisfiable"] =
      amst::is_finitely_satisfiable(a, a.all_sentences()).finitely_satisfiable;
  const auto compact = amst::is_compact(a);
  rep["compact"] = compact.compact;
  if (!compact.compact)
    rep["compactness_counterexample"] =
        amst::format_set(*compact.counterexample, a.sentence_labels());
  rep["mod_empty"] = amst::format_index_set(a.mod_of(0));
  rep["th_all_models"] = amst::format_set(a.th_of(a.all_models()), a.sentence_labels());
  if (a.sentence_count() <= amst::kMaxTableSentences && a.model_count() <= amst::kMaxGround)
    rep["characterization"] = amst::io::characterization_to_json(amst::characterization_report(a));
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_theorems(std::uint64_t seed, int count, int max_l, int max_m,
                 const std::vector<std::string>& only, bool as_json) {
  amst::SuiteConfig cfg;
  cfg.seed = seed;
  cfg.count = count;
  cfg.max_sentences = max_l;
  cfg.max_models = max_m;
  cfg.theorems = only.empty() ? amst::registered_theorems() : only;
  const auto verdicts = amst::run_suite(cfg);
  if (as_json) {
    std::cout << amst::io::verdicts_to_json(verdicts).dump(2) << "\n";
  } else {
    std::map<std::string, std::array<int, 3>> tally;
    for (const auto& v : verdicts) {
      auto& t = tally[v.theorem];
      t[v.status == amst::Status::Verified ? 0 : v.status == amst::Status::Vacuous ? 1 : 2]++;
      if (v.status == amst::Status::Violated)
        std::cout << "VIOLATION " << v.theorem << " seed=" << v.seed << " digest=" << v.digest
                  << " : " << v.witness << "\n";
    }
    for (const auto& [name, t] : tally)
      std::cout << name << ": " << t[0] << " verified, " << t[1] << " vacuous, " << t[2]
                << " violated\n";
  }
  return amst::any_violation(verdicts) ? 1 : 0;
}

int cmd_canon(const std::string& path) {
  const auto ls = amst::io::logical_structure_from_json(amst::io::load_file(path));
  const auto report = amst::is_tarski_type(ls);
  if (!report.all()) {
    json err;
    err["tarski"] = false;
    if (!report.reflexive.holds) err["reflexivity"] = report.reflexive.witness;
    if (!report.monotonic.holds) err["monotonicity"] = report.monotonic.witness;
    if (!report.transitive.holds) err["transitivity"] = report.transitive.witness;
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  const FiniteAmst b = amst::canonical_normal_amst(ls);
  std::cout << amst::io::amst_to_json(b).dump(2) << "\n";
  return 0;
}

int cmd_convert(const std::string& from, const std::string& path) {
  const json j = amst::io::load_file(path);
  FiniteAmst a = [&] {
    if (from == "info") return amst::info_system_to_amst(amst::io::info_system_from_json(j));
    if (from == "chu") return amst::chu_to_amst(amst::io::chu_from_json(j));
    if (from == "quiver") return amst::quiver_to_amst(amst::io::quiver_from_json(j));
    if (from == "logic")
      return amst::logical_structure_to_amst(amst::io::logical_structure_from_json(j));
    if (from == "category") return amst::category_to_amst(amst::io::category_from_json(j));
    throw amst::Error(amst::ErrorKind::Argument, "unknown structure kind '" + from + "'");
  }();
  std::cout << amst::io::amst_to_json(a).dump(2) << "\n";
  return 0;
}

int cmd_cpl(const std::string& vars_csv, std::vector<std::string> formula_texts,
            const std::string& file, bool check_ultra, std::uint64_t seed) {
  std::vector<std::string> vars;
  std::stringstream ss(vars_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) vars.push_back(item);
  if (!file.empty()) {
    // {"variables": [...], "formulas": ["p & q", ...]}
    const json j = amst::io::load_file(file);
    vars.clear();
    for (const auto& v : j.at("variables")) vars.push_back(v.get<std::string>());
    for (const auto& f : j.at("formulas")) formula_texts.push_back(f.get<std::string>());
  }
  std::vector<amst::cpl::FormulaPtr> formulas;
  for (const auto& text : formula_texts) formulas.push_back(amst::cpl::parse_formula(text));
  const FiniteAmst a = amst::cpl::valuation_amst(vars, formulas);
  json out;
  out["amst"] = amst::io::amst_to_json(a);
  if (check_ultra) {
    amst::Rng rng(seed);
    bool ok = true;
    std::string bad;
    for (int index_size = 1; index_size <= 3 && ok; ++index_size) {
      const auto ultras = amst::enumerate_ultrafilters(index_size);
      for (int round = 0; round < 50 && ok; ++round) {
        std::vector<amst::cpl::TruthAssignment> seq;
        for (int i = 0; i < index_size; ++i)
          seq.push_back({vars, static_cast<Mask>(rng.below(std::uint64_t{1} << vars.size()))});
        for (const auto& u : ultras)
          for (const auto& f : formulas)
            if (!amst::cpl::ultravaluation_theorem_check(seq, u, f)) {
              ok = false;
              bad = amst::cpl::print_formula(f);
            }
      }
    }
    out["ultravaluation_theorem"] = ok;
    if (!ok) out["ultravaluation_witness"] = bad;
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_counterexample(std::uint64_t bound, bool json_only) {
  const auto rep = amst::verify_counterexample(bound);
  if (!json_only) {
    std::cout << "bound " << rep.bound << "\n";
    for (const auto& c : rep.claims)
      std::cout << "(" << c.id << ") " << c.statement << ": "
                << (c.verified ? "verified" : "FAILED") << "\n    " << c.detail << "\n";
  }
  std::cout << amst::io::counterexample_to_json(rep).dump(2) << "\n";
  return rep.all_verified() ? 0 : 1;
}

int cmd_fuzz(int budget, std::uint64_t seed) {
  // cross-validates independently computed routes on random instances
  int violations = 0;
  for (int i = 0; i < budget; ++i) {
    amst::GenParams p;
    p.seed = seed + i;
    p.max_models = 4;
    p.max_sentences = 4;
    p.kind = i % 3 == 2 ? FiniteAmst::Kind::General : FiniteAmst::Kind::Normal;
    p.density = 0.2 + 0.6 * ((i % 5) / 4.0);
    const FiniteAmst a = amst::random_amst(p);
    try {
      const auto normal = amst::is_normal(a);
      if (a.kind() == FiniteAmst::Kind::Normal && !normal.normal) {
        ++violations;
        std::cout << "normal-matrix amst flagged non-normal, seed " << p.seed << "\n";
        continue;
      }
      if (normal.normal && !amst::is_satisfiable(a, a.all_sentences())) {
        amst::SamplePlan plan;
        plan.seed = p.seed;
        plan.samples = 40;
        const auto rep = amst::characterization_report(a, plan);
        if (rep.hypothesis_ok && (!rep.all_equal() || !rep.all_true())) {
          ++violations;
          std::cout << "nine-way disagreement, seed " << p.seed << " digest "
                    << amst::instance_digest(a) << "\n";
        }
        const auto eq = amst::compactness_equivalence_check(a);
        if (!eq.equal) {
          ++violations;
          std::cout << "topology compactness disagreement, seed " << p.seed << "\n";
        }
      }
      if (!amst::lemma_checks(a).clean()) {
        ++violations;
        std::cout << "lemma violation, seed " << p.seed << "\n";
      }
    } catch (const amst::Error& e) {
      ++violations;
      std::cout << "error on seed " << p.seed << ": " << e.what() << "\n";
    }
  }
  std::cout << "fuzz: " << budget << " instances, " << violations << " violations\n";
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite abstract model structures"};
  app.require_subcommand(1);

  std::string check_path;
  auto* check = app.add_subcommand("check", "operators, normality and compactness of an amst");
  check->add_option("file", check_path, "amst JSON file")->required();

  std::uint64_t seed = 0;
  bool seed_set = false;
  int count = 40, max_l = 5, max_m = 5;
  bool as_json = false;
  std::vector<std::string> only;
  auto* theorems = app.add_subcommand("theorems", "run the theorem-checking suite");
  theorems->add_option("--seed", seed, "base seed")->each([&](const std::string&) {
    seed_set = true;
  });
  theorems->add_option("--count", count, "instances per theorem");
  theorems->add_option("--max-l", max_l, "sentence cap for random instances");
  theorems->add_option("--max-m", max_m, "model cap for random instances");
  theorems->add_option("--only", only, "run only these theorem ids");
  theorems->add_flag("--json", as_json, "emit verdicts as JSON");

  std::string canon_path;
  auto* canon = app.add_subcommand("canon", "canonical normal amst of a consequence relation");
  canon->add_option("file", canon_path, "logical-structure JSON file")->required();

  std::string convert_from, convert_path;
  auto* convert = app.add_subcommand("convert", "encode a structure as an amst");
  convert->add_option("--from", convert_from, "info|chu|quiver|logic|category")->required();
  convert->add_option("file", convert_path, "structure JSON file")->required();

  std::string cpl_vars, cpl_file;
  std::vector<std::string> cpl_formulas;
  bool cpl_ultra = false;
  auto* cpl = app.add_subcommand("cpl", "propositional valuation structures");
  cpl->add_option("--vars", cpl_vars, "comma-separated variables");
  cpl->add_option("--formulas", cpl_formulas, "formulas over the variables");
  cpl->add_option("--file", cpl_file, "JSON file with variables and formulas");
  cpl->add_flag("--check-ultravaluation", cpl_ultra, "verify the ultravaluation law");

  std::uint64_t bound = 8;
  bool ce_json = false;
  auto* counterexample = app.add_subcommand("counterexample",
                                            "verify the non-normal structure over N");
  counterexample->add_option("--bound", bound, "spot-check bound (≥ 2)");
  counterexample->add_flag("--json", ce_json, "emit the report as JSON");

  int fuzz_budget = 100;
  auto* fuzz = app.add_subcommand("fuzz", "randomized cross-validation of the checkers");
  fuzz->add_option("--budget", fuzz_budget, "number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::uint64_t effective_seed = seed_set ? seed : default_seed();
    if (check->parsed()) return cmd_check(check_path);
    if (theorems->parsed())
      return cmd_theorems(effective_seed, count, max_l, max_m, only, as_json);
    if (canon->parsed()) return cmd_canon(canon_path);
    if (convert->parsed()) return cmd_convert(convert_from, convert_path);
    if (cpl->parsed()) {
      if (cpl_vars.empty() && cpl_file.empty())
        throw amst::Error(amst::ErrorKind::Argument, "cpl needs --vars or --file");
      return cmd_cpl(cpl_vars, cpl_formulas, cpl_file, cpl_ultra, effective_seed);
    }
    if (counterexample->parsed()) return cmd_counterexample(bound, ce_json);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_budget, effective_seed);
  } catch (const amst::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == amst::ErrorKind::Argument || e.kind() == amst::ErrorKind::Io ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
