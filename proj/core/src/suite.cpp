#include "amst/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "amst/adapters.hpp"
#include "amst/compactness.hpp"
#include "amst/consequence.hpp"
#include "amst/counterexample.hpp"
#include "amst/cpl.hpp"
#include "amst/generate.hpp"
#include "amst/topology.hpp"
#include "amst/ultra.hpp"

namespace amst {

namespace {

using Runner = std::function<void(const SuiteConfig&, std::vector<Verdict>&)>;

Verdict verdict_of(const std::string& theorem, const FiniteAmst& inst, std::uint64_t seed,
                   Status status, std::string witness = "") {
  return {theorem, status, std::move(witness), instance_digest(inst), seed};
}

GenParams params_for(const SuiteConfig& cfg, std::uint64_t instance_seed,
                     FiniteAmst::Kind kind) {
  GenParams p;
  p.seed = instance_seed;
  p.max_models = cfg.max_models;
  p.max_sentences = cfg.max_sentences;
  p.kind = kind;
  p.density = 0.2 + 0.6 * ((instance_seed % 7) / 6.0);
  return p;
}

// ---- galois: the Mod/Th operator laws ----

void run_galois(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    const bool general = i % 4 == 3;  // Th laws hold for every amst
    const FiniteAmst a = random_amst(params_for(
        cfg, seed, general ? FiniteAmst::Kind::General : FiniteAmst::Kind::Normal));
    const Mask universe = a.all_sentences();
    const Mask all_models = a.all_models();
    std::string bad;
    Rng rng(seed ^ 0xBEEF);

    if (!general) {
      for (Mask g = 0; g <= universe && bad.empty(); ++g) {
        Mask inter = all_models;
        for (int s : to_indices(g)) inter &= a.mod_of(bit(s));
        if (a.mod_of(g) != inter) bad = "Mod(Γ) ≠ ⋂Mod({α}) at Γ=" + format_index_set(g);
        for (int s = 0; s < a.sentence_count() && bad.empty(); ++s)
          if (!is_subset(a.mod_of(g | bit(s)), a.mod_of(g)))
            bad = "Mod not antitone at Γ=" + format_index_set(g);
        if (universe == 0) break;
      }
      // families for the union/intersection law
      for (int round = 0; round < 8 && bad.empty(); ++round) {
        const int k = 1 + static_cast<int>(rng.below(3));
        std::vector<Mask> fam;
        Mask uni = 0, meet = universe;
        for (int j = 0; j < k; ++j) {
          fam.push_back(static_cast<Mask>(rng.next()) & universe);
          uni |= fam.back();
          meet &= fam.back();
        }
        Mask inter = all_models, join = 0;
        for (Mask s : fam) {
          inter &= a.mod_of(s);
          join |= a.mod_of(s);
        }
        if (a.mod_of(uni) != inter) bad = "Mod(⋃Σi) ≠ ⋂Mod(Σi)";
        if (!is_subset(join, a.mod_of(meet))) bad = "⋃Mod(Σi) ⊄ Mod(⋂Σi)";
      }
    }

    for (Mask x = 0; x <= all_models && bad.empty(); ++x) {
      Mask inter = universe;
      for (int m : to_indices(x)) inter &= a.th_of(bit(m));
      if (a.th_of(x) != inter) bad = "Th(X) ≠ ⋂Th({m}) at X=" + format_index_set(x);
      for (int m = 0; m < a.model_count() && bad.empty(); ++m)
        if (!is_subset(a.th_of(x | bit(m)), a.th_of(x)))
          bad = "Th not antitone at X=" + format_index_set(x);
    }
    if (bad.empty() && a.th_of(0) != universe) bad = "Th(∅) ≠ L";
    // the converse of the Th(∅)=L law needs normality: a non-normal model can
    // satisfy every singleton while some finite set stays unsatisfiable
    if (bad.empty() && !general &&
        !is_finitely_satisfiable(a, universe).finitely_satisfiable) {
      for (Mask x = 1; x <= all_models && bad.empty(); ++x)
        if (a.th_of(x) == universe) bad = "Th(X)=L with X nonempty although L is not finsat";
    }
    if (bad.empty()) {
      // Th over unions of random families
      for (int round = 0; round < 8 && bad.empty(); ++round) {
        const int k = 1 + static_cast<int>(rng.below(3));
        std::vector<Mask> fam;
        Mask uni = 0, meet = all_models;
        for (int j = 0; j < k; ++j) {
          fam.push_back(static_cast<Mask>(rng.next()) & all_models);
          uni |= fam.back();
          meet &= fam.back();
        }
        Mask inter = universe, join = 0;
        for (Mask x : fam) {
          inter &= a.th_of(x);
          join |= a.th_of(x);
        }
        if (a.th_of(uni) != inter) bad = "Th(⋃Xi) ≠ ⋂Th(Xi)";
        if (!is_subset(join, a.th_of(meet))) bad = "⋃Th(Xi) ⊄ Th(⋂Xi)";
      }
    }
    if (bad.empty() && !general) {
      for (Mask g = 0; g <= universe && bad.empty(); ++g) {
        const Mask thmod = a.th_of(a.mod_of(g));
        if (!is_subset(g, thmod)) bad = "Σ ⊄ Th(Mod(Σ)) at Σ=" + format_index_set(g);
        if (g != universe) {
          // fixed point iff satisfiable and closed
          const bool fixed = thmod == g;
          bool closed = true;
          for (int s = 0; s < a.sentence_count(); ++s)
            if (is_subset(a.mod_of(g), a.mod_of(bit(s))) != contains(g, s)) closed = false;
          const bool expect = is_satisfiable(a, g).has_value() && closed;
          if (fixed != expect) bad = "ThMod fixed-point law fails at Σ=" + format_index_set(g);
        }
        if (universe == 0) break;
      }
    }
    out.push_back(verdict_of("galois", a, seed,
                             bad.empty() ? Status::Verified : Status::Violated, bad));
  }
}

// ---- rep_tarski ----

void run_rep_tarski(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + 31 * i + 7;
    GenParams p = params_for(cfg, seed, FiniteAmst::Kind::Normal);
    if (p.max_sentences > 6) p.max_sentences = 6;
    const LogicalStructure ls = random_tarski(p);
    Verdict v{"rep_tarski", Status::Verified, "", "", seed};
    if (!is_tarski_type(ls).all()) {
      v.status = Status::Violated;
      v.witness = "induced consequence of a normal amst is not Tarski-type";
    } else {
      bool trivial_only = true;
      for (Mask g = 0; g <= ls.all_sentences(); ++g) {
        if (!is_trivial_set(ls, g)) trivial_only = false;
        if (ls.all_sentences() == 0) break;
      }
      if (trivial_only) {
        v.status = Status::Vacuous;
        v.witness = "every set trivial; the construction has no models";
      } else {
        const FiniteAmst b = canonical_normal_amst(ls);
        v.digest = instance_digest(b);
        if (!(induced_consequence(b) == ls)) {
          v.status = Status::Violated;
          v.witness = "induced consequence of the construction differs";
        } else if (is_satisfiable(b, b.all_sentences())) {
          v.status = Status::Violated;
          v.witness = "L satisfiable in the construction";
        }
      }
    }
    out.push_back(v);
  }
}

// ---- nine-way equivalence ----

void run_nine(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + 17 * i + 3;
    const FiniteAmst a = random_amst(params_for(cfg, seed, FiniteAmst::Kind::Normal));
    SamplePlan plan;
    plan.seed = seed;
    const auto rep = characterization_report(a, plan);
    Verdict v = verdict_of("nine_equivalence", a, seed, Status::Verified);
    if (!rep.hypothesis_ok) {
      v.status = Status::Vacuous;
      v.witness = "L finitely satisfiable (or structure not normal)";
    } else if (!rep.all_equal() || !rep.all_true()) {
      v.status = Status::Violated;
      for (size_t c = 0; c < rep.conditions.size(); ++c)
        if (!rep.conditions[c].holds)
          v.witness += "cond " + std::to_string(c + 1) + ": " + rep.conditions[c].witness + "; ";
    }
    out.push_back(v);
  }
}

// ---- lemmas ----

void run_lemmas(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + 13 * i + 11;
    const FiniteAmst a = random_amst(params_for(
        cfg, seed, i % 3 == 2 ? FiniteAmst::Kind::General : FiniteAmst::Kind::Normal));
    const auto rep = lemma_checks(a);
    Verdict v = verdict_of("lemmas", a, seed, Status::Verified);
    if (!rep.clean()) {
      v.status = Status::Violated;
      for (const auto& item : rep.items)
        if (!item.violations.empty()) v.witness += item.lemma + ": " + item.violations.front() + "; ";
    }
    out.push_back(v);
  }
}

// ---- topology: generation laws + Alexander agreement ----

void run_topology_generation(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + 41 * i + 5;
    Rng rng(seed);
    const int n = 1 + static_cast<int>(rng.below(std::min(cfg.max_models, 6)));
    const Mask ground = full_mask(n);
    std::vector<Mask> sigma;
    const int k = 1 + static_cast<int>(rng.below(4));
    Mask uni = 0;
    for (int j = 0; j < k; ++j) {
      sigma.push_back(static_cast<Mask>(rng.next()) & ground);
      uni |= sigma.back();
    }
    if (uni != ground) sigma.push_back(ground & ~uni);  // patch the cover
    Verdict v{"topology_generation", Status::Verified, "", "", seed};
    const FiniteTopology top = generate_from_subbase(n, sigma);
    // σ_β, the finite intersections, is a base generating the same topology
    std::vector<Mask> base = {ground};
    for (Mask s : sigma) {
      const size_t sz = base.size();
      for (size_t idx = 0; idx < sz; ++idx) base.push_back(base[idx] & s);
    }
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    if (!(generate_from_base(n, base) == top)) {
      v.status = Status::Violated;
      v.witness = "base route disagrees with subbase route";
    } else if (alexander_check(top, sigma) != is_compact_space(top, seed)) {
      v.status = Status::Violated;
      v.witness = "subbasic cover search disagrees with the open cover search";
    }
    out.push_back(v);
  }
}

// ---- topology: space-compactness equivalence + closure laws ----

void run_topology_compactness(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + 29 * i + 23;
    GenParams p = params_for(cfg, seed, FiniteAmst::Kind::Normal);
    p.density = 0.35;
    const FiniteAmst a = random_amst(p);
    Verdict v = verdict_of("topology_compactness", a, seed, Status::Verified);
    if (is_satisfiable(a, a.all_sentences())) {
      v.status = Status::Vacuous;
      v.witness = "L satisfiable, τ_N undefined";
    } else {
      const auto eq = compactness_equivalence_check(a);
      const auto closed = closed_sets_check(a);
      if (!eq.equal) {
        v.status = Status::Violated;
        v.witness = "amst and τ_N compactness disagree";
      } else if (!closed.ok) {
        v.status = Status::Violated;
        v.witness = closed.violations.front();
      }
    }
    out.push_back(v);
  }
}

// ---- ultrafilters ----

void run_ultrafilters(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  Verdict v{"ultrafilters", Status::Verified, "", "", cfg.seed};
  for (int n = 1; n <= 3 && v.status == Status::Verified; ++n) {
    const auto principals = enumerate_ultrafilters(n);
    if (static_cast<int>(principals.size()) != n) {
      v.status = Status::Violated;
      v.witness = "expected " + std::to_string(n) + " ultrafilters";
      break;
    }
    // brute force: every family over P(I) passes is_ultrafilter iff principal
    const size_t slots = size_t{1} << n;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << slots); ++pick) {
      std::vector<Mask> members;
      for (size_t s = 0; s < slots; ++s)
        if ((pick >> s) & 1) members.push_back(static_cast<Mask>(s));
      const SetFamily fam(n, members);
      const bool principal =
          std::find(principals.begin(), principals.end(), fam) != principals.end();
      if (is_ultrafilter(fam) != principal) {
        v.status = Status::Violated;
        v.witness = "family " + std::to_string(pick) + " misclassified on |I|=" +
                    std::to_string(n);
        break;
      }
    }
  }
  // generated_filter minimality by brute force, |I| ≤ 4
  Rng rng(cfg.seed ^ 0xF1);
  for (int round = 0; round < std::min(cfg.count, 20) && v.status == Status::Verified;
       ++round) {
    const int n = 2 + static_cast<int>(rng.below(3));
    std::vector<Mask> members;
    const int k = 1 + static_cast<int>(rng.below(3));
    for (int j = 0; j < k; ++j) {
      Mask m = static_cast<Mask>(rng.next()) & full_mask(n);
      members.push_back(m);
    }
    const SetFamily fam(n, members);
    if (!has_fip(fam)) continue;
    const SetFamily gen = generated_filter(fam);
    if (!is_proper_filter(gen)) {
      v.status = Status::Violated;
      v.witness = "generated filter is not a proper filter";
      break;
    }
    for (Mask m : fam.members())
      if (!gen.contains(m)) {
        v.status = Status::Violated;
        v.witness = "generated filter misses a generator";
      }
    // minimality: every proper filter containing fam contains gen
    const size_t slots = size_t{1} << n;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << slots); ++pick) {
      std::vector<Mask> cand;
      for (size_t s = 0; s < slots; ++s)
        if ((pick >> s) & 1) cand.push_back(static_cast<Mask>(s));
      const SetFamily f(n, cand);
      bool contains_fam = true;
      for (Mask m : fam.members())
        if (!f.contains(m)) contains_fam = false;
      if (!contains_fam || !is_proper_filter(f)) continue;
      for (Mask m : gen.members())
        if (!f.contains(m)) {
          v.status = Status::Violated;
          v.witness = "a smaller proper filter contains the generators";
        }
    }
  }
  out.push_back(v);
}

// ---- Łoś characterizations on random instances ----

void run_los(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + 53 * i + 19;
    GenParams p = params_for(cfg, seed, FiniteAmst::Kind::Normal);
    p.max_models = std::min(p.max_models, 4);
    p.max_sentences = std::min(p.max_sentences, 4);
    const FiniteAmst a = random_amst(p);
    Verdict v = verdict_of("los_characterizations", a, seed, Status::Verified);
    Rng rng(seed ^ 0x10D);
    if (is_satisfiable(a, a.all_sentences())) {
      v.status = Status::Vacuous;
      v.witness = "L satisfiable, τ_N undefined";
      out.push_back(v);
      continue;
    }
    const int index_size = 1 + static_cast<int>(rng.below(3));
    const auto ultras = enumerate_ultrafilters(index_size);
    for (int round = 0; round < 6 && v.status == Status::Verified; ++round) {
      ModelSequence seq{index_size, {}};
      for (int j = 0; j < index_size; ++j)
        seq.entries.push_back(static_cast<int>(rng.below(a.model_count())));
      for (const auto& u : ultras) {
        const Mask tn_limits = ultramodels(a, seq, u);
        const Mask tc_limits = tauc_ultralimits(a, seq, u);
        const Mask los = los_models(a, seq, u);
        if (tn_limits != ultramodels_by_theorem(a, seq, u)) {
          v.status = Status::Violated;
          v.witness = "τ_N ultralimits disagree with their characterization";
          break;
        }
        if (tc_limits != tauc_ultralimits_by_theorem(a, seq, u)) {
          v.status = Status::Violated;
          v.witness = "τ_C ultralimits disagree with their characterization";
          break;
        }
        if (los != (tn_limits & tc_limits)) {
          v.status = Status::Violated;
          v.witness = "Łoś-models differ from the two-topology intersection";
          break;
        }
      }
    }
    out.push_back(v);
  }
}

// ---- order/maximality, convergence, pseudo-closure ----

void run_order_maxsat(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + 61 * i + 37;
    const FiniteAmst a = random_amst(params_for(cfg, seed, FiniteAmst::Kind::Normal));
    const auto check = order_maxsat_check(a);
    out.push_back(verdict_of("order_maxsat", a, seed, check.status, check.note));
  }
}

void run_finset_convergence(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + 71 * i + 41;
    GenParams p = params_for(cfg, seed, FiniteAmst::Kind::Normal);
    p.max_sentences = std::min(p.max_sentences, 4);
    p.max_models = std::min(p.max_models, 4);
    p.density = 0.3;
    const FiniteAmst a = random_amst(p);
    Verdict v = verdict_of("finset_convergence", a, seed, Status::Verified);
    if (is_satisfiable(a, a.all_sentences())) {
      v.status = Status::Vacuous;
      v.witness = "L satisfiable, τ_N undefined";
    } else {
      Rng rng(seed ^ 0x111);
      Mask sigma = static_cast<Mask>(rng.next()) & a.all_sentences();
      while (!is_finitely_satisfiable(a, sigma).finitely_satisfiable && sigma != 0)
        sigma &= sigma - 1;  // drop sentences until finitely satisfiable
      if (popcount(sigma) > 4) {
        int drop = popcount(sigma) - 4;
        for (int s = 0; s < a.sentence_count() && drop > 0; ++s)
          if (contains(sigma, s)) {
            sigma &= ~bit(s);
            --drop;
          }
      }
      SampleBudget budget;
      budget.seed = seed;
      budget.samples = 32;
      const auto check = finset_convergence_check(a, sigma, budget);
      v.status = check.status;
      v.witness = check.note;
    }
    out.push_back(v);
  }
}

void run_pseudo_closure(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + 83 * i + 43;
    GenParams p = params_for(cfg, seed, FiniteAmst::Kind::Normal);
    p.max_sentences = std::min(p.max_sentences, 4);
    p.max_models = std::min(p.max_models, 4);
    const FiniteAmst a = random_amst(p);
    Rng rng(seed ^ 0x14D);
    Mask sigma = static_cast<Mask>(rng.next()) & a.all_sentences();
    while (popcount(sigma) > 3) sigma &= sigma - 1;
    SampleBudget budget;
    budget.seed = seed;
    budget.samples = 24;
    budget.exhaustive_limit = 512;
    const auto check = pseudo_closure_compactness_check(a, sigma, budget);
    out.push_back(verdict_of("pseudo_closure_compactness", a, seed, check.status, check.note));
  }
}

// ---- CPL ultravaluations ----

void run_cpl(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  Verdict v{"cpl_ultravaluation", Status::Verified, "", "", cfg.seed};
  const std::vector<std::string> vars = {"p", "q"};
  Rng rng(cfg.seed ^ 0xC91);
  std::vector<cpl::FormulaPtr> formulas;
  cpl::enumerate_skeletons(vars, 2, [&](const cpl::FormulaPtr& f) {
    if (rng.below(97) < 5 && formulas.size() < 64) formulas.push_back(f);
  });
  for (int index_size = 1; index_size <= 3 && v.status == Status::Verified; ++index_size) {
    const auto ultras = enumerate_ultrafilters(index_size);
    for (int round = 0; round < 24 && v.status == Status::Verified; ++round) {
      std::vector<cpl::TruthAssignment> seq;
      for (int i = 0; i < index_size; ++i)
        seq.push_back({vars, static_cast<Mask>(rng.below(4))});
      for (const auto& u : ultras)
        for (const auto& f : formulas)
          if (!cpl::ultravaluation_theorem_check(seq, u, f)) {
            v.status = Status::Violated;
            v.witness = "ultravaluation law fails on " + cpl::print_formula(f);
            break;
          }
    }
  }
  // valuation amsts are normal and induce Tarski-type consequences
  if (v.status == Status::Verified && !formulas.empty()) {
    std::vector<cpl::FormulaPtr> sample(formulas.begin(),
                                        formulas.begin() + std::min<size_t>(4, formulas.size()));
    const FiniteAmst a = cpl::valuation_amst(vars, sample);
    if (!is_normal(a).normal) {
      v.status = Status::Violated;
      v.witness = "valuation amst is not normal";
    } else if (!is_tarski_type(induced_consequence(a)).all()) {
      v.status = Status::Violated;
      v.witness = "valuation amst induces a non-Tarski consequence";
    }
  }
  out.push_back(v);
}

// ---- adapters ----

void run_adapters(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  Verdict v{"adapters_roundtrip", Status::Verified, "", "", cfg.seed};
  Rng rng(cfg.seed ^ 0xADA);
  for (int i = 0; i < cfg.count && v.status == Status::Verified; ++i) {
    // quiver round trip
    Quiver q;
    const int nv = 1 + static_cast<int>(rng.below(3));
    const int ne = 1 + static_cast<int>(rng.below(4));
    for (int a = 0; a < nv; ++a) q.vertices.push_back("u" + std::to_string(a));
    for (int e = 0; e < ne; ++e) {
      q.edges.push_back("e" + std::to_string(e));
      q.source.push_back(static_cast<int>(rng.below(nv)));
      q.target.push_back(static_cast<int>(rng.below(nv)));
    }
    if (!(amst_to_quiver(quiver_to_amst(q), q.vertices) == q)) {
      v.status = Status::Violated;
      v.witness = "quiver round trip differs";
      break;
    }
    // logical-structure round trip
    GenParams p = params_for(cfg, cfg.seed + i, FiniteAmst::Kind::Normal);
    p.max_sentences = std::min(p.max_sentences, 4);
    const LogicalStructure ls = random_tarski(p);
    if (!(amst_to_logical_structure(logical_structure_to_amst(ls)) == ls)) {
      v.status = Status::Violated;
      v.witness = "logical-structure round trip differs";
      break;
    }
    // monoid-backed category round trip (Z_n under addition)
    const int n = 1 + static_cast<int>(rng.below(3));
    ObjectFreeCategory c;
    for (int x = 0; x < n; ++x) c.morphisms.push_back("g" + std::to_string(x));
    c.composition.assign(n, std::vector<std::optional<int>>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) c.composition[x][y] = (x + y) % n;
    if (!(amst_to_category(category_to_amst(c)) == c)) {
      v.status = Status::Violated;
      v.witness = "category round trip differs";
      break;
    }
  }
  out.push_back(v);
}

// ---- the infinite counterexample ----

void run_counterexample(const SuiteConfig& cfg, std::vector<Verdict>& out) {
  const auto rep = verify_counterexample(16);
  Verdict v{"counterexample", Status::Verified, "", "", cfg.seed};
  if (!rep.all_verified()) {
    v.status = Status::Violated;
    for (const auto& c : rep.claims)
      if (!c.verified) v.witness += "claim (" + c.id + ") failed; ";
  }
  out.push_back(v);
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> reg = {
      {"galois", run_galois},
      {"rep_tarski", run_rep_tarski},
      {"nine_equivalence", run_nine},
      {"lemmas", run_lemmas},
      {"topology_generation", run_topology_generation},
      {"topology_compactness", run_topology_compactness},
      {"ultrafilters", run_ultrafilters},
      {"los_characterizations", run_los},
      {"order_maxsat", run_order_maxsat},
      {"finset_convergence", run_finset_convergence},
      {"pseudo_closure_compactness", run_pseudo_closure},
      {"cpl_ultravaluation", run_cpl},
      {"adapters_roundtrip", run_adapters},
      {"counterexample", run_counterexample},
  };
  return reg;
}

}  // namespace

std::vector<std::string> registered_theorems() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

std::vector<Verdict> run_suite(const SuiteConfig& config) {
  std::vector<Verdict> out;
  for (const auto& name : config.theorems) {
    const auto it = std::find_if(registry().begin(), registry().end(),
                                 [&](const auto& entry) { return entry.first == name; });
    if (it == registry().end())
      throw Error(ErrorKind::Argument, "unknown theorem id '" + name + "'");
    it->second(config, out);
  }
  return out;
}

bool any_violation(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts)
    if (v.status == Status::Violated) return true;
  return false;
}

}  // namespace amst
