#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "amst/check.hpp"
#include "amst/consequence.hpp"
#include "amst/structure.hpp"

namespace amst {

// Quantifier bounds for the conditions ranging over function spaces and
// families. Below the cutoffs the spaces are enumerated exhaustively;
// above, `samples` seeded candidates are drawn per quantifier.
struct SamplePlan {
  std::uint64_t seed = 0xA23F1234DULL;
  int samples = 200;
  int family_exhaustive_cutoff = 4;  // |L| (item 6) / |M| (item 8)
  int map_exhaustive_cutoff = 3;     // |L| and |M| (items 7, 9)
};

struct CondResult {
  bool holds = true;
  std::string witness;  // set when holds == false
};

// The nine statements of the compactness characterization for normal amsts,
// each evaluated independently of the others.
CondResult cond_compact(const FiniteAmst& a);                    // (1)
CondResult cond_nontrivial_maxfinsat(const FiniteAmst& a);       // (2)
CondResult cond_maximal_satisfiable(const FiniteAmst& a);        // (3)
CondResult cond_complete(const FiniteAmst& a);                   // (4)
CondResult cond_trivial_finite_subset(const FiniteAmst& a);      // (5)
CondResult cond_directed_union(const FiniteAmst& a, const SamplePlan& plan = {});      // (6)
CondResult cond_finset_monotone(const FiniteAmst& a, const SamplePlan& plan = {});     // (7)
CondResult cond_th_directed(const FiniteAmst& a, const SamplePlan& plan = {});         // (8)
CondResult cond_finset_antitone_th(const FiniteAmst& a, const SamplePlan& plan = {});  // (9)

struct CharacterizationReport {
  // The theorem's standing hypothesis: normal and L not finitely satisfiable.
  bool hypothesis_ok = false;
  std::array<CondResult, 9> conditions;

  bool all_equal() const;
  bool all_true() const;
};

CharacterizationReport characterization_report(const FiniteAmst& a, const SamplePlan& plan = {});

struct LemmaReport {
  struct Item {
    std::string lemma;
    int instances = 0;   // candidate sets examined
    int applicable = 0;  // sets whose hypotheses held
    std::vector<std::string> violations;
  };
  std::vector<Item> items;
  bool clean() const;
};

// Instance-level checks of the surrounding lemmas: maximal finitely
// satisfiable + satisfiable => closed; maximal finsat proper => (satisfiable
// iff nontrivial); unsatisfiable => trivial (and its conditional converse).
LemmaReport lemma_checks(const FiniteAmst& a);

// "If M1 is compact and both induce the same consequence (with L
// unsatisfiable in both normal structures), then M2 is compact."
// Vacuous with a note when a hypothesis fails; Error(Argument) when the
// sentence alphabets differ.
Check shared_consequence_transfer(const FiniteAmst& a1, const FiniteAmst& a2);

}  // namespace amst
