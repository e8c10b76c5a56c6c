#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amst/check.hpp"
#include "amst/structure.hpp"
#include "amst/topology.hpp"

namespace amst {

// A family of subsets of a finite index set {0,..,n-1}, n ≤ 16. Stored as
// sorted deduplicated bitmasks; doubles as the representation of filters and
// ultrafilters (the axioms are checked by the predicates below).
class SetFamily {
 public:
  SetFamily(int index_size, std::vector<Mask> members);

  int index_size() const { return index_size_; }
  Mask index_universe() const { return full_mask(index_size_); }
  const std::vector<Mask>& members() const { return members_; }
  bool contains(Mask s) const;
  bool operator==(const SetFamily& other) const = default;

 private:
  int index_size_;
  std::vector<Mask> members_;
};

// Every intersection of finitely many members is nonempty; enumerated over
// nonempty subfamilies with early exit.
bool has_fip(const SetFamily& fam);

bool is_filter(const SetFamily& fam);
bool is_proper_filter(const SetFamily& fam);

// Proper filter with the dichotomy: every A has exactly one of A, I∖A inside.
bool is_ultrafilter(const SetFamily& fam);

// {F | some finite intersection of members is contained in F}; the smallest
// proper filter containing fam. Throws Error(Precondition) without FIP.
SetFamily generated_filter(const SetFamily& fam);

// All sets containing index i.
SetFamily principal_ultrafilter(int index_size, int i);

// On a finite index set these are exactly the principal ones, ascending.
std::vector<SetFamily> enumerate_ultrafilters(int index_size);

// Principal ultrafilter at the smallest index common to every member.
SetFamily extend_to_ultrafilter(const SetFamily& filter);

// Smallest i with parts[i] ∈ u; requires the union of parts to be in u.
int partition_pick(const SetFamily& u, const std::vector<Mask>& parts);

// A sequence over the index set, valued in model indices.
struct ModelSequence {
  int index_size = 0;
  std::vector<int> entries;
};

// {x | every open around x pulls back to an ultrafilter-large index set}.
// When a subbase of the topology is supplied the subbase criterion is
// evaluated as well and the two computations must agree (internal check).
Mask ultralimits(const FiniteTopology& top, const ModelSequence& seq, const SetFamily& u,
                 const std::vector<Mask>* subbase = nullptr);

// Ultralimits of a model sequence in (M, τ_N).
Mask ultramodels(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u);

// {x | for all Σ: {i | m_i ⊨ Σ} ∈ u implies x ⊨ Σ} — the τ_N characterization.
Mask ultramodels_by_theorem(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u);

// Ultralimits of a model sequence in (M, τ_C).
Mask tauc_ultralimits(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u);

// {x | for all Σ: x ⊨ Σ implies {i | m_i ⊨ Σ} ∈ u} — the τ_C characterization.
Mask tauc_ultralimits_by_theorem(const FiniteAmst& a, const ModelSequence& seq,
                                 const SetFamily& u);

// τ_C-ultralimits equal their non-topological characterization.
bool tauc_ultralimit_check(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u);

// {l | for all Σ: l ⊨ Σ iff {i | m_i ⊨ Σ} ∈ u}, evaluated from the definition
// and re-derived through the single-sentence theory reduction; the two
// routes must agree (internal check).
Mask los_models(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u);

// The reduction route alone: models whose singleton theory equals
// {α | {i | m_i ⊨ {α}} ∈ u}.
Mask los_models_by_theory(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u);

// m ⪯ n iff Th({m}) ⊆ Th({n}).
bool preceq(const FiniteAmst& a, int m, int n);
Mask upset(const FiniteAmst& a, int m);

// Elements of the upset with no strictly larger theory inside it.
Mask maximal_in_upset(const FiniteAmst& a, int m);

// Both directions of "Th({n}) maximal satisfiable over Th({m}) iff n maximal
// in the upset of m", exhaustively over model pairs (normal amsts).
Check order_maxsat_check(const FiniteAmst& a);

// ModFin(Σ): models satisfying some finite subset of Σ.
Mask mod_fin(const FiniteAmst& a, Mask sigma);

struct SampleBudget {
  std::uint64_t seed = 0xF00D5EEDULL;
  int exhaustive_limit = 4096;  // sequence-space bound for exhaustive sweeps
  int samples = 256;            // sequences drawn above the bound
};

// Every Łoś-model of every sequence from K (relative to every ultrafilter on
// the index set) has its upset meeting K.
bool is_pseudo_closed(const FiniteAmst& a, Mask k, int index_size,
                      const SampleBudget& budget = {});

// Convergence of finite-subset-indexed sequences in τ_N plus the constructive
// witness route of the compactness proof. Throws Error(Precondition) when
// sigma is not finitely satisfiable or τ_N is unavailable.
Check finset_convergence_check(const FiniteAmst& a, Mask sigma, const SampleBudget& budget = {});

// Compactness iff ModFin(Σ) pseudo-closed under Łoś-models, under the
// standing hypothesis that Łoś-models of ModFin(Σ)-sequences exist (sampled;
// vacuous when a sampled sequence has none).
Check pseudo_closure_compactness_check(const FiniteAmst& a, Mask sigma, const SampleBudget& budget = {});

}  // namespace amst
