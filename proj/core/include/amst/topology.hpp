#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amst/bits.hpp"
#include "amst/structure.hpp"

namespace amst {

// A topology on a finite ground set {0,..,n-1}, n ≤ 16: the family of open
// sets stored as sorted deduplicated bitmasks. Always contains ∅ and the
// ground set; closed under pairwise union and intersection.
class FiniteTopology {
 public:
  FiniteTopology(int ground_size, std::vector<Mask> opens);

  int ground_size() const { return ground_size_; }
  Mask ground() const { return full_mask(ground_size_); }
  const std::vector<Mask>& opens() const { return opens_; }

  bool is_open(Mask s) const;
  bool is_closed(Mask s) const { return is_open(ground() & ~s); }

  bool operator==(const FiniteTopology& other) const = default;

 private:
  int ground_size_;
  std::vector<Mask> opens_;
};

// All finite intersections of subbase members (the empty intersection is the
// ground set), then all unions. Throws Error(Subbase) when σ does not cover.
FiniteTopology generate_from_subbase(int ground_size, const std::vector<Mask>& sigma);

struct BaseAxiomCheck {
  bool ok = true;
  std::optional<std::pair<Mask, Mask>> violation;  // a pair (U,V) with no basic W around some point of U∩V
};

BaseAxiomCheck check_base_axioms(int ground_size, const std::vector<Mask>& beta);

// Unions of base members plus ∅. Throws Error(Base) with the witnessing pair
// when the intersection axiom fails, Error(Subbase) when β does not cover.
FiniteTopology generate_from_base(int ground_size, const std::vector<Mask>& beta);

// Minimal-cardinality subcover of `cover` (breadth-first over reachable
// unions), or nullopt when `cover` does not cover the ground set.
std::optional<std::vector<Mask>> finite_subcover(const FiniteTopology& top,
                                                 const std::vector<Mask>& cover);

// Every open cover has a finite subcover. Covers are enumerated exhaustively
// while 2^|candidates| stays within budget, otherwise deterministically
// sampled (seeded); each must admit a finite subcover.
bool is_compact_space(const FiniteTopology& top, std::uint64_t seed = 0x5eedULL,
                      int sample_budget = 200);

// Same search restricted to subsets of the subbase σ; σ must generate `top`.
bool alexander_check(const FiniteTopology& top, const std::vector<Mask>& sigma);

struct GeneratedTopology {
  FiniteTopology top;
  std::vector<Mask> family;  // the generating subbase (τ_N) or base (τ_C)
};

// τ_N: generated by {M ∖ Mod({α}) | α ∈ L} as a subbase. Requires a normal
// amst whose full sentence set is unsatisfiable (otherwise the family cannot
// cover); throws Error(Precondition).
GeneratedTopology tau_n(const FiniteAmst& a);

// τ_C: generated by {Mod(Γ) | Γ ⊆ L} as a base. Requires a normal amst.
GeneratedTopology tau_c(const FiniteAmst& a);

struct ClosedSetsReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// For every Σ: Mod(Σ) is τ_N-closed and Mod(Th(Mod(Σ))) = Mod(Σ); plus the
// closure-operator laws of Mod∘Th on every X ⊆ M.
ClosedSetsReport closed_sets_check(const FiniteAmst& a);

struct CompactnessEquivalence {
  bool amst_compact = false;
  bool space_compact = false;
  bool equal = false;
};

// Both sides of "M compact iff (M, τ_N) compact", computed independently.
CompactnessEquivalence compactness_equivalence_check(const FiniteAmst& a);

}  // namespace amst
