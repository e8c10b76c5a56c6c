#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amst/check.hpp"
#include "amst/structure.hpp"

namespace amst {

// How many sentences a 2^|L| x |L| turnstile table may mention.
inline constexpr int kMaxTableSentences = 12;

// A logical structure (L, ⊢): a relation between sentence sets and
// sentences, stored row-wise as the closure operator C(Γ) = {α | Γ ⊢ α}.
class LogicalStructure {
 public:
  // closure_rows[g] = C(Γ) for the sentence set with bitmask g; 2^|L| rows.
  LogicalStructure(std::vector<std::string> sentences, std::vector<Mask> closure_rows);

  int sentence_count() const { return static_cast<int>(sentences_.size()); }
  const std::vector<std::string>& sentence_labels() const { return sentences_; }
  Mask all_sentences() const { return full_mask(sentence_count()); }

  bool turnstile(Mask gamma, int alpha) const;
  Mask closure(Mask gamma) const;

  bool operator==(const LogicalStructure& other) const;

 private:
  std::vector<std::string> sentences_;
  std::vector<Mask> closure_;
};

struct TarskiCondition {
  bool holds = true;
  std::string witness;  // set when holds == false
};

struct TarskiReport {
  TarskiCondition reflexive, monotonic, transitive;
  bool all() const { return reflexive.holds && monotonic.holds && transitive.holds; }
};

// Exhaustive check of reflexivity, monotonicity and transitivity.
TarskiReport is_tarski_type(const LogicalStructure& ls);

bool is_trivial_set(const LogicalStructure& ls, Mask gamma);  // C(Γ) = L
bool is_closed_set(const LogicalStructure& ls, Mask gamma);   // C(Γ) = Γ

struct FinitaryResult {
  bool finitary = true;
  // A pair (Γ, α) with Γ ⊢ α but no finite Γ₀ ⊆ Γ with Γ₀ ⊢ α. Unreachable on
  // finite L (Γ₀ = Γ always qualifies); kept so the search runs literally.
  std::optional<std::pair<Mask, int>> witness;
};

FinitaryResult is_finitary(const LogicalStructure& ls);

// Smallest (by cardinality, then value) Γ₀ ⊆ Γ with Γ₀ ⊢ α. With proper_only
// the search is restricted to proper subsets; may then come out empty.
std::optional<Mask> entailing_subset(const LogicalStructure& ls, Mask gamma, int alpha,
                                     bool proper_only);

// Γ ⊢ α iff Mod(Γ) ⊆ Mod({α}), tabulated over every Γ. Requires |L| within
// the turnstile-table cap.
LogicalStructure induced_consequence(const FiniteAmst& a);

// The representation construction: a normal amst over the distinct closure
// characteristic functions of nontrivial sets, ordered by ascending bitmask.
// The result induces exactly `ls` and leaves L unsatisfiable.
// Throws Error(Precondition) on non-Tarski input and Error(Construction)
// when every set is trivial (no models would exist).
FiniteAmst canonical_normal_amst(const LogicalStructure& ls);

// "Every ⊢-trivial set contains a finite ⊢-trivial subset", under the
// hypotheses: finitary, monotonic, transitive, and some nonempty finite
// trivial set exists. Vacuous (with a note) when a hypothesis fails.
Check check_finitary_trivial_theorem(const LogicalStructure& ls);

}  // namespace amst
