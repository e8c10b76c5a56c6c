#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amst/bits.hpp"
#include "amst/error.hpp"

namespace amst {

// A finite abstract model structure: a set of models, a set of sentences,
// and a satisfaction relation between models and *sets* of sentences.
//
// Two storage kinds:
//  - Normal: a |M| x |L| boolean matrix of singleton satisfactions; a model
//    satisfies a sentence set iff it satisfies every member (vacuously the
//    empty set). Structures of this kind are normal by construction.
//  - General: the full |M| x 2^|L| table, one entry per (model, sentence set).
class FiniteAmst {
 public:
  enum class Kind { Normal, General };

  // rows[m] is the bitmask of sentences model m satisfies as singletons.
  static FiniteAmst normal_matrix(std::vector<std::string> sentences,
                                  std::vector<std::string> models,
                                  std::vector<Mask> rows);

  // table[m][g] says whether model m satisfies the sentence set with bitmask g.
  static FiniteAmst general_table(std::vector<std::string> sentences,
                                  std::vector<std::string> models,
                                  std::vector<std::vector<bool>> table);

  Kind kind() const { return kind_; }
  bool normal_kind() const { return kind_ == Kind::Normal; }

  int sentence_count() const { return static_cast<int>(sentences_.size()); }
  int model_count() const { return static_cast<int>(models_.size()); }
  const std::vector<std::string>& sentence_labels() const { return sentences_; }
  const std::vector<std::string>& model_labels() const { return models_; }
  Mask all_sentences() const { return full_mask(sentence_count()); }
  Mask all_models() const { return full_mask(model_count()); }

  // m ⊨ Γ. Throws Error(Argument) on out-of-range indices/masks.
  bool satisfies(int model, Mask gamma) const;

  // {α | m ⊨ {α}}
  Mask singleton_theory(int model) const;

  // Mod(Γ) = {m | m ⊨ Γ}, as a model bitmask.
  Mask mod_of(Mask gamma) const;

  // Th(X) = {α | m ⊨ {α} for every m ∈ X}; Th(∅) = L.
  Mask th_of(Mask models) const;

  // Copies with one model / one sentence removed (bit indices above the
  // removed one shift down). Used by the shrinker.
  FiniteAmst without_model(int model) const;
  FiniteAmst without_sentence(int sentence) const;

  bool operator==(const FiniteAmst& other) const;

  // Raw table row for General kind (2^|L| entries); empty for Normal kind.
  const std::vector<bool>& table_row(int model) const;
  Mask matrix_row(int model) const;  // Normal kind only

 private:
  FiniteAmst() = default;

  Kind kind_ = Kind::Normal;
  std::vector<std::string> sentences_;
  std::vector<std::string> models_;
  std::vector<Mask> rows_;                // Normal: singleton rows per model
  std::vector<std::vector<bool>> table_;  // General: full table per model
  std::vector<Mask> columns_;             // per sentence: models satisfying {α}

  void check_model_index(int model) const;
  void rebuild_columns();
};

// ---- Operators and checkers on a FiniteAmst ----

struct NormalityResult {
  bool normal = true;
  // A violating pair (m, Γ): the biconditional "m ⊨ Γ iff m ⊨ {α} ∀α∈Γ" fails.
  std::optional<std::pair<int, Mask>> witness;
};

// Exhaustive scan of the normality biconditional over every (model, Γ).
NormalityResult is_normal(const FiniteAmst& a);

// Lowest-index model satisfying Γ, if any.
std::optional<int> is_satisfiable(const FiniteAmst& a, Mask gamma);

struct FiniteSatResult {
  bool finitely_satisfiable = true;
  // Size-minimal unsatisfiable subset, found by ascending-cardinality search.
  std::optional<Mask> unsat_subset;
};

FiniteSatResult is_finitely_satisfiable(const FiniteAmst& a, Mask gamma);

struct CompactnessResult {
  bool compact = true;
  // Some Γ on which satisfiability and finite satisfiability disagree.
  std::optional<Mask> counterexample;
};

// Compares satisfiability with finite satisfiability on every Γ ⊆ L.
CompactnessResult is_compact(const FiniteAmst& a);

// Mod(Γ) ≠ ∅ and every sentence's model class is ⊇ Mod(Γ) or disjoint from it.
bool is_complete_set(const FiniteAmst& a, Mask gamma);

// Greedy index-order extension of a finitely satisfiable Γ to a maximal
// finitely satisfiable set. Throws Error(Precondition) if Γ is not finitely
// satisfiable.
Mask maximal_finitely_satisfiable_extension(const FiniteAmst& a, Mask gamma);

}  // namespace amst
