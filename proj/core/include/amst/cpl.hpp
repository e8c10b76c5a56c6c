#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "amst/structure.hpp"
#include "amst/ultra.hpp"

namespace amst::cpl {

enum class Connective { Var, Not, And, Or, Implies, Iff };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable propositional formula tree.
struct Formula {
  Connective kind;
  std::string name;      // Var only
  FormulaPtr lhs, rhs;   // Not uses lhs only

  static FormulaPtr var(std::string name);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disjunction(FormulaPtr l, FormulaPtr r);
  static FormulaPtr implication(FormulaPtr l, FormulaPtr r);
  static FormulaPtr equivalence(FormulaPtr l, FormulaPtr r);
};

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Grammar, loosest first: `<->`, `->` (both right-associative), `|`, `&`
// (left-associative), prefix `~`, parentheses; atoms [a-z][a-z0-9_]*.
// Throws Error(Parse) with the byte offset of the offending token.
FormulaPtr parse_formula(std::string_view text);

// Minimal parenthesization; parse(print(f)) is structurally f.
std::string print_formula(const FormulaPtr& f);

std::vector<std::string> variables_of(const FormulaPtr& f);

// A total 0/1 assignment on a declared variable list; bit j of `values`
// holds the value of variables[j].
struct TruthAssignment {
  std::vector<std::string> variables;
  Mask values = 0;

  int value_of(const std::string& name) const;  // throws on undeclared
};

int evaluate(const TruthAssignment& v, const FormulaPtr& f);

// Per-variable ultrafilter majority over a sequence of assignments sharing
// one variable list.
TruthAssignment ultravaluation(const std::vector<TruthAssignment>& seq, const SetFamily& u);

// evaluate(ultravaluation(seq,u), f) = 1 iff {i | evaluate(seq[i], f) = 1} ∈ u.
bool ultravaluation_theorem_check(const std::vector<TruthAssignment>& seq, const SetFamily& u,
                                  const FormulaPtr& f);

// The normal amst of all 2^|V| assignments (models, ordered by value bitmask)
// against the given formula list (sentences).
FiniteAmst valuation_amst(const std::vector<std::string>& variables,
                          const std::vector<FormulaPtr>& formulas);

// Every formula shape of depth ≤ max_depth over the five connectives, leaves
// assigned variables cyclically. Streams each formula to the callback.
void enumerate_skeletons(const std::vector<std::string>& variables, int max_depth,
                         const std::function<void(const FormulaPtr&)>& fn);

}  // namespace amst::cpl
