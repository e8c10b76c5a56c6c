#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amst/consequence.hpp"
#include "amst/structure.hpp"

namespace amst {

// ---- Information systems ----

struct InformationSystem {
  std::vector<std::string> tokens;           // A
  std::vector<Mask> con;                     // consistent finite subsets of A
  std::vector<std::pair<Mask, int>> entail;  // (X, a) with X ∈ Con∖{∅}
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;  // labeled "(a)".."(e)" / structural
};

ValidationReport validate_information_system(const InformationSystem& is);

// (A, ⊨, P(A)) with a ⊨ Γ iff Γ ⊢ a; sets outside Con∖{∅} satisfy nothing.
// Throws Error(Validation) when the axioms fail.
FiniteAmst info_system_to_amst(const InformationSystem& is);

// ---- Chu spaces ----

struct ChuSpace {
  std::vector<std::string> points;      // X
  std::vector<std::string> attributes;  // A
  std::vector<std::string> alphabet;    // K
  std::vector<std::vector<int>> entry;  // entry[x][a] = index into alphabet
};

// (X×A, ⊨, P(K)): the pair (x,a) satisfies exactly the singleton {r(x,a)}.
FiniteAmst chu_to_amst(const ChuSpace& chu);

// ---- Quivers ----

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<int> source;  // per edge
  std::vector<int> target;

  bool operator==(const Quiver& other) const = default;
};

// (E, ⊨, P(V×V)): e satisfies exactly {(s(e), t(e))}. Sentences are vertex
// pairs in row-major order.
FiniteAmst quiver_to_amst(const Quiver& q);

// Inverse; every model must satisfy exactly one singleton over V×V.
// Throws Error(Validation) naming the offending edge otherwise.
Quiver amst_to_quiver(const FiniteAmst& a, const std::vector<std::string>& vertices);

// ---- Logical structures (α ⊨ Γ iff Γ ⊬ α) ----

FiniteAmst logical_structure_to_amst(const LogicalStructure& ls);

// Requires model and sentence lists to coincide. Throws Error(Argument).
LogicalStructure amst_to_logical_structure(const FiniteAmst& a);

// ---- Object-free categories ----

struct ObjectFreeCategory {
  std::vector<std::string> morphisms;
  // composition[g][f] = index of g∘f, or nullopt when undefined
  std::vector<std::vector<std::optional<int>>> composition;

  bool operator==(const ObjectFreeCategory& other) const = default;
};

// Matching, associativity and unit existence, with labeled witnesses.
ValidationReport validate_object_free_category(const ObjectFreeCategory& c);

// (M×M, ⊨, P(M)): (g,f) satisfies exactly {g∘f} when defined, nothing
// otherwise. Throws Error(Validation) when the category axioms fail.
FiniteAmst category_to_amst(const ObjectFreeCategory& c);

// Inverse via unique-singleton extraction; validates the amst-side
// conditions (singleton satisfaction, matching/associativity, identities)
// and re-validates the resulting category.
ObjectFreeCategory amst_to_category(const FiniteAmst& a);

}  // namespace amst
