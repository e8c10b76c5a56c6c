#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace amst {

// A decidable symbolic subset of ℕ: one of three bases edited by finitely
// many additions and removals. Normal form: `plus` disjoint from the base,
// `minus` inside it; distinct normal forms denote distinct sets.
class NatSetExpr {
 public:
  enum class Base { All, Odds, Empty };

  static NatSetExpr all();
  static NatSetExpr odds();
  static NatSetExpr empty();
  static NatSetExpr finite(const std::set<std::uint64_t>& elems);
  static NatSetExpr singleton(std::uint64_t n);

  NatSetExpr plus(std::uint64_t n) const;   // add one element
  NatSetExpr minus(std::uint64_t n) const;  // remove one element

  Base base() const { return base_; }
  bool member(std::uint64_t n) const;
  bool operator==(const NatSetExpr& other) const = default;

  std::string to_string() const;

 private:
  NatSetExpr(Base base, std::set<std::uint64_t> plus, std::set<std::uint64_t> minus);

  Base base_;
  std::set<std::uint64_t> plus_, minus_;
};

bool expr_member(std::uint64_t n, const NatSetExpr& e);
bool expr_equal(const NatSetExpr& a, const NatSetExpr& b);

// n ⊨ Γ iff Γ is none of {0}, the odd numbers, ℕ. Constant in n.
bool example_satisfies(std::uint64_t n, const NatSetExpr& gamma);

struct CounterexampleReport {
  struct Claim {
    std::string id;
    std::string statement;
    bool verified = false;
    std::string detail;
  };
  std::uint64_t bound = 0;
  std::vector<Claim> claims;
  bool all_verified() const;
};

// Symbolic verification, spot-checked up to `bound` (≥ 2), of: the structure
// is not normal; ℕ is not finitely satisfiable; the odd numbers are finitely
// satisfiable yet unsatisfiable; each ℕ∖{k} is maximal satisfiable; hence
// "every finitely satisfiable set extends to a maximal satisfiable one"
// holds while compactness fails.
CounterexampleReport verify_counterexample(std::uint64_t bound);

}  // namespace amst
