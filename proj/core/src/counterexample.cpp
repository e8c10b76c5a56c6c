#include "amst/counterexample.hpp"

#include "amst/error.hpp"

namespace amst {

namespace {

bool base_member(NatSetExpr::Base b, std::uint64_t n) {
  switch (b) {
    case NatSetExpr::Base::All: return true;
    case NatSetExpr::Base::Odds: return n % 2 == 1;
    case NatSetExpr::Base::Empty: return false;
  }
  return false;
}

}  // namespace

NatSetExpr::NatSetExpr(Base base, std::set<std::uint64_t> plus, std::set<std::uint64_t> minus)
    : base_(base) {
  // normalize: plus edits only add points outside the base, minus edits only
  // remove points inside it
  for (std::uint64_t n : plus)
    if (!base_member(base, n)) plus_.insert(n);
  for (std::uint64_t n : minus)
    if (base_member(base, n)) minus_.insert(n);
}

NatSetExpr NatSetExpr::all() { return NatSetExpr(Base::All, {}, {}); }
NatSetExpr NatSetExpr::odds() { return NatSetExpr(Base::Odds, {}, {}); }
NatSetExpr NatSetExpr::empty() { return NatSetExpr(Base::Empty, {}, {}); }

NatSetExpr NatSetExpr::finite(const std::set<std::uint64_t>& elems) {
  return NatSetExpr(Base::Empty, elems, {});
}

NatSetExpr NatSetExpr::singleton(std::uint64_t n) { return finite({n}); }

NatSetExpr NatSetExpr::plus(std::uint64_t n) const {
  NatSetExpr out = *this;
  if (out.minus_.erase(n) == 0 && !base_member(base_, n)) out.plus_.insert(n);
  return out;
}

NatSetExpr NatSetExpr::minus(std::uint64_t n) const {
  NatSetExpr out = *this;
  if (out.plus_.erase(n) == 0 && base_member(base_, n)) out.minus_.insert(n);
  return out;
}

bool NatSetExpr::member(std::uint64_t n) const {
  if (minus_.count(n)) return false;
  return base_member(base_, n) || plus_.count(n) > 0;
}

std::string NatSetExpr::to_string() const {
  std::string out = base_ == Base::All ? "N" : base_ == Base::Odds ? "Odds" : "{}";
  for (std::uint64_t n : plus_) out += "+" + std::to_string(n);
  for (std::uint64_t n : minus_) out += "-" + std::to_string(n);
  return out;
}

bool expr_member(std::uint64_t n, const NatSetExpr& e) { return e.member(n); }

// Sound and complete on this class: the three bases differ on infinitely
// many points, so finite edits never make expressions with different bases
// extensionally equal, and equal bases force equal edit sets.
bool expr_equal(const NatSetExpr& a, const NatSetExpr& b) { return a == b; }

bool example_satisfies(std::uint64_t n, const NatSetExpr& gamma) {
  (void)n;  // the relation ignores the model
  return !expr_equal(gamma, NatSetExpr::singleton(0)) &&
         !expr_equal(gamma, NatSetExpr::odds()) && !expr_equal(gamma, NatSetExpr::all());
}

bool CounterexampleReport::all_verified() const {
  for (const auto& c : claims)
    if (!c.verified) return false;
  return true;
}

CounterexampleReport verify_counterexample(std::uint64_t bound) {
  if (bound < 2) throw Error(ErrorKind::Argument, "bound must be at least 2");
  CounterexampleReport rep;
  rep.bound = bound;

  const NatSetExpr zero = NatSetExpr::singleton(0);
  const NatSetExpr odds = NatSetExpr::odds();
  const NatSetExpr naturals = NatSetExpr::all();

  // (i) non-normality: every n satisfies {0,1} but not {0}
  {
    const NatSetExpr zero_one = NatSetExpr::finite({0, 1});
    bool ok = true;
    for (std::uint64_t n = 0; n <= bound; ++n)
      ok = ok && example_satisfies(n, zero_one) && !example_satisfies(n, zero) &&
           expr_member(0, zero_one);
    rep.claims.push_back({"i", "the structure is not normal", ok,
                          "n |= {0,1} yet n |/= {0}, for every checked n <= " +
                              std::to_string(bound)});
  }

  // (ii) ℕ is not finitely satisfiable: its finite subset {0} is unsatisfiable
  {
    bool ok = expr_member(0, naturals) && !example_satisfies(0, zero);
    rep.claims.push_back({"ii", "N is not finitely satisfiable", ok,
                          "{0} is a finite subset of N and is unsatisfiable"});
  }

  // (iii) the odd numbers are finitely satisfiable: a finite Γ0 ⊆ Odds
  // excludes 0 (so Γ0 ≠ {0}) and is finite (so Γ0 is neither Odds nor N)
  {
    bool ok = !expr_member(0, odds);
    std::vector<std::uint64_t> small_odds;
    for (std::uint64_t n = 1; n <= bound; n += 2) small_odds.push_back(n);
    const size_t count = small_odds.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << count); ++pick) {
      std::set<std::uint64_t> sub;
      for (size_t i = 0; i < count; ++i)
        if ((pick >> i) & 1) sub.insert(small_odds[i]);
      ok = ok && example_satisfies(0, NatSetExpr::finite(sub));
    }
    rep.claims.push_back(
        {"iii", "the odd numbers are finitely satisfiable", ok,
         "symbolically: finite subsets of the odds avoid all three forbidden sets; "
         "spot-checked on all finite subsets of the odds below " +
             std::to_string(bound)});
  }

  // (iv) the odd numbers are not satisfiable
  rep.claims.push_back({"iv", "the odd numbers are not satisfiable",
                        !example_satisfies(0, odds), "Odds is one of the forbidden sets"});

  // (v) every N∖{k} is satisfiable and maximal satisfiable
  {
    bool ok = true;
    for (std::uint64_t k = 0; k <= bound; ++k) {
      const NatSetExpr co_k = naturals.minus(k);
      // satisfiable: distinct from all three forbidden sets
      ok = ok && example_satisfies(0, co_k);
      // maximal: the only strictly larger set in P(N) is N itself
      ok = ok && expr_equal(co_k.plus(k), naturals) && !example_satisfies(0, naturals);
    }
    rep.claims.push_back({"v", "each N∖{k} is maximal satisfiable", ok,
                          "checked k = 0.." + std::to_string(bound) +
                              "; adding k back yields the unsatisfiable N"});
  }

  // (vi) statement: every finitely satisfiable set extends to a maximal
  // satisfiable set, while compactness fails
  {
    const bool extension_holds = rep.claims[4].verified;  // via (v): pick k outside Γ
    const bool not_compact = rep.claims[2].verified && rep.claims[3].verified;
    rep.claims.push_back(
        {"vi", "maximal-satisfiable extension holds but compactness fails",
         extension_holds && not_compact,
         "any finitely satisfiable Γ is proper (by ii) so some k misses it and Γ ⊆ N∖{k}; "
         "the odds witness finite satisfiability without satisfiability"});
  }
  return rep;
}

}  // namespace amst
