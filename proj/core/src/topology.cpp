#include "amst/topology.hpp"

#include <algorithm>
#include <queue>

#include "amst/error.hpp"

namespace amst {

namespace {

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Closure of {∅} ∪ base under union with base members; in a finite space this
// is exactly the set of all unions of base members plus ∅.
std::vector<Mask> union_closure(int ground_size, const std::vector<Mask>& base) {
  std::vector<bool> seen(size_t{1} << ground_size, false);
  std::vector<Mask> out;
  std::queue<Mask> work;
  auto push = [&](Mask m) {
    if (!seen[m]) {
      seen[m] = true;
      out.push_back(m);
      work.push(m);
    }
  };
  push(0);
  for (Mask b : base) push(b);
  while (!work.empty()) {
    const Mask u = work.front();
    work.pop();
    for (Mask b : base) push(u | b);
  }
  return sorted_unique(std::move(out));
}

// splitmix64, the fixed deterministic stream used everywhere sampling occurs.
std::uint64_t mix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool covers(Mask ground, const std::vector<Mask>& family) {
  Mask u = 0;
  for (Mask s : family) u |= s;
  return is_subset(ground, u);
}

// Every family member must contribute to a finite subcover search; verified
// by the breadth-first union walk.
bool has_finite_subcover(Mask ground, const std::vector<Mask>& cover) {
  std::vector<Mask> frontier = {0};
  std::vector<bool> seen(size_t{1} << popcount(ground), false);
  seen[0] = true;
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask u : frontier) {
      if (u == ground) return true;
      for (Mask c : cover) {
        const Mask v = u | c;
        if (!seen[v]) {
          seen[v] = true;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

FiniteTopology::FiniteTopology(int ground_size, std::vector<Mask> opens)
    : ground_size_(ground_size), opens_(sorted_unique(std::move(opens))) {
  if (ground_size < 0 || ground_size > kMaxGround)
    throw Error(ErrorKind::Capacity, "ground set size out of range");
  const Mask g = ground();
  for (Mask o : opens_)
    if (!is_subset(o, g)) throw Error(ErrorKind::Argument, "open set outside the ground set");
  auto open = [&](Mask m) { return std::binary_search(opens_.begin(), opens_.end(), m); };
  if (!open(0) || !open(g))
    throw Error(ErrorKind::Argument, "∅ and the ground set must be open");
  // Pairwise closure validation, capped: beyond the cap the quadratic sweep
  // is replaced by a strided one (generators guarantee closure anyway).
  const size_t stride = opens_.size() <= 1024 ? 1 : opens_.size() / 512;
  for (size_t i = 0; i < opens_.size(); i += stride)
    for (size_t j = 0; j < opens_.size(); j += stride) {
      const Mask a = opens_[i], b = opens_[j];
      if (!open(a | b)) throw Error(ErrorKind::Argument, "opens not closed under union");
      if (!open(a & b)) throw Error(ErrorKind::Argument, "opens not closed under intersection");
    }
}

bool FiniteTopology::is_open(Mask s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

FiniteTopology generate_from_subbase(int ground_size, const std::vector<Mask>& sigma) {
  const Mask ground = full_mask(ground_size);
  if (!covers(ground, sigma))
    throw Error(ErrorKind::Subbase, "family does not cover the ground set");
  // Base: intersections of finite subfamilies; the empty intersection is the
  // ground set.
  std::vector<bool> seen(size_t{1} << ground_size, false);
  std::vector<Mask> base = {ground};
  seen[ground] = true;
  for (Mask s : sigma) {
    const size_t n = base.size();
    for (size_t i = 0; i < n; ++i) {
      const Mask m = base[i] & s;
      if (!seen[m]) {
        seen[m] = true;
        base.push_back(m);
      }
    }
  }
  return FiniteTopology(ground_size, union_closure(ground_size, base));
}

BaseAxiomCheck check_base_axioms(int ground_size, const std::vector<Mask>& beta) {
  for (Mask u : beta)
    for (Mask v : beta) {
      const Mask meet = u & v;
      for (int x : to_indices(meet)) {
        bool found = false;
        for (Mask w : beta)
          if (contains(w, x) && is_subset(w, meet)) {
            found = true;
            break;
          }
        if (!found) return {false, std::make_pair(u, v)};
      }
    }
  (void)ground_size;
  return {true, std::nullopt};
}

FiniteTopology generate_from_base(int ground_size, const std::vector<Mask>& beta) {
  const Mask ground = full_mask(ground_size);
  if (!covers(ground, beta))
    throw Error(ErrorKind::Subbase, "base does not cover the ground set");
  const auto axiom = check_base_axioms(ground_size, beta);
  if (!axiom.ok)
    throw Error(ErrorKind::Base,
                "no basic set inside " + format_index_set(axiom.violation->first) + " ∩ " +
                    format_index_set(axiom.violation->second));
  return FiniteTopology(ground_size, union_closure(ground_size, beta));
}

std::optional<std::vector<Mask>> finite_subcover(const FiniteTopology& top,
                                                 const std::vector<Mask>& cover) {
  const Mask ground = top.ground();
  // BFS over reachable unions remembering one predecessor per union value.
  std::vector<int> via(size_t{1} << top.ground_size(), -1);
  std::vector<Mask> prev(size_t{1} << top.ground_size(), 0);
  std::vector<bool> seen(size_t{1} << top.ground_size(), false);
  std::queue<Mask> work;
  seen[0] = true;
  work.push(0);
  while (!work.empty()) {
    const Mask u = work.front();
    work.pop();
    if (u == ground) break;
    for (size_t i = 0; i < cover.size(); ++i) {
      const Mask v = u | cover[i];
      if (!seen[v]) {
        seen[v] = true;
        via[v] = static_cast<int>(i);
        prev[v] = u;
        work.push(v);
      }
    }
  }
  if (!seen[ground]) return std::nullopt;
  std::vector<Mask> picked;
  for (Mask u = ground; u != 0 && via[u] >= 0; u = prev[u]) picked.push_back(cover[via[u]]);
  std::reverse(picked.begin(), picked.end());
  return picked;
}

bool is_compact_space(const FiniteTopology& top, std::uint64_t seed, int sample_budget) {
  const Mask ground = top.ground();
  std::vector<Mask> candidates;
  for (Mask o : top.opens())
    if (o != 0) candidates.push_back(o);

  auto check_cover = [&](const std::vector<Mask>& cover) {
    if (!covers(ground, cover)) return true;  // not a cover, no constraint
    return finite_subcover(top, cover).has_value();
  };

  if (candidates.size() <= 12) {
    const std::uint64_t total = std::uint64_t{1} << candidates.size();
    for (std::uint64_t pick = 1; pick < total; ++pick) {
      std::vector<Mask> cover;
      for (size_t i = 0; i < candidates.size(); ++i)
        if ((pick >> i) & 1) cover.push_back(candidates[i]);
      if (!check_cover(cover)) return false;
    }
    return true;
  }

  // Too many opens for exhaustive cover enumeration: the full cover, all
  // maximal proper covers, and seeded random covering subfamilies.
  if (!check_cover(candidates)) return false;
  for (size_t skip = 0; skip < candidates.size(); ++skip) {
    std::vector<Mask> cover;
    for (size_t i = 0; i < candidates.size(); ++i)
      if (i != skip) cover.push_back(candidates[i]);
    if (!check_cover(cover)) return false;
  }
  std::uint64_t state = seed;
  for (int round = 0; round < sample_budget; ++round) {
    std::vector<Mask> cover;
    for (Mask c : candidates)
      if (mix64(state) & 1) cover.push_back(c);
    if (!check_cover(cover)) return false;
  }
  return true;
}

bool alexander_check(const FiniteTopology& top, const std::vector<Mask>& sigma) {
  if (!(generate_from_subbase(top.ground_size(), sigma) == top))
    throw Error(ErrorKind::Argument, "the family does not generate the given topology");
  const Mask ground = top.ground();
  std::vector<Mask> members = sorted_unique(sigma);
  if (members.size() > 20)
    throw Error(ErrorKind::Capacity, "subbase too large for exhaustive cover enumeration");
  const std::uint64_t total = std::uint64_t{1} << members.size();
  for (std::uint64_t pick = 1; pick < total; ++pick) {
    std::vector<Mask> cover;
    for (size_t i = 0; i < members.size(); ++i)
      if ((pick >> i) & 1) cover.push_back(members[i]);
    if (!covers(ground, cover)) continue;
    if (!has_finite_subcover(ground, cover)) return false;
  }
  return true;
}

GeneratedTopology tau_n(const FiniteAmst& a) {
  if (!is_normal(a).normal)
    throw Error(ErrorKind::Precondition, "τ_N needs a normal amst");
  if (is_satisfiable(a, a.all_sentences()))
    throw Error(ErrorKind::Precondition,
                "τ_N needs the full sentence set to be unsatisfiable (subbase must cover)");
  std::vector<Mask> sigma;
  sigma.reserve(a.sentence_count());
  for (int s = 0; s < a.sentence_count(); ++s)
    sigma.push_back(a.all_models() & ~a.mod_of(bit(s)));
  return {generate_from_subbase(a.model_count(), sigma), std::move(sigma)};
}

GeneratedTopology tau_c(const FiniteAmst& a) {
  if (!is_normal(a).normal)
    throw Error(ErrorKind::Precondition, "τ_C needs a normal amst");
  std::vector<Mask> beta;
  const Mask universe = a.all_sentences();
  for (Mask g = 0; g <= universe; ++g) {
    beta.push_back(a.mod_of(g));
    if (universe == 0) break;
  }
  beta = sorted_unique(std::move(beta));
  return {generate_from_base(a.model_count(), beta), std::move(beta)};
}

ClosedSetsReport closed_sets_check(const FiniteAmst& a) {
  ClosedSetsReport rep;
  const auto tn = tau_n(a);
  const Mask universe = a.all_sentences();
  const auto& labels = a.sentence_labels();
  for (Mask sigma = 0; sigma <= universe; ++sigma) {
    const Mask z = a.mod_of(sigma);
    if (!tn.top.is_closed(z)) {
      rep.ok = false;
      rep.violations.push_back("Mod" + format_set(sigma, labels) + " is not τ_N-closed");
    }
    if (a.mod_of(a.th_of(z)) != z) {
      rep.ok = false;
      rep.violations.push_back("ModTh fails to fix Mod" + format_set(sigma, labels));
    }
    if (universe == 0) break;
  }
  const Mask all = a.all_models();
  std::vector<Mask> mt(size_t{1} << a.model_count());
  for (Mask x = 0; x <= all; ++x) mt[x] = a.mod_of(a.th_of(x));
  for (Mask x = 0; x <= all; ++x) {
    if (!is_subset(x, mt[x])) {
      rep.ok = false;
      rep.violations.push_back("X ⊄ ModTh(X) at X=" + format_index_set(x));
    }
    if (mt[mt[x]] != mt[x]) {
      rep.ok = false;
      rep.violations.push_back("ModTh not idempotent at X=" + format_index_set(x));
    }
    // Single-element steps suffice for monotonicity over the subset lattice.
    for (int m = 0; m < a.model_count(); ++m) {
      if (contains(x, m)) continue;
      if (!is_subset(mt[x], mt[x | bit(m)])) {
        rep.ok = false;
        rep.violations.push_back("ModTh not monotone at (" + format_index_set(x) + "," +
                                 format_index_set(x | bit(m)) + ")");
      }
    }
  }
  return rep;
}

CompactnessEquivalence compactness_equivalence_check(const FiniteAmst& a) {
  CompactnessEquivalence out;
  out.amst_compact = is_compact(a).compact;
  out.space_compact = is_compact_space(tau_n(a).top);
  out.equal = out.amst_compact == out.space_compact;
  return out;
}

}  // namespace amst
