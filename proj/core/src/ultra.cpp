#include "amst/ultra.hpp"

#include <algorithm>

namespace amst {

namespace {

std::uint64_t mix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_sequence(const FiniteAmst& a, const ModelSequence& seq) {
  if (seq.index_size <= 0 || seq.index_size > kMaxGround)
    throw Error(ErrorKind::Argument, "sequence index set out of range");
  if (static_cast<int>(seq.entries.size()) != seq.index_size)
    throw Error(ErrorKind::Argument, "sequence length must equal the index set size");
  for (int e : seq.entries)
    if (e < 0 || e >= a.model_count())
      throw Error(ErrorKind::Argument, "sequence entry is not a model");
}

// {i | m_i ⊨ Σ} as an index bitmask.
Mask agreeing_indices(const FiniteAmst& a, const ModelSequence& seq, Mask sigma) {
  Mask out = 0;
  for (int i = 0; i < seq.index_size; ++i)
    if (a.satisfies(seq.entries[i], sigma)) out |= bit(i);
  return out;
}

}  // namespace

SetFamily::SetFamily(int index_size, std::vector<Mask> members)
    : index_size_(index_size), members_(std::move(members)) {
  if (index_size < 0 || index_size > kMaxGround)
    throw Error(ErrorKind::Argument, "index set size out of range");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Mask m : members_)
    if (!is_subset(m, index_universe()))
      throw Error(ErrorKind::Argument, "family member outside the index set");
}

bool SetFamily::contains(Mask s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool has_fip(const SetFamily& fam) {
  const auto& ms = fam.members();
  if (ms.size() <= 20) {
    const std::uint64_t total = std::uint64_t{1} << ms.size();
    for (std::uint64_t pick = 1; pick < total; ++pick) {
      Mask inter = fam.index_universe();
      for (size_t i = 0; i < ms.size(); ++i)
        if ((pick >> i) & 1) inter &= ms[i];
      if (inter == 0) return false;
    }
    return true;
  }
  // Large family: the total intersection is the smallest finite intersection.
  Mask inter = fam.index_universe();
  for (Mask m : ms) inter &= m;
  return inter != 0;
}

bool is_filter(const SetFamily& fam) {
  for (Mask x : fam.members())
    for (Mask y : fam.members())
      if (!fam.contains(x & y)) return false;
  for (Mask x : fam.members())
    for (Mask y = x; y <= fam.index_universe(); ++y) {
      if (is_subset(x, y) && !fam.contains(y)) return false;
      if (fam.index_universe() == 0) break;
    }
  return true;
}

bool is_proper_filter(const SetFamily& fam) { return is_filter(fam) && !fam.contains(0); }

bool is_ultrafilter(const SetFamily& fam) {
  if (fam.index_size() == 0)
    throw Error(ErrorKind::Argument, "no ultrafilter exists on an empty index set");
  if (!is_proper_filter(fam)) return false;
  const Mask universe = fam.index_universe();
  for (Mask s = 0; s <= universe; ++s) {
    if (fam.contains(s) == fam.contains(universe & ~s)) return false;
    if (universe == 0) break;
  }
  return true;
}

SetFamily generated_filter(const SetFamily& fam) {
  if (!has_fip(fam))
    throw Error(ErrorKind::Precondition, "family lacks the finite intersection property");
  // All finite intersections, then upward closure.
  std::vector<char> inter(size_t{1} << fam.index_size(), 0);
  inter[fam.index_universe()] = 1;  // empty intersection
  std::vector<Mask> work = {fam.index_universe()};
  for (Mask m : fam.members()) {
    const size_t n = work.size();
    for (size_t i = 0; i < n; ++i) {
      const Mask v = work[i] & m;
      if (!inter[v]) {
        inter[v] = 1;
        work.push_back(v);
      }
    }
  }
  std::vector<Mask> members;
  for (Mask f = 0; f <= fam.index_universe(); ++f) {
    for (Mask base : work)
      if (is_subset(base, f)) {
        members.push_back(f);
        break;
      }
    if (fam.index_universe() == 0) break;
  }
  return SetFamily(fam.index_size(), std::move(members));
}

SetFamily principal_ultrafilter(int index_size, int i) {
  if (index_size < 1 || index_size > kMaxGround)
    throw Error(ErrorKind::Argument, "index set size out of range");
  if (i < 0 || i >= index_size) throw Error(ErrorKind::Argument, "index out of range");
  std::vector<Mask> members;
  const Mask universe = full_mask(index_size);
  for (Mask s = 0; s <= universe; ++s)
    if (contains(s, i)) members.push_back(s);
  return SetFamily(index_size, std::move(members));
}

std::vector<SetFamily> enumerate_ultrafilters(int index_size) {
  if (index_size < 1 || index_size > kMaxGround)
    throw Error(ErrorKind::Argument, "index set size out of range");
  std::vector<SetFamily> out;
  out.reserve(index_size);
  for (int i = 0; i < index_size; ++i) out.push_back(principal_ultrafilter(index_size, i));
  return out;
}

SetFamily extend_to_ultrafilter(const SetFamily& filter) {
  if (!is_proper_filter(filter))
    throw Error(ErrorKind::Precondition, "only proper filters extend to ultrafilters");
  Mask core = filter.index_universe();
  for (Mask m : filter.members()) core &= m;
  // core is the smallest member of a finite filter, nonempty by properness
  return principal_ultrafilter(filter.index_size(), lowest_bit(core));
}

int partition_pick(const SetFamily& u, const std::vector<Mask>& parts) {
  Mask uni = 0;
  for (Mask p : parts) uni |= p;
  if (!u.contains(uni))
    throw Error(ErrorKind::Precondition, "the union of the parts is not in the ultrafilter");
  for (size_t i = 0; i < parts.size(); ++i)
    if (u.contains(parts[i])) return static_cast<int>(i);
  throw std::logic_error("ultrafilter holds a finite union but none of its parts");
}

Mask ultralimits(const FiniteTopology& top, const ModelSequence& seq, const SetFamily& u,
                 const std::vector<Mask>* subbase) {
  if (seq.index_size != u.index_size())
    throw Error(ErrorKind::Argument, "sequence and ultrafilter index sets differ");
  if (static_cast<int>(seq.entries.size()) != seq.index_size)
    throw Error(ErrorKind::Argument, "sequence length must equal the index set size");
  for (int e : seq.entries)
    if (e < 0 || e >= top.ground_size())
      throw Error(ErrorKind::Argument, "sequence entry outside the ground set");

  auto pullback = [&](Mask set) {
    Mask idx = 0;
    for (int i = 0; i < seq.index_size; ++i)
      if (contains(set, seq.entries[i])) idx |= bit(i);
    return idx;
  };

  // x is excluded exactly when some open around x has a small pullback
  auto limits_over = [&](const std::vector<Mask>& family) {
    Mask excluded = 0;
    for (Mask o : family)
      if (!u.contains(pullback(o))) excluded |= o;
    return full_mask(top.ground_size()) & ~excluded;
  };

  const Mask limits = limits_over(top.opens());
  if (subbase && limits_over(*subbase) != limits)
    throw std::logic_error("subbase ultralimit criterion disagrees with the open-set one");
  return limits;
}

Mask ultramodels(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u) {
  const auto tn = tau_n(a);
  return ultralimits(tn.top, seq, u, &tn.family);
}

Mask ultramodels_by_theorem(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u) {
  check_sequence(a, seq);
  if (seq.index_size != u.index_size())
    throw Error(ErrorKind::Argument, "sequence and ultrafilter index sets differ");
  const Mask universe = a.all_sentences();
  Mask out = 0;
  for (int x = 0; x < a.model_count(); ++x) {
    bool ok = true;
    for (Mask sigma = 0; sigma <= universe && ok; ++sigma) {
      if (u.contains(agreeing_indices(a, seq, sigma)) && !a.satisfies(x, sigma)) ok = false;
      if (universe == 0) break;
    }
    if (ok) out |= bit(x);
  }
  return out;
}

Mask tauc_ultralimits(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u) {
  const auto tc = tau_c(a);
  return ultralimits(tc.top, seq, u);
}

Mask tauc_ultralimits_by_theorem(const FiniteAmst& a, const ModelSequence& seq,
                                 const SetFamily& u) {
  check_sequence(a, seq);
  if (seq.index_size != u.index_size())
    throw Error(ErrorKind::Argument, "sequence and ultrafilter index sets differ");
  const Mask universe = a.all_sentences();
  Mask out = 0;
  for (int x = 0; x < a.model_count(); ++x) {
    bool ok = true;
    for (Mask sigma = 0; sigma <= universe && ok; ++sigma) {
      if (a.satisfies(x, sigma) && !u.contains(agreeing_indices(a, seq, sigma))) ok = false;
      if (universe == 0) break;
    }
    if (ok) out |= bit(x);
  }
  return out;
}

bool tauc_ultralimit_check(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u) {
  return tauc_ultralimits(a, seq, u) == tauc_ultralimits_by_theorem(a, seq, u);
}

Mask los_models_by_theory(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u) {
  check_sequence(a, seq);
  if (seq.index_size != u.index_size())
    throw Error(ErrorKind::Argument, "sequence and ultrafilter index sets differ");
  Mask target = 0;
  for (int s = 0; s < a.sentence_count(); ++s)
    if (u.contains(agreeing_indices(a, seq, bit(s)))) target |= bit(s);
  Mask out = 0;
  for (int x = 0; x < a.model_count(); ++x)
    if (a.singleton_theory(x) == target) out |= bit(x);
  return out;
}

Mask los_models(const FiniteAmst& a, const ModelSequence& seq, const SetFamily& u) {
  check_sequence(a, seq);
  if (seq.index_size != u.index_size())
    throw Error(ErrorKind::Argument, "sequence and ultrafilter index sets differ");
  const Mask universe = a.all_sentences();
  Mask out = 0;
  for (int x = 0; x < a.model_count(); ++x) {
    bool ok = true;
    for (Mask sigma = 0; sigma <= universe && ok; ++sigma) {
      if (a.satisfies(x, sigma) != u.contains(agreeing_indices(a, seq, sigma))) ok = false;
      if (universe == 0) break;
    }
    if (ok) out |= bit(x);
  }
  if (is_normal(a).normal && out != los_models_by_theory(a, seq, u))
    throw std::logic_error("Łoś-model theory reduction disagrees with the definition");
  return out;
}

bool preceq(const FiniteAmst& a, int m, int n) {
  return is_subset(a.th_of(bit(m)), a.th_of(bit(n)));
}

Mask upset(const FiniteAmst& a, int m) {
  Mask out = 0;
  for (int n = 0; n < a.model_count(); ++n)
    if (preceq(a, m, n)) out |= bit(n);
  return out;
}

Mask maximal_in_upset(const FiniteAmst& a, int m) {
  const Mask up = upset(a, m);
  Mask out = 0;
  for (int n : to_indices(up)) {
    bool maximal = true;
    for (int k : to_indices(up))
      if (is_proper_subset(a.th_of(bit(n)), a.th_of(bit(k)))) {
        maximal = false;
        break;
      }
    if (maximal) out |= bit(n);
  }
  return out;
}

Check order_maxsat_check(const FiniteAmst& a) {
  if (!is_normal(a).normal) return {Status::Vacuous, "structure is not normal"};
  const Mask universe = a.all_sentences();
  for (int m = 0; m < a.model_count(); ++m) {
    const Mask max_set = maximal_in_upset(a, m);
    const Mask thm = a.th_of(bit(m));
    for (int n = 0; n < a.model_count(); ++n) {
      const Mask thn = a.th_of(bit(n));
      // Th({n}) maximal satisfiable containing Th({m}): exhaustive subset scan.
      bool maximal_sat = is_subset(thm, thn) && is_satisfiable(a, thn).has_value();
      if (maximal_sat) {
        for (Mask g = 0; g <= universe; ++g) {
          if (is_proper_subset(thn, g) && is_satisfiable(a, g))
            maximal_sat = false;
          if (universe == 0) break;
        }
      }
      if (maximal_sat != contains(max_set, n))
        return {Status::Violated, "model " + a.model_labels()[n] +
                                      " breaks the maximal-theory correspondence over " +
                                      a.model_labels()[m]};
    }
  }
  return {Status::Verified, ""};
}

Mask mod_fin(const FiniteAmst& a, Mask sigma) {
  Mask out = 0;
  for_each_subset(sigma, [&](Mask sub) { out |= a.mod_of(sub); });
  return out;
}

namespace {

// Runs fn over sequences from pool^index_size: all of them while the space
// is within budget, a seeded sample otherwise. fn returns false to abort.
template <class Fn>
bool sweep_sequences(const std::vector<int>& pool, int index_size, const SampleBudget& budget,
                     Fn&& fn) {
  if (pool.empty()) return true;
  double space = 1;
  for (int i = 0; i < index_size; ++i) space *= static_cast<double>(pool.size());
  if (space <= budget.exhaustive_limit) {
    std::vector<int> pick(index_size, 0);
    while (true) {
      ModelSequence seq{index_size, {}};
      seq.entries.reserve(index_size);
      for (int p : pick) seq.entries.push_back(pool[p]);
      if (!fn(seq)) return false;
      int k = 0;
      while (k < index_size) {
        if (++pick[k] < static_cast<int>(pool.size())) break;
        pick[k] = 0;
        ++k;
      }
      if (k == index_size) break;
    }
    return true;
  }
  std::uint64_t state = budget.seed;
  for (int round = 0; round < budget.samples; ++round) {
    ModelSequence seq{index_size, {}};
    seq.entries.reserve(index_size);
    for (int i = 0; i < index_size; ++i)
      seq.entries.push_back(pool[mix64(state) % pool.size()]);
    if (!fn(seq)) return false;
  }
  return true;
}

}  // namespace

bool is_pseudo_closed(const FiniteAmst& a, Mask k, int index_size, const SampleBudget& budget) {
  if (!is_normal(a).normal)
    throw Error(ErrorKind::Precondition, "pseudo-closure is defined here for normal amsts");
  if (index_size < 1 || index_size > kMaxGround)
    throw Error(ErrorKind::Argument, "index set size out of range");
  const std::vector<int> pool = to_indices(k);
  if (pool.empty()) return true;  // no sequences from an empty K
  const auto ultras = enumerate_ultrafilters(index_size);
  return sweep_sequences(pool, index_size, budget, [&](const ModelSequence& seq) {
    for (const auto& u : ultras) {
      const Mask los = los_models(a, seq, u);
      for (int l : to_indices(los))
        if ((upset(a, l) & k) == 0) return false;
    }
    return true;
  });
}

Check finset_convergence_check(const FiniteAmst& a, Mask sigma, const SampleBudget& budget) {
  if (!is_finitely_satisfiable(a, sigma).finitely_satisfiable)
    throw Error(ErrorKind::Precondition, "sigma must be finitely satisfiable");
  const auto tn = tau_n(a);  // throws when the τ_N preconditions fail
  const int subset_count = 1 << popcount(sigma);
  if (subset_count > kMaxGround)
    throw Error(ErrorKind::Capacity, "FinSet(sigma) too large to serve as an index set");

  // index i of the sequence = i-th subset of sigma (ascending subset order)
  std::vector<Mask> finsets;
  for_each_subset(sigma, [&](Mask sub) { finsets.push_back(sub); });

  const auto ultras = enumerate_ultrafilters(subset_count);
  std::vector<int> pool(a.model_count());
  for (int m = 0; m < a.model_count(); ++m) pool[m] = m;

  // (a) sampled sequences all converge under every ultrafilter
  const bool converged =
      sweep_sequences(pool, subset_count, budget, [&](const ModelSequence& seq) {
        for (const auto& u : ultras)
          if (ultralimits(tn.top, seq, u, &tn.family) == 0) return false;
        return true;
      });
  if (!converged)
    return {Status::Violated, "a sequence indexed by FinSet(sigma) fails to converge"};

  // (b) constructive route: witness sequence, FIP family, generated filter,
  // ultrafilter extension; every ultralimit must satisfy sigma.
  ModelSequence witness{subset_count, {}};
  for (Mask sub : finsets) witness.entries.push_back(*is_satisfiable(a, sub));
  std::vector<Mask> bars;
  for (Mask sub : finsets) {
    Mask bar = 0;
    for (int i = 0; i < subset_count; ++i)
      if (a.satisfies(witness.entries[i], sub)) bar |= bit(i);
    bars.push_back(bar);
  }
  const SetFamily fam(subset_count, bars);
  if (!has_fip(fam)) return {Status::Violated, "the finite-subset witness family lost FIP"};
  const SetFamily u = extend_to_ultrafilter(generated_filter(fam));
  const Mask limits = ultralimits(tn.top, witness, u, &tn.family);
  if (limits == 0) return {Status::Violated, "the constructed witness sequence does not converge"};
  for (int x : to_indices(limits))
    if (!a.satisfies(x, sigma))
      return {Status::Violated,
              "ultralimit " + a.model_labels()[x] + " does not satisfy the target set"};
  return {Status::Verified, ""};
}

Check pseudo_closure_compactness_check(const FiniteAmst& a, Mask sigma, const SampleBudget& budget) {
  if (!is_normal(a).normal) return {Status::Vacuous, "structure is not normal"};
  const int subset_count = 1 << popcount(sigma);
  if (subset_count > kMaxGround)
    throw Error(ErrorKind::Capacity, "FinSet(sigma) too large to serve as an index set");
  const Mask k = mod_fin(a, sigma);
  const std::vector<int> pool = to_indices(k);

  // standing hypothesis: sequences from ModFin(sigma) have Łoś-models
  if (!pool.empty()) {
    const auto ultras = enumerate_ultrafilters(subset_count);
    const bool hypothesis =
        sweep_sequences(pool, subset_count, budget, [&](const ModelSequence& seq) {
          for (const auto& u : ultras)
            if (los_models(a, seq, u) == 0) return false;
          return true;
        });
    if (!hypothesis)
      return {Status::Vacuous, "a sequence from ModFin(sigma) has no Łoś-model"};
  }

  const bool compact = is_compact(a).compact;
  const bool pseudo = pool.empty() || is_pseudo_closed(a, k, subset_count, budget);
  if (compact != pseudo)
    return {Status::Violated, "compactness and pseudo-closure disagree on ModFin(sigma)"};
  return {Status::Verified, ""};
}

}  // namespace amst
