#include "amst/compactness.hpp"

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

// Per-amst tables shared by the condition checkers.
struct Tables {
  const FiniteAmst* a = nullptr;
  Mask universe = 0;
  std::vector<Mask> mod;       // Mod(Γ) per sentence mask
  std::vector<char> sat;       // Mod(Γ) ≠ ∅
  std::vector<char> finsat;    // every subset satisfiable
  Mask singleton_core = 0;     // ⋂_α Mod({α}); Γ is ⊢-trivial iff Mod(Γ) ⊆ this
  std::vector<Mask> theories;  // Th(X) per model mask

  bool trivial(Mask g) const { return is_subset(mod[g], singleton_core); }
};

Tables build_tables(const FiniteAmst& a) {
  Tables t;
  t.a = &a;
  t.universe = a.all_sentences();
  const size_t n = size_t{1} << a.sentence_count();
  t.mod.resize(n);
  t.sat.resize(n);
  t.finsat.resize(n);
  for (Mask g = 0; g < static_cast<Mask>(n); ++g) {
    t.mod[g] = a.mod_of(g);
    t.sat[g] = t.mod[g] != 0;
    bool fs = t.sat[g] != 0;
    for (int s : to_indices(g)) fs = fs && t.finsat[g & ~bit(s)];
    t.finsat[g] = fs;
  }
  t.singleton_core = a.all_models();
  for (int s = 0; s < a.sentence_count(); ++s) t.singleton_core &= t.mod[bit(s)];
  // the Th table enumerates model subsets; only feasible for small model sets
  if (a.model_count() <= kMaxGround) {
    const size_t m = size_t{1} << a.model_count();
    t.theories.resize(m);
    for (Mask x = 0; x < static_cast<Mask>(m); ++x) t.theories[x] = a.th_of(x);
  }
  return t;
}

void require_enumerable_models(const FiniteAmst& a, const char* what) {
  if (a.model_count() > kMaxGround)
    throw Error(ErrorKind::Capacity,
                std::string(what) + " enumerates model families; at most " +
                    std::to_string(kMaxGround) + " models supported");
}

std::string set_str(const Tables& t, Mask g) { return format_set(g, t.a->sentence_labels()); }

// ---- boolean functions on the subset cube of a quantified Σ ----

// values indexed by compressed subset; size 2^dim
using BoolFun = std::vector<char>;

bool fun_monotone(const BoolFun& h, int dim) {
  const int n = 1 << dim;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < dim; ++k) {
      if ((i >> k) & 1) continue;
      if (h[i] && !h[i | (1 << k)]) return false;
    }
  return true;
}

// All monotone 0/1 functions on a cube of the given dimension; used only for
// small dims, where brute force over 2^(2^dim) candidates is cheap.
std::vector<BoolFun> enumerate_monotone(int dim) {
  std::vector<BoolFun> out;
  const int n = 1 << dim;
  for (std::uint64_t cand = 0; cand < (std::uint64_t{1} << n); ++cand) {
    BoolFun h(n);
    for (int i = 0; i < n; ++i) h[i] = (cand >> i) & 1;
    if (fun_monotone(h, dim)) out.push_back(std::move(h));
  }
  return out;
}

BoolFun sample_monotone(int dim, std::uint64_t& state) {
  const int n = 1 << dim;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [](int x, int y) {
    return std::popcount(unsigned(x)) < std::popcount(unsigned(y));
  });
  BoolFun h(n, 0);
  for (int i : order) {
    bool forced = false;
    for (int k = 0; k < dim && !forced; ++k)
      if (((i >> k) & 1) && h[i & ~(1 << k)]) forced = true;
    h[i] = forced || (mix64(state) & 1);
  }
  return h;
}

// Antitone functions are monotone ones read on the complemented domain.
BoolFun flip_domain(const BoolFun& h, int dim) {
  const int n = 1 << dim;
  BoolFun out(n);
  for (int i = 0; i < n; ++i) out[i] = h[(n - 1) ^ i];
  return out;
}

// ---- directed-family helpers ----

// A finite nonempty family is ⊆-directed exactly when its union is a member
// (iterate pairwise upper bounds to reach the union), and ⊇-directed exactly
// when its intersection is a member.
bool directed_up(const std::vector<Mask>& fam) {
  Mask uni = 0;
  for (Mask x : fam) uni |= x;
  return std::find(fam.begin(), fam.end(), uni) != fam.end();
}

bool directed_down(const std::vector<Mask>& fam) {
  Mask meet = ~Mask{0};
  for (Mask x : fam) meet &= x;
  return std::find(fam.begin(), fam.end(), meet) != fam.end();
}

std::string family_str(const std::vector<Mask>& fam, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (size_t i = 0; i < fam.size(); ++i) {
    if (i) out += ",";
    out += format_set(fam[i], labels);
  }
  return out + "}";
}

bool superset_of_any(Mask g, const std::vector<Mask>& targets) {
  for (Mask d : targets)
    if (is_subset(g, d)) return true;
  return false;
}

}  // namespace

CondResult cond_compact(const FiniteAmst& a) {
  const auto r = is_compact(a);
  if (r.compact) return {};
  return {false, "sat/finsat disagree on " + format_set(*r.counterexample, a.sentence_labels())};
}

CondResult cond_nontrivial_maxfinsat(const FiniteAmst& a) {
  const Tables t = build_tables(a);
  std::vector<Mask> targets;  // nontrivial maximal finitely satisfiable sets
  for (Mask d = 0; d <= t.universe; ++d) {
    if (t.finsat[d] && !t.trivial(d)) {
      bool maximal = true;
      for (int s = 0; s < a.sentence_count() && maximal; ++s)
        if (!contains(d, s) && t.finsat[d | bit(s)]) maximal = false;
      if (maximal) targets.push_back(d);
    }
    if (t.universe == 0) break;
  }
  for (Mask g = 0; g <= t.universe; ++g) {
    if (t.finsat[g] && !superset_of_any(g, targets))
      return {false, set_str(t, g) + " has no nontrivial maximal finitely satisfiable superset"};
    if (t.universe == 0) break;
  }
  return {};
}

CondResult cond_maximal_satisfiable(const FiniteAmst& a) {
  const Tables t = build_tables(a);
  std::vector<Mask> targets;
  for (Mask d = 0; d <= t.universe; ++d) {
    if (t.sat[d]) {
      bool maximal = true;
      for (int s = 0; s < a.sentence_count() && maximal; ++s)
        if (!contains(d, s) && t.sat[d | bit(s)]) maximal = false;
      if (maximal) targets.push_back(d);
    }
    if (t.universe == 0) break;
  }
  for (Mask g = 0; g <= t.universe; ++g) {
    if (t.finsat[g] && !superset_of_any(g, targets))
      return {false, set_str(t, g) + " has no maximal satisfiable superset"};
    if (t.universe == 0) break;
  }
  return {};
}

CondResult cond_complete(const FiniteAmst& a) {
  const Tables t = build_tables(a);
  std::vector<Mask> targets;
  for (Mask d = 0; d <= t.universe; ++d) {
    if (is_complete_set(a, d)) targets.push_back(d);
    if (t.universe == 0) break;
  }
  for (Mask g = 0; g <= t.universe; ++g) {
    if (t.finsat[g] && !superset_of_any(g, targets))
      return {false, set_str(t, g) + " has no complete superset"};
    if (t.universe == 0) break;
  }
  return {};
}

CondResult cond_trivial_finite_subset(const FiniteAmst& a) {
  const Tables t = build_tables(a);
  for (Mask g = 0; g <= t.universe; ++g) {
    if (t.trivial(g)) {
      bool found = false;
      for (Mask sub : subsets_by_cardinality(g))
        if (t.trivial(sub)) {
          found = true;
          break;
        }
      if (!found) return {false, set_str(t, g) + " is trivial with no finite trivial subset"};
    }
    if (t.universe == 0) break;
  }
  return {};
}

CondResult cond_directed_union(const FiniteAmst& a, const SamplePlan& plan) {
  const Tables t = build_tables(a);
  auto check_family = [&](const std::vector<Mask>& fam) -> bool {
    if (fam.empty() || !directed_up(fam)) return true;
    Mask uni = 0;
    for (Mask x : fam) {
      if (!t.sat[x]) return true;  // hypothesis fails, no constraint
      uni |= x;
    }
    return t.sat[uni] != 0;
  };

  if (a.sentence_count() <= plan.family_exhaustive_cutoff) {
    const size_t slots = size_t{1} << a.sentence_count();
    const std::uint64_t total = std::uint64_t{1} << slots;
    for (std::uint64_t pick = 1; pick < total; ++pick) {
      std::vector<Mask> fam;
      for (size_t i = 0; i < slots; ++i)
        if ((pick >> i) & 1) fam.push_back(static_cast<Mask>(i));
      if (!check_family(fam))
        return {false, "directed family " + family_str(fam, a.sentence_labels()) +
                           " has an unsatisfiable union"};
    }
    return {};
  }

  std::uint64_t state = plan.seed;
  for (int round = 0; round < plan.samples; ++round) {
    const int k = 1 + static_cast<int>(mix64(state) % 6);
    std::vector<Mask> fam;
    Mask uni = 0;
    for (int i = 0; i < k; ++i) {
      fam.push_back(static_cast<Mask>(mix64(state)) & t.universe);
      uni |= fam.back();
    }
    fam.push_back(uni);  // adding the union makes the family directed
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    if (!check_family(fam))
      return {false, "directed family " + family_str(fam, a.sentence_labels()) +
                         " has an unsatisfiable union"};
  }
  return {};
}

CondResult cond_finset_monotone(const FiniteAmst& a, const SamplePlan& plan) {
  const Tables t = build_tables(a);
  const int l = a.sentence_count();
  std::uint64_t state = plan.seed ^ 0x7777;

  for (Mask sigma = 0; sigma <= t.universe; ++sigma) {
    const int dim = popcount(sigma);
    const int domain = 1 << dim;

    // f(Γ) assembled from one monotone indicator per target sentence.
    auto check_map = [&](const std::vector<BoolFun>& per_bit) -> bool {
      Mask uni = 0;
      for (int idx = 0; idx < domain; ++idx) {
        Mask fg = 0;
        for (int b = 0; b < l; ++b)
          if (per_bit[b][idx]) fg |= bit(b);
        if (!t.sat[fg]) return true;  // hypothesis fails
        uni |= fg;
      }
      return t.sat[uni] != 0;
    };

    const bool exhaustive = l <= plan.map_exhaustive_cutoff && dim <= plan.map_exhaustive_cutoff;
    if (exhaustive) {
      const auto monos = enumerate_monotone(dim);
      std::vector<BoolFun> per_bit(l);
      std::vector<size_t> pos(l, 0);
      bool done = false;
      while (!done) {
        for (int b = 0; b < l; ++b) per_bit[b] = monos[pos[b]];
        if (!check_map(per_bit))
          return {false, "order-preserving map on FinSet" + set_str(t, sigma) +
                             " with satisfiable values has unsatisfiable union"};
        int b = 0;
        while (b < l) {
          if (++pos[b] < monos.size()) break;
          pos[b] = 0;
          ++b;
        }
        done = b == l;
      }
    } else {
      for (int round = 0; round < plan.samples; ++round) {
        std::vector<BoolFun> per_bit(l);
        for (int b = 0; b < l; ++b) per_bit[b] = sample_monotone(dim, state);
        if (!check_map(per_bit))
          return {false, "order-preserving map on FinSet" + set_str(t, sigma) +
                             " with satisfiable values has unsatisfiable union"};
      }
    }
    if (t.universe == 0) break;
  }
  return {};
}

CondResult cond_th_directed(const FiniteAmst& a, const SamplePlan& plan) {
  require_enumerable_models(a, "cond_th_directed");
  const Tables t = build_tables(a);
  const Mask all_models = a.all_models();
  auto check_family = [&](const std::vector<Mask>& fam) -> bool {
    if (fam.empty() || !directed_down(fam)) return true;
    Mask union_th = 0;
    for (Mask x : fam) {
      if (x == 0) return true;  // hypothesis: nonempty values
      union_th |= t.theories[x];
    }
    return t.sat[union_th] != 0;
  };

  if (a.model_count() <= plan.family_exhaustive_cutoff) {
    std::vector<Mask> slots;
    for (Mask x = 1; x <= all_models; ++x) slots.push_back(x);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t pick = 1; pick < total; ++pick) {
      std::vector<Mask> fam;
      for (size_t i = 0; i < slots.size(); ++i)
        if ((pick >> i) & 1) fam.push_back(slots[i]);
      if (!check_family(fam))
        return {false, "⊇-directed family " + family_str(fam, a.model_labels()) +
                           " has unsatisfiable ⋃Th"};
    }
    return {};
  }

  std::uint64_t state = plan.seed ^ 0x8888;
  for (int round = 0; round < plan.samples; ++round) {
    // random sets around a shared nonempty core so the total meet is nonempty
    const Mask core = bit(static_cast<int>(mix64(state) % a.model_count()));
    const int k = 1 + static_cast<int>(mix64(state) % 6);
    std::vector<Mask> fam;
    Mask meet = all_models;
    for (int i = 0; i < k; ++i) {
      fam.push_back((static_cast<Mask>(mix64(state)) & all_models) | core);
      meet &= fam.back();
    }
    fam.push_back(meet);  // adding the meet makes the family ⊇-directed
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    if (!check_family(fam))
      return {false, "⊇-directed family " + family_str(fam, a.model_labels()) +
                         " has unsatisfiable ⋃Th"};
  }
  return {};
}

CondResult cond_finset_antitone_th(const FiniteAmst& a, const SamplePlan& plan) {
  require_enumerable_models(a, "cond_finset_antitone_th");
  const Tables t = build_tables(a);
  const int m = a.model_count();
  std::uint64_t state = plan.seed ^ 0x9999;

  for (Mask sigma = 0; sigma <= t.universe; ++sigma) {
    if (t.finsat[sigma]) {
      const int dim = popcount(sigma);
      const int domain = 1 << dim;

      auto check_map = [&](const std::vector<BoolFun>& per_bit) -> bool {
        Mask union_th = 0;
        for (int idx = 0; idx < domain; ++idx) {
          Mask fx = 0;
          for (int b = 0; b < m; ++b)
            if (per_bit[b][idx]) fx |= bit(b);
          if (fx == 0) return true;  // hypothesis: nonempty values
          union_th |= t.theories[fx];
        }
        return t.sat[union_th] != 0;
      };

      const bool exhaustive = m <= plan.map_exhaustive_cutoff && dim <= plan.map_exhaustive_cutoff;
      if (exhaustive) {
        const auto monos = enumerate_monotone(dim);
        std::vector<BoolFun> per_bit(m);
        std::vector<size_t> pos(m, 0);
        bool done = false;
        while (!done) {
          for (int b = 0; b < m; ++b) per_bit[b] = flip_domain(monos[pos[b]], dim);
          if (!check_map(per_bit))
            return {false, "order-reversing map on FinSet" + set_str(t, sigma) +
                               " with nonempty values has unsatisfiable ⋃Th"};
          int b = 0;
          while (b < m) {
            if (++pos[b] < monos.size()) break;
            pos[b] = 0;
            ++b;
          }
          done = b == m;
        }
      } else {
        for (int round = 0; round < plan.samples; ++round) {
          std::vector<BoolFun> per_bit(m);
          for (int b = 0; b < m; ++b) per_bit[b] = flip_domain(sample_monotone(dim, state), dim);
          if (!check_map(per_bit))
            return {false, "order-reversing map on FinSet" + set_str(t, sigma) +
                               " with nonempty values has unsatisfiable ⋃Th"};
        }
      }
    }
    if (t.universe == 0) break;
  }
  return {};
}

bool CharacterizationReport::all_equal() const {
  for (const auto& c : conditions)
    if (c.holds != conditions[0].holds) return false;
  return true;
}

bool CharacterizationReport::all_true() const {
  for (const auto& c : conditions)
    if (!c.holds) return false;
  return true;
}

CharacterizationReport characterization_report(const FiniteAmst& a, const SamplePlan& plan) {
  CharacterizationReport rep;
  rep.hypothesis_ok = is_normal(a).normal &&
                      !is_finitely_satisfiable(a, a.all_sentences()).finitely_satisfiable;
  rep.conditions[0] = cond_compact(a);
  rep.conditions[1] = cond_nontrivial_maxfinsat(a);
  rep.conditions[2] = cond_maximal_satisfiable(a);
  rep.conditions[3] = cond_complete(a);
  rep.conditions[4] = cond_trivial_finite_subset(a);
  rep.conditions[5] = cond_directed_union(a, plan);
  rep.conditions[6] = cond_finset_monotone(a, plan);
  rep.conditions[7] = cond_th_directed(a, plan);
  rep.conditions[8] = cond_finset_antitone_th(a, plan);
  return rep;
}

bool LemmaReport::clean() const {
  for (const auto& item : items)
    if (!item.violations.empty()) return false;
  return true;
}

LemmaReport lemma_checks(const FiniteAmst& a) {
  const Tables t = build_tables(a);
  const bool normal = is_normal(a).normal;
  const bool l_sat = t.sat[t.universe] != 0;
  LemmaReport rep;

  // closure row computed on the fly: {α | Mod(Γ) ⊆ Mod({α})}
  auto closure_row = [&](Mask g) {
    Mask row = 0;
    for (int s = 0; s < a.sentence_count(); ++s)
      if (is_subset(t.mod[g], t.mod[bit(s)])) row |= bit(s);
    return row;
  };

  LemmaReport::Item maxfinsat_closed{"maximal finitely satisfiable + satisfiable => closed"};
  LemmaReport::Item nontriv_sat{"maximal finitely satisfiable proper: satisfiable iff nontrivial"};
  LemmaReport::Item nsat_triv{"unsatisfiable => trivial"};
  LemmaReport::Item triv_nsat{"trivial => unsatisfiable (normal, L unsatisfiable)"};

  for (Mask g = 0; g <= t.universe; ++g) {
    const bool maximal_finsat = [&] {
      if (!t.finsat[g]) return false;
      for (int s = 0; s < a.sentence_count(); ++s)
        if (!contains(g, s) && t.finsat[g | bit(s)]) return false;
      return true;
    }();

    ++maxfinsat_closed.instances;
    if (normal && maximal_finsat && t.sat[g]) {
      ++maxfinsat_closed.applicable;
      if (closure_row(g) != g)
        maxfinsat_closed.violations.push_back(set_str(t, g) + " not closed");
    }

    ++nontriv_sat.instances;
    if (normal && maximal_finsat && g != t.universe) {
      ++nontriv_sat.applicable;
      if ((t.sat[g] != 0) != !t.trivial(g))
        nontriv_sat.violations.push_back(set_str(t, g) +
                                         " breaks the satisfiable/nontrivial match");
    }

    ++nsat_triv.instances;
    if (!t.sat[g]) {
      ++nsat_triv.applicable;
      if (!t.trivial(g))
        nsat_triv.violations.push_back(set_str(t, g) + " unsatisfiable yet nontrivial");
    }

    ++triv_nsat.instances;
    if (normal && !l_sat && t.trivial(g)) {
      ++triv_nsat.applicable;
      if (t.sat[g]) triv_nsat.violations.push_back(set_str(t, g) + " trivial yet satisfiable");
    }

    if (t.universe == 0) break;
  }
  rep.items = {maxfinsat_closed, nontriv_sat, nsat_triv, triv_nsat};
  return rep;
}

Check shared_consequence_transfer(const FiniteAmst& a1, const FiniteAmst& a2) {
  if (a1.sentence_labels() != a2.sentence_labels())
    throw Error(ErrorKind::Argument, "the two structures use different sentence alphabets");
  if (!is_normal(a1).normal || !is_normal(a2).normal)
    return {Status::Vacuous, "both structures must be normal"};
  if (is_satisfiable(a1, a1.all_sentences()) || is_satisfiable(a2, a2.all_sentences()))
    return {Status::Vacuous, "L must be unsatisfiable in both structures"};
  if (!(induced_consequence(a1) == induced_consequence(a2)))
    return {Status::Vacuous, "the induced consequences differ"};
  if (is_compact(a1).compact && !is_compact(a2).compact)
    return {Status::Violated, "first structure compact, second not"};
  return {Status::Verified, ""};
}

}  // namespace amst
