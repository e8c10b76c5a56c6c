#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace amst {

// Subsets are stored as bitmasks: bit k set <=> element k belongs to the
// subset. Sentence sets stay within 16 bits (their power sets are
// enumerated); model sets may use up to 63 bits (the canonical
// representation construction needs one model per distinct closure).
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 16;  // enumerable ground sets: sentences, topology points, index sets
inline constexpr int kMaxModels = 63;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int n) { return n == 0 ? Mask{0} : ((Mask{1} << n) - 1); }

constexpr bool contains(Mask s, int i) { return (s >> i) & 1u; }

// a ⊆ b
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr bool is_proper_subset(Mask a, Mask b) { return a != b && is_subset(a, b); }

inline int popcount(Mask s) { return std::popcount(s); }

// Index of the least set bit; undefined for s == 0.
inline int lowest_bit(Mask s) { return std::countr_zero(s); }

inline std::vector<int> to_indices(Mask s) {
  std::vector<int> out;
  for (Mask rest = s; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

// Visits every subset of `gamma` exactly once, in ascending numeric order.
template <class F>
void for_each_subset(Mask gamma, F&& f) {
  Mask sub = 0;
  while (true) {
    f(sub);
    if (sub == gamma) break;
    sub = (sub - gamma) & gamma;
  }
}

// Subsets of `gamma` ordered by (cardinality, numeric value).
std::vector<Mask> subsets_by_cardinality(Mask gamma);

// "{a,c}" rendering against a label list; indices past the label list print as #k.
std::string format_set(Mask s, const std::vector<std::string>& labels);

// "{0,2}" rendering for unlabeled index sets.
std::string format_index_set(Mask s);

}  // namespace amst
