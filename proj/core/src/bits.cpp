#include "amst/bits.hpp"

#include <algorithm>

namespace amst {

std::vector<Mask> subsets_by_cardinality(Mask gamma) {
  std::vector<Mask> subs;
  for_each_subset(gamma, [&](Mask s) { subs.push_back(s); });
  std::stable_sort(subs.begin(), subs.end(),
                   [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  return subs;
}

std::string format_set(Mask s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (int i : to_indices(s)) {
    if (!first) out += ",";
    first = false;
    if (i < static_cast<int>(labels.size()))
      out += labels[i];
    else
      out += "#" + std::to_string(i);
  }
  return out + "}";
}

std::string format_index_set(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int i : to_indices(s)) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(i);
  }
  return out + "}";
}

}  // namespace amst
