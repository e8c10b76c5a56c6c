#include "amst/consequence.hpp"

#include <algorithm>

namespace amst {

LogicalStructure::LogicalStructure(std::vector<std::string> sentences,
                                   std::vector<Mask> closure_rows)
    : sentences_(std::move(sentences)), closure_(std::move(closure_rows)) {
  if (sentence_count() > kMaxTableSentences)
    throw Error(ErrorKind::Capacity,
                "turnstile tables support at most " + std::to_string(kMaxTableSentences) +
                    " sentences");
  if (closure_.size() != (size_t{1} << sentence_count()))
    throw Error(ErrorKind::Argument, "closure table must have 2^|L| rows");
  for (Mask row : closure_)
    if (!is_subset(row, all_sentences()))
      throw Error(ErrorKind::Argument, "closure row mentions an unknown sentence");
}

bool LogicalStructure::turnstile(Mask gamma, int alpha) const {
  if (alpha < 0 || alpha >= sentence_count())
    throw Error(ErrorKind::Argument, "sentence index out of range");
  return contains(closure(gamma), alpha);
}

Mask LogicalStructure::closure(Mask gamma) const {
  if (!is_subset(gamma, all_sentences()))
    throw Error(ErrorKind::Argument, "sentence set out of range");
  return closure_[gamma];
}

bool LogicalStructure::operator==(const LogicalStructure& other) const {
  return sentences_ == other.sentences_ && closure_ == other.closure_;
}

TarskiReport is_tarski_type(const LogicalStructure& ls) {
  TarskiReport rep;
  const Mask universe = ls.all_sentences();
  const auto& labels = ls.sentence_labels();

  for (Mask g = 0; g <= universe; ++g) {
    if (!is_subset(g, ls.closure(g))) {
      const Mask missing = g & ~ls.closure(g);
      rep.reflexive = {false, format_set(g, labels) + " does not entail its own member " +
                                  labels[lowest_bit(missing)]};
      break;
    }
    if (universe == 0) break;
  }

  for (Mask sigma = 0; sigma <= universe && rep.monotonic.holds; ++sigma) {
    for_each_subset(sigma, [&](Mask g) {
      if (!rep.monotonic.holds) return;
      if (!is_subset(ls.closure(g), ls.closure(sigma)))
        rep.monotonic = {false, "C" + format_set(g, labels) + " is not within C" +
                                    format_set(sigma, labels)};
    });
    if (universe == 0) break;
  }

  // Operator form: Σ ⊆ C(Γ) implies C(Σ) ⊆ C(Γ).
  for (Mask g = 0; g <= universe && rep.transitive.holds; ++g) {
    for (Mask sigma = 0; sigma <= universe; ++sigma) {
      if (is_subset(sigma, ls.closure(g)) && !is_subset(ls.closure(sigma), ls.closure(g))) {
        const Mask extra = ls.closure(sigma) & ~ls.closure(g);
        rep.transitive = {false, format_set(sigma, labels) + " entails " +
                                     labels[lowest_bit(extra)] + " which " +
                                     format_set(g, labels) + " does not"};
        break;
      }
      if (universe == 0) break;
    }
    if (universe == 0) break;
  }
  return rep;
}

bool is_trivial_set(const LogicalStructure& ls, Mask gamma) {
  return ls.closure(gamma) == ls.all_sentences();
}

bool is_closed_set(const LogicalStructure& ls, Mask gamma) {
  return ls.closure(gamma) == gamma;
}

std::optional<Mask> entailing_subset(const LogicalStructure& ls, Mask gamma, int alpha,
                                     bool proper_only) {
  for (Mask sub : subsets_by_cardinality(gamma)) {
    if (proper_only && sub == gamma) continue;
    if (ls.turnstile(sub, alpha)) return sub;
  }
  return std::nullopt;
}

FinitaryResult is_finitary(const LogicalStructure& ls) {
  const Mask universe = ls.all_sentences();
  for (Mask g = 0; g <= universe; ++g) {
    for (int alpha : to_indices(ls.closure(g)))
      if (!entailing_subset(ls, g, alpha, /*proper_only=*/false))
        return {false, std::make_pair(g, alpha)};
    if (universe == 0) break;
  }
  return {true, std::nullopt};
}

LogicalStructure induced_consequence(const FiniteAmst& a) {
  if (a.sentence_count() > kMaxTableSentences)
    throw Error(ErrorKind::Capacity, "amst too large to tabulate its induced consequence");
  const Mask universe = a.all_sentences();
  std::vector<Mask> rows(size_t{1} << a.sentence_count());
  std::vector<Mask> singleton_mods(a.sentence_count());
  for (int s = 0; s < a.sentence_count(); ++s) singleton_mods[s] = a.mod_of(bit(s));
  for (Mask g = 0; g <= universe; ++g) {
    const Mask mods = a.mod_of(g);
    Mask row = 0;
    for (int s = 0; s < a.sentence_count(); ++s)
      if (is_subset(mods, singleton_mods[s])) row |= bit(s);
    rows[g] = row;
    if (universe == 0) break;
  }
  return LogicalStructure(a.sentence_labels(), std::move(rows));
}

FiniteAmst canonical_normal_amst(const LogicalStructure& ls) {
  if (!is_tarski_type(ls).all())
    throw Error(ErrorKind::Precondition, "input structure is not of Tarski-type");
  const Mask universe = ls.all_sentences();
  std::vector<Mask> closures;
  for (Mask g = 0; g <= universe; ++g) {
    if (!is_trivial_set(ls, g)) closures.push_back(ls.closure(g));
    if (universe == 0) break;
  }
  std::sort(closures.begin(), closures.end());
  closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
  if (closures.empty())
    throw Error(ErrorKind::Construction, "every set is trivial, the model set would be empty");
  std::vector<std::string> models;
  models.reserve(closures.size());
  for (Mask c : closures) models.push_back("chi" + format_set(c, ls.sentence_labels()));
  return FiniteAmst::normal_matrix(ls.sentence_labels(), std::move(models), std::move(closures));
}

Check check_finitary_trivial_theorem(const LogicalStructure& ls) {
  const auto tarski = is_tarski_type(ls);
  if (!is_finitary(ls).finitary) return {Status::Vacuous, "structure is not finitary"};
  if (!tarski.monotonic.holds) return {Status::Vacuous, "turnstile is not monotonic"};
  if (!tarski.transitive.holds) return {Status::Vacuous, "turnstile is not transitive"};

  const Mask universe = ls.all_sentences();
  bool has_nonempty_finite_trivial = false;
  for (Mask g = 1; g <= universe && universe != 0; ++g)
    if (is_trivial_set(ls, g)) {
      has_nonempty_finite_trivial = true;
      break;
    }
  if (!has_nonempty_finite_trivial)
    return {Status::Vacuous, "no nonempty finite trivial set exists"};

  for (Mask g = 0; g <= universe; ++g) {
    if (is_trivial_set(ls, g)) {
      bool found = false;
      for (Mask sub : subsets_by_cardinality(g))
        if (is_trivial_set(ls, sub)) {
          found = true;
          break;
        }
      if (!found)
        return {Status::Violated,
                format_set(g, ls.sentence_labels()) + " has no finite trivial subset"};
    }
    if (universe == 0) break;
  }
  return {Status::Verified, ""};
}

}  // namespace amst
