#include "amst/structure.hpp"

#include <algorithm>

namespace amst {

namespace {

void check_caps(size_t sentences, size_t models) {
  if (models < 1) throw Error(ErrorKind::Argument, "an amst needs at least one model");
  if (sentences > kMaxGround)
    throw Error(ErrorKind::Capacity,
                "at most " + std::to_string(kMaxGround) + " sentences supported");
  if (models > kMaxModels)
    throw Error(ErrorKind::Capacity,
                "at most " + std::to_string(kMaxModels) + " models supported");
}

}  // namespace

FiniteAmst FiniteAmst::normal_matrix(std::vector<std::string> sentences,
                                     std::vector<std::string> models,
                                     std::vector<Mask> rows) {
  check_caps(sentences.size(), models.size());
  if (rows.size() != models.size())
    throw Error(ErrorKind::Argument, "one matrix row per model expected");
  const Mask universe = full_mask(static_cast<int>(sentences.size()));
  for (Mask r : rows)
    if (!is_subset(r, universe))
      throw Error(ErrorKind::Argument, "matrix row mentions an unknown sentence");
  FiniteAmst a;
  a.kind_ = Kind::Normal;
  a.sentences_ = std::move(sentences);
  a.models_ = std::move(models);
  a.rows_ = std::move(rows);
  a.rebuild_columns();
  return a;
}

FiniteAmst FiniteAmst::general_table(std::vector<std::string> sentences,
                                     std::vector<std::string> models,
                                     std::vector<std::vector<bool>> table) {
  check_caps(sentences.size(), models.size());
  if (table.size() != models.size())
    throw Error(ErrorKind::Argument, "one table row per model expected");
  const size_t width = size_t{1} << sentences.size();
  for (const auto& row : table)
    if (row.size() != width)
      throw Error(ErrorKind::Argument, "table rows must have 2^|L| entries");
  FiniteAmst a;
  a.kind_ = Kind::General;
  a.sentences_ = std::move(sentences);
  a.models_ = std::move(models);
  a.table_ = std::move(table);
  a.rebuild_columns();
  return a;
}

void FiniteAmst::rebuild_columns() {
  columns_.assign(sentence_count(), 0);
  for (int m = 0; m < model_count(); ++m) {
    const Mask row = singleton_theory(m);
    for (int s : to_indices(row)) columns_[s] |= bit(m);
  }
}

void FiniteAmst::check_model_index(int model) const {
  if (model < 0 || model >= model_count())
    throw Error(ErrorKind::Argument, "model index out of range");
}

bool FiniteAmst::satisfies(int model, Mask gamma) const {
  check_model_index(model);
  if (!is_subset(gamma, all_sentences()))
    throw Error(ErrorKind::Argument, "sentence set out of range");
  if (kind_ == Kind::Normal) return is_subset(gamma, rows_[model]);
  return table_[model][gamma];
}

Mask FiniteAmst::singleton_theory(int model) const {
  check_model_index(model);
  if (kind_ == Kind::Normal) return rows_[model];
  Mask out = 0;
  for (int s = 0; s < sentence_count(); ++s)
    if (table_[model][bit(s)]) out |= bit(s);
  return out;
}

Mask FiniteAmst::mod_of(Mask gamma) const {
  if (!is_subset(gamma, all_sentences()))
    throw Error(ErrorKind::Argument, "sentence set out of range");
  if (kind_ == Kind::Normal) {
    Mask out = all_models();
    for (int s : to_indices(gamma)) out &= columns_[s];
    return out;
  }
  Mask out = 0;
  for (int m = 0; m < model_count(); ++m)
    if (table_[m][gamma]) out |= bit(m);
  return out;
}

Mask FiniteAmst::th_of(Mask models) const {
  if (!is_subset(models, all_models()))
    throw Error(ErrorKind::Argument, "model set out of range");
  Mask out = all_sentences();
  for (int m : to_indices(models)) out &= singleton_theory(m);
  return out;
}

const std::vector<bool>& FiniteAmst::table_row(int model) const {
  check_model_index(model);
  if (kind_ != Kind::General)
    throw Error(ErrorKind::Argument, "table rows exist only for general amsts");
  return table_[model];
}

Mask FiniteAmst::matrix_row(int model) const {
  check_model_index(model);
  if (kind_ != Kind::Normal)
    throw Error(ErrorKind::Argument, "matrix rows exist only for normal amsts");
  return rows_[model];
}

FiniteAmst FiniteAmst::without_model(int model) const {
  check_model_index(model);
  if (model_count() == 1)
    throw Error(ErrorKind::Argument, "cannot drop the last model");
  std::vector<std::string> models;
  for (int m = 0; m < model_count(); ++m)
    if (m != model) models.push_back(models_[m]);
  if (kind_ == Kind::Normal) {
    std::vector<Mask> rows;
    for (int m = 0; m < model_count(); ++m)
      if (m != model) rows.push_back(rows_[m]);
    return normal_matrix(sentences_, std::move(models), std::move(rows));
  }
  std::vector<std::vector<bool>> table;
  for (int m = 0; m < model_count(); ++m)
    if (m != model) table.push_back(table_[m]);
  return general_table(sentences_, std::move(models), std::move(table));
}

FiniteAmst FiniteAmst::without_sentence(int sentence) const {
  if (sentence < 0 || sentence >= sentence_count())
    throw Error(ErrorKind::Argument, "sentence index out of range");
  std::vector<std::string> sentences;
  for (int s = 0; s < sentence_count(); ++s)
    if (s != sentence) sentences.push_back(sentences_[s]);
  const Mask low = full_mask(sentence);
  auto drop_bit = [&](Mask g) -> Mask { return (g & low) | ((g >> (sentence + 1)) << sentence); };
  if (kind_ == Kind::Normal) {
    std::vector<Mask> rows;
    rows.reserve(rows_.size());
    for (Mask r : rows_) rows.push_back(drop_bit(r));
    return normal_matrix(std::move(sentences), models_, std::move(rows));
  }
  // New table is the old one restricted to sets not mentioning the sentence.
  auto expand = [&](Mask g) -> Mask { return (g & low) | ((g & ~low) << 1); };
  std::vector<std::vector<bool>> table;
  const size_t width = size_t{1} << (sentence_count() - 1);
  for (int m = 0; m < model_count(); ++m) {
    std::vector<bool> row(width);
    for (Mask g = 0; g < static_cast<Mask>(width); ++g) row[g] = table_[m][expand(g)];
    table.push_back(std::move(row));
  }
  return general_table(std::move(sentences), models_, std::move(table));
}

bool FiniteAmst::operator==(const FiniteAmst& other) const {
  return kind_ == other.kind_ && sentences_ == other.sentences_ && models_ == other.models_ &&
         rows_ == other.rows_ && table_ == other.table_;
}

NormalityResult is_normal(const FiniteAmst& a) {
  if (a.kind() == FiniteAmst::Kind::Normal) return {true, std::nullopt};
  for (int m = 0; m < a.model_count(); ++m) {
    const Mask row = a.singleton_theory(m);
    const Mask universe = a.all_sentences();
    for (Mask g = 0; g <= universe; ++g) {
      if (a.satisfies(m, g) != is_subset(g, row)) {
        // m ⊨ Γ with a failing member: report the offending singleton;
        // otherwise the set itself is the witness.
        if (a.satisfies(m, g)) return {false, std::make_pair(m, bit(lowest_bit(g & ~row)))};
        return {false, std::make_pair(m, g)};
      }
      if (universe == 0) break;
    }
  }
  return {true, std::nullopt};
}

std::optional<int> is_satisfiable(const FiniteAmst& a, Mask gamma) {
  const Mask mods = a.mod_of(gamma);
  if (mods == 0) return std::nullopt;
  return lowest_bit(mods);
}

FiniteSatResult is_finitely_satisfiable(const FiniteAmst& a, Mask gamma) {
  for (Mask sub : subsets_by_cardinality(gamma))
    if (a.mod_of(sub) == 0) return {false, sub};
  return {true, std::nullopt};
}

CompactnessResult is_compact(const FiniteAmst& a) {
  const Mask universe = a.all_sentences();
  const size_t n = size_t{1} << a.sentence_count();
  std::vector<bool> sat(n), finsat(n);
  for (Mask g = 0; g <= universe; ++g) {
    sat[g] = a.mod_of(g) != 0;
    // Γ is finitely satisfiable iff Γ and all its immediate sub-subsets are
    // satisfiable; dynamic programming over ascending masks.
    bool fs = sat[g];
    for (int s : to_indices(g)) fs = fs && finsat[g & ~bit(s)];
    finsat[g] = fs;
    if (universe == 0) break;
  }
  for (Mask g = 0; g <= universe; ++g) {
    if (sat[g] != finsat[g]) return {false, g};
    if (universe == 0) break;
  }
  return {true, std::nullopt};
}

bool is_complete_set(const FiniteAmst& a, Mask gamma) {
  const Mask mods = a.mod_of(gamma);
  if (mods == 0) return false;
  for (int s = 0; s < a.sentence_count(); ++s) {
    const Mask cls = a.mod_of(bit(s));
    if (!is_subset(mods, cls) && (mods & cls) != 0) return false;
  }
  return true;
}

Mask maximal_finitely_satisfiable_extension(const FiniteAmst& a, Mask gamma) {
  if (!is_finitely_satisfiable(a, gamma).finitely_satisfiable)
    throw Error(ErrorKind::Precondition, "input set is not finitely satisfiable");
  Mask delta = gamma;
  for (int s = 0; s < a.sentence_count(); ++s) {
    if (contains(delta, s)) continue;
    if (is_finitely_satisfiable(a, delta | bit(s)).finitely_satisfiable) delta |= bit(s);
  }
  return delta;
}

}  // namespace amst
