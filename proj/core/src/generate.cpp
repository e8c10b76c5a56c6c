#include "amst/generate.hpp"

#include <cstdio>

namespace amst {

FiniteAmst random_amst(const GenParams& p) {
  if (p.max_models < 1 || p.max_models > kMaxGround || p.max_sentences < 0 ||
      p.max_sentences > kMaxGround)
    throw Error(ErrorKind::Capacity, "generator caps out of range");
  Rng rng(p.seed);
  const int m = 1 + static_cast<int>(rng.below(p.max_models));
  const int l = p.max_sentences == 0 ? 0 : 1 + static_cast<int>(rng.below(p.max_sentences));
  std::vector<std::string> sentences, models;
  for (int s = 0; s < l; ++s) sentences.push_back("s" + std::to_string(s));
  for (int i = 0; i < m; ++i) models.push_back("m" + std::to_string(i));
  if (p.kind == FiniteAmst::Kind::Normal) {
    std::vector<Mask> rows;
    for (int i = 0; i < m; ++i) {
      Mask row = 0;
      for (int s = 0; s < l; ++s)
        if (rng.chance(p.density)) row |= bit(s);
      rows.push_back(row);
    }
    return FiniteAmst::normal_matrix(std::move(sentences), std::move(models), std::move(rows));
  }
  std::vector<std::vector<bool>> table;
  for (int i = 0; i < m; ++i) {
    std::vector<bool> row(size_t{1} << l);
    for (size_t g = 0; g < row.size(); ++g) row[g] = rng.chance(p.density);
    table.push_back(std::move(row));
  }
  return FiniteAmst::general_table(std::move(sentences), std::move(models), std::move(table));
}

LogicalStructure random_tarski(const GenParams& p) {
  GenParams q = p;
  q.kind = FiniteAmst::Kind::Normal;
  if (q.max_sentences > kMaxTableSentences) q.max_sentences = kMaxTableSentences;
  return induced_consequence(random_amst(q));
}

FiniteAmst shrink(const FiniteAmst& instance,
                  const std::function<bool(const FiniteAmst&)>& failing_predicate) {
  if (failing_predicate(instance))
    throw Error(ErrorKind::Precondition, "the predicate passes on the input instance");
  FiniteAmst cur = instance;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int m = 0; m < cur.model_count() && cur.model_count() > 1; ++m) {
      FiniteAmst cand = cur.without_model(m);
      if (!failing_predicate(cand)) {
        cur = std::move(cand);
        changed = true;
        m = -1;  // restart at the lowest index for determinism
      }
    }
    for (int s = 0; s < cur.sentence_count(); ++s) {
      FiniteAmst cand = cur.without_sentence(s);
      if (!failing_predicate(cand)) {
        cur = std::move(cand);
        changed = true;
        s = -1;
      }
    }
  }
  return cur;
}

std::string instance_digest(const FiniteAmst& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  auto feed_str = [&](const std::string& s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
  };
  feed(a.kind() == FiniteAmst::Kind::Normal ? 1 : 2);
  feed(a.sentence_count());
  feed(a.model_count());
  for (const auto& s : a.sentence_labels()) feed_str(s);
  for (const auto& s : a.model_labels()) feed_str(s);
  for (int m = 0; m < a.model_count(); ++m) {
    if (a.kind() == FiniteAmst::Kind::Normal) {
      feed(a.matrix_row(m));
    } else {
      const auto& row = a.table_row(m);
      std::uint64_t acc = 0;
      for (size_t i = 0; i < row.size(); ++i) {
        acc = (acc << 1) | (row[i] ? 1 : 0);
        if (i % 64 == 63) {
          feed(acc);
          acc = 0;
        }
      }
      feed(acc);
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace amst
