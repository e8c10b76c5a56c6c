#include "amst/adapters.hpp"

#include <algorithm>

namespace amst {

namespace {

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

// ---- Information systems ----

ValidationReport validate_information_system(const InformationSystem& is) {
  ValidationReport rep;
  const int n = static_cast<int>(is.tokens.size());
  const Mask universe = full_mask(n);
  auto in_con = [&](Mask x) {
    return std::find(is.con.begin(), is.con.end(), x) != is.con.end();
  };
  auto entails = [&](Mask x, int a) {
    return std::find(is.entail.begin(), is.entail.end(), std::make_pair(x, a)) !=
           is.entail.end();
  };
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };

  if (n > kMaxGround) {
    fail("structural: too many tokens");
    return rep;
  }
  if (is.con.empty()) fail("structural: Con must be nonempty");
  for (Mask x : is.con)
    if (!is_subset(x, universe)) fail("structural: Con member outside the token set");
  for (const auto& [x, a] : is.entail) {
    if (a < 0 || a >= n || !is_subset(x, universe))
      fail("structural: entailment outside the token set");
    else if (x == 0 || !in_con(x))
      fail("structural: entailment source " + format_set(x, is.tokens) +
           " not in Con∖{∅}");
  }
  if (!rep.ok) return rep;

  for (Mask y : is.con)
    for_each_subset(y, [&](Mask x) {
      if (!in_con(x))
        fail("(a): " + format_set(x, is.tokens) + " ⊆ " + format_set(y, is.tokens) +
             " is missing from Con");
    });
  for (int a = 0; a < n; ++a)
    if (!in_con(bit(a))) fail("(b): {" + is.tokens[a] + "} is missing from Con");
  for (const auto& [x, a] : is.entail)
    if (!in_con(x | bit(a)))
      fail("(c): " + format_set(x, is.tokens) + " ⊢ " + is.tokens[a] +
           " but their union is missing from Con");
  for (Mask x : is.con)
    for (int a : to_indices(x))
      if (x != 0 && !entails(x, a))
        fail("(d): " + format_set(x, is.tokens) + " should entail its member " + is.tokens[a]);
  for (Mask x : is.con) {
    if (x == 0) continue;
    for (Mask y : is.con) {
      if (y == 0) continue;
      bool x_entails_all_y = true;
      for (int b : to_indices(y))
        if (!entails(x, b)) x_entails_all_y = false;
      if (!x_entails_all_y) continue;
      for (int c = 0; c < n; ++c)
        if (entails(y, c) && !entails(x, c))
          fail("(e): " + format_set(x, is.tokens) + " covers " + format_set(y, is.tokens) +
               " but misses its consequence " + is.tokens[c]);
    }
  }
  return rep;
}

FiniteAmst info_system_to_amst(const InformationSystem& is) {
  const auto rep = validate_information_system(is);
  if (!rep.ok) throw Error(ErrorKind::Validation, rep.violations.front());
  const int n = static_cast<int>(is.tokens.size());
  auto entails = [&](Mask x, int a) {
    return std::find(is.entail.begin(), is.entail.end(), std::make_pair(x, a)) !=
           is.entail.end();
  };
  std::vector<std::vector<bool>> table(n, std::vector<bool>(size_t{1} << n, false));
  for (int a = 0; a < n; ++a)
    for (Mask g = 1; g <= full_mask(n); ++g) table[a][g] = entails(g, a);
  return FiniteAmst::general_table(is.tokens, is.tokens, std::move(table));
}

// ---- Chu spaces ----

FiniteAmst chu_to_amst(const ChuSpace& chu) {
  const int nx = static_cast<int>(chu.points.size());
  const int na = static_cast<int>(chu.attributes.size());
  const int nk = static_cast<int>(chu.alphabet.size());
  if (chu.entry.size() != static_cast<size_t>(nx))
    throw Error(ErrorKind::Argument, "entry matrix must have one row per point");
  for (const auto& row : chu.entry)
    if (row.size() != static_cast<size_t>(na))
      throw Error(ErrorKind::Argument, "entry matrix must have one column per attribute");
  std::vector<std::string> models;
  std::vector<std::vector<bool>> table;
  for (int x = 0; x < nx; ++x)
    for (int a = 0; a < na; ++a) {
      const int k = chu.entry[x][a];
      if (k < 0 || k >= nk) throw Error(ErrorKind::Argument, "entry outside the alphabet");
      models.push_back(pair_label(chu.points[x], chu.attributes[a]));
      std::vector<bool> row(size_t{1} << nk, false);
      row[bit(k)] = true;
      table.push_back(std::move(row));
    }
  return FiniteAmst::general_table(chu.alphabet, std::move(models), std::move(table));
}

// ---- Quivers ----

FiniteAmst quiver_to_amst(const Quiver& q) {
  const int nv = static_cast<int>(q.vertices.size());
  const int ne = static_cast<int>(q.edges.size());
  if (q.source.size() != static_cast<size_t>(ne) || q.target.size() != static_cast<size_t>(ne))
    throw Error(ErrorKind::Argument, "source/target must be total on the edges");
  std::vector<std::string> sentences;
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b) sentences.push_back(pair_label(q.vertices[a], q.vertices[b]));
  std::vector<std::vector<bool>> table;
  for (int e = 0; e < ne; ++e) {
    const int s = q.source[e], t = q.target[e];
    if (s < 0 || s >= nv || t < 0 || t >= nv)
      throw Error(ErrorKind::Argument, "edge endpoint outside the vertex set");
    std::vector<bool> row(size_t{1} << sentences.size(), false);
    row[bit(s * nv + t)] = true;
    table.push_back(std::move(row));
  }
  return FiniteAmst::general_table(std::move(sentences), q.edges, std::move(table));
}

Quiver amst_to_quiver(const FiniteAmst& a, const std::vector<std::string>& vertices) {
  const int nv = static_cast<int>(vertices.size());
  if (a.sentence_count() != nv * nv)
    throw Error(ErrorKind::Argument, "sentence set is not shaped like V×V");
  Quiver q;
  q.vertices = vertices;
  q.edges = a.model_labels();
  for (int e = 0; e < a.model_count(); ++e) {
    std::optional<int> found;
    for (int s = 0; s < a.sentence_count(); ++s) {
      if (!a.satisfies(e, bit(s))) continue;
      if (found)
        throw Error(ErrorKind::Validation,
                    "edge " + a.model_labels()[e] + " satisfies more than one vertex pair");
      found = s;
    }
    if (!found)
      throw Error(ErrorKind::Validation,
                  "edge " + a.model_labels()[e] + " satisfies no vertex pair");
    q.source.push_back(*found / nv);
    q.target.push_back(*found % nv);
  }
  return q;
}

// ---- Logical structures ----

FiniteAmst logical_structure_to_amst(const LogicalStructure& ls) {
  const int n = ls.sentence_count();
  if (n < 1)
    throw Error(ErrorKind::Argument, "an amst needs at least one model; L is empty");
  std::vector<std::vector<bool>> table(n, std::vector<bool>(size_t{1} << n, false));
  for (int alpha = 0; alpha < n; ++alpha)
    for (Mask g = 0; g <= full_mask(n); ++g) table[alpha][g] = !ls.turnstile(g, alpha);
  return FiniteAmst::general_table(ls.sentence_labels(), ls.sentence_labels(),
                                   std::move(table));
}

LogicalStructure amst_to_logical_structure(const FiniteAmst& a) {
  if (a.sentence_labels() != a.model_labels())
    throw Error(ErrorKind::Argument, "models and sentences must coincide for this reading");
  const Mask universe = a.all_sentences();
  std::vector<Mask> rows(size_t{1} << a.sentence_count());
  for (Mask g = 0; g <= universe; ++g) {
    Mask row = 0;
    for (int alpha = 0; alpha < a.sentence_count(); ++alpha)
      if (!a.satisfies(alpha, g)) row |= bit(alpha);
    rows[g] = row;
    if (universe == 0) break;
  }
  return LogicalStructure(a.sentence_labels(), std::move(rows));
}

// ---- Object-free categories ----

namespace {

struct Compose {
  const ObjectFreeCategory* c;
  bool defined(int g, int f) const { return c->composition[g][f].has_value(); }
  int at(int g, int f) const { return *c->composition[g][f]; }
};

bool is_unit(const Compose& k, int u, int n) {
  for (int x = 0; x < n; ++x) {
    if (k.defined(x, u) && k.at(x, u) != x) return false;
    if (k.defined(u, x) && k.at(u, x) != x) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_object_free_category(const ObjectFreeCategory& c) {
  ValidationReport rep;
  const int n = static_cast<int>(c.morphisms.size());
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };
  if (c.composition.size() != static_cast<size_t>(n)) {
    fail("structural: composition table must be |M|×|M|");
    return rep;
  }
  for (const auto& row : c.composition)
    if (row.size() != static_cast<size_t>(n)) {
      fail("structural: composition table must be |M|×|M|");
      return rep;
    }
  Compose k{&c};
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (k.defined(g, f) && (k.at(g, f) < 0 || k.at(g, f) >= n)) {
        fail("structural: composite outside the morphism set");
        return rep;
      }

  // matching: g∘f, h∘g defined <=> h∘(g∘f) defined <=> (h∘g)∘f defined
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g)
      for (int f = 0; f < n; ++f) {
        const bool both = k.defined(g, f) && k.defined(h, g);
        const bool left = k.defined(g, f) && k.defined(h, k.at(g, f));
        const bool right = k.defined(h, g) && k.defined(k.at(h, g), f);
        if (both != left || both != right) {
          fail("(a): matching fails at (" + c.morphisms[h] + "," + c.morphisms[g] + "," +
               c.morphisms[f] + ")");
        } else if (both && k.at(h, k.at(g, f)) != k.at(k.at(h, g), f)) {
          fail("(b): associativity fails at (" + c.morphisms[h] + "," + c.morphisms[g] + "," +
               c.morphisms[f] + ")");
        }
      }

  for (int f = 0; f < n; ++f) {
    bool left_unit = false, right_unit = false;
    for (int u = 0; u < n; ++u) {
      if (!is_unit(k, u, n)) continue;
      if (k.defined(u, f)) left_unit = true;
      if (k.defined(f, u)) right_unit = true;
    }
    if (!left_unit || !right_unit)
      fail("(c): no unit composes with " + c.morphisms[f]);
  }
  return rep;
}

FiniteAmst category_to_amst(const ObjectFreeCategory& c) {
  const auto rep = validate_object_free_category(c);
  if (!rep.ok) throw Error(ErrorKind::Validation, rep.violations.front());
  const int n = static_cast<int>(c.morphisms.size());
  Compose k{&c};
  std::vector<std::string> models;
  std::vector<std::vector<bool>> table;
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      models.push_back(pair_label(c.morphisms[g], c.morphisms[f]));
      std::vector<bool> row(size_t{1} << n, false);
      if (k.defined(g, f)) row[bit(k.at(g, f))] = true;
      table.push_back(std::move(row));
    }
  return FiniteAmst::general_table(c.morphisms, std::move(models), std::move(table));
}

ObjectFreeCategory amst_to_category(const FiniteAmst& a) {
  const int n = a.sentence_count();
  if (a.model_count() != n * n)
    throw Error(ErrorKind::Argument, "model set is not shaped like M×M");
  const auto& labels = a.sentence_labels();
  auto model_of = [&](int g, int f) { return g * n + f; };

  // (a_M): satisfied sets are singletons
  for (int m = 0; m < a.model_count(); ++m)
    for (Mask g = 0; g <= a.all_sentences(); ++g) {
      if (a.satisfies(m, g) && popcount(g) != 1)
        throw Error(ErrorKind::Validation, "(a_M): " + a.model_labels()[m] +
                                               " satisfies the non-singleton " +
                                               format_set(g, labels));
      if (a.all_sentences() == 0) break;
    }

  // partial operation from unique singleton satisfaction
  std::vector<std::vector<std::optional<int>>> comp(n, std::vector<std::optional<int>>(n));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      std::optional<int> found;
      bool unique = true;
      for (int l = 0; l < n; ++l)
        if (a.satisfies(model_of(g, f), bit(l))) {
          if (found) unique = false;
          found = l;
        }
      if (found && unique) comp[g][f] = found;
    }
  auto defined = [&](int g, int f) { return comp[g][f].has_value(); };

  // (b_M): matching plus associativity read through the satisfaction relation
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g)
      for (int f = 0; f < n; ++f) {
        const bool both = defined(g, f) && defined(h, g);
        const bool left = defined(g, f) && defined(h, *comp[g][f]);
        const bool right = defined(h, g) && defined(*comp[h][g], f);
        if (both != left || both != right)
          throw Error(ErrorKind::Validation, "(b_M): matching fails at (" + labels[h] + "," +
                                                 labels[g] + "," + labels[f] + ")");
        if (both && *comp[h][*comp[g][f]] != *comp[*comp[h][g]][f])
          throw Error(ErrorKind::Validation, "(b_M): no unique shared composite at (" +
                                                 labels[h] + "," + labels[g] + "," + labels[f] +
                                                 ")");
      }

  // (c_M): identities through the satisfaction relation
  auto amst_identity = [&](int u) {
    for (int g = 0; g < n; ++g) {
      for (int l = 0; l < n; ++l) {
        if (a.satisfies(model_of(u, g), bit(l)) && l != g) return false;
        if (a.satisfies(model_of(g, u), bit(l)) && l != g) return false;
      }
    }
    return true;
  };
  for (int f = 0; f < n; ++f) {
    bool left = false, right = false;
    for (int u = 0; u < n; ++u) {
      if (!amst_identity(u)) continue;
      if (a.satisfies(model_of(u, f), bit(f))) left = true;
      if (a.satisfies(model_of(f, u), bit(f))) right = true;
    }
    if (!left || !right)
      throw Error(ErrorKind::Validation, "(c_M): no identity composes with " + labels[f]);
  }

  ObjectFreeCategory out{labels, std::move(comp)};
  const auto rep = validate_object_free_category(out);
  if (!rep.ok)
    throw Error(ErrorKind::Validation,
                "reconstructed category fails validation: " + rep.violations.front());
  return out;
}

}  // namespace amst
