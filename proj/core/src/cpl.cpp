#include "amst/cpl.hpp"

#include <algorithm>
#include <cctype>

#include "amst/error.hpp"

namespace amst::cpl {

FormulaPtr Formula::var(std::string name) {
  return std::make_shared<Formula>(Formula{Connective::Var, std::move(name), nullptr, nullptr});
}
FormulaPtr Formula::negation(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{Connective::Not, "", std::move(f), nullptr});
}
FormulaPtr Formula::conjunction(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Connective::And, "", std::move(l), std::move(r)});
}
FormulaPtr Formula::disjunction(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Connective::Or, "", std::move(l), std::move(r)});
}
FormulaPtr Formula::implication(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Connective::Implies, "", std::move(l), std::move(r)});
}
FormulaPtr Formula::equivalence(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Connective::Iff, "", std::move(l), std::move(r)});
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  if (a->kind == Connective::Var) return a->name == b->name;
  if (a->kind == Connective::Not) return structurally_equal(a->lhs, b->lhs);
  return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorKind::Parse, what + " at byte " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text.substr(pos, tok.size()) == tok) {
      // '-' must not swallow the prefix of '->' when matching single chars
      pos += tok.size();
      return true;
    }
    return false;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text.substr(pos, tok.size()) == tok;
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_implies();
    if (eat("<->")) return Formula::equivalence(std::move(lhs), parse_iff());
    return lhs;
  }

  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    skip_ws();
    if (peek("->")) {
      eat("->");
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (true) {
      skip_ws();
      if (peek("->") || peek("<->")) break;
      if (!eat("|")) break;
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (eat("&")) lhs = Formula::conjunction(std::move(lhs), parse_unary());
    return lhs;
  }

  FormulaPtr parse_unary() {
    if (eat("~")) return Formula::negation(parse_unary());
    if (eat("(")) {
      FormulaPtr inner = parse_iff();
      if (!eat(")")) fail("missing ')'");
      return inner;
    }
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c >= 'a' && c <= 'z') {
      const size_t start = pos;
      while (pos < text.size() &&
             ((text[pos] >= 'a' && text[pos] <= 'z') ||
              (text[pos] >= '0' && text[pos] <= '9') || text[pos] == '_'))
        ++pos;
      return Formula::var(std::string(text.substr(start, pos - start)));
    }
    fail(std::string("unknown token '") + c + "'");
  }
};

int precedence_of(Connective k) {
  switch (k) {
    case Connective::Iff: return 0;
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Not: return 4;
    case Connective::Var: return 5;
  }
  return 5;
}

void print_rec(const FormulaPtr& f, int parent_prec, bool right_side, std::string& out) {
  const int prec = precedence_of(f->kind);
  switch (f->kind) {
    case Connective::Var:
      out += f->name;
      return;
    case Connective::Not:
      out += "~";
      print_rec(f->lhs, prec, false, out);
      return;
    default:
      break;
  }
  const char* op = f->kind == Connective::And   ? " & "
                   : f->kind == Connective::Or  ? " | "
                   : f->kind == Connective::Implies ? " -> "
                                                    : " <-> ";
  // `&` and `|` associate to the left, `->` and `<->` to the right.
  const bool right_assoc = f->kind == Connective::Implies || f->kind == Connective::Iff;
  const bool need_parens =
      prec < parent_prec || (prec == parent_prec && right_side != right_assoc);
  if (need_parens) out += "(";
  print_rec(f->lhs, right_assoc ? prec + 1 : prec, false, out);
  out += op;
  print_rec(f->rhs, right_assoc ? prec : prec + 1, true, out);
  if (need_parens) out += ")";
}

void collect_vars(const FormulaPtr& f, std::vector<std::string>& out) {
  if (f->kind == Connective::Var) {
    if (std::find(out.begin(), out.end(), f->name) == out.end()) out.push_back(f->name);
    return;
  }
  if (f->lhs) collect_vars(f->lhs, out);
  if (f->rhs) collect_vars(f->rhs, out);
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  Parser p{text};
  FormulaPtr f = p.parse_iff();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, 0, false, out);
  return out;
}

std::vector<std::string> variables_of(const FormulaPtr& f) {
  std::vector<std::string> out;
  collect_vars(f, out);
  return out;
}

int TruthAssignment::value_of(const std::string& name) const {
  for (size_t j = 0; j < variables.size(); ++j)
    if (variables[j] == name) return contains(values, static_cast<int>(j)) ? 1 : 0;
  throw Error(ErrorKind::Argument, "undeclared variable '" + name + "'");
}

int evaluate(const TruthAssignment& v, const FormulaPtr& f) {
  switch (f->kind) {
    case Connective::Var: return v.value_of(f->name);
    case Connective::Not: return 1 - evaluate(v, f->lhs);
    case Connective::And: return evaluate(v, f->lhs) & evaluate(v, f->rhs);
    case Connective::Or: return evaluate(v, f->lhs) | evaluate(v, f->rhs);
    case Connective::Implies: return (1 - evaluate(v, f->lhs)) | evaluate(v, f->rhs);
    case Connective::Iff: return evaluate(v, f->lhs) == evaluate(v, f->rhs) ? 1 : 0;
  }
  throw std::logic_error("unreachable connective");
}

TruthAssignment ultravaluation(const std::vector<TruthAssignment>& seq, const SetFamily& u) {
  if (seq.empty() || static_cast<int>(seq.size()) != u.index_size())
    throw Error(ErrorKind::Argument, "sequence length must equal the ultrafilter index size");
  for (const auto& v : seq)
    if (v.variables != seq.front().variables)
      throw Error(ErrorKind::Argument, "assignments must share one variable list");
  TruthAssignment out{seq.front().variables, 0};
  for (size_t j = 0; j < out.variables.size(); ++j) {
    Mask ones = 0;
    for (size_t i = 0; i < seq.size(); ++i)
      if (contains(seq[i].values, static_cast<int>(j))) ones |= bit(static_cast<int>(i));
    if (u.contains(ones)) out.values |= bit(static_cast<int>(j));
  }
  return out;
}

bool ultravaluation_theorem_check(const std::vector<TruthAssignment>& seq, const SetFamily& u,
                                  const FormulaPtr& f) {
  const TruthAssignment mu = ultravaluation(seq, u);
  Mask agreeing = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    if (evaluate(seq[i], f) == 1) agreeing |= bit(static_cast<int>(i));
  return (evaluate(mu, f) == 1) == u.contains(agreeing);
}

FiniteAmst valuation_amst(const std::vector<std::string>& variables,
                          const std::vector<FormulaPtr>& formulas) {
  if (variables.size() > 10)
    throw Error(ErrorKind::Capacity, "at most 10 variables supported");
  if (formulas.size() > kMaxGround)
    throw Error(ErrorKind::Capacity, "too many formulas for one amst");
  const int n_assign = 1 << variables.size();
  std::vector<std::string> model_labels;
  std::vector<Mask> rows;
  for (int vbits = 0; vbits < n_assign; ++vbits) {
    TruthAssignment v{variables, static_cast<Mask>(vbits)};
    Mask row = 0;
    for (size_t k = 0; k < formulas.size(); ++k)
      if (evaluate(v, formulas[k]) == 1) row |= bit(static_cast<int>(k));
    rows.push_back(row);
    Mask true_vars = 0;
    for (size_t j = 0; j < variables.size(); ++j)
      if ((vbits >> j) & 1) true_vars |= bit(static_cast<int>(j));
    model_labels.push_back("v" + format_set(true_vars, variables));
  }
  std::vector<std::string> sentence_labels;
  sentence_labels.reserve(formulas.size());
  for (const auto& f : formulas) sentence_labels.push_back(print_formula(f));
  return FiniteAmst::normal_matrix(std::move(sentence_labels), std::move(model_labels),
                                   std::move(rows));
}

namespace {

// Builds every shape of depth ≤ depth; the leaf counter threads through so
// leaves pick variables cyclically in left-to-right order.
void shapes(const std::vector<std::string>& variables, int depth, int leaf_counter,
            const std::function<void(const FormulaPtr&, int)>& fn) {
  fn(Formula::var(variables[leaf_counter % variables.size()]), leaf_counter + 1);
  if (depth == 0) return;
  shapes(variables, depth - 1, leaf_counter, [&](const FormulaPtr& inner, int after) {
    fn(Formula::negation(inner), after);
  });
  const Connective binaries[] = {Connective::And, Connective::Or, Connective::Implies,
                                 Connective::Iff};
  for (Connective op : binaries) {
    shapes(variables, depth - 1, leaf_counter, [&](const FormulaPtr& left, int mid) {
      shapes(variables, depth - 1, mid, [&](const FormulaPtr& right, int after) {
        switch (op) {
          case Connective::And: fn(Formula::conjunction(left, right), after); break;
          case Connective::Or: fn(Formula::disjunction(left, right), after); break;
          case Connective::Implies: fn(Formula::implication(left, right), after); break;
          default: fn(Formula::equivalence(left, right), after); break;
        }
      });
    });
  }
}

}  // namespace

void enumerate_skeletons(const std::vector<std::string>& variables, int max_depth,
                         const std::function<void(const FormulaPtr&)>& fn) {
  if (variables.empty()) throw Error(ErrorKind::Argument, "need at least one variable");
  shapes(variables, max_depth, 0, [&](const FormulaPtr& f, int) { fn(f); });
}

}  // namespace amst::cpl
