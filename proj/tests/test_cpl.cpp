#include <doctest.h>

#include "amst/consequence.hpp"
#include "amst/compactness.hpp"
#include "amst/cpl.hpp"
#include "amst/generate.hpp"

using namespace amst;
using namespace amst::cpl;

TEST_CASE("parsing: connectives, precedence, associativity") {
  const auto f1 = parse_formula("p & ~q");
  CHECK(f1->kind == Connective::And);
  CHECK(f1->lhs->kind == Connective::Var);
  CHECK(f1->rhs->kind == Connective::Not);
  CHECK(f1->rhs->lhs->name == "q");

  const auto f2 = parse_formula("p -> q -> r");  // right-associative
  CHECK(f2->kind == Connective::Implies);
  CHECK(f2->lhs->name == "p");
  CHECK(f2->rhs->kind == Connective::Implies);

  const auto f3 = parse_formula("p & q | r");  // & binds tighter
  CHECK(f3->kind == Connective::Or);
  CHECK(f3->lhs->kind == Connective::And);
  CHECK(f3->rhs->name == "r");

  const auto f4 = parse_formula("p <-> q -> r");
  CHECK(f4->kind == Connective::Iff);
  CHECK(f4->rhs->kind == Connective::Implies);

  CHECK(parse_formula("( p )")->name == "p");
  CHECK(parse_formula("foo_1 & bar2")->lhs->name == "foo_1");
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_WITH_AS(parse_formula("p &"), doctest::Contains("at byte"), Error);
  CHECK_THROWS_AS(parse_formula("p @ q"), Error);
  CHECK_THROWS_AS(parse_formula("(p"), Error);
  CHECK_THROWS_AS(parse_formula("P"), Error);  // upper case is not an atom
  CHECK_THROWS_AS(parse_formula(""), Error);
}

TEST_CASE("printing round-trips the tree") {
  const char* samples[] = {
      "p", "~p", "~~p", "p & q", "p & q & r", "p | q & r", "(p | q) & r",
      "p -> q -> r", "(p -> q) -> r", "p <-> q <-> r", "~(p & q)", "p & (q | r) -> ~s",
  };
  for (const char* text : samples) {
    const auto f = parse_formula(text);
    CHECK(structurally_equal(parse_formula(print_formula(f)), f));
  }
  // random skeletons round-trip too
  const std::vector<std::string> vars = {"p", "q", "r"};
  int count = 0;
  enumerate_skeletons(vars, 2, [&](const FormulaPtr& f) {
    if (++count % 7 == 0)
      CHECK(structurally_equal(parse_formula(print_formula(f)), f));
  });
  CHECK(count == 151);  // shapes of depth ≤ 2
}

TEST_CASE("evaluation") {
  const std::vector<std::string> vars = {"p", "q"};
  const TruthAssignment v10{vars, 0b01};  // p=1, q=0
  CHECK(evaluate(v10, parse_formula("~p")) == 0);
  CHECK(evaluate(v10, parse_formula("p -> q")) == 0);
  CHECK(evaluate(v10, parse_formula("p | q")) == 1);
  CHECK(evaluate(v10, parse_formula("p <-> q")) == 0);
  CHECK_THROWS_AS(evaluate(v10, parse_formula("z")), Error);
}

TEST_CASE("ultravaluation") {
  const std::vector<std::string> vars = {"p"};
  const std::vector<TruthAssignment> seq = {{vars, 0b1}, {vars, 0b0}};
  CHECK(ultravaluation(seq, principal_ultrafilter(2, 1)).values == 0b0);
  CHECK(ultravaluation(seq, principal_ultrafilter(2, 0)).values == 0b1);
  const std::vector<TruthAssignment> constant = {{vars, 0b1}, {vars, 0b1}, {vars, 0b1}};
  CHECK(ultravaluation(constant, principal_ultrafilter(3, 2)).values == 0b1);
  const std::vector<TruthAssignment> vals = {{vars, 0b1}, {vars, 0b1}, {vars, 0b0}};
  CHECK(ultravaluation(vals, principal_ultrafilter(3, 0)).values == 0b1);
  CHECK_THROWS_AS(ultravaluation(seq, principal_ultrafilter(3, 0)), Error);
}

TEST_CASE("ultravaluation theorem on tautologies and contradictions") {
  const std::vector<std::string> vars = {"p"};
  const auto taut = parse_formula("p | ~p");
  const auto contra = parse_formula("p & ~p");
  const std::vector<TruthAssignment> seq = {{vars, 0b1}, {vars, 0b0}};
  for (int i = 0; i < 2; ++i) {
    const SetFamily u = principal_ultrafilter(2, i);
    CHECK(ultravaluation_theorem_check(seq, u, taut));
    CHECK(ultravaluation_theorem_check(seq, u, contra));
    CHECK(evaluate(ultravaluation(seq, u), taut) == 1);
    CHECK(evaluate(ultravaluation(seq, u), contra) == 0);
  }
}

TEST_CASE("ultravaluation theorem, exhaustive micro-grid") {
  const std::vector<std::string> vars = {"p", "q"};
  std::vector<FormulaPtr> formulas;
  enumerate_skeletons(vars, 1, [&](const FormulaPtr& f) { formulas.push_back(f); });
  for (int index_size = 1; index_size <= 2; ++index_size) {
    const auto ultras = enumerate_ultrafilters(index_size);
    const int assignments = 1 << vars.size();
    std::vector<int> pick(index_size, 0);
    while (true) {
      std::vector<TruthAssignment> seq;
      for (int p : pick) seq.push_back({vars, static_cast<Mask>(p)});
      for (const auto& u : ultras)
        for (const auto& f : formulas) CHECK(ultravaluation_theorem_check(seq, u, f));
      int k = 0;
      while (k < index_size) {
        if (++pick[k] < assignments) break;
        pick[k] = 0;
        ++k;
      }
      if (k == index_size) break;
    }
  }
}

TEST_CASE("valuation amst") {
  const std::vector<std::string> vars = {"p"};
  const FiniteAmst a = valuation_amst(vars, {parse_formula("p")});
  CHECK(a.model_count() == 2);
  CHECK(a.mod_of(0b1) == 0b10);  // only the p=1 assignment
  CHECK(is_normal(a).normal);

  const FiniteAmst with_taut =
      valuation_amst({"p"}, {parse_formula("p"), parse_formula("p | ~p")});
  CHECK(with_taut.mod_of(0b10) == with_taut.all_models());

  const FiniteAmst with_contra =
      valuation_amst({"p"}, {parse_formula("p"), parse_formula("p & ~p")});
  CHECK_FALSE(
      is_finitely_satisfiable(with_contra, with_contra.all_sentences()).finitely_satisfiable);
  CHECK(characterization_report(with_contra).hypothesis_ok);

  CHECK(is_tarski_type(induced_consequence(with_contra)).all());
}

TEST_CASE("variable caps") {
  std::vector<std::string> many;
  for (int i = 0; i < 11; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(valuation_amst(many, {}), Error);
}
