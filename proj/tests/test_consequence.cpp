#include <doctest.h>

#include "amst/consequence.hpp"
#include "amst/generate.hpp"
#include "fixtures.hpp"

using namespace amst;

TEST_CASE("closure rows") {
  const LogicalStructure t0 = fixtures::t0();
  CHECK(t0.closure(0b01) == 0b01);
  CHECK(t0.closure(0b11) == 0b11);
  CHECK(t0.closure(0) == 0);
}

TEST_CASE("tarski conditions on T0") {
  const auto rep = is_tarski_type(fixtures::t0());
  CHECK(rep.reflexive.holds);
  CHECK(rep.monotonic.holds);
  CHECK(rep.transitive.holds);
}

TEST_CASE("reflexivity violation carries a witness") {
  // {p} does not entail p
  const LogicalStructure bad({"p"}, {0b0, 0b0});
  const auto rep = is_tarski_type(bad);
  CHECK_FALSE(rep.reflexive.holds);
  CHECK_FALSE(rep.reflexive.witness.empty());
}

TEST_CASE("induced consequence of the worked instances") {
  const LogicalStructure c2 = induced_consequence(fixtures::a2());
  CHECK(c2.turnstile(0b01, 0));       // {a} ⊢ a
  CHECK_FALSE(c2.turnstile(0b01, 1)); // {a} ⊬ b
  CHECK(c2.turnstile(0b11, 0));       // Mod({a,b}) empty entails anything
  CHECK(c2.turnstile(0b11, 1));
  const LogicalStructure c1 = induced_consequence(fixtures::a1());
  CHECK_FALSE(c1.turnstile(0, 0));    // Mod(∅)=M ⊄ Mod({a})
}

TEST_CASE("induced consequence of a normal amst is Tarski-type") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    GenParams p;
    p.seed = seed;
    p.density = 0.15 + 0.7 * ((seed % 5) / 4.0);
    CHECK(is_tarski_type(induced_consequence(random_amst(p))).all());
  }
}

TEST_CASE("trivial and closed sets in T0") {
  const LogicalStructure t0 = fixtures::t0();
  CHECK(is_trivial_set(t0, 0b11));
  CHECK_FALSE(is_trivial_set(t0, 0b01));
  CHECK(is_closed_set(t0, 0b01));
  CHECK(is_closed_set(t0, 0));
}

TEST_CASE("finitary checks") {
  const LogicalStructure t0 = fixtures::t0();
  CHECK(is_finitary(t0).finitary);
  // diagnostic: {p,q} ⊢ p has the proper witness {p}
  CHECK(entailing_subset(t0, 0b11, 0, true) == Mask{0b01});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenParams p;
    p.seed = seed;
    CHECK(is_finitary(random_tarski(p)).finitary);
  }
}

TEST_CASE("closure operator laws match is_tarski_type on random tables") {
  Rng rng(99);
  const std::vector<std::string> names = {"x", "y", "z"};
  for (int round = 0; round < 200; ++round) {
    const int l = 1 + static_cast<int>(rng.below(3));
    std::vector<Mask> rows(size_t{1} << l);
    for (auto& r : rows) r = static_cast<Mask>(rng.next()) & full_mask(l);
    const LogicalStructure ls(std::vector<std::string>(names.begin(), names.begin() + l), rows);
    const auto rep = is_tarski_type(ls);
    // operator formulation computed directly
    bool extensive = true, monotone = true, idempotent_trans = true;
    for (Mask g = 0; g <= ls.all_sentences(); ++g) {
      if (!is_subset(g, ls.closure(g))) extensive = false;
      for (int s = 0; s < l; ++s)
        if (!contains(g, s) && !is_subset(ls.closure(g), ls.closure(g | bit(s))))
          monotone = false;
      for (Mask sig = 0; sig <= ls.all_sentences(); ++sig)
        if (is_subset(sig, ls.closure(g)) && !is_subset(ls.closure(sig), ls.closure(g)))
          idempotent_trans = false;
    }
    CHECK(rep.reflexive.holds == extensive);
    CHECK(rep.transitive.holds == idempotent_trans);
    if (extensive) CHECK(rep.monotonic.holds == monotone);
  }
}

TEST_CASE("canonical normal amst of T0") {
  const FiniteAmst b = canonical_normal_amst(fixtures::t0());
  CHECK(b.model_count() == 3);  // χ∅, χ{p}, χ{q}
  CHECK(b.matrix_row(0) == 0b00);
  CHECK(b.matrix_row(1) == 0b01);
  CHECK(b.matrix_row(2) == 0b10);
  CHECK_FALSE(is_satisfiable(b, b.all_sentences()).has_value());
  CHECK(induced_consequence(b) == fixtures::t0());
}

TEST_CASE("canonical construction rejects bad input") {
  // non-Tarski
  const LogicalStructure bad({"p"}, {0b0, 0b0});
  CHECK_THROWS_AS(canonical_normal_amst(bad), Error);
  // everything trivial: no models
  const LogicalStructure all_trivial({"p"}, {0b1, 0b1});
  CHECK_THROWS_AS(canonical_normal_amst(all_trivial), Error);
}

TEST_CASE("representation round trip on random Tarski structures") {
  int built = 0;
  for (std::uint64_t seed = 0; built < 100 && seed < 400; ++seed) {
    GenParams p;
    p.seed = seed;
    p.max_sentences = 5;
    p.max_models = 5;
    p.density = 0.15 + 0.7 * ((seed % 5) / 4.0);
    const LogicalStructure ls = random_tarski(p);
    bool has_nontrivial = false;
    for (Mask g = 0; g <= ls.all_sentences(); ++g)
      if (!is_trivial_set(ls, g)) has_nontrivial = true;
    if (!has_nontrivial) continue;
    ++built;
    const FiniteAmst b = canonical_normal_amst(ls);
    CHECK(induced_consequence(b) == ls);
    CHECK_FALSE(is_satisfiable(b, b.all_sentences()).has_value());
  }
  CHECK(built == 100);
}

TEST_CASE("finitary-trivial theorem") {
  CHECK(check_finitary_trivial_theorem(fixtures::t0()).status == Status::Verified);
  CHECK(check_finitary_trivial_theorem(induced_consequence(fixtures::a2())).status ==
        Status::Verified);
  // no trivial set at all: closures never reach L
  const LogicalStructure no_trivial({"p"}, {0b0, 0b0});
  CHECK(check_finitary_trivial_theorem(no_trivial).status == Status::Vacuous);
}
