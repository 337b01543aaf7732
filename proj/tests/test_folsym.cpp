#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "permstat/errors.hpp"
#include "permstat/folsym/model.hpp"
#include "permstat/folsym/parser.hpp"
#include "permstat/folsym/symmetrize.hpp"

using namespace permstat;
using namespace permstat::folsym;

namespace {

const std::string kExactlyTwo = "exists x. exists y. (~(x = y) & forall z. (z = x | z = y))";
const std::string kExactlyThree =
    "exists x. exists y. exists z. (x != y & x != z & y != z & "
    "forall w. (w = x | w = y | w = z))";

Signature empty_sig;

FormulaPtr parse1(const std::string& text, const Signature& sig = empty_sig) {
  return parse(text, sig).formula;
}

Term var(const char* v) { return Term::variable(v); }

unsigned count_disjuncts(const FormulaPtr& f) {
  if (f->kind != Formula::Kind::Or) return 1;
  return count_disjuncts(f->left) + count_disjuncts(f->right);
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
  FormulaPtr two = parse1(kExactlyTwo);
  FormulaPtr expected = exists(
      "x", exists("y", land(lnot(equal(var("x"), var("y"))),
                            forall("z", lor(equal(var("z"), var("x")),
                                            equal(var("z"), var("y")))))));
  CHECK(ast_equal(two, expected));
  CHECK(is_closed(two));

  Signature sig;
  sig.add("F", 2);
  FormulaPtr f = parse1("exists x1. exists x2. F(x1, x2)", sig);
  CHECK(ast_equal(f, exists("x1", exists("x2", pred("F", {var("x1"), var("x2")})))));

  // != is sugar for a negated equality
  CHECK(ast_equal(parse1("forall x. forall y. x != y"),
                  forall("x", forall("y", lnot(equal(var("x"), var("y")))))));
}

TEST_CASE("parser precedence and associativity") {
  Signature sig;
  sig.add("P", 0);
  sig.add("Q", 0);
  sig.add("R", 0);
  FormulaPtr p = pred("P", {}), q = pred("Q", {}), r = pred("R", {});

  CHECK(ast_equal(parse1("P & Q | R", sig), lor(land(p, q), r)));
  CHECK(ast_equal(parse1("P | Q & R", sig), lor(p, land(q, r))));
  CHECK(ast_equal(parse1("~P & Q", sig), land(lnot(p), q)));
  CHECK(ast_equal(parse1("P -> Q -> R", sig), implies(p, implies(q, r))));
  CHECK(ast_equal(parse1("P -> Q <-> R", sig), iff(implies(p, q), r)));
  CHECK(ast_equal(parse1("P & (Q | R)", sig), land(p, lor(q, r))));
}

TEST_CASE("parse errors carry offsets") {
  Signature sig;
  sig.add("F", 1);

  try {
    parse("forall x. F(x,", sig);
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 14);
  }

  CHECK_THROWS_AS(parse("forall x. Q(x)", sig), ParseError);   // unknown predicate
  CHECK_THROWS_AS(parse("forall x. F(x, x)", sig), ParseError);  // arity mismatch
  CHECK_THROWS_AS(parse("forall x. F(x) &", sig), ParseError);
  CHECK_THROWS_AS(parse("forall x. x", sig), ParseError);
  CHECK_THROWS_AS(parse("(forall x. F(x)", sig), ParseError);
}

TEST_CASE("signature declarations") {
  Signature sig = parse_signature("F/2, P/1, Zero/0");
  REQUIRE(sig.predicates.size() == 3);
  CHECK(*sig.arity_of("F") == 2);
  CHECK(*sig.arity_of("P") == 1);
  CHECK(*sig.arity_of("Zero") == 0);
  CHECK(sig.arity_of("G") == nullptr);
  CHECK(parse_signature("").predicates.empty());
  CHECK_THROWS_AS(parse_signature("F/2, F/1"), ParseError);
  CHECK_THROWS_AS(parse_signature("f/2"), ParseError);

  ParsedDocument doc = parse_document("sig F/1\nforall x. F(x)");
  CHECK(*doc.signature.arity_of("F") == 1);
  CHECK(doc.result.closed());
}

TEST_CASE("printing round-trips through the parser") {
  Signature sig;
  sig.add("F", 2);
  sig.add("P", 1);
  std::vector<std::string> corpus = {
      kExactlyTwo,
      kExactlyThree,
      "forall x. (P(x) -> exists y. F(x, y))",
      "~(exists x. P(x)) <-> forall x. ~P(x)",
      "forall x. forall y. (F(x, y) | ~F(y, x) -> x = y)",
      "(forall x. P(x)) & (exists y. ~P(y))",
  };
  for (const std::string& text : corpus) {
    FormulaPtr f = parse1(text, sig);
    FormulaPtr reparsed = parse1(to_string(f), sig);
    CHECK(ast_equal(f, reparsed));
  }
}

TEST_CASE("evaluation implements Tarskian satisfaction") {
  FiniteModel one(empty_sig, 1);
  CHECK(evaluate(one, parse1("forall x. x = x")));

  Signature sig;
  sig.add("F", 2);
  FiniteModel m(sig, 2);
  m.set_tuple("F", {0, 1});
  CHECK(evaluate(m, parse1("exists x. exists y. F(x, y)", sig)));
  CHECK_FALSE(evaluate(m, parse1("forall x. exists y. F(x, y)", sig)));
  CHECK(evaluate(m, parse1("exists x. forall y. (F(x, y) -> ~(y = x))", sig)));

  // free variables need an environment
  FormulaPtr open_formula = pred("F", {var("x"), var("y")});
  CHECK_THROWS_AS(evaluate(m, open_formula), std::invalid_argument);
  CHECK(evaluate(m, open_formula, {{"x", 0u}, {"y", 1u}}));
  CHECK_FALSE(evaluate(m, open_formula, {{"x", 1u}, {"y", 0u}}));

  // names evaluate through the model's assignment
  FormulaPtr named = equal(Term::name("a1"), Term::variable("x"));
  CHECK_THROWS_AS(evaluate(m, named, {{"x", 0u}}), std::invalid_argument);
  m.assign_name("a1", 0);
  CHECK(evaluate(m, named, {{"x", 0u}}));
  CHECK_FALSE(evaluate(m, named, {{"x", 1u}}));
}

TEST_CASE("sentences without names ignore the name assignment") {
  FormulaPtr two = parse1(kExactlyTwo);
  Signature sig;
  sig.add("P", 1);
  for (unsigned a1 = 0; a1 < 2; ++a1) {
    for (unsigned a2 = 0; a2 < 2; ++a2) {
      FiniteModel m(sig, 2);
      m.set_tuple("P", {1});
      m.assign_name("a1", a1);
      m.assign_name("a2", a2);
      CHECK(evaluate(m, two));
      CHECK(evaluate(m, parse1("exists x. P(x)", sig)));
    }
  }
}

TEST_CASE("model enumeration is exhaustive and deterministic") {
  unsigned long n = 0;
  ModelStream empties(empty_sig, 3);
  while (empties.next()) ++n;
  CHECK(n == 1);

  Signature unary;
  unary.add("P", 1);
  ModelStream unaries(unary, 2);
  CHECK(unaries.total() == ExactInt(4));
  std::vector<std::size_t> sizes;
  while (auto m = unaries.next()) sizes.push_back(m->tuples_of("P").size());
  CHECK(sizes == std::vector<std::size_t>{0, 1, 1, 2});

  Signature binary;
  binary.add("F", 2);
  ModelStream binaries(binary, 2);
  CHECK(binaries.total() == ExactInt(16));
  n = 0;
  while (binaries.next()) ++n;
  CHECK(n == 16);
}

TEST_CASE("model enumeration guard reports the exact count") {
  Signature binary;
  binary.add("F", 2);
  try {
    ModelStream stream(binary, 5);  // 2^25 interpretations
    FAIL("guard did not trigger");
  } catch (const SizeError& e) {
    CHECK(e.count() == "33554432");
  }
}

TEST_CASE("prenex normal form shapes") {
  Signature sig;
  sig.add("F", 1);
  sig.add("G", 1);

  CHECK(ast_equal(prenex(parse1("forall x. F(x)", sig)),
                  forall("x1", pred("F", {var("x1")}))));

  CHECK(ast_equal(prenex(parse1("~exists x. F(x)", sig)),
                  forall("x1", lnot(pred("F", {var("x1")})))));

  CHECK(ast_equal(prenex(parse1("(exists x. F(x)) & (exists x. G(x))", sig)),
                  exists("x1", exists("x2", land(pred("F", {var("x1")}),
                                                 pred("G", {var("x2")}))))));

  PrenexFormula pf = prenex_decompose(parse1(kExactlyTwo));
  REQUIRE(pf.prefix.size() == 3);
  CHECK_FALSE(pf.prefix[0].universal);
  CHECK_FALSE(pf.prefix[1].universal);
  CHECK(pf.prefix[2].universal);
  CHECK(pf.prefix[0].variable == "x1");
  CHECK(pf.prefix[2].variable == "x3");

  CHECK_THROWS_AS(prenex(pred("F", {var("x")})), std::invalid_argument);  // not closed

  // shadowed binders get distinct fresh names
  CHECK(ast_equal(prenex(parse1("forall x. (F(x) & exists x. G(x))", sig)),
                  forall("x1", exists("x2", land(pred("F", {var("x1")}),
                                                 pred("G", {var("x2")}))))));
}

TEST_CASE("prenex preserves meaning on every small model") {
  Signature sig;
  sig.add("F", 2);
  sig.add("P", 1);
  std::vector<std::string> corpus = {
      kExactlyTwo,
      "~(exists x. P(x))",
      "(exists x. P(x)) & (exists x. ~P(x))",
      "forall x. (P(x) -> exists y. F(x, y))",
      "(forall x. P(x)) <-> ~(exists y. ~P(y))",
      "~forall x. exists y. (F(x, y) <-> ~F(y, x))",
      "(exists x. P(x)) -> forall y. exists z. F(y, z)",
  };
  for (const std::string& text : corpus) {
    FormulaPtr f = parse1(text, sig);
    auto verdict = check_equivalence(sig, f, prenex(f), 3);
    CHECK(verdict.equivalent);
  }
}

TEST_CASE("existential symmetrization") {
  Signature sig;
  sig.add("F", 2);
  FormulaPtr matrix = pred("F", {var("x1"), var("x2")});
  FormulaPtr sym = symmetrize_existential(matrix, 2);
  CHECK(ast_equal(sym, lor(pred("F", {var("x1"), var("x2")}),
                           pred("F", {var("x2"), var("x1")}))));

  Signature sig3;
  sig3.add("G", 3);
  FormulaPtr sym3 = symmetrize_existential(
      pred("G", {var("x1"), var("x2"), var("x3")}), 3);
  CHECK(count_disjuncts(sym3) == 6);

  // the output is totally symmetric even though F itself is not
  CHECK(check_total_symmetry(sig, sym, 2, 3).symmetric);
  CHECK(check_total_symmetry(sig3, sym3, 3, 2).symmetric);

  // already-symmetric matrix: disjuncts are pairwise equivalent
  FormulaPtr eq_matrix = equal(var("x1"), var("x2"));
  FormulaPtr eq_sym = symmetrize_existential(eq_matrix, 2);
  CHECK(count_disjuncts(eq_sym) == 2);
  CHECK(check_total_symmetry(empty_sig, eq_sym, 2, 4).symmetric);

  CHECK_THROWS_AS(symmetrize_existential(matrix, 3), std::invalid_argument);
  CHECK_THROWS_AS(symmetrize_existential(matrix, 0), std::invalid_argument);
}

TEST_CASE("permuting variables avoids capture by inner binders") {
  Signature sig;
  sig.add("F", 2);
  // x1 occurs both free and bound; a naive x2 -> x1 swap would be captured
  FormulaPtr matrix = parse("(exists x1. F(x1, x2)) & F(x1, x1)", sig).formula;
  REQUIRE(free_variables(matrix) == std::set<std::string>{"x1", "x2"});
  FormulaPtr sym = symmetrize_existential(matrix, 2);
  CHECK(check_total_symmetry(sig, sym, 2, 3).symmetric);

  // spot check the swapped disjunct on a model where capture would flip it
  FiniteModel m(sig, 2);
  m.set_tuple("F", {0, 0});
  m.set_tuple("F", {1, 0});
  CHECK_FALSE(evaluate(m, sym, {{"x1", 0u}, {"x2", 1u}}));
  CHECK_FALSE(evaluate(m, sym, {{"x1", 1u}, {"x2", 0u}}));
}

TEST_CASE("cardinality sentence") {
  FormulaPtr a1 = build_a(1);
  CHECK(ast_equal(a1, forall("x", equal(var("x"), Term::name("a1")))));

  FormulaPtr a2 = build_a(2);
  CHECK(ast_equal(
      a2, land(lnot(equal(Term::name("a1"), Term::name("a2"))),
               forall("x", lor(equal(var("x"), Term::name("a1")),
                               equal(var("x"), Term::name("a2")))))));

  // n=3: three disequalities and a three-way totality clause, true exactly
  // when the names are distinct and cover the universe
  FormulaPtr a3 = build_a(3);
  FiniteModel m(empty_sig, 3);
  m.assign_name("a1", 0);
  m.assign_name("a2", 1);
  m.assign_name("a3", 2);
  CHECK(evaluate(m, a3));
  m.assign_name("a3", 1);  // collision
  CHECK_FALSE(evaluate(m, a3));

  FiniteModel big(empty_sig, 4);
  big.assign_name("a1", 0);
  big.assign_name("a2", 1);
  big.assign_name("a3", 2);
  CHECK_FALSE(evaluate(big, a3));  // element 3 uncovered
}

TEST_CASE("equivalence checking finds the first counterexample") {
  Signature sig;
  sig.add("F", 1);
  FormulaPtr ex = parse1("exists x. F(x)", sig);
  FormulaPtr all = parse1("forall x. F(x)", sig);

  CHECK(check_equivalence(sig, ex, ex, 3).equivalent);

  auto verdict = check_equivalence(sig, ex, all, 2);
  REQUIRE_FALSE(verdict.equivalent);
  REQUIRE(verdict.counterexample.has_value());
  CHECK(verdict.counterexample->universe_size() == 2);
  CHECK(verdict.counterexample->tuples_of("F") ==
        std::vector<std::vector<unsigned>>{{0}});

  CHECK_THROWS_AS(check_equivalence(sig, pred("F", {var("x")}), ex, 2),
                  std::invalid_argument);
}

TEST_CASE("total symmetry checking") {
  CHECK(check_total_symmetry(empty_sig, equal(var("x1"), var("x2")), 2, 4).symmetric);

  Signature sig;
  sig.add("F", 2);
  auto verdict = check_total_symmetry(sig, pred("F", {var("x1"), var("x2")}), 2, 3);
  REQUIRE_FALSE(verdict.symmetric);
  REQUIRE(verdict.model.has_value());
  CHECK(verdict.model->universe_size() == 2);
  CHECK(verdict.model->tuples_of("F") == std::vector<std::vector<unsigned>>{{0, 1}});

  CHECK_THROWS_AS(check_total_symmetry(sig, pred("F", {var("y1"), var("y2")}), 2, 3),
                  std::invalid_argument);
}

TEST_CASE("satisfiable cardinalities") {
  CHECK(satisfiable_cardinalities(empty_sig, parse1(kExactlyTwo), 4) ==
        std::set<unsigned>{2});
  CHECK(satisfiable_cardinalities(empty_sig, parse1("forall x. x = x"), 4) ==
        std::set<unsigned>{1, 2, 3, 4});
  CHECK(satisfiable_cardinalities(empty_sig, parse1("exists x. x != x"), 4).empty());
}

TEST_CASE("symmetrization of the exactly-two sentence") {
  FormulaPtr t = parse1(kExactlyTwo);
  SymmetrizeResult result = symmetrize(t, 2);

  CHECK(free_variables(result.g) == std::set<std::string>{"x1", "x2"});
  CHECK(is_closed(result.t_s));
  CHECK_FALSE(contains_names(result.t_s));
  CHECK(contains_names(result.grounded));

  CHECK(check_total_symmetry(empty_sig, result.g, 2, 4).symmetric);
  CHECK(check_equivalence(empty_sig, t, result.t_s, 4).equivalent);
  CHECK(satisfiable_cardinalities(empty_sig, result.t_s, 4) == std::set<unsigned>{2});
}

TEST_CASE("symmetrization with a binary predicate") {
  Signature sig;
  sig.add("F", 2);
  FormulaPtr t = parse1("(forall x. forall y. F(x, y)) & " + kExactlyTwo, sig);
  REQUIRE(satisfiable_cardinalities(sig, t, 3) == std::set<unsigned>{2});

  SymmetrizeResult result = symmetrize(t, 2);
  CHECK(check_total_symmetry(sig, result.g, 2, 3).symmetric);
  CHECK(check_equivalence(sig, t, result.t_s, 3).equivalent);
  CHECK(satisfiable_cardinalities(sig, result.t_s, 3) == std::set<unsigned>{2});
}

TEST_CASE("symmetrization at cardinality one") {
  FormulaPtr t = parse1("forall x. forall y. x = y");
  REQUIRE(satisfiable_cardinalities(empty_sig, t, 4) == std::set<unsigned>{1});

  SymmetrizeResult result = symmetrize(t, 1);
  CHECK(free_variables(result.g) == std::set<std::string>{"x1"});
  CHECK(result.t_s->kind == Formula::Kind::Exists);
  CHECK(check_equivalence(empty_sig, t, result.t_s, 4).equivalent);
  CHECK(check_total_symmetry(empty_sig, result.g, 1, 4).symmetric);

  CHECK_THROWS_AS(symmetrize(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(symmetrize(pred("F", {var("x")}), 1), std::invalid_argument);
  CHECK_THROWS_AS(symmetrize(build_a(2), 2), std::invalid_argument);  // contains names
}

TEST_CASE("symmetrized sentences stay pinned to their cardinality") {
  struct Case {
    std::string text;
    unsigned n;
  };
  Signature sig;
  sig.add("P", 1);
  std::vector<Case> cases = {
      {"forall x. forall y. x = y", 1},
      {kExactlyTwo, 2},
      {kExactlyTwo + " & exists x. (P(x) & forall y. (P(y) -> y = x))", 2},
      {kExactlyThree, 3},
  };
  for (const Case& c : cases) {
    FormulaPtr t = parse1(c.text, sig);
    REQUIRE(satisfiable_cardinalities(sig, t, 4) == std::set<unsigned>{c.n});
    SymmetrizeResult result = symmetrize(t, c.n);
    CHECK(check_equivalence(sig, t, result.t_s, 4).equivalent);
    CHECK(check_total_symmetry(sig, result.g, c.n, 3).symmetric);
    CHECK(satisfiable_cardinalities(sig, result.t_s, 4) == std::set<unsigned>{c.n});
  }
}
