#include "permstat/folsym/symmetrize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace permstat::folsym {

FormulaPtr PrenexFormula::formula() const {
  FormulaPtr f = matrix;
  for (std::size_t i = prefix.size(); i-- > 0;) {
    f = prefix[i].universal ? forall(prefix[i].variable, std::move(f))
                            : exists(prefix[i].variable, std::move(f));
  }
  return f;
}

namespace {

// a <-> b and a -> b rewritten into &, |, ~ (bottom-up, so the iff
// expansion's fresh -> nodes are expanded too).
FormulaPtr eliminate_arrows(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equal:
      return f;
    case Formula::Kind::Not:
      return lnot(eliminate_arrows(f->left));
    case Formula::Kind::And:
      return land(eliminate_arrows(f->left), eliminate_arrows(f->right));
    case Formula::Kind::Or:
      return lor(eliminate_arrows(f->left), eliminate_arrows(f->right));
    case Formula::Kind::Implies:
      return lor(lnot(eliminate_arrows(f->left)), eliminate_arrows(f->right));
    case Formula::Kind::Iff: {
      FormulaPtr a = eliminate_arrows(f->left);
      FormulaPtr b = eliminate_arrows(f->right);
      return land(lor(lnot(a), b), lor(lnot(b), a));
    }
    case Formula::Kind::Forall:
      return forall(f->label, eliminate_arrows(f->left));
    case Formula::Kind::Exists:
      return exists(f->label, eliminate_arrows(f->left));
  }
  throw std::logic_error("unreachable");
}

// Renames every bound variable to x1, x2, .. in pre-order. The input is
// closed, so every variable occurrence is resolved through the
// environment; distinct quantifiers get distinct fresh names, which makes
// later quantifier pulling capture-free.
FormulaPtr rectify(const FormulaPtr& f, std::map<std::string, std::string> env,
                   unsigned long& counter) {
  switch (f->kind) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equal: {
      std::vector<Term> terms = f->terms;
      for (Term& t : terms) {
        if (t.kind != Term::Kind::Variable) continue;
        auto it = env.find(t.id);
        if (it == env.end()) {
          throw std::invalid_argument("formula is not closed: free variable '" + t.id + "'");
        }
        t.id = it->second;
      }
      return f->kind == Formula::Kind::Pred ? pred(f->label, std::move(terms))
                                            : equal(terms[0], terms[1]);
    }
    case Formula::Kind::Not:
      return lnot(rectify(f->left, std::move(env), counter));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      FormulaPtr left = rectify(f->left, env, counter);
      FormulaPtr right = rectify(f->right, std::move(env), counter);
      return f->kind == Formula::Kind::And ? land(std::move(left), std::move(right))
                                           : lor(std::move(left), std::move(right));
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::string fresh = "x" + std::to_string(++counter);
      env[f->label] = fresh;
      FormulaPtr body = rectify(f->left, std::move(env), counter);
      return f->kind == Formula::Kind::Forall ? forall(std::move(fresh), std::move(body))
                                              : exists(std::move(fresh), std::move(body));
    }
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      throw std::logic_error("arrows must be eliminated before rectification");
  }
  throw std::logic_error("unreachable");
}

// Pulls every quantifier to the front. Left subtree prefixes come first,
// negation flips each pulled quantifier.
void pull(const FormulaPtr& f, bool negated, std::vector<PrenexFormula::Step>& prefix,
          FormulaPtr& matrix_out) {
  switch (f->kind) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equal:
      matrix_out = negated ? lnot(f) : f;
      return;
    case Formula::Kind::Not:
      pull(f->left, !negated, prefix, matrix_out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      FormulaPtr left, right;
      pull(f->left, negated, prefix, left);
      pull(f->right, negated, prefix, right);
      // under negation the connective dualizes (De Morgan)
      const bool conjunction = (f->kind == Formula::Kind::And) != negated;
      matrix_out = conjunction ? land(std::move(left), std::move(right))
                               : lor(std::move(left), std::move(right));
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const bool universal = (f->kind == Formula::Kind::Forall) != negated;
      prefix.push_back({universal, f->label});
      pull(f->left, negated, prefix, matrix_out);
      return;
    }
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      throw std::logic_error("arrows must be eliminated before pulling quantifiers");
  }
  throw std::logic_error("unreachable");
}

std::string name_id(unsigned i) { return "a" + std::to_string(i); }
std::string var_id(unsigned i) { return "x" + std::to_string(i); }

}  // namespace

PrenexFormula prenex_decompose(const FormulaPtr& f) {
  unsigned long counter = 0;
  FormulaPtr rectified = rectify(eliminate_arrows(f), {}, counter);
  PrenexFormula out;
  pull(rectified, false, out.prefix, out.matrix);
  return out;
}

FormulaPtr prenex(const FormulaPtr& f) { return prenex_decompose(f).formula(); }

FormulaPtr symmetrize_existential(const FormulaPtr& matrix, unsigned n) {
  if (n == 0) throw std::invalid_argument("need n >= 1 variables");
  std::set<std::string> expected;
  for (unsigned i = 1; i <= n; ++i) expected.insert(var_id(i));
  if (free_variables(matrix) != expected) {
    throw std::invalid_argument("matrix free variables must be exactly x1..x" +
                                std::to_string(n));
  }

  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i + 1;
  std::vector<FormulaPtr> disjuncts;
  do {
    std::map<std::string, std::string> mapping;
    for (unsigned i = 0; i < n; ++i) mapping[var_id(i + 1)] = var_id(perm[i]);
    disjuncts.push_back(rename_variables(matrix, mapping));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return disjoin(disjuncts);
}

FormulaPtr build_a(unsigned n) {
  if (n == 0) throw std::invalid_argument("need n >= 1 names");
  std::vector<FormulaPtr> clauses;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      clauses.push_back(lnot(equal(Term::name(name_id(i)), Term::name(name_id(j)))));
    }
  }
  std::vector<FormulaPtr> totality;
  for (unsigned k = 1; k <= n; ++k) {
    totality.push_back(equal(Term::variable("x"), Term::name(name_id(k))));
  }
  clauses.push_back(forall("x", disjoin(totality)));
  return conjoin(clauses);
}

SymmetrizeResult symmetrize(const FormulaPtr& t, unsigned n) {
  if (n == 0) throw std::invalid_argument("cardinality must be >= 1");
  if (!is_closed(t)) throw std::invalid_argument("sentence must be closed");
  if (contains_names(t)) throw std::invalid_argument("sentence must not contain names");

  PrenexFormula pf = prenex_decompose(t);

  // Replace quantifiers innermost-first: forall becomes a conjunction over
  // the names, exists a disjunction. Each round grounds one variable.
  FormulaPtr grounded = pf.matrix;
  for (std::size_t k = pf.prefix.size(); k-- > 0;) {
    const PrenexFormula::Step& step = pf.prefix[k];
    std::vector<FormulaPtr> branches;
    branches.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
      branches.push_back(substitute_variable(grounded, step.variable, Term::name(name_id(i))));
    }
    grounded = step.universal ? conjoin(branches) : disjoin(branches);
  }

  FormulaPtr core = land(grounded, build_a(n));

  std::map<std::string, Term> to_vars;
  for (unsigned k = 1; k <= n; ++k) to_vars[name_id(k)] = Term::variable(var_id(k));
  FormulaPtr g = replace_names(core, to_vars);

  FormulaPtr t_s = g;
  for (unsigned k = n; k >= 1; --k) t_s = exists(var_id(k), std::move(t_s));

  return SymmetrizeResult{std::move(g), std::move(t_s), std::move(grounded)};
}

}  // namespace permstat::folsym
