#pragma once

#include <string>
#include <vector>

#include "permstat/folsym/formula.hpp"

namespace permstat::folsym {

/// A closed formula split into its quantifier prefix (outermost first)
/// and quantifier-free matrix. Prefix variables are the rectified x1..xn.
struct PrenexFormula {
  struct Step {
    bool universal;
    std::string variable;
  };

  std::vector<Step> prefix;
  FormulaPtr matrix;

  FormulaPtr formula() const;
};

/// Prenex normal form of a closed formula: <-> and -> are eliminated,
/// every bound variable is renamed to a fresh x1, x2, .. (assigned in
/// pre-order), then quantifiers are pulled to the front left-to-right.
/// The result is logically equivalent to the input.
PrenexFormula prenex_decompose(const FormulaPtr& f);
FormulaPtr prenex(const FormulaPtr& f);

/// Disjunction of `matrix` over all n! permutations of its free variables
/// x1..xn (identity permutation first, then lexicographic). The result is
/// totally symmetric in x1..xn by construction. The matrix must have free
/// variables exactly x1..xn.
FormulaPtr symmetrize_existential(const FormulaPtr& matrix, unsigned n);

/// The cardinality-fixing sentence over names a1..an: pairwise
/// distinctness of the names (absent for n = 1) conjoined with
/// forall x. (x = a1 | .. | x = an).
FormulaPtr build_a(unsigned n);

struct SymmetrizeResult {
  FormulaPtr g;        // totally symmetric, free variables x1..xn
  FormulaPtr t_s;      // exists x1. .. exists xn. g
  FormulaPtr grounded; // the fully grounded core over names a1..an
};

/// For a closed, name-free sentence t assumed satisfiable only in models
/// of cardinality n (n >= 1): prenexes t, replaces each quantifier from
/// the innermost outwards by a conjunction (forall) or disjunction
/// (exists) over the names a1..an, conjoins the cardinality sentence,
/// turns names back into variables x1..xn, and closes existentially.
/// t_s is logically equivalent to t, and g is totally symmetric.
SymmetrizeResult symmetrize(const FormulaPtr& t, unsigned n);

}  // namespace permstat::folsym
