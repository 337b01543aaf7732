#pragma once

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace permstat::folsym {

/// A term of the language: either a variable or a name (constant added in
/// the extended language; the input language itself has no names).
struct Term {
  enum class Kind { Variable, Name };

  Kind kind;
  std::string id;

  static Term variable(std::string id) { return Term{Kind::Variable, std::move(id)}; }
  static Term name(std::string id) { return Term{Kind::Name, std::move(id)}; }

  bool operator==(const Term&) const = default;
};

/// Predicate symbols with arities. Equality is always available as a
/// logical symbol and is not declared here. No function symbols.
struct Signature {
  std::vector<std::pair<std::string, unsigned>> predicates;

  /// Throws std::invalid_argument on duplicate names.
  void add(std::string name, unsigned arity);

  /// nullptr when the predicate is not declared.
  const unsigned* arity_of(const std::string& name) const;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable first-order formula tree. Shared subtrees are fine; nothing
/// mutates a node after construction.
class Formula {
 public:
  enum class Kind { Pred, Equal, Not, And, Or, Implies, Iff, Forall, Exists };

  Kind kind;
  std::string label;        // predicate name, or bound variable for quantifiers
  std::vector<Term> terms;  // Pred arguments; Equal uses terms[0], terms[1]
  FormulaPtr left;          // unary child / left operand / quantifier body
  FormulaPtr right;
};

FormulaPtr pred(std::string name, std::vector<Term> args);
FormulaPtr equal(Term a, Term b);
FormulaPtr lnot(FormulaPtr f);
FormulaPtr land(FormulaPtr a, FormulaPtr b);
FormulaPtr lor(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);

/// Left fold over two or more operands; a single operand is returned as is.
/// Throws std::invalid_argument on an empty list.
FormulaPtr conjoin(std::span<const FormulaPtr> fs);
FormulaPtr disjoin(std::span<const FormulaPtr> fs);

std::set<std::string> free_variables(const FormulaPtr& f);
bool is_closed(const FormulaPtr& f);
bool contains_names(const FormulaPtr& f);
std::set<std::string> all_variables(const FormulaPtr& f);

/// Structural equality of trees.
bool ast_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Replaces free occurrences of `var` by `replacement`. The replacement
/// must be a name (names are never bound, so no capture can occur).
FormulaPtr substitute_variable(const FormulaPtr& f, const std::string& var,
                               const Term& replacement);

/// Simultaneous renaming of free variables, capture-avoiding: bound
/// variables that would capture a renamed occurrence are alpha-renamed.
FormulaPtr rename_variables(const FormulaPtr& f,
                            const std::map<std::string, std::string>& mapping);

/// Replaces every name by the given term (used to turn the grounded core
/// of the symmetrization back into an open predicate).
FormulaPtr replace_names(const FormulaPtr& f, const std::map<std::string, Term>& mapping);

/// Renders in the concrete grammar the parser accepts; re-parsing the
/// result yields a structurally equal tree. Negated equalities print as
/// the != sugar.
std::string to_string(const FormulaPtr& f);

}  // namespace permstat::folsym
