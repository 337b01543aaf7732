#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "permstat/exact.hpp"
#include "permstat/folsym/formula.hpp"

namespace permstat::folsym {

/// Interpretation of a signature over the universe {0, .., size-1}.
/// Equality is always interpreted as identity. Relations are stored as
/// bitsets over tuple indices (first argument most significant), which
/// keeps exhaustive enumeration cheap.
class FiniteModel {
 public:
  FiniteModel(const Signature& sig, unsigned universe_size);

  unsigned universe_size() const { return size_; }
  const Signature& signature() const { return sig_; }

  bool has_tuple(const std::string& predicate, std::span<const unsigned> tuple) const;
  void set_tuple(const std::string& predicate, std::span<const unsigned> tuple,
                 bool value = true);
  void set_tuple(const std::string& predicate, std::initializer_list<unsigned> tuple,
                 bool value = true);

  /// Satisfying tuples of one predicate, in tuple-index order.
  std::vector<std::vector<unsigned>> tuples_of(const std::string& predicate) const;

  void assign_name(const std::string& name, unsigned element);
  const std::map<std::string, unsigned>& name_assignment() const { return names_; }

  /// "size=2; F={(0,1)}; R={}"
  std::string str() const;

  struct Relation {
    unsigned arity = 0;
    std::uint64_t tuple_count = 0;            // size^arity
    std::vector<std::uint64_t> words;         // bitset over tuple indices
    bool test(std::uint64_t key) const { return (words[key >> 6] >> (key & 63)) & 1; }
    void set(std::uint64_t key, bool value);
  };

  const Relation* relation(const std::string& predicate) const;
  Relation* relation(const std::string& predicate);

 private:
  std::uint64_t tuple_key(std::span<const unsigned> tuple) const;

  unsigned size_;
  Signature sig_;
  std::map<std::string, Relation> relations_;
  std::map<std::string, unsigned> names_;
};

/// Variable assignment, innermost binding last.
using Assignment = std::vector<std::pair<std::string, unsigned>>;

/// Tarskian satisfaction. Quantifiers range over the whole universe.
/// Throws std::invalid_argument on a variable not covered by `env` or a
/// name not assigned in the model.
bool evaluate(const FiniteModel& model, const FormulaPtr& f, const Assignment& env = {});

/// Deterministic stream of every interpretation of `sig` over a fixed
/// universe size, exactly once. The constructor throws SizeError when the
/// total count prod 2^(size^arity) exceeds 2^20 (message carries the exact
/// count).
class ModelStream {
 public:
  ModelStream(Signature sig, unsigned universe_size);

  const ExactInt& total() const { return total_; }
  std::optional<FiniteModel> next();

 private:
  Signature sig_;
  unsigned size_;
  ExactInt total_;
  std::vector<std::uint64_t> masks_;        // one per predicate
  std::vector<std::uint64_t> mask_limits_;  // 2^(size^arity)
  bool done_ = false;
};

struct EquivalenceVerdict {
  bool equivalent = false;
  unsigned max_size_checked = 0;
  std::optional<FiniteModel> counterexample;  // first in canonical order
};

/// Checks t1 <-> t2 in every model of every size 1..max_size. Both
/// sentences must be closed and name-free.
EquivalenceVerdict check_equivalence(const Signature& sig, const FormulaPtr& t1,
                                     const FormulaPtr& t2, unsigned max_size);

struct SymmetryVerdict {
  bool symmetric = false;
  unsigned max_size_checked = 0;
  std::optional<FiniteModel> model;
  std::vector<unsigned> assignment;   // witness values of x1..xn
  std::vector<unsigned> permutation;  // witness permutation (images of 1..n, 1-based)
};

/// Checks that g(x_1..x_n) keeps its truth value under every permutation
/// of its arguments, in every model up to max_size and every assignment.
/// g's free variables must be among x1..xn.
SymmetryVerdict check_total_symmetry(const Signature& sig, const FormulaPtr& g, unsigned n,
                                     unsigned max_size);

/// Universe sizes 1..max_size at which some model satisfies t (t closed,
/// name-free).
std::set<unsigned> satisfiable_cardinalities(const Signature& sig, const FormulaPtr& t,
                                             unsigned max_size);

}  // namespace permstat::folsym
