#include "permstat/folsym/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstat/errors.hpp"

namespace permstat::folsym {

namespace {

constexpr std::uint64_t kModelCountGuardBits = 20;  // at most 2^20 models per size

std::uint64_t checked_tuple_count(unsigned universe_size, unsigned arity) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (count > (std::uint64_t(1) << 57) / std::max(1u, universe_size)) {
      throw SizeError("relation table too large for size " + std::to_string(universe_size),
                      "overflow");
    }
    count *= universe_size;
  }
  return count;
}

}  // namespace

void FiniteModel::Relation::set(std::uint64_t key, bool value) {
  std::uint64_t& word = words[key >> 6];
  if (value) {
    word |= std::uint64_t(1) << (key & 63);
  } else {
    word &= ~(std::uint64_t(1) << (key & 63));
  }
}

FiniteModel::FiniteModel(const Signature& sig, unsigned universe_size)
    : size_(universe_size), sig_(sig) {
  if (universe_size == 0) {
    throw std::invalid_argument("universe size must be >= 1");
  }
  for (const auto& [name, arity] : sig.predicates) {
    Relation rel;
    rel.arity = arity;
    rel.tuple_count = checked_tuple_count(universe_size, arity);
    rel.words.assign((rel.tuple_count + 63) / 64, 0);
    relations_.emplace(name, std::move(rel));
  }
}

const FiniteModel::Relation* FiniteModel::relation(const std::string& predicate) const {
  auto it = relations_.find(predicate);
  return it == relations_.end() ? nullptr : &it->second;
}

FiniteModel::Relation* FiniteModel::relation(const std::string& predicate) {
  auto it = relations_.find(predicate);
  return it == relations_.end() ? nullptr : &it->second;
}

std::uint64_t FiniteModel::tuple_key(std::span<const unsigned> tuple) const {
  std::uint64_t key = 0;
  for (unsigned v : tuple) {
    if (v >= size_) {
      throw std::invalid_argument("tuple element " + std::to_string(v) +
                                  " outside universe of size " + std::to_string(size_));
    }
    key = key * size_ + v;
  }
  return key;
}

bool FiniteModel::has_tuple(const std::string& predicate,
                            std::span<const unsigned> tuple) const {
  const Relation* rel = relation(predicate);
  if (rel == nullptr) {
    throw std::invalid_argument("predicate '" + predicate + "' not in signature");
  }
  if (tuple.size() != rel->arity) {
    throw std::invalid_argument("predicate '" + predicate + "' has arity " +
                                std::to_string(rel->arity));
  }
  return rel->test(tuple_key(tuple));
}

void FiniteModel::set_tuple(const std::string& predicate, std::span<const unsigned> tuple,
                            bool value) {
  Relation* rel = relation(predicate);
  if (rel == nullptr) {
    throw std::invalid_argument("predicate '" + predicate + "' not in signature");
  }
  if (tuple.size() != rel->arity) {
    throw std::invalid_argument("predicate '" + predicate + "' has arity " +
                                std::to_string(rel->arity));
  }
  rel->set(tuple_key(tuple), value);
}

void FiniteModel::set_tuple(const std::string& predicate,
                            std::initializer_list<unsigned> tuple, bool value) {
  std::vector<unsigned> v(tuple);
  set_tuple(predicate, std::span<const unsigned>(v), value);
}

std::vector<std::vector<unsigned>> FiniteModel::tuples_of(const std::string& predicate) const {
  const Relation* rel = relation(predicate);
  if (rel == nullptr) {
    throw std::invalid_argument("predicate '" + predicate + "' not in signature");
  }
  std::vector<std::vector<unsigned>> out;
  for (std::uint64_t key = 0; key < rel->tuple_count; ++key) {
    if (!rel->test(key)) continue;
    std::vector<unsigned> tuple(rel->arity);
    std::uint64_t rest = key;
    for (unsigned i = rel->arity; i-- > 0;) {
      tuple[i] = static_cast<unsigned>(rest % size_);
      rest /= size_;
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

void FiniteModel::assign_name(const std::string& name, unsigned element) {
  if (element >= size_) {
    throw std::invalid_argument("name assigned outside universe");
  }
  names_[name] = element;
}

std::string FiniteModel::str() const {
  std::string out = "size=" + std::to_string(size_);
  for (const auto& [name, arity] : sig_.predicates) {
    out += "; " + name + "={";
    bool first_tuple = true;
    for (const auto& tuple : tuples_of(name)) {
      if (!first_tuple) out += ",";
      first_tuple = false;
      out += "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(tuple[i]);
      }
      out += ")";
    }
    out += "}";
  }
  for (const auto& [name, element] : names_) {
    out += "; " + name + "=" + std::to_string(element);
  }
  return out;
}

namespace {

unsigned term_value(const FiniteModel& model, const Assignment& env, const Term& t) {
  if (t.kind == Term::Kind::Variable) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->first == t.id) return it->second;
    }
    throw std::invalid_argument("unassigned variable '" + t.id + "'");
  }
  auto it = model.name_assignment().find(t.id);
  if (it == model.name_assignment().end()) {
    throw std::invalid_argument("unassigned name '" + t.id + "'");
  }
  return it->second;
}

bool eval_rec(const FiniteModel& model, const Formula& f, Assignment& env) {
  switch (f.kind) {
    case Formula::Kind::Pred: {
      const FiniteModel::Relation* rel = model.relation(f.label);
      if (rel == nullptr) {
        throw std::invalid_argument("predicate '" + f.label + "' not in signature");
      }
      if (f.terms.size() != rel->arity) {
        throw std::invalid_argument("predicate '" + f.label + "' has arity " +
                                    std::to_string(rel->arity));
      }
      std::uint64_t key = 0;
      for (const Term& t : f.terms) {
        key = key * model.universe_size() + term_value(model, env, t);
      }
      return rel->test(key);
    }
    case Formula::Kind::Equal:
      return term_value(model, env, f.terms[0]) == term_value(model, env, f.terms[1]);
    case Formula::Kind::Not:
      return !eval_rec(model, *f.left, env);
    case Formula::Kind::And:
      return eval_rec(model, *f.left, env) && eval_rec(model, *f.right, env);
    case Formula::Kind::Or:
      return eval_rec(model, *f.left, env) || eval_rec(model, *f.right, env);
    case Formula::Kind::Implies:
      return !eval_rec(model, *f.left, env) || eval_rec(model, *f.right, env);
    case Formula::Kind::Iff:
      return eval_rec(model, *f.left, env) == eval_rec(model, *f.right, env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const bool universal = f.kind == Formula::Kind::Forall;
      env.emplace_back(f.label, 0);
      bool result = universal;
      for (unsigned v = 0; v < model.universe_size(); ++v) {
        env.back().second = v;
        bool sub = eval_rec(model, *f.left, env);
        if (sub != universal) {
          result = sub;
          break;
        }
      }
      env.pop_back();
      return result;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

bool evaluate(const FiniteModel& model, const FormulaPtr& f, const Assignment& env) {
  Assignment scratch = env;
  return eval_rec(model, *f, scratch);
}

ModelStream::ModelStream(Signature sig, unsigned universe_size)
    : sig_(std::move(sig)), size_(universe_size) {
  if (universe_size == 0) {
    throw std::invalid_argument("universe size must be >= 1");
  }
  // One interpretation per subset of each relation table: 2^(sum size^arity).
  ExactInt bits(0);
  for (const auto& [name, arity] : sig_.predicates) {
    bits = bits + permstat::pow(ExactInt((unsigned long)universe_size), arity);
  }
  if (bits > ExactInt((unsigned long)kModelCountGuardBits)) {
    std::string count = "2^" + bits.str();
    if (bits <= ExactInt(1000000L)) {
      count = permstat::pow(ExactInt(2), mpz_get_ui(bits.raw().get_mpz_t())).str();
    }
    throw SizeError("model enumeration too large: " + count + " interpretations exceed 2^" +
                        std::to_string(kModelCountGuardBits),
                    count);
  }
  total_ = permstat::pow(ExactInt(2), mpz_get_ui(bits.raw().get_mpz_t()));
  for (const auto& [name, arity] : sig_.predicates) {
    std::uint64_t t = checked_tuple_count(universe_size, arity);  // <= 20 past the guard
    masks_.push_back(0);
    mask_limits_.push_back(std::uint64_t(1) << t);
  }
}

std::optional<FiniteModel> ModelStream::next() {
  if (done_) return std::nullopt;
  FiniteModel model(sig_, size_);
  for (std::size_t p = 0; p < sig_.predicates.size(); ++p) {
    FiniteModel::Relation* rel = model.relation(sig_.predicates[p].first);
    for (std::uint64_t key = 0; key < rel->tuple_count; ++key) {
      rel->set(key, (masks_[p] >> key) & 1);
    }
  }
  // advance odometer, first predicate fastest
  std::size_t p = 0;
  for (; p < masks_.size(); ++p) {
    if (++masks_[p] < mask_limits_[p]) break;
    masks_[p] = 0;
  }
  if (p == masks_.size()) done_ = true;
  return model;
}

EquivalenceVerdict check_equivalence(const Signature& sig, const FormulaPtr& t1,
                                     const FormulaPtr& t2, unsigned max_size) {
  for (const FormulaPtr& t : {t1, t2}) {
    if (!is_closed(t)) {
      throw std::invalid_argument("equivalence check requires closed sentences");
    }
    if (contains_names(t)) {
      throw std::invalid_argument("equivalence check requires name-free sentences");
    }
  }
  EquivalenceVerdict verdict;
  verdict.max_size_checked = max_size;
  for (unsigned size = 1; size <= max_size; ++size) {
    ModelStream stream(sig, size);
    while (auto model = stream.next()) {
      if (evaluate(*model, t1) != evaluate(*model, t2)) {
        verdict.equivalent = false;
        verdict.counterexample = std::move(*model);
        return verdict;
      }
    }
  }
  verdict.equivalent = true;
  return verdict;
}

SymmetryVerdict check_total_symmetry(const Signature& sig, const FormulaPtr& g, unsigned n,
                                     unsigned max_size) {
  std::set<std::string> expected;
  for (unsigned i = 1; i <= n; ++i) expected.insert("x" + std::to_string(i));
  for (const std::string& v : free_variables(g)) {
    if (!expected.count(v)) {
      throw std::invalid_argument("free variable '" + v + "' outside x1..x" +
                                  std::to_string(n));
    }
  }

  SymmetryVerdict verdict;
  verdict.max_size_checked = max_size;
  for (unsigned size = 1; size <= max_size; ++size) {
    ModelStream stream(sig, size);
    while (auto model = stream.next()) {
      std::vector<unsigned> values(n, 0);
      // walk all n-tuples of universe elements
      while (true) {
        Assignment env;
        for (unsigned i = 0; i < n; ++i) {
          env.emplace_back("x" + std::to_string(i + 1), values[i]);
        }
        const bool base = evaluate(*model, g, env);

        std::vector<unsigned> perm(n);
        for (unsigned i = 0; i < n; ++i) perm[i] = i + 1;
        while (std::next_permutation(perm.begin(), perm.end())) {
          Assignment permuted;
          for (unsigned i = 0; i < n; ++i) {
            permuted.emplace_back("x" + std::to_string(i + 1), values[perm[i] - 1]);
          }
          if (evaluate(*model, g, permuted) != base) {
            verdict.symmetric = false;
            verdict.model = std::move(*model);
            verdict.assignment = values;
            verdict.permutation = perm;
            return verdict;
          }
        }

        unsigned idx = 0;
        for (; idx < n; ++idx) {
          if (++values[idx] < size) break;
          values[idx] = 0;
        }
        if (idx == n) break;
      }
    }
  }
  verdict.symmetric = true;
  return verdict;
}

std::set<unsigned> satisfiable_cardinalities(const Signature& sig, const FormulaPtr& t,
                                             unsigned max_size) {
  if (!is_closed(t)) {
    throw std::invalid_argument("satisfiability check requires a closed sentence");
  }
  if (contains_names(t)) {
    throw std::invalid_argument("satisfiability check requires a name-free sentence");
  }
  std::set<unsigned> out;
  for (unsigned size = 1; size <= max_size; ++size) {
    ModelStream stream(sig, size);
    while (auto model = stream.next()) {
      if (evaluate(*model, t)) {
        out.insert(size);
        break;
      }
    }
  }
  return out;
}

}  // namespace permstat::folsym
