#include "permstat/folsym/formula.hpp"

#include <stdexcept>

namespace permstat::folsym {

void Signature::add(std::string name, unsigned arity) {
  if (arity_of(name) != nullptr) {
    throw std::invalid_argument("duplicate predicate '" + name + "'");
  }
  predicates.emplace_back(std::move(name), arity);
}

const unsigned* Signature::arity_of(const std::string& name) const {
  for (const auto& [n, a] : predicates) {
    if (n == name) return &a;
  }
  return nullptr;
}

namespace {

FormulaPtr node(Formula::Kind kind, std::string label, std::vector<Term> terms,
                FormulaPtr left, FormulaPtr right) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->label = std::move(label);
  f->terms = std::move(terms);
  f->left = std::move(left);
  f->right = std::move(right);
  return f;
}

}  // namespace

FormulaPtr pred(std::string name, std::vector<Term> args) {
  return node(Formula::Kind::Pred, std::move(name), std::move(args), nullptr, nullptr);
}

FormulaPtr equal(Term a, Term b) {
  return node(Formula::Kind::Equal, "", {std::move(a), std::move(b)}, nullptr, nullptr);
}

FormulaPtr lnot(FormulaPtr f) {
  return node(Formula::Kind::Not, "", {}, std::move(f), nullptr);
}

FormulaPtr land(FormulaPtr a, FormulaPtr b) {
  return node(Formula::Kind::And, "", {}, std::move(a), std::move(b));
}

FormulaPtr lor(FormulaPtr a, FormulaPtr b) {
  return node(Formula::Kind::Or, "", {}, std::move(a), std::move(b));
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return node(Formula::Kind::Implies, "", {}, std::move(a), std::move(b));
}

FormulaPtr iff(FormulaPtr a, FormulaPtr b) {
  return node(Formula::Kind::Iff, "", {}, std::move(a), std::move(b));
}

FormulaPtr forall(std::string var, FormulaPtr body) {
  return node(Formula::Kind::Forall, std::move(var), {}, std::move(body), nullptr);
}

FormulaPtr exists(std::string var, FormulaPtr body) {
  return node(Formula::Kind::Exists, std::move(var), {}, std::move(body), nullptr);
}

FormulaPtr conjoin(std::span<const FormulaPtr> fs) {
  if (fs.empty()) throw std::invalid_argument("conjoin of an empty list");
  FormulaPtr acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = land(acc, fs[i]);
  return acc;
}

FormulaPtr disjoin(std::span<const FormulaPtr> fs) {
  if (fs.empty()) throw std::invalid_argument("disjoin of an empty list");
  FormulaPtr acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = lor(acc, fs[i]);
  return acc;
}

namespace {

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equal:
      for (const Term& t : f->terms) {
        if (t.kind == Term::Kind::Variable && !bound.count(t.id)) out.insert(t.id);
      }
      return;
    case Formula::Kind::Not:
      collect_free(f->left, bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      collect_free(f->left, bound, out);
      collect_free(f->right, bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool inserted = bound.insert(f->label).second;
      collect_free(f->left, bound, out);
      if (inserted) bound.erase(f->label);
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_variables(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_closed(const FormulaPtr& f) { return free_variables(f).empty(); }

bool contains_names(const FormulaPtr& f) {
  for (const Term& t : f->terms) {
    if (t.kind == Term::Kind::Name) return true;
  }
  if (f->left && contains_names(f->left)) return true;
  if (f->right && contains_names(f->right)) return true;
  return false;
}

std::set<std::string> all_variables(const FormulaPtr& f) {
  std::set<std::string> out;
  for (const Term& t : f->terms) {
    if (t.kind == Term::Kind::Variable) out.insert(t.id);
  }
  if (f->kind == Formula::Kind::Forall || f->kind == Formula::Kind::Exists) {
    out.insert(f->label);
  }
  for (const FormulaPtr& child : {f->left, f->right}) {
    if (child) {
      auto sub = all_variables(child);
      out.insert(sub.begin(), sub.end());
    }
  }
  return out;
}

bool ast_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->label != b->label || a->terms != b->terms) return false;
  return ast_equal(a->left, b->left) && ast_equal(a->right, b->right);
}

FormulaPtr substitute_variable(const FormulaPtr& f, const std::string& var,
                               const Term& replacement) {
  if (replacement.kind != Term::Kind::Name) {
    throw std::invalid_argument("substitute_variable replacement must be a name");
  }
  switch (f->kind) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equal: {
      std::vector<Term> terms = f->terms;
      bool changed = false;
      for (Term& t : terms) {
        if (t.kind == Term::Kind::Variable && t.id == var) {
          t = replacement;
          changed = true;
        }
      }
      if (!changed) return f;
      return node(f->kind, f->label, std::move(terms), nullptr, nullptr);
    }
    case Formula::Kind::Not:
      return lnot(substitute_variable(f->left, var, replacement));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return node(f->kind, "", {}, substitute_variable(f->left, var, replacement),
                  substitute_variable(f->right, var, replacement));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (f->label == var) return f;  // shadowed
      return node(f->kind, f->label, {}, substitute_variable(f->left, var, replacement),
                  nullptr);
  }
  throw std::logic_error("unreachable");
}

namespace {

std::string fresh_variable(std::set<std::string>& used) {
  for (unsigned long k = 1;; ++k) {
    std::string candidate = "x" + std::to_string(used.size() + k);
    if (used.insert(candidate).second) return candidate;
  }
}

FormulaPtr rename_walk(const FormulaPtr& f, std::map<std::string, std::string> active,
                       std::set<std::string>& used) {
  switch (f->kind) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equal: {
      std::vector<Term> terms = f->terms;
      for (Term& t : terms) {
        if (t.kind == Term::Kind::Variable) {
          auto it = active.find(t.id);
          if (it != active.end()) t.id = it->second;
        }
      }
      return node(f->kind, f->label, std::move(terms), nullptr, nullptr);
    }
    case Formula::Kind::Not:
      return lnot(rename_walk(f->left, std::move(active), used));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: {
      FormulaPtr left = rename_walk(f->left, active, used);
      FormulaPtr right = rename_walk(f->right, std::move(active), used);
      return node(f->kind, "", {}, std::move(left), std::move(right));
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::string binder = f->label;
      active.erase(binder);
      bool captures = false;
      for (const auto& [src, dst] : active) {
        if (dst == binder) captures = true;
      }
      FormulaPtr body = f->left;
      if (captures) {
        std::string fresh = fresh_variable(used);
        std::map<std::string, std::string> alpha{{binder, fresh}};
        body = rename_walk(body, std::move(alpha), used);
        binder = fresh;
      }
      return node(f->kind, std::move(binder), {}, rename_walk(body, std::move(active), used),
                  nullptr);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

FormulaPtr rename_variables(const FormulaPtr& f,
                            const std::map<std::string, std::string>& mapping) {
  std::set<std::string> used = all_variables(f);
  for (const auto& [src, dst] : mapping) {
    used.insert(src);
    used.insert(dst);
  }
  return rename_walk(f, mapping, used);
}

FormulaPtr replace_names(const FormulaPtr& f, const std::map<std::string, Term>& mapping) {
  switch (f->kind) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equal: {
      std::vector<Term> terms = f->terms;
      for (Term& t : terms) {
        if (t.kind == Term::Kind::Name) {
          auto it = mapping.find(t.id);
          if (it != mapping.end()) t = it->second;
        }
      }
      return node(f->kind, f->label, std::move(terms), nullptr, nullptr);
    }
    case Formula::Kind::Not:
      return lnot(replace_names(f->left, mapping));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return node(f->kind, "", {}, replace_names(f->left, mapping),
                  replace_names(f->right, mapping));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return node(f->kind, f->label, {}, replace_names(f->left, mapping), nullptr);
  }
  throw std::logic_error("unreachable");
}

namespace {

// Precedence: <-> 0, -> 1, | 2, & 3, ~ 4, atoms 5. Quantifiers extend to
// the end of their scope, so they print unparenthesized only in tail
// position.
std::string render(const FormulaPtr& f, int parent_prec, bool tail);

std::string render_binary(const FormulaPtr& f, const char* op, int prec, bool right_assoc,
                          int parent_prec, bool tail) {
  int left_prec = right_assoc ? prec + 1 : prec;
  int right_prec = right_assoc ? prec : prec + 1;
  bool parens = prec < parent_prec;
  bool inner_tail = parens ? true : tail;
  std::string out = render(f->left, left_prec, false) + " " + op + " " +
                    render(f->right, right_prec, inner_tail);
  return parens ? "(" + out + ")" : out;
}

std::string render(const FormulaPtr& f, int parent_prec, bool tail) {
  switch (f->kind) {
    case Formula::Kind::Pred: {
      std::string out = f->label;
      if (!f->terms.empty()) {
        out += "(";
        for (std::size_t i = 0; i < f->terms.size(); ++i) {
          if (i > 0) out += ", ";
          out += f->terms[i].id;
        }
        out += ")";
      }
      return out;
    }
    case Formula::Kind::Equal:
      return f->terms[0].id + " = " + f->terms[1].id;
    case Formula::Kind::Not:
      if (f->left->kind == Formula::Kind::Equal) {
        return f->left->terms[0].id + " != " + f->left->terms[1].id;
      }
      return "~" + render(f->left, 5, tail);
    case Formula::Kind::And:
      return render_binary(f, "&", 3, false, parent_prec, tail);
    case Formula::Kind::Or:
      return render_binary(f, "|", 2, false, parent_prec, tail);
    case Formula::Kind::Implies:
      return render_binary(f, "->", 1, true, parent_prec, tail);
    case Formula::Kind::Iff:
      return render_binary(f, "<->", 0, true, parent_prec, tail);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const char* kw = f->kind == Formula::Kind::Forall ? "forall" : "exists";
      std::string out = std::string(kw) + " " + f->label + ". " + render(f->left, 0, true);
      return tail ? out : "(" + out + ")";
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::string to_string(const FormulaPtr& f) { return render(f, 0, true); }

}  // namespace permstat::folsym
