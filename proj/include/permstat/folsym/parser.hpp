#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "permstat/folsym/formula.hpp"

namespace permstat::folsym {

/// Syntax, unknown-predicate, and arity errors, with the byte offset of
/// the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct ParseResult {
  FormulaPtr formula;
  std::vector<std::string> free_variables;  // sorted

  bool closed() const { return free_variables.empty(); }
};

/// Grammar:
///   formula  := iff
///   iff      := implies ('<->' iff)?
///   implies  := or ('->' implies)?
///   or       := and ('|' and)*
///   and      := unary ('&' unary)*
///   unary    := '~' unary | 'forall' var '.' iff | 'exists' var '.' iff | atom
///   atom     := '(' iff ')' | Pred ['(' var (',' var)* ')'] | var ('='|'!=') var
/// Predicates are uppercase-initial identifiers, variables lowercase.
/// Applications are arity-checked against the signature.
ParseResult parse(const std::string& text, const Signature& sig);

/// "F/2, P/1" (possibly empty). Throws ParseError.
Signature parse_signature(const std::string& decl);

/// A formula document: an optional first line "sig F/2, P/1" followed by
/// the sentence itself.
struct ParsedDocument {
  Signature signature;
  ParseResult result;
};

ParsedDocument parse_document(const std::string& text);

}  // namespace permstat::folsym
