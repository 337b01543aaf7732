#include "permstat/folsym/parser.hpp"

#include <cctype>

namespace permstat::folsym {

namespace {

enum class TokenKind {
  LParen, RParen, Comma, Dot,
  Tilde, Amp, Pipe, Arrow, DArrow, Eq, Neq,
  Forall, Exists, Ident,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t at = i;
    switch (c) {
      case '(': out.push_back({TokenKind::LParen, "(", at}); ++i; continue;
      case ')': out.push_back({TokenKind::RParen, ")", at}); ++i; continue;
      case ',': out.push_back({TokenKind::Comma, ",", at}); ++i; continue;
      case '.': out.push_back({TokenKind::Dot, ".", at}); ++i; continue;
      case '~': out.push_back({TokenKind::Tilde, "~", at}); ++i; continue;
      case '&': out.push_back({TokenKind::Amp, "&", at}); ++i; continue;
      case '|': out.push_back({TokenKind::Pipe, "|", at}); ++i; continue;
      case '=': out.push_back({TokenKind::Eq, "=", at}); ++i; continue;
      case '-':
        if (i + 1 < n && text[i + 1] == '>') {
          out.push_back({TokenKind::Arrow, "->", at});
          i += 2;
          continue;
        }
        throw ParseError("expected '->'", at);
      case '<':
        if (i + 2 < n && text[i + 1] == '-' && text[i + 2] == '>') {
          out.push_back({TokenKind::DArrow, "<->", at});
          i += 3;
          continue;
        }
        throw ParseError("expected '<->'", at);
      case '!':
        if (i + 1 < n && text[i + 1] == '=') {
          out.push_back({TokenKind::Neq, "!=", at});
          i += 2;
          continue;
        }
        throw ParseError("expected '!='", at);
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      std::string word = text.substr(start, i - start);
      if (word == "forall") {
        out.push_back({TokenKind::Forall, word, at});
      } else if (word == "exists") {
        out.push_back({TokenKind::Exists, word, at});
      } else {
        out.push_back({TokenKind::Ident, word, at});
      }
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }
  out.push_back({TokenKind::End, "", n});
  return out;
}

bool is_predicate_name(const std::string& word) {
  return std::isupper(static_cast<unsigned char>(word[0]));
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig)
      : tokens_(std::move(tokens)), sig_(sig) {}

  FormulaPtr parse_sentence() {
    FormulaPtr f = parse_iff();
    expect(TokenKind::End, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  bool accept(TokenKind kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(TokenKind kind, const std::string& message) {
    if (!accept(kind)) throw ParseError(message, peek().offset);
  }

  FormulaPtr parse_iff() {
    FormulaPtr left = parse_implies();
    if (accept(TokenKind::DArrow)) {
      return iff(std::move(left), parse_iff());
    }
    return left;
  }

  FormulaPtr parse_implies() {
    FormulaPtr left = parse_or();
    if (accept(TokenKind::Arrow)) {
      return implies(std::move(left), parse_implies());
    }
    return left;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept(TokenKind::Pipe)) f = lor(std::move(f), parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (accept(TokenKind::Amp)) f = land(std::move(f), parse_unary());
    return f;
  }

  FormulaPtr parse_unary() {
    if (accept(TokenKind::Tilde)) return lnot(parse_unary());
    if (peek().kind == TokenKind::Forall || peek().kind == TokenKind::Exists) {
      const bool universal = take().kind == TokenKind::Forall;
      std::string var = parse_variable_name();
      expect(TokenKind::Dot, "expected '.' after quantified variable");
      FormulaPtr body = parse_iff();
      return universal ? forall(std::move(var), std::move(body))
                       : exists(std::move(var), std::move(body));
    }
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    if (accept(TokenKind::LParen)) {
      FormulaPtr f = parse_iff();
      expect(TokenKind::RParen, "expected ')'");
      return f;
    }
    if (peek().kind != TokenKind::Ident) {
      throw ParseError("expected a formula", peek().offset);
    }
    if (is_predicate_name(peek().text)) return parse_application();

    Term left = Term::variable(parse_variable_name());
    if (accept(TokenKind::Eq)) {
      return equal(std::move(left), Term::variable(parse_variable_name()));
    }
    if (accept(TokenKind::Neq)) {
      return lnot(equal(std::move(left), Term::variable(parse_variable_name())));
    }
    throw ParseError("expected '=' or '!=' after variable", peek().offset);
  }

  FormulaPtr parse_application() {
    Token name = take();
    const unsigned* arity = sig_.arity_of(name.text);
    if (arity == nullptr) {
      throw ParseError("unknown predicate '" + name.text + "'", name.offset);
    }
    std::vector<Term> args;
    if (accept(TokenKind::LParen)) {
      if (!accept(TokenKind::RParen)) {
        do {
          args.push_back(Term::variable(parse_variable_name()));
        } while (accept(TokenKind::Comma));
        expect(TokenKind::RParen, "expected ')'");
      }
    }
    if (args.size() != *arity) {
      throw ParseError("predicate '" + name.text + "' expects " + std::to_string(*arity) +
                           " arguments, got " + std::to_string(args.size()),
                       name.offset);
    }
    return pred(name.text, std::move(args));
  }

  std::string parse_variable_name() {
    if (peek().kind != TokenKind::Ident) {
      throw ParseError("expected a variable", peek().offset);
    }
    if (is_predicate_name(peek().text)) {
      throw ParseError("variables must start with a lowercase letter, got '" + peek().text +
                           "'",
                       peek().offset);
    }
    return take().text;
  }

  std::vector<Token> tokens_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse(const std::string& text, const Signature& sig) {
  Parser parser(tokenize(text), sig);
  ParseResult result;
  result.formula = parser.parse_sentence();
  auto free = free_variables(result.formula);
  result.free_variables.assign(free.begin(), free.end());
  return result;
}

Signature parse_signature(const std::string& decl) {
  Signature sig;
  std::size_t i = 0;
  const std::size_t n = decl.size();
  auto skip_space = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(decl[i]))) ++i;
  };
  skip_space();
  while (i < n) {
    std::size_t at = i;
    if (!std::isupper(static_cast<unsigned char>(decl[i]))) {
      throw ParseError("expected an uppercase predicate name", at);
    }
    std::size_t start = i;
    while (i < n && (std::isalnum(static_cast<unsigned char>(decl[i])) || decl[i] == '_')) ++i;
    std::string name = decl.substr(start, i - start);
    skip_space();
    if (i >= n || decl[i] != '/') throw ParseError("expected '/' after predicate name", i);
    ++i;
    skip_space();
    if (i >= n || !std::isdigit(static_cast<unsigned char>(decl[i]))) {
      throw ParseError("expected an arity", i);
    }
    unsigned arity = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(decl[i]))) {
      arity = arity * 10 + static_cast<unsigned>(decl[i] - '0');
      if (arity > 8) throw ParseError("arity too large (max 8)", at);
      ++i;
    }
    try {
      sig.add(std::move(name), arity);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
    skip_space();
    if (i < n) {
      if (decl[i] != ',') throw ParseError("expected ','", i);
      ++i;
      skip_space();
      if (i >= n) throw ParseError("trailing ','", i);
    }
  }
  return sig;
}

ParsedDocument parse_document(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                             text[i] == '\r')) {
    ++i;
  }
  ParsedDocument doc;
  std::string body = text;
  if (text.compare(i, 4, "sig ") == 0) {
    std::size_t eol = text.find('\n', i);
    std::string header = text.substr(i + 4, eol == std::string::npos ? std::string::npos
                                                                     : eol - (i + 4));
    doc.signature = parse_signature(header);
    body = eol == std::string::npos ? "" : text.substr(eol + 1);
  }
  doc.result = parse(body, doc.signature);
  return doc;
}

}  // namespace permstat::folsym
