#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "permstat/exact.hpp"

namespace permstat::cli {

enum class Format { Table, Json, Csv };

/// "table" | "json" | "csv"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& text);

/// Decimal with 12 significant digits (C locale, %.12g).
std::string format_real(double value);

/// Decimal rendering of an exact rational, 12 significant digits; values
/// outside double range are rendered as d.ddde+NNN via an exact log split.
std::string rational_decimal(const ExactRational& value);

struct Value {
  enum class Kind { Integer, Rational, Real, Text, Boolean };
  Kind kind;
  std::string text;
};

Value integer_value(const ExactInt& v);
Value integer_value(unsigned long v);
Value rational_value(const ExactRational& v);
Value real_value(double v);
Value text_value(std::string v);
Value bool_value(bool v);

/// One command's output: echoed parameters, the formula the numbers come
/// from, scalar results, and an optional series. The JSON schema is
/// documented in the README and kept stable.
struct Record {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::string formula;
  std::vector<std::pair<std::string, Value>> results;
  std::vector<std::string> columns;        // empty when there is no series
  std::vector<std::vector<Value>> rows;
  std::vector<std::string> notes;          // human-facing remarks, e.g. bounded-check warnings

  void param(const std::string& key, const std::string& value);
  void param(const std::string& key, unsigned long value);
  void result(const std::string& key, Value value);
};

void emit(std::ostream& out, const Record& record, Format format);

}  // namespace permstat::cli
