#include "emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace permstat::cli {

Format parse_format(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + text + "' (table|json|csv)");
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string rational_decimal(const ExactRational& value) {
  if (value.sign() == 0) return "0";
  double d = mpq_get_d(mpq_class(value.num().raw(), value.den().raw()).get_mpq_t());
  if (std::isfinite(d) && d != 0.0) return format_real(d);
  // out of double range: split ln|q| into a base-10 exponent and mantissa
  ExactRational magnitude = value.sign() < 0 ? -value : value;
  double log10 = ln_exact(magnitude) / M_LN10;
  double exponent = std::floor(log10);
  double mantissa = std::pow(10.0, log10 - exponent);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.11fe%+d", value.sign() < 0 ? "-" : "", mantissa,
                static_cast<int>(exponent));
  return buf;
}

Value integer_value(const ExactInt& v) { return Value{Value::Kind::Integer, v.str()}; }
Value integer_value(unsigned long v) { return Value{Value::Kind::Integer, std::to_string(v)}; }
Value rational_value(const ExactRational& v) { return Value{Value::Kind::Rational, v.str()}; }
Value real_value(double v) { return Value{Value::Kind::Real, format_real(v)}; }
Value text_value(std::string v) { return Value{Value::Kind::Text, std::move(v)}; }
Value bool_value(bool v) { return Value{Value::Kind::Boolean, v ? "true" : "false"}; }

void Record::param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

void Record::param(const std::string& key, unsigned long value) {
  params.emplace_back(key, std::to_string(value));
}

void Record::result(const std::string& key, Value value) {
  results.emplace_back(key, std::move(value));
}

namespace {

nlohmann::ordered_json json_of(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Integer:
    case Value::Kind::Rational:
    case Value::Kind::Real:  // 12-significant-digit decimal, kept as text
    case Value::Kind::Text:
      return v.text;
    case Value::Kind::Boolean:
      return v.text == "true";
  }
  throw std::logic_error("unreachable");
}

void emit_json(std::ostream& out, const Record& record) {
  nlohmann::ordered_json doc;
  doc["command"] = record.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.params) params[key] = value;
  doc["params"] = params;
  if (!record.formula.empty()) doc["formula"] = record.formula;
  if (!record.results.empty()) {
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.results) results[key] = json_of(value);
    doc["results"] = results;
  }
  if (!record.columns.empty()) {
    doc["columns"] = record.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : record.rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const Value& v : row) r.push_back(json_of(v));
      rows.push_back(r);
    }
    doc["rows"] = rows;
  }
  if (!record.notes.empty()) doc["notes"] = record.notes;
  out << doc.dump(2) << "\n";
}

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"\n ") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void emit_csv(std::ostream& out, const Record& record) {
  out << "# command=" << record.command;
  for (const auto& [key, value] : record.params) out << " " << key << "=" << value;
  out << "\n";
  for (const auto& note : record.notes) out << "# " << note << "\n";
  if (!record.columns.empty()) {
    for (const auto& [key, value] : record.results) {
      out << "# " << key << "=" << value.text << "\n";
    }
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
      out << (i ? "," : "") << csv_quote(record.columns[i]);
    }
    out << "\n";
    for (const auto& row : record.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_quote(row[i].text);
      }
      out << "\n";
    }
    return;
  }
  out << "key,value\n";
  for (const auto& [key, value] : record.results) {
    out << csv_quote(key) << "," << csv_quote(value.text) << "\n";
  }
}

std::string table_cell(const Value& v) {
  if (v.kind == Value::Kind::Rational && v.text.find('/') != std::string::npos) {
    return v.text + " (= " + rational_decimal(ExactRational(v.text)) + ")";
  }
  return v.text;
}

void emit_table(std::ostream& out, const Record& record) {
  out << "command: " << record.command << "\n";
  for (const auto& [key, value] : record.params) out << key << ": " << value << "\n";
  if (!record.formula.empty()) out << "formula: " << record.formula << "\n";
  for (const auto& [key, value] : record.results) {
    out << key << ": " << table_cell(value) << "\n";
  }
  if (!record.columns.empty()) {
    std::vector<std::size_t> widths(record.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
      widths[i] = record.columns[i].size();
    }
    for (const auto& row : record.rows) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line.push_back(table_cell(row[i]));
        widths[i] = std::max(widths[i], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto pad = [&](const std::string& s, std::size_t i, std::size_t n) {
      return i + 1 == n ? s : s + std::string(widths[i] - s.size(), ' ');
    };
    out << "\n";
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
      out << (i ? "  " : "") << pad(record.columns[i], i, record.columns.size());
    }
    out << "\n";
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        out << (i ? "  " : "") << pad(line[i], i, line.size());
      }
      out << "\n";
    }
  }
  for (const auto& note : record.notes) out << "note: " << note << "\n";
}

}  // namespace

void emit(std::ostream& out, const Record& record, Format format) {
  switch (format) {
    case Format::Json: emit_json(out, record); return;
    case Format::Csv: emit_csv(out, record); return;
    case Format::Table: emit_table(out, record); return;
  }
}

}  // namespace permstat::cli
