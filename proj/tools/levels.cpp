#include "levels.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace permstat::cli {

namespace {

[[noreturn]] void bad_line(unsigned long line, const std::string& why) {
  throw std::invalid_argument("level file line " + std::to_string(line) + ": " + why);
}

}  // namespace

LevelSpec parse_level_text(const std::string& text) {
  LevelSpec spec;
  std::istringstream in(text);
  std::string line;
  unsigned long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string energy_field, degeneracy_field, extra;
    if (!(fields >> energy_field)) continue;  // blank or comment-only line
    if (!(fields >> degeneracy_field)) bad_line(line_no, "expected two fields");
    if (fields >> extra) bad_line(line_no, "unexpected trailing field '" + extra + "'");
    if (energy_field.rfind("energy=", 0) != 0) {
      bad_line(line_no, "expected 'energy=<p/q>', got '" + energy_field + "'");
    }
    if (degeneracy_field.rfind("degeneracy=", 0) != 0) {
      bad_line(line_no, "expected 'degeneracy=<int>', got '" + degeneracy_field + "'");
    }
    Level level;
    try {
      level.energy = ExactRational(energy_field.substr(7));
    } catch (const std::exception& e) {
      bad_line(line_no, std::string("bad energy: ") + e.what());
    }
    std::string deg = degeneracy_field.substr(11);
    if (deg.empty() || deg.find_first_not_of("0123456789") != std::string::npos) {
      bad_line(line_no, "bad degeneracy '" + deg + "'");
    }
    try {
      level.degeneracy = std::stoul(deg);
    } catch (const std::out_of_range&) {
      bad_line(line_no, "degeneracy '" + deg + "' out of range");
    }
    if (level.degeneracy == 0) bad_line(line_no, "degeneracy must be >= 1");
    spec.levels.push_back(std::move(level));
  }
  if (spec.levels.empty()) {
    throw std::invalid_argument("level file declares no levels");
  }
  return spec;
}

LevelSpec load_level_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read level file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_level_text(buffer.str());
}

}  // namespace permstat::cli
