#pragma once

#include <string>

#include "permstat/occupancy.hpp"

namespace permstat::cli {

/// Level-spec document: one level per line,
///   energy=<p/q> degeneracy=<int>
/// with '#' comments and blank lines ignored.
/// Throws std::invalid_argument with the line number on malformed input.
LevelSpec parse_level_text(const std::string& text);

/// Loads and parses a level-spec file; throws std::invalid_argument when
/// the file cannot be read.
LevelSpec load_level_file(const std::string& path);

}  // namespace permstat::cli
