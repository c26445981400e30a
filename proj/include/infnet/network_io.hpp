#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "infnet/network.hpp"

namespace infnet {

// Line-oriented text format:
//
//   # comment
//   mode restricted|general
//   chain <name>: <id> <id> ...      consecutive ids are linked by an influence
//   event <id> ...                   free events that lie on no chain
//   influence <src> -> <dst>
//
// Events must be declared by a chain or event line before an influence
// refers to them. Errors carry the 1-based line number.
InfluenceNetwork parse_network(std::istream& in);
InfluenceNetwork parse_network(const std::string& text);

// Reads, finalizes and validates. Violations throw validation_failed unless
// `force` is set.
InfluenceNetwork load_network(const std::filesystem::path& path, bool force = false);

// Canonical form: mode, chains by name, free events, then the influences not
// implied by chain lines, sorted.
std::string serialize_network(const InfluenceNetwork& net);

std::string format_violation(const Violation& v);

}  // namespace infnet
