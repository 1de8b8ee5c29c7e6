#pragma once

// .fza automaton files, DOT and JSON emitters, and the command-line driver.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fzdet/determinize.hpp"

namespace fzdet {

// Line-oriented format, '#' starts a comment:
//
//   lattice boolean|godel|product|lukasiewicz|chain:<n>
//   states <n> [name...]
//   alphabet <sym>...
//   initial <n values>
//   terminal <n values>
//   trans <sym>          (once per symbol, followed by n rows of n values)
//
// Throws ParseError with the offending line number.
FuzzyAutomaton parse_automaton(std::string_view text);
FuzzyAutomaton load_automaton(const std::string& path);
std::string serialize_automaton(const FuzzyAutomaton& a);

std::string emit_dot(const Cdfa& c);
std::string emit_text(const Cdfa& c);

nlohmann::json to_json(const Cdfa& c);
nlohmann::json to_json(const FuzzyRelation& r);
nlohmann::json to_json(const DetResult& r, double millis);
// Reads the object produced by to_json(const Cdfa&), or a report wrapping
// it under "cdfa".
Cdfa cdfa_from_json(const nlohmann::json& j);

// Exit codes: 0 success, 1 usage, 2 parse or validation error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fzdet
