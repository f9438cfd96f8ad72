#pragma once

// Register of known violations: checks that fail on a documented family of
// rings. A violation matching an entry is reported but does not fail a run.

#include <optional>
#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

struct EdgeCase {
  std::string check;
  std::string when;  ///< predicate over the ring, see ring_matches
  std::string source;
  std::string note;
};

/// Entries compiled in from data/edge_cases.json.
const std::vector<EdgeCase>& edge_cases();

/// Parses a register document; throws InvalidArgument on bad input.
std::vector<EdgeCase> parse_edge_cases(const std::string& json_text);

/// Evaluates a predicate such as "min_count == 2 && some_q == 2". Atoms:
/// min_count OP N, some_q OP P, no_q OP P with OP one of == >= <= > <,
/// joined by &&.
bool ring_matches(const std::string& when, const Ring& R);

std::optional<EdgeCase> find_edge_case(const std::string& check, const Ring& R);

}  // namespace zdg
