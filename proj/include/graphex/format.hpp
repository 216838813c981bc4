#pragma once

#include <string>
#include <string_view>

#include "graphex/graph.hpp"

namespace graphex {

inline constexpr int kFormatVersion = 1;

// Canonical, byte-deterministic rendering of a graph value.
std::string serialize(const GraphValue& g);

// Parses a document, canonicalizes, and validates. Throws ParseError on
// syntax errors and InvalidGraph on invariant violations. Declared
// alphabets, when present, are checked against the records and dropped.
GraphValue parse(std::string_view text);

}  // namespace graphex
