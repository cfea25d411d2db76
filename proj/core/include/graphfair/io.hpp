#pragma once

#include <stdexcept>
#include <string>

#include "graphfair/valuation.hpp"

namespace graphfair {

enum class ParseErrorCode {
  MalformedDocument,     // not JSON, wrong shape, wrong types, non-canonical ordering
  DimensionMismatch,     // value arrays or tables disagree with n / m
  NegativeValue,         // valuations must be nonnegative
  NonCanonicalRational,  // fractions must be "p/q" in lowest terms, q >= 2
  LoopEdge,              // edge [i, i]
  DuplicateEdge,         // repeated unordered pair
  IndexOutOfRange,       // vertex or good index outside 0..m-1
};

const char* parse_error_code_name(ParseErrorCode code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, const std::string& message)
      : std::runtime_error(std::string(parse_error_code_name(code)) + ": " + message), code_(code) {}

  ParseErrorCode code() const { return code_; }

 private:
  ParseErrorCode code_;
};

// Instance document:
//   {"n": 2,
//    "graph": {"m": 3, "edges": [[0,1],[1,2]]},
//    "valuations": {"type": "additive", "values": [[1,2,1],[1,2,1]]}}
// Tabulated form: {"type": "table", "values": [{"0": 0, "1": 1, ...}, ...]}
// where each table maps every bundle bitmask (as a decimal string) to a value.
// Values are integers or fractions "p/q" in lowest terms with q >= 2.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Allocation document: {"bundles": [[0,1],[2]]} with each list sorted
// ascending. Serialization is canonical: fixed key order, sorted lists, so a
// parse/serialize round trip is byte-identical.
Allocation parse_allocation(const std::string& text);
std::string serialize_allocation(const Allocation& alloc);

}  // namespace graphfair
