#pragma once

#include "zkfuzz/ast.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zkfuzz {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string &msg)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

// Raised by parse_circuit when the text parses but violates circuit
// invariants (duplicate names, unassigned outputs, non-Boolean assertions).
struct ValidationFailure : std::runtime_error {
    std::vector<ValidationError> errors;
    explicit ValidationFailure(std::vector<ValidationError> errs);
};

// Parses the one-statement-per-line circuit syntax:
//
//   inputs : in0, pub in1
//   outputs: out0
//   out0 = (in0 + in1)
//   assert(in0 != in1)
//
// The parsed circuit is validated against the full IL operator set.
Circuit parse_circuit(const std::string &text);

// Parses a single expression; `allow_pattern_nodes` enables ?holes and
// $random-constants for the rewrite-rule DSL.
ExprPtr parse_expr_text(const std::string &text, bool allow_pattern_nodes);

// Deterministic, fully parenthesized text. parse_circuit(print_circuit(c))
// is structurally equal to c.
std::string print_circuit(const Circuit &c);
std::string print_expr(const ExprPtr &e);

} // namespace zkfuzz
