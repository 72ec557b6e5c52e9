#pragma once

#include "zkfuzz/ast.hpp"
#include "zkfuzz/eval.hpp"
#include "zkfuzz/field.hpp"
#include "zkfuzz/rng.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace zkfuzz {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// Grammar weights: one weight per production class plus optional per-operator
// overrides keyed by the operator symbol ("+", "**", "&&", ...).
struct GrammarWeights {
    double leaf_const = 1.0;
    double leaf_var = 2.0;
    double unary = 1.0;
    double binary = 4.0;
    double conditional = 1.0;
    std::map<std::string, double> op_weights;

    double op_weight(const std::string &symbol) const {
        auto it = op_weights.find(symbol);
        return it == op_weights.end() ? 1.0 : it->second;
    }
};

struct GeneratorConfig {
    int max_inputs = 2;
    int max_outputs = 2;
    int max_assertions = 2;
    int max_expr_depth = 4;
    OperatorSet allowed_ops = OperatorSet::all();
    GrammarWeights weights;
    // Interesting constants kept raw (e.g. the field prime itself); empty
    // means the default set {0, 1, p, p-1}.
    std::vector<BigInt> boundary_constants;
    double boundary_probability = 0.05;
    FieldConfig field = FieldConfig::bn254();

    // Throws ConfigError when an invariant is violated.
    void check() const;
    std::vector<BigInt> effective_boundary_constants() const;
};

// Draws a random well-formed circuit: input/output/assert counts uniform
// within the configured maxima (with at least one output or assertion),
// expressions depth-bounded, Boolean contexts restricted to bool-producing
// productions. Deterministic for a given (config, rng state).
Circuit generate_circuit(const GeneratorConfig &cfg, Rng &rng);

// Uniform field elements per input; with boundary_probability a boundary
// constant is chosen instead (canonicalized into the field).
InputAssignment generate_inputs(const Circuit &c, const GeneratorConfig &cfg, Rng &rng);

} // namespace zkfuzz
