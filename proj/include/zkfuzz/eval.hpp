#pragma once

#include "zkfuzz/ast.hpp"
#include "zkfuzz/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace zkfuzz {

// Concrete values for a circuit's declared inputs.
using InputAssignment = std::map<std::string, FieldElement>;

// Evaluation semantics switches. The default variant is the reference
// semantics; each switch injects one reproducible bug shape so the oracle
// machinery can be exercised without a real (buggy) toolchain:
//
//   canonicalize_constants=false  constants feed raw integers to bitwise
//                                 operators and the complement of a computed
//                                 zero collapses to zero (the circom
//                                 constant/complement bug family)
//   complement_sign_fault         complement of non-constant operands is
//                                 computed arithmetically as p-1-v (the
//                                 signed-complement bug family)
//   bool_or_const_fold_fault      '||' over two literal operands folds as a
//                                 conjunction (constant-vs-signal Or family)
//   le_const_lhs_fault            '<=' with a literal left operand always
//                                 accepts (constant-argument comparison
//                                 family)
struct SemanticsVariant {
    bool canonicalize_constants = true;
    bool complement_sign_fault = false;
    bool bool_or_const_fold_fault = false;
    bool le_const_lhs_fault = false;

    bool is_default() const {
        return canonicalize_constants && !complement_sign_fault && !bool_or_const_fold_fault &&
               !le_const_lhs_fault;
    }

    // Stable identifiers for the shipped fault switches.
    static const std::vector<std::string> &fault_ids();
    static SemanticsVariant with_fault(const std::string &fault_id);
    std::vector<std::string> active_faults() const;
};

struct EvalResult {
    enum class Kind { Witness, AssertionViolated, EvalError };

    Kind kind;
    // Witness: exactly the declared outputs.
    std::map<std::string, FieldElement> witness;
    // AssertionViolated: 0-based ordinal of the failing assert statement.
    int failed_assert = -1;
    // EvalError:
    EvalFault fault = EvalFault::DivisionByZero;
    std::string fault_site; // "<statement index>:<child path>"

    bool is_witness() const { return kind == Kind::Witness; }
};

// Executes the circuit top to bottom. Assignments bind outputs (readable by
// later statements); the first assert evaluating to 0 wins. Conditionals are
// strict: both branches evaluate and their errors propagate. Never throws on
// circuit-level faults; those are encoded in the result.
//
// Error classes are collected across a whole statement and reported with
// DivisionByZero taking priority over TypeError, so the reported class does
// not depend on operand order (rewrites may commute operands).
EvalResult evaluate(const Circuit &c, const InputAssignment &in, const FieldConfig &cfg,
                    const SemanticsVariant &variant = {});

bool is_sat(const Circuit &c, const InputAssignment &in, const FieldConfig &cfg);

} // namespace zkfuzz
