#pragma once

#include "zkfuzz/bigint.hpp"

#include <stdexcept>
#include <string>

namespace zkfuzz {

enum class EvalFault { DivisionByZero, TypeError };

const char *fault_name(EvalFault f);

// Thrown by field operations on undefined cases (x/0, x%0, Boolean ops on
// values outside {0,1}). The evaluator catches these and records them in the
// EvalResult; they never escape a pipeline run.
struct OpError : std::runtime_error {
    EvalFault fault;
    OpError(EvalFault f, const std::string &msg) : std::runtime_error(msg), fault(f) {}
};

// A prime field together with the bit width used for bitwise operators:
// the smallest n with 2^n >= p.
class FieldConfig {
public:
    FieldConfig(BigInt prime, std::string name);

    static const FieldConfig &bn254();
    // Accepts a well-known name ("bn254") or a decimal prime string.
    static FieldConfig from_spec(const std::string &spec);

    const BigInt &prime() const { return prime_; }
    unsigned bit_width() const { return bits_; }
    const std::string &name() const { return name_; }
    // 2^bit_width - 1, the mask bitwise operators work under.
    const BigInt &bit_mask() const { return mask_; }

    bool operator==(const FieldConfig &o) const { return prime_ == o.prime_; }

private:
    BigInt prime_;
    BigInt mask_;
    unsigned bits_ = 0;
    std::string name_;
};

// Canonical residue in [0, p). Field values are always canonical; raw
// integers enter only through canonicalize().
struct FieldElement {
    BigInt value;

    bool operator==(const FieldElement &o) const { return value == o.value; }
    bool operator!=(const FieldElement &o) const { return value != o.value; }
    bool is_bool() const { return value == 0 || value == 1; }
    std::string str() const { return value.str(); }
};

namespace field {

// Maps any signed integer into [0, p); negative values wrap (-1 -> p-1).
FieldElement canonicalize(const BigInt &x, const FieldConfig &cfg);

FieldElement add(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg);
FieldElement sub(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg);
FieldElement mul(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg);
// Field division a * b^-1; throws OpError(DivisionByZero) when b == 0.
FieldElement div(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg);
// Integer remainder of the canonical representatives; throws on b == 0.
FieldElement mod(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg);
// Modular exponentiation of canonical representatives; 0^0 = 1.
FieldElement pow(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg);

FieldElement bit_and(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg);
FieldElement bit_or(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg);
FieldElement bit_xor(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg);

FieldElement neg(const FieldElement &a, const FieldConfig &cfg);
// (2^n - 1) XOR a, canonicalized.
FieldElement complement(const FieldElement &a, const FieldConfig &cfg);
// Boolean not; throws OpError(TypeError) unless a is 0 or 1.
FieldElement logic_not(const FieldElement &a, const FieldConfig &cfg);

FieldElement eq(const FieldElement &a, const FieldElement &b);
FieldElement neq(const FieldElement &a, const FieldElement &b);
FieldElement lt(const FieldElement &a, const FieldElement &b);
FieldElement le(const FieldElement &a, const FieldElement &b);
FieldElement gt(const FieldElement &a, const FieldElement &b);
FieldElement ge(const FieldElement &a, const FieldElement &b);

// Boolean connectives; throw OpError(TypeError) on operands outside {0,1}.
FieldElement logic_and(const FieldElement &a, const FieldElement &b);
FieldElement logic_or(const FieldElement &a, const FieldElement &b);
FieldElement logic_xor(const FieldElement &a, const FieldElement &b);

} // namespace field

} // namespace zkfuzz
