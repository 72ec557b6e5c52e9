#include "zkfuzz/field.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace zkfuzz {

const char *fault_name(EvalFault f) {
    switch (f) {
    case EvalFault::DivisionByZero: return "DivisionByZero";
    case EvalFault::TypeError: return "TypeError";
    }
    return "?";
}

FieldConfig::FieldConfig(BigInt prime, std::string name)
    : prime_(std::move(prime)), name_(std::move(name)) {
    if (prime_ < 2)
        throw std::invalid_argument("field prime must be >= 2: " + prime_.str());
    if (prime_ != 2 && !boost::multiprecision::miller_rabin_test(prime_, 25))
        throw std::invalid_argument("field modulus is not prime: " + prime_.str());
    // Smallest n with 2^n >= p. msb() is the 0-based index of the top bit.
    bits_ = static_cast<unsigned>(boost::multiprecision::msb(prime_)) + 1;
    if ((BigInt(1) << (bits_ - 1)) == prime_)
        bits_ -= 1; // exact power of two (p = 2)
    mask_ = (BigInt(1) << bits_) - 1;
}

const FieldConfig &FieldConfig::bn254() {
    static const FieldConfig cfg(
        BigInt("21888242871839275222246405745257275088548364400416034343698204186575808495617"),
        "bn254");
    return cfg;
}

FieldConfig FieldConfig::from_spec(const std::string &spec) {
    if (spec == "bn254")
        return bn254();
    if (spec.empty() || spec.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("unknown field '" + spec +
                                    "' (expected a name or a decimal prime)");
    return FieldConfig(BigInt(spec), "p" + spec);
}

namespace field {

FieldElement canonicalize(const BigInt &x, const FieldConfig &cfg) {
    BigInt r = x % cfg.prime();
    if (r < 0)
        r += cfg.prime();
    return FieldElement{std::move(r)};
}

FieldElement add(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg) {
    return canonicalize(a.value + b.value, cfg);
}

FieldElement sub(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg) {
    return canonicalize(a.value - b.value, cfg);
}

FieldElement mul(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg) {
    return canonicalize(a.value * b.value, cfg);
}

FieldElement div(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg) {
    if (b.value == 0)
        throw OpError(EvalFault::DivisionByZero, "division by zero");
    // p is prime, so b^(p-2) is the inverse of b (Fermat).
    BigInt inv = boost::multiprecision::powm(b.value, cfg.prime() - 2, cfg.prime());
    return canonicalize(a.value * inv, cfg);
}

FieldElement mod(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg) {
    if (b.value == 0)
        throw OpError(EvalFault::DivisionByZero, "modulo by zero");
    return FieldElement{a.value % b.value};
}

FieldElement pow(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg) {
    if (b.value == 0)
        return FieldElement{BigInt(1)}; // includes 0^0 = 1
    return FieldElement{boost::multiprecision::powm(a.value, b.value, cfg.prime())};
}

FieldElement bit_and(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg) {
    return canonicalize(a.value & b.value, cfg);
}

FieldElement bit_or(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg) {
    return canonicalize(a.value | b.value, cfg);
}

FieldElement bit_xor(const FieldElement &a, const FieldElement &b, const FieldConfig &cfg) {
    return canonicalize(a.value ^ b.value, cfg);
}

FieldElement neg(const FieldElement &a, const FieldConfig &cfg) {
    return canonicalize(-a.value, cfg);
}

FieldElement complement(const FieldElement &a, const FieldConfig &cfg) {
    return canonicalize(cfg.bit_mask() ^ a.value, cfg);
}

FieldElement logic_not(const FieldElement &a, const FieldConfig &) {
    if (!a.is_bool())
        throw OpError(EvalFault::TypeError, "! applied to non-Boolean value " + a.str());
    return FieldElement{BigInt(1 - a.value)};
}

static FieldElement flag(bool b) { return FieldElement{BigInt(b ? 1 : 0)}; }

FieldElement eq(const FieldElement &a, const FieldElement &b) { return flag(a.value == b.value); }
FieldElement neq(const FieldElement &a, const FieldElement &b) { return flag(a.value != b.value); }
FieldElement lt(const FieldElement &a, const FieldElement &b) { return flag(a.value < b.value); }
FieldElement le(const FieldElement &a, const FieldElement &b) { return flag(a.value <= b.value); }
FieldElement gt(const FieldElement &a, const FieldElement &b) { return flag(a.value > b.value); }
FieldElement ge(const FieldElement &a, const FieldElement &b) { return flag(a.value >= b.value); }

static void require_bool(const FieldElement &v, const char *op) {
    if (!v.is_bool())
        throw OpError(EvalFault::TypeError,
                      std::string(op) + " applied to non-Boolean value " + v.str());
}

FieldElement logic_and(const FieldElement &a, const FieldElement &b) {
    require_bool(a, "&&");
    require_bool(b, "&&");
    return flag(a.value == 1 && b.value == 1);
}

FieldElement logic_or(const FieldElement &a, const FieldElement &b) {
    require_bool(a, "||");
    require_bool(b, "||");
    return flag(a.value == 1 || b.value == 1);
}

FieldElement logic_xor(const FieldElement &a, const FieldElement &b) {
    require_bool(a, "^^");
    require_bool(b, "^^");
    return flag(a.value != b.value);
}

} // namespace field

} // namespace zkfuzz
