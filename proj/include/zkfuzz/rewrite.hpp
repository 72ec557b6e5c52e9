#pragma once

#include "zkfuzz/ast.hpp"
#include "zkfuzz/generator.hpp"
#include "zkfuzz/rng.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zkfuzz {

struct RuleParseError : std::runtime_error {
    explicit RuleParseError(const std::string &msg) : std::runtime_error(msg) {}
};

struct UnboundHoleError : RuleParseError {
    explicit UnboundHoleError(const std::string &msg) : RuleParseError(msg) {}
};

// A rewrite rule {"id", pattern, template}. Patterns may contain ?holes
// (optionally :bool); templates may reference bound holes and introduce
// shared random constants with $name (optionally :bool).
struct RewriteRule {
    std::string id;
    ExprPtr pattern;
    ExprPtr template_expr;
};

RewriteRule parse_rule(const std::string &id, const std::string &pattern_text,
                       const std::string &template_text);

struct RuleSet {
    std::vector<RewriteRule> rules;

    const RewriteRule *find(const std::string &id) const;
};

// One triple per line: {"id", "pattern", "template"}; '#' starts a comment.
RuleSet parse_rules_text(const std::string &text);
RuleSet load_rules_file(const std::string &path);
// The shipped rule set (identity, commutative, associative and distributive
// properties, De Morgan's laws, comparison and conditional identities, ...).
const RuleSet &builtin_rules();

using Binding = std::map<std::string, ExprPtr>;

// Structural match; repeated hole names require structurally equal subtrees,
// :bool holes additionally require the matched expression to infer bool.
std::optional<Binding> match_pattern(const ExprPtr &pattern, const ExprPtr &expr);

// Where and how a rule was applied; replaying the record on the original
// circuit reproduces the transformed circuit exactly.
struct RuleApplication {
    std::string rule_id;
    int stmt_index = 0;
    ExprPath path;
    std::map<std::string, std::string> bindings;     // hole name -> printed expr
    std::map<std::string, BigInt> random_constants;  // $name -> drawn value
};

using TransformationLog = std::vector<RuleApplication>;

struct ApplyResult {
    Circuit circuit;
    RuleApplication record;
};

// Enumerates all match sites across the circuit in statement order
// (pre-order within each expression), keeps the sites whose substitution
// still validates under `ops`, and picks one uniformly. Random constants are
// drawn once per application and shared across template occurrences.
// Returns nullopt when the rule matches nowhere.
std::optional<ApplyResult> apply_rule(const RewriteRule &rule, const Circuit &c,
                                      const GeneratorConfig &cfg, Rng &rng);

// Re-applies a recorded application (same site, same random constants).
Circuit replay_application(const RuleApplication &app, const Circuit &c, const RuleSet &rules);
Circuit replay_log(const TransformationLog &log, const Circuit &c, const RuleSet &rules);

struct NoApplicableRule : std::runtime_error {
    explicit NoApplicableRule(const std::string &msg) : std::runtime_error(msg) {}
};

// Applies k rewrites, k uniform in [1, max_stack], retrying rule selection
// on no-match up to a bounded budget. Throws NoApplicableRule when no rule
// applies anywhere.
std::pair<Circuit, TransformationLog> transform_circuit(const Circuit &c, const RuleSet &rules,
                                                        int max_stack,
                                                        const GeneratorConfig &cfg, Rng &rng);

struct SoundnessCounterexample {
    std::string circuit_before;
    std::string circuit_after;
    std::string inputs;
    std::string detail;
};

struct SoundnessReport {
    std::string rule_id;
    int matched_trials = 0;
    std::vector<SoundnessCounterexample> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

// Checks that a rule preserves evaluation results: for `trials` random
// (circuit, input) pairs where the rule applies, the original and rewritten
// circuits produce identical EvalResults (same witness, same assertion
// verdict, same error class). With exhaustive_inputs, every input assignment
// is enumerated instead of sampled (intended for small primes).
SoundnessReport verify_rule_soundness(const RewriteRule &rule, const GeneratorConfig &cfg,
                                      int trials, Rng &rng, bool exhaustive_inputs = false);

} // namespace zkfuzz
