#include "zkfuzz/generator.hpp"

namespace zkfuzz {

void GeneratorConfig::check() const {
    if (max_inputs < 0 || max_outputs < 0 || max_assertions < 0 || max_expr_depth < 0)
        throw ConfigError("generator maxima must be non-negative");
    if (max_outputs == 0 && max_assertions == 0)
        throw ConfigError("a circuit must constrain something: "
                          "max_outputs and max_assertions cannot both be 0");
    if (boundary_probability < 0.0 || boundary_probability > 1.0)
        throw ConfigError("boundary_probability must lie in [0, 1]");
    if (allowed_ops.empty())
        throw ConfigError("allowed operator set is empty");
}

std::vector<BigInt> GeneratorConfig::effective_boundary_constants() const {
    if (!boundary_constants.empty())
        return boundary_constants;
    return {BigInt(0), BigInt(1), field.prime(), field.prime() - 1};
}

namespace {

template <typename T> struct Weighted {
    T item;
    double weight;
};

template <typename T> const T &pick_weighted(const std::vector<Weighted<T>> &choices, Rng &rng) {
    double total = 0;
    for (const auto &c : choices)
        total += c.weight;
    const double r = static_cast<double>(rng.below(uint64_t(1) << 53)) /
                     static_cast<double>(uint64_t(1) << 53) * total;
    double acc = 0;
    for (const auto &c : choices) {
        acc += c.weight;
        if (r < acc)
            return c.item;
    }
    return choices.back().item;
}

enum class Production { LeafConst, LeafVar, Unary, Binary, Conditional };

struct ExprGen {
    const GeneratorConfig &cfg;
    Rng &rng;
    std::vector<std::string> vars; // inputs plus already-assigned outputs

    std::vector<UnaryOp> unary_ops(bool want_bool) const {
        std::vector<UnaryOp> ops;
        if (want_bool) {
            if (cfg.allowed_ops.allows(UnaryOp::Not))
                ops.push_back(UnaryOp::Not);
        } else {
            if (cfg.allowed_ops.allows(UnaryOp::Neg))
                ops.push_back(UnaryOp::Neg);
            if (cfg.allowed_ops.allows(UnaryOp::Complement))
                ops.push_back(UnaryOp::Complement);
        }
        return ops;
    }

    std::vector<BinaryOp> binary_ops(bool want_bool) const {
        std::vector<BinaryOp> ops;
        for (BinaryOp op : cfg.allowed_ops.binary) {
            const bool produces_bool = is_comparison(op) || is_boolean_connective(op);
            if (produces_bool == want_bool)
                ops.push_back(op);
        }
        return ops;
    }

    BigInt random_constant() {
        if (rng.chance(cfg.boundary_probability)) {
            const auto boundary = cfg.effective_boundary_constants();
            return boundary[rng.below(boundary.size())];
        }
        return rng.big_below(cfg.field.prime());
    }

    ExprPtr leaf(bool want_bool) {
        if (want_bool)
            return Expr::constant(BigInt(rng.below(2)));
        const double wc = cfg.weights.leaf_const;
        const double wv = vars.empty() ? 0.0 : cfg.weights.leaf_var;
        if (wv > 0) {
            std::vector<Weighted<Production>> c = {{Production::LeafConst, wc},
                                                   {Production::LeafVar, wv}};
            if (pick_weighted(c, rng) == Production::LeafVar)
                return Expr::var(vars[rng.below(vars.size())]);
        }
        return Expr::constant(random_constant());
    }

    ExprPtr gen(int depth, bool want_bool) {
        if (depth <= 0)
            return leaf(want_bool);

        const auto unaries = unary_ops(want_bool);
        const auto binaries = binary_ops(want_bool);

        std::vector<Weighted<Production>> classes;
        classes.push_back({Production::LeafConst, cfg.weights.leaf_const});
        if (!want_bool && !vars.empty())
            classes.push_back({Production::LeafVar, cfg.weights.leaf_var});
        if (!unaries.empty())
            classes.push_back({Production::Unary, cfg.weights.unary});
        if (!binaries.empty())
            classes.push_back({Production::Binary, cfg.weights.binary});
        if (cfg.allowed_ops.conditional)
            classes.push_back({Production::Conditional, cfg.weights.conditional});

        switch (pick_weighted(classes, rng)) {
        case Production::LeafConst:
        case Production::LeafVar:
            return leaf(want_bool);
        case Production::Unary: {
            std::vector<Weighted<UnaryOp>> ops;
            for (UnaryOp op : unaries)
                ops.push_back({op, cfg.weights.op_weight(unary_op_symbol(op))});
            const UnaryOp op = pick_weighted(ops, rng);
            const bool operand_bool = op == UnaryOp::Not;
            return Expr::unary(op, gen(depth - 1, operand_bool));
        }
        case Production::Binary: {
            std::vector<Weighted<BinaryOp>> ops;
            for (BinaryOp op : binaries)
                ops.push_back({op, cfg.weights.op_weight(binary_op_symbol(op))});
            const BinaryOp op = pick_weighted(ops, rng);
            const bool operand_bool = is_boolean_connective(op);
            return Expr::binary(op, gen(depth - 1, operand_bool), gen(depth - 1, operand_bool));
        }
        case Production::Conditional:
            return Expr::cond(gen(depth - 1, true), gen(depth - 1, want_bool),
                              gen(depth - 1, want_bool));
        }
        return leaf(want_bool);
    }
};

} // namespace

Circuit generate_circuit(const GeneratorConfig &cfg, Rng &rng) {
    cfg.check();

    int n_inputs = static_cast<int>(rng.below(cfg.max_inputs + 1));
    int n_outputs = static_cast<int>(rng.below(cfg.max_outputs + 1));
    int n_asserts = static_cast<int>(rng.below(cfg.max_assertions + 1));
    if (n_outputs == 0 && n_asserts == 0) {
        if (cfg.max_outputs > 0)
            n_outputs = 1;
        else
            n_asserts = 1;
    }

    Circuit c;
    for (int i = 0; i < n_inputs; ++i)
        c.inputs.push_back({"in" + std::to_string(i), false});
    for (int i = 0; i < n_outputs; ++i)
        c.outputs.push_back("out" + std::to_string(i));

    ExprGen gen{cfg, rng, {}};
    for (const auto &in : c.inputs)
        gen.vars.push_back(in.name);

    for (const auto &out : c.outputs) {
        c.body.push_back(Statement::assign(out, gen.gen(cfg.max_expr_depth, false)));
        gen.vars.push_back(out); // later statements may read it
    }
    for (int i = 0; i < n_asserts; ++i)
        c.body.push_back(Statement::assertion(gen.gen(cfg.max_expr_depth, true)));
    return c;
}

InputAssignment generate_inputs(const Circuit &c, const GeneratorConfig &cfg, Rng &rng) {
    InputAssignment in;
    const auto boundary = cfg.effective_boundary_constants();
    for (const auto &decl : c.inputs) {
        if (!boundary.empty() && rng.chance(cfg.boundary_probability))
            in.emplace(decl.name, field::canonicalize(boundary[rng.below(boundary.size())],
                                                      cfg.field));
        else
            in.emplace(decl.name, FieldElement{rng.big_below(cfg.field.prime())});
    }
    return in;
}

} // namespace zkfuzz
