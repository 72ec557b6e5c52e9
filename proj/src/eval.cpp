#include "zkfuzz/eval.hpp"

#include <optional>
#include <stdexcept>

namespace zkfuzz {

const std::vector<std::string> &SemanticsVariant::fault_ids() {
    static const std::vector<std::string> ids = {
        "constants-not-canonicalized",
        "complement-signal-sign",
        "bool-or-const-fold",
        "le-const-lhs",
    };
    return ids;
}

SemanticsVariant SemanticsVariant::with_fault(const std::string &fault_id) {
    SemanticsVariant v;
    if (fault_id == "constants-not-canonicalized")
        v.canonicalize_constants = false;
    else if (fault_id == "complement-signal-sign")
        v.complement_sign_fault = true;
    else if (fault_id == "bool-or-const-fold")
        v.bool_or_const_fold_fault = true;
    else if (fault_id == "le-const-lhs")
        v.le_const_lhs_fault = true;
    else
        throw std::invalid_argument("unknown fault id '" + fault_id + "'");
    return v;
}

std::vector<std::string> SemanticsVariant::active_faults() const {
    std::vector<std::string> out;
    if (!canonicalize_constants)
        out.push_back("constants-not-canonicalized");
    if (complement_sign_fault)
        out.push_back("complement-signal-sign");
    if (bool_or_const_fold_fault)
        out.push_back("bool-or-const-fold");
    if (le_const_lhs_fault)
        out.push_back("le-const-lhs");
    return out;
}

namespace {

std::string site_string(int stmt, const ExprPath &path) {
    std::string s = std::to_string(stmt) + ":";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i)
            s += '.';
        s += std::to_string(path[i]);
    }
    return s;
}

struct Evaluator {
    const FieldConfig &cfg;
    const SemanticsVariant &variant;
    std::map<std::string, FieldElement> env;

    // Per-statement error collection. Both classes are tracked so the
    // reported class is order-independent; DivisionByZero wins.
    bool has_div0 = false;
    bool has_type = false;
    std::string div0_site;
    std::string type_site;
    int stmt_index = 0;

    void record(EvalFault fault, const ExprPath &path) {
        if (fault == EvalFault::DivisionByZero) {
            if (!has_div0)
                div0_site = site_string(stmt_index, path);
            has_div0 = true;
        } else {
            if (!has_type)
                type_site = site_string(stmt_index, path);
            has_type = true;
        }
    }

    bool errored() const { return has_div0 || has_type; }

    using Value = std::optional<FieldElement>;

    Value eval(const ExprPtr &e, ExprPath &path) {
        switch (e->kind) {
        case Expr::Kind::Const:
            return field::canonicalize(e->value, cfg);
        case Expr::Kind::Var: {
            auto it = env.find(e->name);
            if (it == env.end())
                throw std::logic_error("unbound variable '" + e->name + "' (unvalidated circuit?)");
            return it->second;
        }
        case Expr::Kind::Unary:
            return eval_unary(e, path);
        case Expr::Kind::Binary:
            return eval_binary(e, path);
        case Expr::Kind::Cond:
            return eval_cond(e, path);
        case Expr::Kind::Hole:
        case Expr::Kind::RandomConst:
            throw std::logic_error("pattern node reached the evaluator");
        }
        return std::nullopt;
    }

    Value child(const ExprPtr &e, int idx, ExprPath &path) {
        path.push_back(idx);
        Value v = eval(idx == 0 ? e->a : idx == 1 ? e->b : e->c, path);
        path.pop_back();
        return v;
    }

    Value eval_unary(const ExprPtr &e, ExprPath &path) {
        Value v = child(e, 0, path);
        if (!v)
            return std::nullopt;
        try {
            switch (e->uop) {
            case UnaryOp::Neg:
                return field::neg(*v, cfg);
            case UnaryOp::Complement:
                return eval_complement(e, *v);
            case UnaryOp::Not:
                return field::logic_not(*v, cfg);
            }
        } catch (const OpError &err) {
            record(err.fault, path);
        }
        return std::nullopt;
    }

    FieldElement eval_complement(const ExprPtr &e, const FieldElement &v) {
        const bool const_operand = e->a->kind == Expr::Kind::Const;
        if (!variant.canonicalize_constants) {
            if (const_operand) {
                // Raw constant bits, not the canonical residue.
                BigInt raw = e->a->value & cfg.bit_mask();
                return field::canonicalize(cfg.bit_mask() ^ raw, cfg);
            }
            if (v.value == 0) {
                // Computed zero takes the buggy signed path and collapses.
                return FieldElement{BigInt(0)};
            }
        }
        if (variant.complement_sign_fault && !const_operand)
            return field::canonicalize(cfg.prime() - 1 - v.value, cfg);
        return field::complement(v, cfg);
    }

    Value eval_binary(const ExprPtr &e, ExprPath &path) {
        Value l = child(e, 0, path);
        Value r = child(e, 1, path);
        if (!l || !r)
            return std::nullopt;
        try {
            return apply_binary(e, *l, *r);
        } catch (const OpError &err) {
            record(err.fault, path);
            return std::nullopt;
        }
    }

    FieldElement apply_binary(const ExprPtr &e, const FieldElement &l, const FieldElement &r) {
        switch (e->bop) {
        case BinaryOp::Add: return field::add(l, r, cfg);
        case BinaryOp::Sub: return field::sub(l, r, cfg);
        case BinaryOp::Mul: return field::mul(l, r, cfg);
        case BinaryOp::Div: return field::div(l, r, cfg);
        case BinaryOp::Mod: return field::mod(l, r, cfg);
        case BinaryOp::Pow: return field::pow(l, r, cfg);
        case BinaryOp::BitAnd:
        case BinaryOp::BitOr:
        case BinaryOp::BitXor: {
            BigInt a = l.value, b = r.value;
            if (!variant.canonicalize_constants) {
                if (e->a->kind == Expr::Kind::Const)
                    a = e->a->value;
                if (e->b->kind == Expr::Kind::Const)
                    b = e->b->value;
            }
            BigInt out = e->bop == BinaryOp::BitAnd ? (a & b)
                         : e->bop == BinaryOp::BitOr ? (a | b)
                                                     : (a ^ b);
            return field::canonicalize(out, cfg);
        }
        case BinaryOp::LogicAnd: return field::logic_and(l, r);
        case BinaryOp::LogicOr:
            if (variant.bool_or_const_fold_fault && e->a->kind == Expr::Kind::Const &&
                e->b->kind == Expr::Kind::Const)
                return field::logic_and(l, r);
            return field::logic_or(l, r);
        case BinaryOp::LogicXor: return field::logic_xor(l, r);
        case BinaryOp::Eq: return field::eq(l, r);
        case BinaryOp::Neq: return field::neq(l, r);
        case BinaryOp::Lt: return field::lt(l, r);
        case BinaryOp::Le:
            if (variant.le_const_lhs_fault && e->a->kind == Expr::Kind::Const)
                return FieldElement{BigInt(1)};
            return field::le(l, r);
        case BinaryOp::Gt: return field::gt(l, r);
        case BinaryOp::Ge: return field::ge(l, r);
        }
        throw std::logic_error("unhandled binary operator");
    }

    Value eval_cond(const ExprPtr &e, ExprPath &path) {
        Value g = child(e, 0, path);
        Value t = child(e, 1, path);
        Value f = child(e, 2, path);
        if (g && !g->is_bool()) {
            record(EvalFault::TypeError, path);
            return std::nullopt;
        }
        if (!g || !t || !f)
            return std::nullopt;
        return g->value == 1 ? *t : *f;
    }
};

} // namespace

EvalResult evaluate(const Circuit &c, const InputAssignment &in, const FieldConfig &cfg,
                    const SemanticsVariant &variant) {
    Evaluator ev{cfg, variant, {}};
    for (const auto &decl : c.inputs) {
        auto it = in.find(decl.name);
        if (it == in.end())
            throw std::invalid_argument("input assignment misses '" + decl.name + "'");
        ev.env.emplace(decl.name, it->second);
    }

    EvalResult result;
    result.kind = EvalResult::Kind::Witness;
    int assert_ordinal = 0;
    for (std::size_t i = 0; i < c.body.size(); ++i) {
        const Statement &stmt = c.body[i];
        ev.stmt_index = static_cast<int>(i);
        ev.has_div0 = ev.has_type = false;
        ExprPath path;
        auto value = ev.eval(stmt.expr, path);
        if (ev.errored()) {
            result.kind = EvalResult::Kind::EvalError;
            result.fault = ev.has_div0 ? EvalFault::DivisionByZero : EvalFault::TypeError;
            result.fault_site = ev.has_div0 ? ev.div0_site : ev.type_site;
            result.witness.clear();
            return result;
        }
        if (stmt.kind == Statement::Kind::Assign) {
            ev.env.insert_or_assign(stmt.target, *value);
            result.witness.insert_or_assign(stmt.target, *value);
        } else {
            if (value->value == 0) {
                result.kind = EvalResult::Kind::AssertionViolated;
                result.failed_assert = assert_ordinal;
                result.witness.clear();
                return result;
            }
            if (value->value != 1) {
                // Unreachable for validated circuits (assertions are
                // Boolean-typed), kept for robustness on raw ASTs.
                result.kind = EvalResult::Kind::EvalError;
                result.fault = EvalFault::TypeError;
                result.fault_site = site_string(static_cast<int>(i), {});
                result.witness.clear();
                return result;
            }
            ++assert_ordinal;
        }
    }
    return result;
}

bool is_sat(const Circuit &c, const InputAssignment &in, const FieldConfig &cfg) {
    return evaluate(c, in, cfg).is_witness();
}

} // namespace zkfuzz
