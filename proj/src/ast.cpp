#include "zkfuzz/ast.hpp"

#include <map>
#include <stdexcept>

namespace zkfuzz {

const char *unary_op_symbol(UnaryOp op) {
    switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Complement: return "~";
    case UnaryOp::Not: return "!";
    }
    return "?";
}

const char *binary_op_symbol(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Pow: return "**";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::BitXor: return "^";
    case BinaryOp::LogicAnd: return "&&";
    case BinaryOp::LogicOr: return "||";
    case BinaryOp::LogicXor: return "^^";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Neq: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    }
    return "?";
}

bool is_comparison(BinaryOp op) {
    switch (op) {
    case BinaryOp::Eq: case BinaryOp::Neq:
    case BinaryOp::Lt: case BinaryOp::Le:
    case BinaryOp::Gt: case BinaryOp::Ge:
        return true;
    default:
        return false;
    }
}

bool is_boolean_connective(BinaryOp op) {
    return op == BinaryOp::LogicAnd || op == BinaryOp::LogicOr || op == BinaryOp::LogicXor;
}

bool is_bitwise(BinaryOp op) {
    return op == BinaryOp::BitAnd || op == BinaryOp::BitOr || op == BinaryOp::BitXor;
}

bool is_arithmetic(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: case BinaryOp::Sub: case BinaryOp::Mul:
    case BinaryOp::Div: case BinaryOp::Mod: case BinaryOp::Pow:
        return true;
    default:
        return false;
    }
}

ExprPtr Expr::constant(BigInt v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Const;
    e->value = std::move(v);
    return e;
}

ExprPtr Expr::var(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Var;
    e->name = std::move(name);
    return e;
}

ExprPtr Expr::unary(UnaryOp op, ExprPtr operand) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Unary;
    e->uop = op;
    e->a = std::move(operand);
    return e;
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Binary;
    e->bop = op;
    e->a = std::move(l);
    e->b = std::move(r);
    return e;
}

ExprPtr Expr::cond(ExprPtr guard, ExprPtr then_e, ExprPtr else_e) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Cond;
    e->a = std::move(guard);
    e->b = std::move(then_e);
    e->c = std::move(else_e);
    return e;
}

ExprPtr Expr::hole(std::string name, bool is_bool) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Hole;
    e->name = std::move(name);
    e->bool_hole = is_bool;
    return e;
}

ExprPtr Expr::random_const(std::string name, bool is_bool) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::RandomConst;
    e->name = std::move(name);
    e->bool_hole = is_bool;
    return e;
}

bool structurally_equal(const ExprPtr &a, const ExprPtr &b) {
    if (a.get() == b.get())
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    switch (a->kind) {
    case Expr::Kind::Const:
        return a->value == b->value;
    case Expr::Kind::Var:
        return a->name == b->name;
    case Expr::Kind::Hole:
    case Expr::Kind::RandomConst:
        return a->name == b->name && a->bool_hole == b->bool_hole;
    case Expr::Kind::Unary:
        return a->uop == b->uop && structurally_equal(a->a, b->a);
    case Expr::Kind::Binary:
        return a->bop == b->bop && structurally_equal(a->a, b->a) &&
               structurally_equal(a->b, b->b);
    case Expr::Kind::Cond:
        return structurally_equal(a->a, b->a) && structurally_equal(a->b, b->b) &&
               structurally_equal(a->c, b->c);
    }
    return false;
}

std::size_t node_count(const ExprPtr &e) {
    if (!e)
        return 0;
    return 1 + node_count(e->a) + node_count(e->b) + node_count(e->c);
}

bool has_pattern_nodes(const ExprPtr &e) {
    if (!e)
        return false;
    if (e->kind == Expr::Kind::Hole || e->kind == Expr::Kind::RandomConst)
        return true;
    return has_pattern_nodes(e->a) || has_pattern_nodes(e->b) || has_pattern_nodes(e->c);
}

bool infer_bool(const ExprPtr &e) {
    switch (e->kind) {
    case Expr::Kind::Const:
        return e->value == 0 || e->value == 1;
    case Expr::Kind::Var:
        return false;
    case Expr::Kind::Unary:
        return e->uop == UnaryOp::Not;
    case Expr::Kind::Binary:
        return is_comparison(e->bop) || is_boolean_connective(e->bop);
    case Expr::Kind::Cond:
        return infer_bool(e->b) && infer_bool(e->c);
    case Expr::Kind::Hole:
    case Expr::Kind::RandomConst:
        return e->bool_hole;
    }
    return false;
}

static ExprPtr child(const ExprPtr &e, int idx) {
    switch (idx) {
    case 0: return e->a;
    case 1: return e->b;
    case 2: return e->c;
    default: return nullptr;
    }
}

ExprPtr subexpr_at(const ExprPtr &root, const ExprPath &path) {
    ExprPtr cur = root;
    for (int idx : path) {
        cur = child(cur, idx);
        if (!cur)
            throw std::out_of_range("expression path does not exist");
    }
    return cur;
}

ExprPtr replace_at(const ExprPtr &root, const ExprPath &path, const ExprPtr &replacement) {
    if (path.empty())
        return replacement;
    ExprPath rest(path.begin() + 1, path.end());
    ExprPtr ca = root->a, cb = root->b, cc = root->c;
    switch (path.front()) {
    case 0: ca = replace_at(root->a, rest, replacement); break;
    case 1: cb = replace_at(root->b, rest, replacement); break;
    case 2: cc = replace_at(root->c, rest, replacement); break;
    default: throw std::out_of_range("bad expression path step");
    }
    auto e = std::make_shared<Expr>(*root);
    e->a = std::move(ca);
    e->b = std::move(cb);
    e->c = std::move(cc);
    return e;
}

Statement Statement::assign(std::string target, ExprPtr rhs) {
    Statement s;
    s.kind = Kind::Assign;
    s.target = std::move(target);
    s.expr = std::move(rhs);
    return s;
}

Statement Statement::assertion(ExprPtr cond) {
    Statement s;
    s.kind = Kind::Assert;
    s.expr = std::move(cond);
    return s;
}

std::size_t Circuit::node_count() const {
    std::size_t n = 0;
    for (const auto &s : body)
        n += zkfuzz::node_count(s.expr);
    return n;
}

bool structurally_equal(const Circuit &a, const Circuit &b) {
    if (a.inputs.size() != b.inputs.size() || a.outputs.size() != b.outputs.size() ||
        a.body.size() != b.body.size())
        return false;
    for (std::size_t i = 0; i < a.inputs.size(); ++i)
        if (a.inputs[i].name != b.inputs[i].name || a.inputs[i].is_public != b.inputs[i].is_public)
            return false;
    if (a.outputs != b.outputs)
        return false;
    for (std::size_t i = 0; i < a.body.size(); ++i) {
        if (a.body[i].kind != b.body[i].kind || a.body[i].target != b.body[i].target ||
            !structurally_equal(a.body[i].expr, b.body[i].expr))
            return false;
    }
    return true;
}

OperatorSet OperatorSet::all() {
    OperatorSet s;
    s.unary = {UnaryOp::Neg, UnaryOp::Complement, UnaryOp::Not};
    s.binary = {BinaryOp::Add,      BinaryOp::Sub,      BinaryOp::Mul,     BinaryOp::Div,
                BinaryOp::Mod,      BinaryOp::Pow,      BinaryOp::BitAnd,  BinaryOp::BitOr,
                BinaryOp::BitXor,   BinaryOp::LogicAnd, BinaryOp::LogicOr, BinaryOp::LogicXor,
                BinaryOp::Eq,       BinaryOp::Neq,      BinaryOp::Lt,      BinaryOp::Le,
                BinaryOp::Gt,       BinaryOp::Ge};
    s.conditional = true;
    return s;
}

const char *validation_code_name(ValidationError::Code code) {
    using Code = ValidationError::Code;
    switch (code) {
    case Code::DuplicateName: return "DuplicateName";
    case Code::UnknownVariable: return "UnknownVariable";
    case Code::OutputNotAssigned: return "OutputNotAssigned";
    case Code::OutputReassigned: return "OutputReassigned";
    case Code::AssignToNonOutput: return "AssignToNonOutput";
    case Code::NonBooleanAssertion: return "NonBooleanAssertion";
    case Code::UnsupportedOperator: return "UnsupportedOperator";
    case Code::PatternNodeInCircuit: return "PatternNodeInCircuit";
    }
    return "?";
}

namespace {

struct Validator {
    const OperatorSet &ops;
    std::vector<ValidationError> errors;
    std::set<std::string> visible; // inputs plus already-assigned outputs

    void fail(ValidationError::Code code, std::string msg) {
        errors.push_back({code, std::move(msg)});
    }

    void check_expr(const ExprPtr &e) {
        switch (e->kind) {
        case Expr::Kind::Const:
            break;
        case Expr::Kind::Var:
            if (visible.count(e->name) == 0)
                fail(ValidationError::Code::UnknownVariable,
                     "variable '" + e->name + "' is not an input or a previously assigned output");
            break;
        case Expr::Kind::Unary:
            if (!ops.allows(e->uop))
                fail(ValidationError::Code::UnsupportedOperator,
                     std::string("operator '") + unary_op_symbol(e->uop) +
                         "' is not in the allowed set");
            check_expr(e->a);
            break;
        case Expr::Kind::Binary:
            if (!ops.allows(e->bop))
                fail(ValidationError::Code::UnsupportedOperator,
                     std::string("operator '") + binary_op_symbol(e->bop) +
                         "' is not in the allowed set");
            check_expr(e->a);
            check_expr(e->b);
            break;
        case Expr::Kind::Cond:
            if (!ops.conditional)
                fail(ValidationError::Code::UnsupportedOperator,
                     "conditional operator is not in the allowed set");
            check_expr(e->a);
            check_expr(e->b);
            check_expr(e->c);
            break;
        case Expr::Kind::Hole:
        case Expr::Kind::RandomConst:
            fail(ValidationError::Code::PatternNodeInCircuit,
                 "pattern node '" + e->name + "' in circuit expression");
            break;
        }
    }
};

} // namespace

std::vector<ValidationError> validate(const Circuit &c, const OperatorSet &ops) {
    Validator v{ops, {}, {}};

    std::set<std::string> declared;
    for (const auto &in : c.inputs) {
        if (!declared.insert(in.name).second)
            v.fail(ValidationError::Code::DuplicateName, "duplicate name '" + in.name + "'");
        v.visible.insert(in.name);
    }
    std::set<std::string> output_names;
    for (const auto &out : c.outputs) {
        if (!declared.insert(out).second)
            v.fail(ValidationError::Code::DuplicateName, "duplicate name '" + out + "'");
        output_names.insert(out);
    }

    std::set<std::string> assigned;
    for (const auto &stmt : c.body) {
        v.check_expr(stmt.expr);
        if (stmt.kind == Statement::Kind::Assign) {
            if (output_names.count(stmt.target) == 0)
                v.fail(ValidationError::Code::AssignToNonOutput,
                       "assignment target '" + stmt.target + "' is not a declared output");
            else if (!assigned.insert(stmt.target).second)
                v.fail(ValidationError::Code::OutputReassigned,
                       "output '" + stmt.target + "' assigned more than once");
            else
                v.visible.insert(stmt.target);
        } else {
            if (!infer_bool(stmt.expr))
                v.fail(ValidationError::Code::NonBooleanAssertion,
                       "assertion expression is not Boolean-typed");
        }
    }
    for (const auto &out : c.outputs)
        if (assigned.count(out) == 0)
            v.fail(ValidationError::Code::OutputNotAssigned,
                   "output '" + out + "' is never assigned");
    return v.errors;
}

} // namespace zkfuzz
