#pragma once

#include "zkfuzz/bigint.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zkfuzz {

enum class UnaryOp { Neg, Complement, Not };

enum class BinaryOp {
    Add, Sub, Mul, Div, Mod, Pow,
    BitAnd, BitOr, BitXor,
    LogicAnd, LogicOr, LogicXor,
    Eq, Neq, Lt, Le, Gt, Ge,
};

const char *unary_op_symbol(UnaryOp op);
const char *binary_op_symbol(BinaryOp op);
bool is_comparison(BinaryOp op);
bool is_boolean_connective(BinaryOp op);
bool is_bitwise(BinaryOp op);
bool is_arithmetic(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// One immutable expression node. Circuits use Const/Var/Unary/Binary/Cond;
// rewrite-rule patterns and templates additionally use Hole (?name) and
// RandomConst ($name).
struct Expr {
    enum class Kind { Const, Var, Unary, Binary, Cond, Hole, RandomConst };

    Kind kind;
    BigInt value;       // Const: raw integer as written (may exceed the prime)
    std::string name;   // Var / Hole / RandomConst
    bool bool_hole = false; // Hole / RandomConst carry an optional :bool type
    UnaryOp uop{};
    BinaryOp bop{};
    ExprPtr a, b, c;    // operands; Cond uses a ? b : c

    static ExprPtr constant(BigInt v);
    static ExprPtr var(std::string name);
    static ExprPtr unary(UnaryOp op, ExprPtr e);
    static ExprPtr binary(BinaryOp op, ExprPtr l, ExprPtr r);
    static ExprPtr cond(ExprPtr guard, ExprPtr then_e, ExprPtr else_e);
    static ExprPtr hole(std::string name, bool is_bool);
    static ExprPtr random_const(std::string name, bool is_bool);
};

bool structurally_equal(const ExprPtr &a, const ExprPtr &b);
std::size_t node_count(const ExprPtr &e);
// True if the tree contains a Hole or RandomConst node.
bool has_pattern_nodes(const ExprPtr &e);

// Syntactic Boolean-subtype inference: Const 0/1, comparisons, Boolean
// connectives, !, and conditionals whose branches are both bool. Variables
// are field.
bool infer_bool(const ExprPtr &e);

// Child-index path from an expression root to a subexpression.
using ExprPath = std::vector<int>;

ExprPtr subexpr_at(const ExprPtr &root, const ExprPath &path);
// Returns a copy of root with the subexpression at path replaced.
ExprPtr replace_at(const ExprPtr &root, const ExprPath &path, const ExprPtr &replacement);

struct InputDecl {
    std::string name;
    bool is_public = false; // inputs default to private
};

struct Statement {
    enum class Kind { Assign, Assert };
    Kind kind;
    std::string target; // Assign only
    ExprPtr expr;

    static Statement assign(std::string target, ExprPtr rhs);
    static Statement assertion(ExprPtr cond);
};

struct Circuit {
    std::vector<InputDecl> inputs;
    std::vector<std::string> outputs;
    std::vector<Statement> body;

    std::size_t node_count() const;
};

bool structurally_equal(const Circuit &a, const Circuit &b);

// The operator subset a backend (or generator configuration) admits.
struct OperatorSet {
    std::set<UnaryOp> unary;
    std::set<BinaryOp> binary;
    bool conditional = true;

    bool allows(UnaryOp op) const { return unary.count(op) != 0; }
    bool allows(BinaryOp op) const { return binary.count(op) != 0; }
    bool empty() const { return unary.empty() && binary.empty() && !conditional; }

    static OperatorSet all();
};

struct ValidationError {
    enum class Code {
        DuplicateName,
        UnknownVariable,
        OutputNotAssigned,
        OutputReassigned,
        AssignToNonOutput,
        NonBooleanAssertion,
        UnsupportedOperator,
        PatternNodeInCircuit,
    };
    Code code;
    std::string message;
};

const char *validation_code_name(ValidationError::Code code);

// Structural validation: name uniqueness, single assignment before use,
// Boolean assertions, operator subset. Empty result means valid.
std::vector<ValidationError> validate(const Circuit &c, const OperatorSet &ops);

} // namespace zkfuzz
