#include "zkfuzz/il.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace zkfuzz {

ValidationFailure::ValidationFailure(std::vector<ValidationError> errs)
    : std::runtime_error(errs.empty() ? "invalid circuit"
                                      : "invalid circuit: " + errs.front().message),
      errors(std::move(errs)) {}

namespace {

enum class Tok {
    End, Int, Ident,
    LParen, RParen, Comma, Assign, Question, Colon,
    Plus, Minus, Star, Slash, Percent, StarStar,
    Amp, Pipe, Caret, AmpAmp, PipePipe, CaretCaret,
    EqEq, NotEq, Lt, Le, Gt, Ge,
    Tilde, Bang, HoleMark, RandMark,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    Lexer(const std::string &src, int line) : src_(&src), line_(line) {}

    Token next() {
        const std::string &src = *src_;
        skip_space();
        const int col = static_cast<int>(pos_) + 1;
        if (pos_ >= src.size() || src[pos_] == '#')
            return {Tok::End, "", line_, col};
        const char c = src[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src.size() && std::isdigit(static_cast<unsigned char>(src[pos_])))
                ++pos_;
            return {Tok::Int, src.substr(start, pos_ - start), line_, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos_])) || src[pos_] == '_'))
                ++pos_;
            return {Tok::Ident, src.substr(start, pos_ - start), line_, col};
        }
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < src.size() && src[pos_ + 1] == b;
        };
        if (two('*', '*')) { pos_ += 2; return {Tok::StarStar, "**", line_, col}; }
        if (two('&', '&')) { pos_ += 2; return {Tok::AmpAmp, "&&", line_, col}; }
        if (two('|', '|')) { pos_ += 2; return {Tok::PipePipe, "||", line_, col}; }
        if (two('^', '^')) { pos_ += 2; return {Tok::CaretCaret, "^^", line_, col}; }
        if (two('=', '=')) { pos_ += 2; return {Tok::EqEq, "==", line_, col}; }
        if (two('!', '=')) { pos_ += 2; return {Tok::NotEq, "!=", line_, col}; }
        if (two('<', '=')) { pos_ += 2; return {Tok::Le, "<=", line_, col}; }
        if (two('>', '=')) { pos_ += 2; return {Tok::Ge, ">=", line_, col}; }
        ++pos_;
        switch (c) {
        case '(': return {Tok::LParen, "(", line_, col};
        case ')': return {Tok::RParen, ")", line_, col};
        case ',': return {Tok::Comma, ",", line_, col};
        case '=': return {Tok::Assign, "=", line_, col};
        case '?': return {Tok::Question, "?", line_, col};
        case ':': return {Tok::Colon, ":", line_, col};
        case '+': return {Tok::Plus, "+", line_, col};
        case '-': return {Tok::Minus, "-", line_, col};
        case '*': return {Tok::Star, "*", line_, col};
        case '/': return {Tok::Slash, "/", line_, col};
        case '%': return {Tok::Percent, "%", line_, col};
        case '&': return {Tok::Amp, "&", line_, col};
        case '|': return {Tok::Pipe, "|", line_, col};
        case '^': return {Tok::Caret, "^", line_, col};
        case '<': return {Tok::Lt, "<", line_, col};
        case '>': return {Tok::Gt, ">", line_, col};
        case '~': return {Tok::Tilde, "~", line_, col};
        case '!': return {Tok::Bang, "!", line_, col};
        case '$': return {Tok::RandMark, "$", line_, col};
        default:
            throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    void skip_space() {
        const std::string &src = *src_;
        while (pos_ < src.size() && (src[pos_] == ' ' || src[pos_] == '\t' || src[pos_] == '\r'))
            ++pos_;
    }

    const std::string *src_;
    std::size_t pos_ = 0;
    int line_;
};

// Binding power per infix operator; the conditional sits below everything.
int infix_power(Tok t) {
    switch (t) {
    case Tok::Question: return 1;
    case Tok::PipePipe: return 2;
    case Tok::CaretCaret: return 3;
    case Tok::AmpAmp: return 4;
    case Tok::Pipe: return 5;
    case Tok::Caret: return 6;
    case Tok::Amp: return 7;
    case Tok::EqEq: case Tok::NotEq: return 8;
    case Tok::Lt: case Tok::Le: case Tok::Gt: case Tok::Ge: return 9;
    case Tok::Plus: case Tok::Minus: return 10;
    case Tok::Star: case Tok::Slash: case Tok::Percent: return 11;
    case Tok::StarStar: return 12;
    default: return 0;
    }
}

std::optional<BinaryOp> binary_of(Tok t) {
    switch (t) {
    case Tok::Plus: return BinaryOp::Add;
    case Tok::Minus: return BinaryOp::Sub;
    case Tok::Star: return BinaryOp::Mul;
    case Tok::Slash: return BinaryOp::Div;
    case Tok::Percent: return BinaryOp::Mod;
    case Tok::StarStar: return BinaryOp::Pow;
    case Tok::Amp: return BinaryOp::BitAnd;
    case Tok::Pipe: return BinaryOp::BitOr;
    case Tok::Caret: return BinaryOp::BitXor;
    case Tok::AmpAmp: return BinaryOp::LogicAnd;
    case Tok::PipePipe: return BinaryOp::LogicOr;
    case Tok::CaretCaret: return BinaryOp::LogicXor;
    case Tok::EqEq: return BinaryOp::Eq;
    case Tok::NotEq: return BinaryOp::Neq;
    case Tok::Lt: return BinaryOp::Lt;
    case Tok::Le: return BinaryOp::Le;
    case Tok::Gt: return BinaryOp::Gt;
    case Tok::Ge: return BinaryOp::Ge;
    default: return std::nullopt;
    }
}

class ExprParser {
public:
    ExprParser(const std::string &src, int line, bool allow_pattern)
        : lexer_(src, line), allow_pattern_(allow_pattern) {
        advance();
    }

    ExprPtr parse_full() {
        ExprPtr e = parse(0);
        expect(Tok::End, "end of expression");
        return e;
    }

    ExprPtr parse(int min_power) {
        ExprPtr lhs = parse_prefix();
        while (true) {
            const int power = infix_power(cur_.kind);
            if (power == 0 || power < min_power)
                break;
            if (cur_.kind == Tok::Question) {
                advance();
                ExprPtr then_e = parse(0);
                expect(Tok::Colon, "':' in conditional");
                ExprPtr else_e = parse(1); // right-associative, lowest level
                lhs = Expr::cond(lhs, then_e, else_e);
                continue;
            }
            const BinaryOp op = *binary_of(cur_.kind);
            advance();
            // '**' binds right-associatively, everything else left.
            const int next_min = (op == BinaryOp::Pow) ? power : power + 1;
            lhs = Expr::binary(op, lhs, parse(next_min));
        }
        return lhs;
    }

    Token cur() const { return cur_; }
    void expect(Tok kind, const char *what) {
        if (cur_.kind != kind)
            throw ParseError(cur_.line, cur_.col, std::string("expected ") + what);
        advance();
    }

private:
    ExprPtr parse_prefix() {
        Token t = cur_;
        switch (t.kind) {
        case Tok::Int:
            advance();
            return Expr::constant(BigInt(t.text));
        case Tok::Ident:
            if (t.text == "bool")
                throw ParseError(t.line, t.col, "'bool' is reserved");
            advance();
            return Expr::var(t.text);
        case Tok::LParen: {
            advance();
            ExprPtr e = parse(0);
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::Minus:
            advance();
            return Expr::unary(UnaryOp::Neg, parse(13));
        case Tok::Tilde:
            advance();
            return Expr::unary(UnaryOp::Complement, parse(13));
        case Tok::Bang:
            advance();
            return Expr::unary(UnaryOp::Not, parse(13));
        case Tok::Question:
            return parse_marker(false);
        case Tok::RandMark:
            return parse_marker(true);
        default:
            throw ParseError(t.line, t.col, "expected an expression, got '" + t.text + "'");
        }
    }

    // ?name[:bool] in prefix position, or $name[:bool].
    ExprPtr parse_marker(bool is_random) {
        Token mark = cur_;
        if (!allow_pattern_)
            throw ParseError(mark.line, mark.col,
                             is_random ? "'$' constants are only valid in rewrite rules"
                                       : "'?' holes are only valid in rewrite rules");
        advance();
        if (cur_.kind != Tok::Ident)
            throw ParseError(cur_.line, cur_.col, "expected a name after hole marker");
        std::string name = cur_.text;
        advance();
        bool is_bool = false;
        if (cur_.kind == Tok::Colon) {
            // Only consume ':' as a type annotation when 'bool' follows;
            // otherwise it belongs to an enclosing conditional.
            Lexer peek_state = lexer_;
            Token saved = cur_;
            advance();
            if (cur_.kind == Tok::Ident && cur_.text == "bool") {
                is_bool = true;
                advance();
            } else {
                lexer_ = peek_state;
                cur_ = saved;
            }
        }
        return is_random ? Expr::random_const(name, is_bool) : Expr::hole(name, is_bool);
    }

    void advance() { cur_ = lexer_.next(); }

    Lexer lexer_;
    bool allow_pattern_;
    Token cur_{Tok::End, "", 0, 0};
};

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    lines.push_back(cur);
    return lines;
}

bool blank_line(const std::string &s) {
    for (char c : s) {
        if (c == '#')
            return true;
        if (c != ' ' && c != '\t' && c != '\r')
            return false;
    }
    return true;
}

// Strips "<keyword> :" from a header line, returning the remainder.
std::optional<std::string> header_rest(const std::string &line, const char *keyword) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
    const std::string kw(keyword);
    if (line.compare(i, kw.size(), kw) != 0)
        return std::nullopt;
    i += kw.size();
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
    if (i >= line.size() || line[i] != ':')
        return std::nullopt;
    return line.substr(i + 1);
}

std::vector<std::string> split_names(const std::string &rest, int line_no) {
    std::vector<std::string> names;
    std::string cur;
    auto flush = [&](int col) {
        bool only_space = cur.find_first_not_of(" \t\r") == std::string::npos;
        if (only_space) {
            if (!names.empty())
                throw ParseError(line_no, col, "expected a name");
            return;
        }
        std::size_t b = cur.find_first_not_of(" \t\r");
        std::size_t e = cur.find_last_not_of(" \t\r");
        names.push_back(cur.substr(b, e - b + 1));
    };
    int col = 1;
    for (char c : rest) {
        if (c == '#')
            break;
        if (c == ',') {
            flush(col);
            cur.clear();
        } else {
            cur.push_back(c);
        }
        ++col;
    }
    flush(col);
    return names;
}

bool valid_ident(const std::string &s) {
    if (s.empty() || s == "bool" || s == "pub" || s == "assert" || s == "inputs" ||
        s == "outputs")
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

} // namespace

ExprPtr parse_expr_text(const std::string &text, bool allow_pattern_nodes) {
    ExprParser p(text, 1, allow_pattern_nodes);
    return p.parse_full();
}

Circuit parse_circuit(const std::string &text) {
    Circuit c;
    const auto lines = split_lines(text);
    std::size_t i = 0;
    auto skip_blank = [&]() {
        while (i < lines.size() && blank_line(lines[i]))
            ++i;
    };

    skip_blank();
    if (i >= lines.size())
        throw ParseError(static_cast<int>(lines.size()), 1, "missing 'inputs :' header");
    auto in_rest = header_rest(lines[i], "inputs");
    if (!in_rest)
        throw ParseError(static_cast<int>(i) + 1, 1, "expected 'inputs :' header");
    for (auto &name : split_names(*in_rest, static_cast<int>(i) + 1)) {
        InputDecl decl;
        if (name.rfind("pub ", 0) == 0 || name.rfind("pub\t", 0) == 0) {
            decl.is_public = true;
            name = name.substr(4);
            std::size_t b = name.find_first_not_of(" \t");
            name = (b == std::string::npos) ? "" : name.substr(b);
        }
        if (!valid_ident(name))
            throw ParseError(static_cast<int>(i) + 1, 1, "bad input name '" + name + "'");
        decl.name = name;
        c.inputs.push_back(std::move(decl));
    }
    ++i;

    skip_blank();
    if (i >= lines.size())
        throw ParseError(static_cast<int>(lines.size()), 1, "missing 'outputs:' header");
    auto out_rest = header_rest(lines[i], "outputs");
    if (!out_rest)
        throw ParseError(static_cast<int>(i) + 1, 1, "expected 'outputs:' header");
    for (const auto &name : split_names(*out_rest, static_cast<int>(i) + 1)) {
        if (!valid_ident(name))
            throw ParseError(static_cast<int>(i) + 1, 1, "bad output name '" + name + "'");
        c.outputs.push_back(name);
    }
    ++i;

    for (; i < lines.size(); ++i) {
        if (blank_line(lines[i]))
            continue;
        const int line_no = static_cast<int>(i) + 1;
        ExprParser p(lines[i], line_no, false);
        Token head = p.cur();
        if (head.kind != Tok::Ident)
            throw ParseError(line_no, head.col, "expected a statement");
        if (head.text == "assert") {
            p.expect(Tok::Ident, "'assert'");
            p.expect(Tok::LParen, "'('");
            ExprPtr cond = p.parse(0);
            p.expect(Tok::RParen, "')'");
            p.expect(Tok::End, "end of line");
            c.body.push_back(Statement::assertion(std::move(cond)));
        } else {
            std::string target = head.text;
            p.expect(Tok::Ident, "assignment target");
            p.expect(Tok::Assign, "'='");
            ExprPtr rhs = p.parse(0);
            p.expect(Tok::End, "end of line");
            c.body.push_back(Statement::assign(std::move(target), std::move(rhs)));
        }
    }

    auto errors = validate(c, OperatorSet::all());
    if (!errors.empty())
        throw ValidationFailure(std::move(errors));
    return c;
}

namespace {

void print_expr_to(std::ostringstream &os, const ExprPtr &e);

// Prints the body of a compound expression without its own parentheses.
void print_expr_bare(std::ostringstream &os, const ExprPtr &e) {
    switch (e->kind) {
    case Expr::Kind::Unary:
        os << unary_op_symbol(e->uop) << ' ';
        print_expr_to(os, e->a);
        break;
    case Expr::Kind::Binary:
        print_expr_to(os, e->a);
        os << ' ' << binary_op_symbol(e->bop) << ' ';
        print_expr_to(os, e->b);
        break;
    case Expr::Kind::Cond:
        print_expr_to(os, e->a);
        os << " ? ";
        print_expr_to(os, e->b);
        os << " : ";
        print_expr_to(os, e->c);
        break;
    default:
        print_expr_to(os, e);
        break;
    }
}

void print_expr_to(std::ostringstream &os, const ExprPtr &e) {
    switch (e->kind) {
    case Expr::Kind::Const:
        os << e->value.str();
        break;
    case Expr::Kind::Var:
        os << e->name;
        break;
    case Expr::Kind::Hole:
        os << '?' << e->name << (e->bool_hole ? ":bool" : "");
        break;
    case Expr::Kind::RandomConst:
        os << '$' << e->name << (e->bool_hole ? ":bool" : "");
        break;
    default:
        os << '(';
        print_expr_bare(os, e);
        os << ')';
        break;
    }
}

} // namespace

std::string print_expr(const ExprPtr &e) {
    std::ostringstream os;
    print_expr_to(os, e);
    return os.str();
}

std::string print_circuit(const Circuit &c) {
    std::ostringstream os;
    os << "inputs :";
    for (std::size_t i = 0; i < c.inputs.size(); ++i) {
        os << (i == 0 ? " " : ", ");
        if (c.inputs[i].is_public)
            os << "pub ";
        os << c.inputs[i].name;
    }
    os << "\noutputs:";
    for (std::size_t i = 0; i < c.outputs.size(); ++i)
        os << (i == 0 ? " " : ", ") << c.outputs[i];
    os << '\n';
    for (const auto &stmt : c.body) {
        if (stmt.kind == Statement::Kind::Assign) {
            os << stmt.target << " = ";
            print_expr_to(os, stmt.expr);
        } else {
            os << "assert(";
            print_expr_bare(os, stmt.expr);
            os << ')';
        }
        os << '\n';
    }
    return os.str();
}

} // namespace zkfuzz
