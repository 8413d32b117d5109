#include "qring/expr.hpp"

#include <cctype>
#include <sstream>

#include "qring/errors.hpp"
#include "qring/qmatrix.hpp"

namespace qring {

namespace {

ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

bool is_atomic(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::RationalLit:
        case ExprKind::Symbol:
        case ExprKind::Entry:
        case ExprKind::MinorBracket:
            return true;
        default:
            return false;
    }
}

}  // namespace

ExprPtr make_rational(Rational v) {
    if (v < 0) throw Error("rational literals are nonnegative; wrap in a sum sign");
    ExprNode n;
    n.kind = ExprKind::RationalLit;
    n.value = std::move(v);
    return node(std::move(n));
}

ExprPtr make_symbol(std::string name) {
    if (name.empty()) throw Error("empty symbol name");
    ExprNode n;
    n.kind = ExprKind::Symbol;
    n.name = std::move(name);
    return node(std::move(n));
}

ExprPtr make_entry(std::string base, int row, int col) {
    if (base.empty()) throw Error("empty entry base name");
    ExprNode n;
    n.kind = ExprKind::Entry;
    n.name = std::move(base);
    n.row = row;
    n.col = col;
    return node(std::move(n));
}

ExprPtr make_minor(std::vector<int> rows, std::vector<int> cols) {
    ExprNode n;
    n.kind = ExprKind::MinorBracket;
    n.rows = std::move(rows);
    n.cols = std::move(cols);
    return node(std::move(n));
}

ExprPtr make_power(ExprPtr base, int exponent) {
    if (!base) throw Error("missing power base");
    ExprNode n;
    n.kind = ExprKind::Power;
    n.base = std::move(base);
    n.exponent = exponent;
    return node(std::move(n));
}

ExprPtr make_product(std::vector<ExprPtr> children) {
    std::vector<ExprPtr> flat;
    for (auto& c : children) {
        if (!c) throw Error("missing product factor");
        if (c->kind == ExprKind::Product) {
            flat.insert(flat.end(), c->children.begin(), c->children.end());
        } else {
            flat.push_back(std::move(c));
        }
    }
    if (flat.empty()) throw Error("empty product");
    if (flat.size() == 1) return flat[0];
    ExprNode n;
    n.kind = ExprKind::Product;
    n.children = std::move(flat);
    return node(std::move(n));
}

ExprPtr make_sum(std::vector<int> signs, std::vector<ExprPtr> children) {
    if (signs.size() != children.size()) throw Error("one sign per summand required");
    std::vector<ExprPtr> flat;
    std::vector<int> fsigns;
    for (std::size_t i = 0; i < children.size(); ++i) {
        const auto& c = children[i];
        if (!c) throw Error("missing summand");
        if (signs[i] != 1 && signs[i] != -1) throw Error("signs must be +1 or -1");
        if (c->kind == ExprKind::Sum) {
            for (std::size_t k = 0; k < c->children.size(); ++k) {
                flat.push_back(c->children[k]);
                fsigns.push_back(signs[i] * c->signs[k]);
            }
        } else {
            flat.push_back(c);
            fsigns.push_back(signs[i]);
        }
    }
    if (flat.empty()) throw Error("empty sum");
    if (flat.size() == 1 && fsigns[0] == 1) return flat[0];
    ExprNode n;
    n.kind = ExprKind::Sum;
    n.children = std::move(flat);
    n.signs = std::move(fsigns);
    return node(std::move(n));
}

namespace {

enum class Tok { End, Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen,
                 LBracket, RBracket, Comma, Bar };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) {
            ++i_;
        }
        tok_ = Token{};
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        const char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
                ++j;
            }
            tok_.kind = Tok::Int;
            tok_.text = text_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_ + 1;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) {
                ++j;
            }
            while (j < text_.size() && text_[j] == '\'') ++j;
            tok_.kind = Tok::Ident;
            tok_.text = text_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_.kind = Tok::Plus; return;
            case '-': tok_.kind = Tok::Minus; return;
            case '*': tok_.kind = Tok::Star; return;
            case '^': tok_.kind = Tok::Caret; return;
            case '/': tok_.kind = Tok::Slash; return;
            case '(': tok_.kind = Tok::LParen; return;
            case ')': tok_.kind = Tok::RParen; return;
            case '[': tok_.kind = Tok::LBracket; return;
            case ']': tok_.kind = Tok::RBracket; return;
            case ',': tok_.kind = Tok::Comma; return;
            case '|': tok_.kind = Tok::Bar; return;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "'",
                                 tok_.pos);
        }
    }

    const std::string& text_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        if (lex_.peek().kind != Tok::End) {
            throw ParseError("trailing input after expression", lex_.peek().pos);
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, lex_.peek().pos);
    }

    Token expect(Tok kind, const char* what) {
        if (lex_.peek().kind != kind) fail(std::string("expected ") + what);
        return lex_.next();
    }

    int parse_int(const char* what) {
        Token t = expect(Tok::Int, what);
        try {
            return std::stoi(t.text);
        } catch (const std::exception&) {
            throw ParseError("integer out of range", t.pos);
        }
    }

    int parse_signed_int(const char* what) {
        int sign = 1;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            sign = -1;
        }
        return sign * parse_int(what);
    }

    ExprPtr parse_expr() {
        std::vector<int> signs;
        std::vector<ExprPtr> terms;
        int sign = 1;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            sign = -1;
        }
        terms.push_back(parse_term());
        signs.push_back(sign);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            sign = lex_.next().kind == Tok::Plus ? 1 : -1;
            terms.push_back(parse_term());
            signs.push_back(sign);
        }
        return make_sum(std::move(signs), std::move(terms));
    }

    ExprPtr parse_term() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        while (lex_.peek().kind == Tok::Star) {
            lex_.next();
            factors.push_back(parse_factor());
        }
        return make_product(std::move(factors));
    }

    ExprPtr parse_factor() {
        ExprPtr a = parse_atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.next();
            return make_power(std::move(a), parse_signed_int("exponent"));
        }
        return a;
    }

    ExprPtr parse_atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::Int: {
                Token num = lex_.next();
                Rational v(num.text);
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.next();
                    Token den = expect(Tok::Int, "denominator");
                    Rational d(den.text);
                    if (d == 0) throw ParseError("division by zero", den.pos);
                    v /= d;
                }
                return make_rational(std::move(v));
            }
            case Tok::Ident: {
                Token id = lex_.next();
                if (lex_.peek().kind == Tok::LBracket) {
                    lex_.next();
                    const int row = parse_int("row index");
                    expect(Tok::Comma, "','");
                    const int col = parse_int("column index");
                    expect(Tok::RBracket, "']'");
                    return make_entry(id.text, row, col);
                }
                return make_symbol(id.text);
            }
            case Tok::LBracket: {
                lex_.next();
                std::vector<int> rows = parse_int_list("row index");
                expect(Tok::Bar, "'|'");
                std::vector<int> cols = parse_int_list("column index");
                expect(Tok::RBracket, "']'");
                return make_minor(std::move(rows), std::move(cols));
            }
            case Tok::LParen: {
                lex_.next();
                ExprPtr e = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            default:
                fail("expected a number, symbol, bracket, or '('");
        }
    }

    std::vector<int> parse_int_list(const char* what) {
        std::vector<int> out;
        out.push_back(parse_int(what));
        while (lex_.peek().kind == Tok::Comma) {
            lex_.next();
            out.push_back(parse_int(what));
        }
        return out;
    }

    Lexer lex_;
};

std::string rational_str(const Rational& v) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(v);
    if (boost::multiprecision::denominator(v) != 1) {
        os << "/" << boost::multiprecision::denominator(v);
    }
    return os.str();
}

void print_node(std::ostringstream& os, const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Sum: {
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                if (i == 0) {
                    if (e->signs[i] < 0) os << "-";
                } else {
                    os << (e->signs[i] < 0 ? " - " : " + ");
                }
                print_node(os, e->children[i]);
            }
            return;
        }
        case ExprKind::Product: {
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                if (i) os << "*";
                const bool parens = e->children[i]->kind == ExprKind::Sum;
                if (parens) os << "(";
                print_node(os, e->children[i]);
                if (parens) os << ")";
            }
            return;
        }
        case ExprKind::Power: {
            const bool parens = !is_atomic(e->base);
            if (parens) os << "(";
            print_node(os, e->base);
            if (parens) os << ")";
            os << "^" << e->exponent;
            return;
        }
        case ExprKind::RationalLit:
            os << rational_str(e->value);
            return;
        case ExprKind::Symbol:
            os << e->name;
            return;
        case ExprKind::Entry:
            os << e->name << "[" << e->row << "," << e->col << "]";
            return;
        case ExprKind::MinorBracket: {
            os << "[";
            for (std::size_t i = 0; i < e->rows.size(); ++i) {
                if (i) os << ",";
                os << e->rows[i];
            }
            os << "|";
            for (std::size_t i = 0; i < e->cols.size(); ++i) {
                if (i) os << ",";
                os << e->cols[i];
            }
            os << "]";
            return;
        }
    }
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const ExprPtr& e) {
    if (!e) throw Error("missing expression");
    std::ostringstream os;
    print_node(os, e);
    return os.str();
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Sum:
        case ExprKind::Product: {
            if (a->signs != b->signs || a->children.size() != b->children.size()) {
                return false;
            }
            for (std::size_t i = 0; i < a->children.size(); ++i) {
                if (!expr_equal(a->children[i], b->children[i])) return false;
            }
            return true;
        }
        case ExprKind::Power:
            return a->exponent == b->exponent && expr_equal(a->base, b->base);
        case ExprKind::RationalLit:
            return a->value == b->value;
        case ExprKind::Symbol:
            return a->name == b->name;
        case ExprKind::Entry:
            return a->name == b->name && a->row == b->row && a->col == b->col;
        case ExprKind::MinorBracket:
            return a->rows == b->rows && a->cols == b->cols;
    }
    return false;
}

NcPoly eval_in(const ExprPtr& e, const PresentationPtr& pres) {
    if (!e) throw Error("missing expression");
    switch (e->kind) {
        case ExprKind::Sum: {
            NcPoly acc = NcPoly::zero(pres);
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                NcPoly c = eval_in(e->children[i], pres);
                acc = e->signs[i] < 0 ? acc - c : acc + c;
            }
            return acc;
        }
        case ExprKind::Product: {
            NcPoly acc = NcPoly::one(pres);
            for (const auto& c : e->children) acc = acc * eval_in(c, pres);
            return acc;
        }
        case ExprKind::Power: {
            NcPoly b = eval_in(e->base, pres);
            if (e->exponent >= 0) return b.pow(e->exponent);
            // Negative powers exist only for scalar units.
            return NcPoly::constant(pres, b.constant_value().pow(e->exponent));
        }
        case ExprKind::RationalLit:
            return NcPoly::constant(pres, Scalar::from_rational(pres->params(), e->value));
        case ExprKind::Symbol: {
            if (auto g = pres->gen_index(e->name)) {
                return NcPoly::generator(pres, *g);
            }
            if (pres->params()->resolve(e->name)) {
                return NcPoly::constant(pres, Scalar::param(pres->params(), e->name));
            }
            throw Error("unknown symbol '" + e->name + "'");
        }
        case ExprKind::Entry: {
            const std::string full = e->name + "[" + std::to_string(e->row) + "," +
                                     std::to_string(e->col) + "]";
            if (auto g = pres->gen_index(full)) {
                return NcPoly::generator(pres, *g);
            }
            throw Error("unknown generator '" + full + "'");
        }
        case ExprKind::MinorBracket:
            return qminor(pres, MinorIndex{e->rows, e->cols});
    }
    throw Error("malformed expression node");
}

Scalar eval_scalar(const ExprPtr& e, const ParamSpacePtr& space) {
    if (!e) throw Error("missing expression");
    switch (e->kind) {
        case ExprKind::Sum: {
            Scalar acc = Scalar::zero(space);
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                Scalar c = eval_scalar(e->children[i], space);
                acc = e->signs[i] < 0 ? acc - c : acc + c;
            }
            return acc;
        }
        case ExprKind::Product: {
            Scalar acc = Scalar::one(space);
            for (const auto& c : e->children) acc *= eval_scalar(c, space);
            return acc;
        }
        case ExprKind::Power:
            return eval_scalar(e->base, space).pow(e->exponent);
        case ExprKind::RationalLit:
            return Scalar::from_rational(space, e->value);
        case ExprKind::Symbol: {
            if (space->resolve(e->name)) return Scalar::param(space, e->name);
            throw Error("unknown parameter '" + e->name + "'");
        }
        default:
            throw Error("matrix entries and minors are not scalars");
    }
}

}  // namespace qring
