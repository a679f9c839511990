#include "odg/expr.hpp"

#include <cctype>
#include <sstream>

namespace odg::build {

namespace {

struct Token {
    enum class Type { symbol, name, integer, lparen, rparen, comma, star, plus, minus, slash, msum, end };
    Type type = Type::end;
    std::string text;
    long long number = 0;
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(const std::string & text) : text_(text) { advance(); }

    const Token & peek() const { return current_; }
    Token take()
    {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance()
    {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
            ++i_;
        current_ = Token{};
        current_.pos = i_;
        if (i_ >= text_.size()) {
            current_.type = Token::Type::end;
            return;
        }
        char ch = text_[i_];
        if (ch == '(') {
            // "(+)" is the Minkowski operator, "(" opens a group
            if (i_ + 2 < text_.size() && text_[i_ + 1] == '+' && text_[i_ + 2] == ')') {
                current_.type = Token::Type::msum;
                i_ += 3;
                return;
            }
            current_.type = Token::Type::lparen;
            ++i_;
            return;
        }
        switch (ch) {
        case ')': current_.type = Token::Type::rparen; ++i_; return;
        case ',': current_.type = Token::Type::comma; ++i_; return;
        case '*': current_.type = Token::Type::star; ++i_; return;
        case '+': current_.type = Token::Type::plus; ++i_; return;
        case '-': current_.type = Token::Type::minus; ++i_; return;
        case '/': current_.type = Token::Type::slash; ++i_; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                ++i_;
            current_.type = Token::Type::integer;
            current_.text = text_.substr(start, i_ - start);
            try {
                current_.number = std::stoll(current_.text);
            } catch (const std::out_of_range &) {
                throw ParseError("integer literal too large", start);
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = i_;
            while (i_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i_])))
                ++i_;
            current_.text = text_.substr(start, i_ - start);
            current_.type = current_.text.size() == 1 ? Token::Type::symbol : Token::Type::name;
            if (current_.text == "rho" || current_.text == "trim" || current_.text == "mpow" ||
                current_.text == "sqrt")
                current_.type = Token::Type::name;
            return;
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", i_);
    }

    const std::string & text_;
    std::size_t i_ = 0;
    Token current_;
};

class Parser {
  public:
    explicit Parser(const std::string & text) : lex_(text) {}

    ExprPtr run()
    {
        ExprPtr e = parse_union();
        if (lex_.peek().type != Token::Type::end)
            throw ParseError("trailing input", lex_.peek().pos);
        return e;
    }

  private:
    static std::shared_ptr<Expr> node(Expr::Kind kind, std::size_t pos)
    {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->pos = pos;
        return e;
    }

    ExprPtr parse_union()
    {
        ExprPtr lhs = parse_minkowski();
        while (lex_.peek().type == Token::Type::plus) {
            std::size_t pos = lex_.take().pos;
            auto e = node(Expr::Kind::union_op, pos);
            e->lhs = lhs;
            e->rhs = parse_minkowski();
            lhs = e;
        }
        return lhs;
    }

    ExprPtr parse_minkowski()
    {
        ExprPtr lhs = parse_product();
        while (lex_.peek().type == Token::Type::msum) {
            std::size_t pos = lex_.take().pos;
            auto e = node(Expr::Kind::minkowski, pos);
            e->lhs = lhs;
            e->rhs = parse_product();
            lhs = e;
        }
        return lhs;
    }

    ExprPtr parse_product()
    {
        ExprPtr lhs = parse_atom();
        while (lex_.peek().type == Token::Type::star) {
            std::size_t pos = lex_.take().pos;
            auto e = node(Expr::Kind::product, pos);
            e->lhs = lhs;
            e->rhs = parse_atom();
            lhs = e;
        }
        return lhs;
    }

    long long expect_integer(bool allow_negative)
    {
        bool neg = false;
        if (allow_negative && lex_.peek().type == Token::Type::minus) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().type != Token::Type::integer)
            throw ParseError("expected integer", lex_.peek().pos);
        long long v = lex_.take().number;
        return neg ? -v : v;
    }

    void expect(Token::Type t, const char * what)
    {
        if (lex_.peek().type != t)
            throw ParseError(std::string("expected ") + what, lex_.peek().pos);
        lex_.take();
    }

    Rational parse_rational_arg()
    {
        bool neg = false;
        if (lex_.peek().type == Token::Type::minus) {
            lex_.take();
            neg = true;
        }
        long long num = expect_integer(false);
        long long den = 1;
        if (lex_.peek().type == Token::Type::slash) {
            lex_.take();
            den = expect_integer(false);
        }
        Rational r(num, den);
        return neg ? -r : r;
    }

    ExprPtr parse_atom()
    {
        const Token & t = lex_.peek();
        switch (t.type) {
        case Token::Type::minus: {
            std::size_t pos = lex_.take().pos;
            auto e = node(Expr::Kind::negate, pos);
            e->lhs = parse_atom();
            return e;
        }
        case Token::Type::lparen: {
            lex_.take();
            ExprPtr inner = parse_union();
            expect(Token::Type::rparen, "')'");
            return inner;
        }
        case Token::Type::integer: {
            Token tok = lex_.take();
            auto e = node(Expr::Kind::number, tok.pos);
            long long num = tok.number, den = 1;
            if (lex_.peek().type == Token::Type::slash) {
                lex_.take();
                den = expect_integer(false);
                if (den == 0)
                    throw ParseError("zero denominator", tok.pos);
            }
            e->value = Rational(num, den);
            return e;
        }
        case Token::Type::symbol: {
            Token tok = lex_.take();
            if (tok.text == "T")
                return node(Expr::Kind::symbol_t, tok.pos);
            if (tok.text == "H")
                return node(Expr::Kind::symbol_h, tok.pos);
            if (tok.text == "i")
                return node(Expr::Kind::imaginary, tok.pos);
            if (tok.text == "F" || tok.text == "C" || tok.text == "R")
                return parse_pair_builder(tok);
            throw ParseError("unknown symbol '" + tok.text + "'", tok.pos);
        }
        case Token::Type::name: {
            Token tok = lex_.take();
            if (tok.text == "sqrt") {
                expect(Token::Type::lparen, "'('");
                auto e = node(Expr::Kind::sqrt_int, tok.pos);
                e->args[0] = expect_integer(false);
                expect(Token::Type::rparen, "')'");
                return e;
            }
            if (tok.text == "rho") {
                expect(Token::Type::lparen, "'('");
                auto e = node(Expr::Kind::rho, tok.pos);
                e->args[0] = expect_integer(false);
                expect(Token::Type::comma, "','");
                e->args[1] = expect_integer(false);
                expect(Token::Type::comma, "','");
                e->args[2] = expect_integer(false);
                expect(Token::Type::rparen, "')'");
                return e;
            }
            if (tok.text == "trim") {
                expect(Token::Type::lparen, "'('");
                auto e = node(Expr::Kind::trim, tok.pos);
                e->lhs = parse_union();
                expect(Token::Type::comma, "','");
                e->value = parse_rational_arg();
                expect(Token::Type::rparen, "')'");
                return e;
            }
            if (tok.text == "mpow") {
                expect(Token::Type::lparen, "'('");
                auto e = node(Expr::Kind::mpow, tok.pos);
                e->lhs = parse_union();
                expect(Token::Type::comma, "','");
                e->args[0] = expect_integer(false);
                expect(Token::Type::rparen, "')'");
                return e;
            }
            throw ParseError("unknown name '" + tok.text + "'", tok.pos);
        }
        default:
            throw ParseError("expected an atom", t.pos);
        }
    }

    ExprPtr parse_pair_builder(const Token & tok)
    {
        Expr::Kind kind = tok.text == "F"   ? Expr::Kind::frame
                          : tok.text == "C" ? Expr::Kind::core
                                            : Expr::Kind::rotor;
        expect(Token::Type::lparen, "'('");
        auto e = node(kind, tok.pos);
        e->args[0] = expect_integer(true);
        expect(Token::Type::comma, "','");
        e->args[1] = expect_integer(true);
        expect(Token::Type::rparen, "')'");
        return e;
    }

    Lexer lex_;
};

} // namespace

ExprPtr parse(const std::string & text)
{
    return Parser(text).run();
}

namespace {

int precedence(Expr::Kind k)
{
    switch (k) {
    case Expr::Kind::union_op: return 0;
    case Expr::Kind::minkowski: return 1;
    case Expr::Kind::product: return 2;
    default: return 3;
    }
}

void print_rec(std::ostream & os, const Expr & e, int parent_prec)
{
    int prec = precedence(e.kind);
    bool parens = prec < parent_prec;
    if (parens)
        os << "(";
    switch (e.kind) {
    case Expr::Kind::union_op:
        print_rec(os, *e.lhs, prec);
        os << " + ";
        print_rec(os, *e.rhs, prec + 1);
        break;
    case Expr::Kind::minkowski:
        print_rec(os, *e.lhs, prec);
        os << " (+) ";
        print_rec(os, *e.rhs, prec + 1);
        break;
    case Expr::Kind::product:
        print_rec(os, *e.lhs, prec);
        os << "*";
        print_rec(os, *e.rhs, prec + 1);
        break;
    case Expr::Kind::negate:
        os << "-";
        print_rec(os, *e.lhs, 3);
        break;
    case Expr::Kind::trim:
        os << "trim(";
        print_rec(os, *e.lhs, 0);
        os << ", " << e.value.str() << ")";
        break;
    case Expr::Kind::mpow:
        os << "mpow(";
        print_rec(os, *e.lhs, 0);
        os << ", " << e.args[0] << ")";
        break;
    case Expr::Kind::symbol_t: os << "T"; break;
    case Expr::Kind::symbol_h: os << "H"; break;
    case Expr::Kind::imaginary: os << "i"; break;
    case Expr::Kind::number: os << e.value.str(); break;
    case Expr::Kind::sqrt_int: os << "sqrt(" << e.args[0] << ")"; break;
    case Expr::Kind::frame: os << "F(" << e.args[0] << ", " << e.args[1] << ")"; break;
    case Expr::Kind::core: os << "C(" << e.args[0] << ", " << e.args[1] << ")"; break;
    case Expr::Kind::rotor: os << "R(" << e.args[0] << ", " << e.args[1] << ")"; break;
    case Expr::Kind::rho:
        os << "rho(" << e.args[0] << ", " << e.args[1] << ", " << e.args[2] << ")";
        break;
    }
    if (parens)
        os << ")";
}

class EvalError : public std::runtime_error {
  public:
    EvalError(const std::string & msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos))
    {}
};

} // namespace

std::string print(const Expr & e)
{
    std::ostringstream os;
    print_rec(os, e, 0);
    return os.str();
}

Value eval(const Expr & e, const EvalOptions & opts)
{
    switch (e.kind) {
    case Expr::Kind::union_op: {
        Value a = eval(*e.lhs, opts), b = eval(*e.rhs, opts);
        auto * ga = std::get_if<OddGraph>(&a);
        auto * gb = std::get_if<OddGraph>(&b);
        if (ga == nullptr || gb == nullptr)
            throw EvalError("union needs two graphs", e.pos);
        return graph_union(*ga, *gb);
    }
    case Expr::Kind::minkowski: {
        Value a = eval(*e.lhs, opts), b = eval(*e.rhs, opts);
        auto * ga = std::get_if<OddGraph>(&a);
        auto * gb = std::get_if<OddGraph>(&b);
        if (ga == nullptr || gb == nullptr)
            throw EvalError("Minkowski sum needs two graphs", e.pos);
        return minkowski(*ga, *gb);
    }
    case Expr::Kind::product: {
        Value a = eval(*e.lhs, opts), b = eval(*e.rhs, opts);
        if (auto * sa = std::get_if<ComplexScalar>(&a)) {
            if (auto * sb = std::get_if<ComplexScalar>(&b))
                return *sa * *sb;
            return std::get<OddGraph>(b).scaled(*sa);
        }
        if (auto * sb = std::get_if<ComplexScalar>(&b))
            return std::get<OddGraph>(a).scaled(*sb);
        throw EvalError("cannot multiply two graphs (use (+) for the Minkowski sum)", e.pos);
    }
    case Expr::Kind::negate: {
        Value v = eval(*e.lhs, opts);
        if (auto * s = std::get_if<ComplexScalar>(&v))
            return -*s;
        return std::get<OddGraph>(v).negated();
    }
    case Expr::Kind::trim: {
        Value v = eval(*e.lhs, opts);
        auto * g = std::get_if<OddGraph>(&v);
        if (g == nullptr)
            throw EvalError("trim needs a graph", e.pos);
        if (e.value.sign() <= 0)
            throw EvalError("trim radius must be positive", e.pos);
        return g->trimmed(e.value);
    }
    case Expr::Kind::mpow: {
        Value v = eval(*e.lhs, opts);
        auto * g = std::get_if<OddGraph>(&v);
        if (g == nullptr)
            throw EvalError("mpow needs a graph", e.pos);
        if (e.args[0] < 1)
            throw EvalError("mpow exponent must be >= 1", e.pos);
        return minkowski_power(*g, static_cast<int>(e.args[0]));
    }
    case Expr::Kind::symbol_t: return make_t();
    case Expr::Kind::symbol_h: return make_h();
    case Expr::Kind::imaginary: return ComplexScalar::imaginary_unit();
    case Expr::Kind::number: return ComplexScalar::real(FieldElement(e.value));
    case Expr::Kind::sqrt_int: {
        if (e.args[0] < 0)
            throw EvalError("sqrt of a negative integer", e.pos);
        return ComplexScalar::real(FieldElement::sqrt_of_integer(e.args[0]));
    }
    case Expr::Kind::frame: return frame(e.args[0], e.args[1], opts.allow_inadmissible);
    case Expr::Kind::core: return core(e.args[0], e.args[1], opts.allow_inadmissible);
    case Expr::Kind::rotor: return rotor(e.args[0], e.args[1], opts.allow_inadmissible);
    case Expr::Kind::rho: {
        Rotation rot = Rotation::from_triangle(e.args[0], e.args[1], e.args[2]);
        return rot.unit();
    }
    }
    throw EvalError("unreachable", e.pos);
}

OddGraph eval_graph(const Expr & e, const EvalOptions & opts)
{
    Value v = eval(e, opts);
    auto * g = std::get_if<OddGraph>(&v);
    if (g == nullptr)
        throw std::invalid_argument("expression evaluates to a scalar, not a graph");
    return *g;
}

OddGraph eval_graph(const std::string & text, const EvalOptions & opts)
{
    return eval_graph(*parse(text), opts);
}

bool structurally_equal(const Expr & a, const Expr & b)
{
    if (a.kind != b.kind || a.args != b.args || !(a.value == b.value))
        return false;
    if ((a.lhs == nullptr) != (b.lhs == nullptr) || (a.rhs == nullptr) != (b.rhs == nullptr))
        return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs))
        return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs))
        return false;
    return true;
}

} // namespace odg::build
