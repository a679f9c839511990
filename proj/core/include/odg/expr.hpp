#pragma once

#include "odg/builders.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

namespace odg::build {

/// Syntax error with the offending position in the source text.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string & message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position)
    {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// AST for the construction language:
///   expr := msum ('+' msum)*            union
///   msum := prod ('(+)' prod)*          Minkowski sum
///   prod := atom ('*' atom)*            scalar product
///   atom := 'T' | 'H' | 'i' | integer | rational | 'sqrt(k)'
///         | 'F(m,n)' | 'C(m,n)' | 'R(m,n)' | 'rho(m1,m2,r)'
///         | 'trim(expr, radius)' | 'mpow(expr, n)' | '(' expr ')' | '-' atom
class Expr {
  public:
    enum class Kind {
        union_op,
        minkowski,
        product,
        negate,
        trim,
        mpow,
        symbol_t,
        symbol_h,
        imaginary,
        number,
        sqrt_int,
        frame,
        core,
        rotor,
        rho,
    };

    Kind kind;
    std::shared_ptr<const Expr> lhs, rhs;
    Rational value;                    // number literal or trim radius
    std::array<long long, 3> args{};   // integer arguments (F/C/R/rho/mpow/sqrt)
    std::size_t pos = 0;               // source offset, for eval diagnostics
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse(const std::string & text);

/// Canonical text form; parse(print(e)) reproduces e.
std::string print(const Expr & e);
inline std::string print(const ExprPtr & e) { return print(*e); }

struct EvalOptions {
    bool allow_inadmissible = false;
};

/// Either a complex field scalar or a graph.
using Value = std::variant<ComplexScalar, OddGraph>;

Value eval(const Expr & e, const EvalOptions & opts = {});

/// Evaluates and requires a graph result.
OddGraph eval_graph(const Expr & e, const EvalOptions & opts = {});
OddGraph eval_graph(const std::string & text, const EvalOptions & opts = {});

bool structurally_equal(const Expr & a, const Expr & b);

} // namespace odg::build
