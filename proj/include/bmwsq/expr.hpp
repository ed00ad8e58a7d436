#pragma once

// Evaluator for scalar expressions in q and r, with r := q^3 substituted at
// the leaves. Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' integer)?
//   atom   := 'q' | 'r' | rational | '(' expr ')'

#include "rational_function.hpp"

namespace bmwsq {

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : lex_(s) {}

    RationalFunction run() {
        RationalFunction v = expr();
        if (!lex_.eof()) throw ParseError("trailing input in expression '" + lex_.s + "'");
        return v;
    }

private:
    RationalFunction expr() {
        RationalFunction v = term();
        while (!lex_.eof()) {
            char c = lex_.peek();
            if (c == '+' || c == '-') {
                lex_.take();
                RationalFunction t = term();
                v = (c == '+') ? v + t : v - t;
            } else break;
        }
        return v;
    }
    RationalFunction term() {
        RationalFunction v = factor();
        while (!lex_.eof()) {
            char c = lex_.peek();
            if (c == '*' || c == '/') {
                lex_.take();
                RationalFunction f = factor();
                v = (c == '*') ? v * f : v / f;
            } else break;
        }
        return v;
    }
    RationalFunction factor() {
        if (lex_.peek() == '-') {
            lex_.take();
            return -factor();
        }
        RationalFunction v = atom();
        if (!lex_.eof() && lex_.peek() == '^') {
            lex_.take();
            long e = static_cast<long>(lex_.integer());
            v = v.pow(e);
        }
        return v;
    }
    RationalFunction atom() {
        char c = lex_.peek();
        if (c == 'q') {
            lex_.take();
            return RationalFunction::q();
        }
        if (c == 'r') {
            lex_.take();
            return RationalFunction::q().pow(3);
        }
        if (c == '(') {
            lex_.take();
            RationalFunction v = expr();
            if (lex_.eof() || lex_.take() != ')')
                throw ParseError("expected ')' in expression '" + lex_.s + "'");
            return v;
        }
        if (std::isdigit((unsigned char)c)) return RationalFunction(lex_.rational());
        throw ParseError("unexpected character '" + std::string(1, c) + "' in expression '" + lex_.s + "'");
    }

    LaurentLexer lex_;
};

} // namespace detail

// Evaluate an expression in q and r as a rational function, with r = q^3.
inline RationalFunction eval_formula(const std::string& expression) {
    return detail::ExprParser(expression).run();
}

} // namespace bmwsq
