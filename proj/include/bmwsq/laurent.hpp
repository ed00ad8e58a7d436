#pragma once

// Exact Laurent polynomials in one variable q over the rationals.
// The zero coefficient is never stored, so map equality is value equality.

#include <map>
#include <string>
#include <sstream>
#include <cctype>
#include <utility>

#include "errors.hpp"
#include "numeric.hpp"

namespace bmwsq {

class LaurentPoly {
public:
    using Coeffs = std::map<long, Rat>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) coeffs_[0] = c;
    }
    LaurentPoly(long exponent, const Rat& c) {
        if (c != 0) coeffs_[exponent] = c;
    }

    static LaurentPoly monomial(long exponent, const Rat& c = Rat(1)) {
        return LaurentPoly(exponent, c);
    }
    static LaurentPoly q() { return monomial(1); }

    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rat coeff(long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    long min_exp() const { return coeffs_.begin()->first; }   // pre: nonzero
    long max_exp() const { return coeffs_.rbegin()->first; }  // pre: nonzero

    void set(long e, const Rat& c) {
        if (c == 0) coeffs_.erase(e);
        else coeffs_[e] = c;
    }
    void add_term(long e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.coeffs_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& scale(const Rat& c) {
        if (c == 0) { coeffs_.clear(); return *this; }
        for (auto& [e, v] : coeffs_) v *= c;
        return *this;
    }
    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }
    LaurentPoly pow(unsigned long n) const {
        LaurentPoly r(Rat(1)), b = *this;
        while (n) {
            if (n & 1) r *= b;
            if (n >>= 1) b *= b;
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Sorted monomial list, ascending exponent: `-q^-8 + q^-6 + q^-2`.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto& [e, c] : coeffs_) {
            Rat a = c;
            if (first) {
                if (a < 0) { out << "-"; a = -a; }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (e == 0) {
                out << a;
            } else {
                if (a != 1) out << a << "*";
                out << "q";
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

    static LaurentPoly parse(const std::string& text);

private:
    Coeffs coeffs_;
};

namespace detail {

struct LaurentLexer {
    const std::string& s;
    size_t i = 0;
    explicit LaurentLexer(const std::string& str) : s(str) {}
    void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eof() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    char take() { skip_ws(); return s[i++]; }

    Int integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start || (i == start + 1 && !std::isdigit((unsigned char)s[start])))
            throw ParseError("expected integer at position " + std::to_string(start) + " in '" + s + "'");
        return Int(s.substr(start, i - start));
    }
    Rat rational() {
        Int num = integer();
        skip_ws();
        // Consume '/' only for a rational literal like 3/2; a slash before
        // anything but digits is left for the caller (expression division).
        if (i < s.size() && s[i] == '/') {
            size_t j = i + 1;
            while (j < s.size() && std::isspace((unsigned char)s[j])) ++j;
            if (j < s.size() && std::isdigit((unsigned char)s[j])) {
                i = j;
                Int den = integer();
                if (den == 0) throw ParseError("zero denominator in rational");
                return Rat(num, den);
            }
        }
        return Rat(num);
    }
};

} // namespace detail

// Accepts what to_string produces, plus optional '*' or whitespace between
// a coefficient and the q-power.
inline LaurentPoly LaurentPoly::parse(const std::string& text) {
    detail::LaurentLexer lex(text);
    LaurentPoly result;
    bool first = true;
    while (!lex.eof()) {
        int sign = 1;
        char c = lex.peek();
        if (c == '+' || c == '-') {
            lex.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms in '" + text + "'");
        }
        first = false;

        Rat coef(1);
        bool saw_coef = false;
        if (lex.peek() != 'q') {
            coef = lex.rational();
            saw_coef = true;
        }
        if (lex.peek() == '*') lex.take();
        long exp = 0;
        if (lex.peek() == 'q') {
            lex.take();
            exp = 1;
            if (lex.peek() == '^') {
                lex.take();
                exp = static_cast<long>(lex.integer());
            }
        } else if (!saw_coef) {
            throw ParseError("expected term in '" + text + "'");
        }
        result.add_term(exp, sign * coef);
    }
    if (first) throw ParseError("empty polynomial text");
    return result;
}

} // namespace bmwsq
