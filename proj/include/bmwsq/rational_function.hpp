#pragma once

// Rational functions in q with rational coefficients, kept in a canonical
// form so that equality is plain syntactic comparison:
//   * numerator and denominator share no polynomial factor,
//   * the denominator is an ordinary polynomial with nonzero constant term
//     (all q-shifts are carried by the numerator, which may be Laurent),
//   * the denominator has coprime integer coefficients and positive
//     constant coefficient.

#include <optional>
#include <vector>

#include "laurent.hpp"

namespace bmwsq {

namespace detail {

// Dense polynomial over the rationals, used only for gcd/divmod plumbing.
struct DensePoly {
    std::vector<Rat> c; // c[i] = coefficient of q^i; no trailing zeros

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }

    static DensePoly from_laurent(const LaurentPoly& p, long shift) {
        DensePoly d;
        if (p.is_zero()) return d;
        d.c.assign(p.max_exp() - shift + 1, Rat(0));
        for (auto& [e, v] : p.coeffs()) d.c[e - shift] = v;
        return d;
    }
    LaurentPoly to_laurent(long shift) const {
        LaurentPoly p;
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) p.set(static_cast<long>(i) + shift, c[i]);
        return p;
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        DensePoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }

    // Euclidean remainder; quotient discarded unless requested.
    static void divmod(const DensePoly& a, const DensePoly& b,
                       DensePoly& quot, DensePoly& rem) {
        rem = a;
        quot.c.clear();
        if (b.is_zero()) throw DivisionByZero();
        if (a.degree() >= b.degree())
            quot.c.assign(a.degree() - b.degree() + 1, Rat(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            long k = rem.degree() - b.degree();
            Rat f = rem.lead() / b.lead();
            quot.c[k] = f;
            for (size_t i = 0; i < b.c.size(); ++i)
                rem.c[i + k] -= f * b.c[i];
            rem.trim();
        }
        quot.trim();
    }

    void make_monic() {
        if (is_zero()) return;
        Rat l = lead();
        for (auto& v : c) v /= l;
    }

    static DensePoly gcd(DensePoly a, DensePoly b) {
        a.make_monic();
        b.make_monic();
        while (!b.is_zero()) {
            DensePoly q, r;
            divmod(a, b, q, r);
            r.make_monic();
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) a.c = {Rat(1)};
        return a;
    }
};

} // namespace detail

class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rat(1)) {}
    RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}
    RationalFunction(const LaurentPoly& p) : num_(p), den_(Rat(1)) {}
    RationalFunction(LaurentPoly num, LaurentPoly den) {
        if (den.is_zero()) throw DivisionByZero();
        num_ = std::move(num);
        den_ = std::move(den);
        canonicalize();
    }

    static RationalFunction q() { return RationalFunction(LaurentPoly::q()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == LaurentPoly(Rat(1)) && num_ == LaurentPoly(Rat(1)); }

    // Defined iff the denominator is 1 after canonicalization.
    std::optional<LaurentPoly> as_laurent() const {
        if (den_ == LaurentPoly(Rat(1))) return num_;
        return std::nullopt;
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RationalFunction(den_, num_);
    }
    RationalFunction pow(long n) const {
        RationalFunction base = n < 0 ? inverse() : *this;
        unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
        RationalFunction r{Rat(1)};
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string to_string() const {
        if (den_ == LaurentPoly(Rat(1))) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

    // Accepts a bare Laurent polynomial or the rendered (num) / (den) form.
    static RationalFunction parse(const std::string& text) {
        size_t slash = std::string::npos;
        int depth = 0;
        for (size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            else if (text[i] == ')') --depth;
            else if (text[i] == '/' && depth == 0) {
                // distinguish from a rational coefficient: look around for parens
                size_t j = i + 1;
                while (j < text.size() && std::isspace((unsigned char)text[j])) ++j;
                if (j < text.size() && text[j] == '(') slash = i;
            }
        }
        auto strip_parens = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            if (a == std::string::npos) throw ParseError("empty rational function text");
            s = s.substr(a, b - a + 1);
            if (!s.empty() && s.front() == '(' && s.back() == ')')
                s = s.substr(1, s.size() - 2);
            return s;
        };
        if (slash == std::string::npos) return RationalFunction(LaurentPoly::parse(text));
        return RationalFunction(LaurentPoly::parse(strip_parens(text.substr(0, slash))),
                                LaurentPoly::parse(strip_parens(text.substr(slash + 1))));
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(Rat(1));
            return;
        }
        long ns = num_.min_exp(), ds = den_.min_exp();
        detail::DensePoly n = detail::DensePoly::from_laurent(num_, ns);
        detail::DensePoly d = detail::DensePoly::from_laurent(den_, ds);
        detail::DensePoly g = detail::DensePoly::gcd(n, d);
        if (g.degree() > 0) {
            detail::DensePoly q, r;
            detail::DensePoly::divmod(n, g, q, r);
            n = q;
            detail::DensePoly::divmod(d, g, q, r);
            d = q;
        }
        // Scale so the denominator has coprime integer coefficients and a
        // positive constant term; the numerator absorbs the factor.
        Int lcm_den = 1, gcd_num = 0;
        for (auto& v : d.c) {
            if (v == 0) continue;
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
        }
        for (auto& v : d.c) {
            if (v == 0) continue;
            Int scaled = numerator(v) * (lcm_den / denominator(v));
            gcd_num = boost::multiprecision::gcd(gcd_num, scaled);
        }
        Rat factor(lcm_den, gcd_num);
        if (d.c[0] * factor < 0) factor = -factor;
        for (auto& v : d.c) v *= factor;
        for (auto& v : n.c) v *= factor;
        num_ = n.to_laurent(ns - ds);
        den_ = d.to_laurent(0);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

// Quantum integer [n] = (q^n - q^-n)/(q - q^-1); [0] = 0, [-n] = -[n].
inline RationalFunction qint(long n) {
    LaurentPoly p;
    bool neg = n < 0;
    if (neg) n = -n;
    for (long e = n - 1; e >= 1 - n; e -= 2) p.set(e, Rat(neg ? -1 : 1));
    return RationalFunction(p);
}

} // namespace bmwsq
