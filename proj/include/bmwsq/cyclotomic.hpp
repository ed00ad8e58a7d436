#pragma once

// Elements of the n-th cyclotomic field, stored as rational coordinate
// vectors of length phi(n) in the power basis 1, z, ..., z^{phi(n)-1}
// reduced mod the n-th cyclotomic polynomial. All operations are exact;
// zero-test and equality are coordinate comparisons.

#include <map>
#include <mutex>
#include <vector>

#include "rational_function.hpp"

namespace bmwsq {

namespace detail {

// x^n - 1 = prod_{d | n} Phi_d(x); compute Phi_n by dividing out the
// proper divisors. Coefficients are integers but Rat keeps division exact.
inline std::vector<Rat> cyclotomic_poly_compute(long n) {
    DensePoly p;
    p.c.assign(n + 1, Rat(0));
    p.c[0] = -1;
    p.c[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        DensePoly phi_d;
        phi_d.c = cyclotomic_poly_compute(d);
        DensePoly q, r;
        DensePoly::divmod(p, phi_d, q, r);
        p = q;
    }
    return p.c;
}

inline const std::vector<Rat>& cyclotomic_poly(long n) {
    static std::map<long, std::vector<Rat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, cyclotomic_poly_compute(n)).first;
    return it->second;
}

} // namespace detail

class Cyclotomic {
public:
    explicit Cyclotomic(long conductor)
        : n_(conductor), coords_(degree(conductor), Rat(0)) {}
    Cyclotomic(long conductor, const Rat& c) : Cyclotomic(conductor) {
        coords_[0] = c;
    }

    static long degree(long conductor) {
        return static_cast<long>(detail::cyclotomic_poly(conductor).size()) - 1;
    }

    // z^k for the distinguished primitive root z of the field.
    static Cyclotomic root_power(long conductor, long k) {
        k %= conductor;
        if (k < 0) k += conductor;
        Cyclotomic r(conductor);
        std::vector<Rat> raw(k + 1, Rat(0));
        raw[k] = 1;
        r.coords_ = reduce(conductor, raw);
        return r;
    }

    long conductor() const { return n_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        for (auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const Cyclotomic& o) const {
        return n_ == o.n_ && coords_ == o.coords_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coords_) c = -c;
        return r;
    }
    Cyclotomic& operator+=(const Cyclotomic& o) {
        check_same_field(o);
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check_same_field(o);
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check_same_field(b);
        std::vector<Rat> raw(2 * a.coords_.size(), Rat(0));
        for (size_t i = 0; i < a.coords_.size(); ++i) {
            if (a.coords_[i] == 0) continue;
            for (size_t j = 0; j < b.coords_.size(); ++j)
                if (b.coords_[j] != 0) raw[i + j] += a.coords_[i] * b.coords_[j];
        }
        Cyclotomic r(a.n_);
        r.coords_ = reduce(a.n_, raw);
        return r;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    // Inverse via the extended Euclidean algorithm against Phi_n, which is
    // irreducible over the rationals, so any nonzero element is a unit.
    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByZero();
        detail::DensePoly a;
        a.c = coords_;
        a.trim();
        detail::DensePoly m;
        m.c = detail::cyclotomic_poly(n_);
        // Extended gcd: track u with u*a = r (mod Phi_n).
        detail::DensePoly r0 = m, r1 = a;
        detail::DensePoly u0, u1;
        u1.c = {Rat(1)};
        while (!r1.is_zero()) {
            detail::DensePoly q, r;
            detail::DensePoly::divmod(r0, r1, q, r);
            detail::DensePoly u2 = u0;
            detail::DensePoly qu = q * u1;
            // u2 = u0 - q*u1
            if (u2.c.size() < qu.c.size()) u2.c.resize(qu.c.size(), Rat(0));
            for (size_t i = 0; i < qu.c.size(); ++i) u2.c[i] -= qu.c[i];
            u2.trim();
            r0 = std::move(r1);
            r1 = std::move(r);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        // r0 is a nonzero constant times gcd = constant.
        Rat g = r0.c[0];
        Cyclotomic inv(n_);
        std::vector<Rat> raw = u0.c;
        for (auto& v : raw) v /= g;
        inv.coords_ = reduce(n_, raw);
        return inv;
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    Cyclotomic pow(long e) const {
        Cyclotomic base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        Cyclotomic r(n_, Rat(1));
        while (k) {
            if (k & 1) r *= base;
            if (k >>= 1) base *= base;
        }
        return r;
    }

    // Rendering in the same monomial grammar as LaurentPoly, symbol `z`.
    std::string to_string() const {
        LaurentPoly p;
        for (size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i] != 0) p.set(static_cast<long>(i), coords_[i]);
        if (p.is_zero()) return "0";
        std::string s = p.to_string();
        for (auto& ch : s)
            if (ch == 'q') ch = 'z';
        return s;
    }

private:
    void check_same_field(const Cyclotomic& o) const {
        if (n_ != o.n_) throw Error("cyclotomic conductor mismatch");
    }

    static std::vector<Rat> reduce(long n, std::vector<Rat> raw) {
        const std::vector<Rat>& phi = detail::cyclotomic_poly(n);
        long deg = static_cast<long>(phi.size()) - 1;
        for (long i = static_cast<long>(raw.size()) - 1; i >= deg; --i) {
            if (raw[i] == 0) continue;
            Rat f = raw[i]; // phi is monic
            raw[i] = 0;
            for (long j = 0; j < deg; ++j) raw[i - deg + j] -= f * phi[j];
        }
        raw.resize(deg, Rat(0));
        return raw;
    }

    long n_;
    std::vector<Rat> coords_;
};

// Evaluate a Laurent polynomial at q = z^s where z is the primitive
// conductor-th root; exponents wrap mod the conductor.
inline Cyclotomic eval_at_root(const LaurentPoly& p, long conductor, int s) {
    Cyclotomic acc(conductor);
    for (auto& [e, c] : p.coeffs()) {
        Cyclotomic term = Cyclotomic::root_power(conductor, s * e);
        term *= Cyclotomic(conductor, c);
        acc += term;
    }
    return acc;
}

// Exact image of f at q = e^{sign*pi*i/ell}, i.e. q = z^{sign} for z the
// primitive 2ell-th root of unity.
inline Cyclotomic specialize(const RationalFunction& f, long ell, int sign) {
    if (ell < 3) throw LevelTooSmall("specialize requires ell >= 3");
    if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
    long conductor = 2 * ell;
    Cyclotomic den = eval_at_root(f.den(), conductor, sign);
    if (den.is_zero())
        throw DenominatorVanishes("denominator vanishes at q = e^{" +
                                  std::string(sign > 0 ? "" : "-") + "pi i/" +
                                  std::to_string(ell) + "}");
    Cyclotomic num = eval_at_root(f.num(), conductor, sign);
    return num / den;
}

} // namespace bmwsq
