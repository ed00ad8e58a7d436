#pragma once

// Dense square matrices over an exact scalar ring. Cyclotomic scalars carry
// their field with them, so matrices are built from an explicit zero and
// arithmetic never manufactures scalars out of thin air.

#include <vector>

#include "cyclotomic.hpp"

namespace bmwsq {

inline RationalFunction zero_like(const RationalFunction&) { return RationalFunction(); }
inline RationalFunction one_like(const RationalFunction&) { return RationalFunction(Rat(1)); }
inline Cyclotomic zero_like(const Cyclotomic& c) { return Cyclotomic(c.conductor()); }
inline Cyclotomic one_like(const Cyclotomic& c) { return Cyclotomic(c.conductor(), Rat(1)); }

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(long n, const K& fill) : n_(n), a_(static_cast<size_t>(n) * n, fill) {}

    static Matrix identity(long n, const K& zero, const K& one) {
        Matrix m(n, zero);
        for (long i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    long dim() const { return n_; }
    K& at(long i, long j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const K& at(long i, long j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix& operator+=(const Matrix& o) {
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    Matrix& scale(const K& c) {
        for (auto& v : a_) v *= c;
        return *this;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.n_, zero_like(x.a_[0]));
        for (long i = 0; i < x.n_; ++i)
            for (long k = 0; k < x.n_; ++k) {
                const K& f = x.at(i, k);
                if (f == zero_like(f)) continue;
                for (long j = 0; j < x.n_; ++j) r.at(i, j) += f * y.at(k, j);
            }
        return r;
    }

    K trace() const {
        K t = a_[0];
        t -= a_[0];
        for (long i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        if (a_.empty()) return true;
        K z = zero_like(a_[0]);
        for (auto& v : a_)
            if (v != z) return false;
        return true;
    }

    // Kronecker product: (a (x) b)[(i,k),(j,l)] = a[i,j] b[k,l].
    static Matrix kronecker(const Matrix& a, const Matrix& b) {
        Matrix r(a.n_ * b.n_, zero_like(a.a_[0]));
        for (long i = 0; i < a.n_; ++i)
            for (long j = 0; j < a.n_; ++j) {
                const K& f = a.at(i, j);
                if (f == zero_like(f)) continue;
                for (long k = 0; k < b.n_; ++k)
                    for (long l = 0; l < b.n_; ++l)
                        r.at(i * b.n_ + k, j * b.n_ + l) = f * b.at(k, l);
            }
        return r;
    }

private:
    long n_ = 0;
    std::vector<K> a_;
};

} // namespace bmwsq
