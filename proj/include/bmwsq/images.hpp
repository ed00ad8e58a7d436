#pragma once

// Classification of the closed projective braid-group images on the blocks
// of the symmetric-square realization at q = e^{pi i/ell}, r = q^3, as a
// thirteen-case ladder plus the generic two-factor product, together with a
// brute-force verifier: breadth-first closure of the exact projective
// generator matrices over the 2ell-th cyclotomic field.
//
// Projective canonical form: scale a matrix by the inverse of its first
// nonzero entry in row-major order, then clear rational denominators and
// divide out the integer content; entries become primitive integer
// coordinate vectors and equality is exact. Products are computed on the
// integer coordinates (the modulus polynomial is monic integral), with one
// field inversion per canonicalization.

#include <optional>
#include <unordered_set>

#include "squares.hpp"

namespace bmwsq {

struct GroupDescriptor {
    enum class Kind { Trivial, PSp, PSpSemidirect, A5, A5xPSU, PSU, PSUxPSU };

    Kind kind = Kind::Trivial;
    long n = 0;          // PSp_n(3)
    long rank = 0;       // (Z_3)^rank for the semidirect kind
    long d1 = 0, d2 = 0; // PSU dimensions
    int case_index = 0;  // 1..13, or 0 for the generic product
    std::optional<Int> order; // empty = infinite

    std::string to_string() const {
        switch (kind) {
            case Kind::Trivial: return "trivial";
            case Kind::PSp: return "PSp_" + std::to_string(n) + "(3)";
            case Kind::PSpSemidirect:
                return "PSp_" + std::to_string(n) + "(3) x| (Z_3)^" + std::to_string(rank);
            case Kind::A5: return "A_5";
            case Kind::A5xPSU: return "A_5 x PSU(" + std::to_string(d1) + ")";
            case Kind::PSU: return "PSU(" + std::to_string(d1) + ")";
            case Kind::PSUxPSU:
                return "PSU(" + std::to_string(d1) + ") x PSU(" + std::to_string(d2) + ")";
        }
        return "?";
    }
};

namespace detail {

inline Int sp_order(long n) { // |Sp_n(3)|, n even
    long k = n / 2;
    Int r = ipow(3, static_cast<unsigned long>(k) * k);
    for (long i = 1; i <= k; ++i) r *= ipow(3, 2 * i) - 1;
    return r;
}
inline Int psp_order(long n) { return n == 0 ? Int(1) : sp_order(n) / 2; }

inline GroupDescriptor make_psp(long n, int idx) {
    GroupDescriptor g;
    g.kind = GroupDescriptor::Kind::PSp;
    g.n = n;
    g.case_index = idx;
    g.order = psp_order(n);
    return g;
}
inline GroupDescriptor make_semidirect(long n, long rank, int idx) {
    GroupDescriptor g;
    g.kind = GroupDescriptor::Kind::PSpSemidirect;
    g.n = n;
    g.rank = rank;
    g.case_index = idx;
    g.order = psp_order(n) * ipow(3, rank);
    return g;
}
inline GroupDescriptor make_trivial(int idx) {
    GroupDescriptor g;
    g.case_index = idx;
    g.order = Int(1);
    return g;
}
inline GroupDescriptor make_a5(int idx) {
    GroupDescriptor g;
    g.kind = GroupDescriptor::Kind::A5;
    g.case_index = idx;
    g.order = Int(60);
    return g;
}

} // namespace detail

// Restricted block dimension d_{m,s} = |T_ell([m-s,s])|.
inline long tl_dim(long m, long s, const Level& ell) {
    Diagram lam = (m - s > 0) ? (s > 0 ? Diagram{m - s, s} : Diagram{m - s}) : Diagram{};
    if (s < 0 || m - s < s || !in_lambda(lam, m, ell))
        throw NotInLambda("no Lambda(" + std::to_string(m) + "," + ell.to_string() +
                          ") diagram with second row " + std::to_string(s));
    return static_cast<long>(count_tableaux(lam, ell));
}

// Closed image of the projectivized Jones representation on [m-s,s].
inline GroupDescriptor tl_image_group(long m, long s, long ell) {
    if (m < 3) throw Error("image table needs m >= 3");
    Level l = Level::finite(ell);
    long d = tl_dim(m, s, l); // throws NotInLambda when out of range
    if (ell == 6) {
        if (m % 2 == 1) return detail::make_psp(m - 1, 1);
        if (s == m / 2 - 1) return detail::make_semidirect(m - 2, m - 2, 2);
        return detail::make_psp(m - 2, 2);
    }
    if (ell == 10 && ((m == 3 && s == 1) || (m == 4 && s == 2))) return detail::make_a5(3);
    GroupDescriptor g;
    g.kind = GroupDescriptor::Kind::PSU;
    g.d1 = d;
    g.case_index = 4;
    if (d <= 1) g.order = Int(1);
    return g;
}

// The thirteen-case ladder, each condition excluding all previous ones,
// then the generic two-factor product.
inline GroupDescriptor classify_image(long m, const Diagram& lambda, long ell) {
    if (ell < 6) throw LevelTooSmall("classification requires ell >= 6");
    Level l = Level::finite(ell);
    if (!in_gamma(lambda, l))
        throw NotInGamma(lambda.to_string() + " is not in Gamma(" + std::to_string(ell) + ")");
    long slack = m - lambda.size();
    if (slack < 0 || slack % 2 != 0)
        throw ParityViolation("m - |lambda| must be non-negative and even");

    const std::vector<Diagram> sigma6{Diagram{4},          Diagram{4, 1, 1}, Diagram{1, 1, 1, 1},
                                      Diagram{2, 2},       Diagram{1, 1},    Diagram{}};
    auto in_sigma6 = [&] {
        return std::find(sigma6.begin(), sigma6.end(), lambda) != sigma6.end();
    };

    if (lambda == (m > 0 ? Diagram{m} : Diagram{})) return detail::make_trivial(1);
    if (m == 2) return detail::make_trivial(2);
    if (m == 3 && lambda == Diagram{1, 1, 1}) return detail::make_trivial(3);
    if (m == 4 && lambda == Diagram{1, 1, 1, 1}) return detail::make_trivial(4);
    if (ell == 6 && m % 2 == 1) return detail::make_psp(m - 1, 5);
    if (ell == 6 && !in_sigma6()) return detail::make_psp(m - 2, 6);
    if (ell == 6) return detail::make_semidirect(m - 2, m - 2, 7);
    if (ell == 10 && m == 3 && (lambda == Diagram{2, 1} || lambda == Diagram{1}))
        return detail::make_a5(8);
    if (ell == 10 && m == 4 && (lambda == Diagram{2, 2} || lambda == Diagram{}))
        return detail::make_a5(9);
    if (ell == 10 && m == 4 && lambda == Diagram{1, 1}) {
        GroupDescriptor g;
        g.kind = GroupDescriptor::Kind::A5xPSU;
        g.d1 = tl_dim(4, 1, l);
        g.case_index = 10;
        return g;
    }
    if (lambda.row_count() <= 1) {
        GroupDescriptor g;
        g.kind = GroupDescriptor::Kind::PSU;
        g.d1 = tl_dim(m, (m - lambda.row(0)) / 2, l);
        g.case_index = 11;
        if (g.d1 <= 1) g.order = Int(1);
        return g;
    }
    if (lambda.row_count() == 3) {
        GroupDescriptor g;
        g.kind = GroupDescriptor::Kind::PSU;
        g.d1 = tl_dim(m, (m - lambda.row(0)) / 2, l);
        g.case_index = 12;
        if (g.d1 <= 1) g.order = Int(1);
        return g;
    }
    if (lambda.row_count() == 4) {
        GroupDescriptor g;
        g.kind = GroupDescriptor::Kind::PSU;
        g.d1 = tl_dim(m, m / 2, l);
        g.case_index = 13;
        if (g.d1 <= 1) g.order = Int(1);
        return g;
    }
    // Generic: lambda = [l1, l2] with l2 >= 1.
    GroupDescriptor g;
    g.kind = GroupDescriptor::Kind::PSUxPSU;
    g.d1 = tl_dim(m, (m - lambda.row(0) + lambda.row(1)) / 2, l);
    g.d2 = tl_dim(m, (m - lambda.row(0) - lambda.row(1)) / 2, l);
    g.case_index = 0;
    if (g.d1 <= 1 && g.d2 <= 1) g.order = Int(1);
    return g;
}

// Source of the lambda-block inside the symmetric-square decomposition.
inline SquareSource block_source(long m, const Diagram& lambda, const Level& ell) {
    switch (lambda.row_count()) {
        case 0: return {SquarePart::Sym, m / 2, 0};
        case 1: return {SquarePart::Sym, (m - lambda.row(0)) / 2, 0};
        case 2: {
            long nu1 = lambda.row(0), nu2 = lambda.row(1);
            return {SquarePart::Tensor, (m - nu1 - nu2) / 2, (m - nu1 + nu2) / 2};
        }
        default: {
            Diagram base = star(lambda, ell);
            return {SquarePart::Alt, (m - base.size()) / 2, 0};
        }
    }
}

// ---------------------------------------------------------------------------
// Exact projective closure enumeration.

namespace detail {

// Matrix over Z[zeta] with projectively canonical integer coordinates.
struct ProjMatrix {
    long dim = 0;
    long deg = 0;                 // coordinates per entry
    std::vector<Int> c;           // dim*dim*deg, entry-major

    std::string key() const {
        std::string s;
        s.reserve(c.size() * 3);
        for (const Int& v : c) {
            s += v.str();
            s += ',';
        }
        return s;
    }
};

struct CycloContext {
    long conductor;
    long deg;
    std::vector<Int> phi; // monic modulus, integer coefficients

    explicit CycloContext(long n) : conductor(n) {
        const std::vector<Rat>& p = cyclotomic_poly(n);
        deg = static_cast<long>(p.size()) - 1;
        phi.resize(p.size());
        for (size_t i = 0; i < p.size(); ++i) phi[i] = numerator(p[i]);
    }

    // Multiply-accumulate of entry coordinate slices: out += a * b mod phi.
    void mul_acc(const Int* a, const Int* b, std::vector<Int>& tmp, Int* out) const {
        std::fill(tmp.begin(), tmp.end(), Int(0));
        for (long i = 0; i < deg; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; j < deg; ++j)
                if (b[j] != 0) tmp[i + j] += a[i] * b[j];
        }
        for (long i = 2 * deg - 2; i >= deg; --i) {
            if (tmp[i] == 0) continue;
            Int f = tmp[i]; // phi monic
            tmp[i] = 0;
            for (long j = 0; j < deg; ++j) tmp[i - deg + j] -= f * phi[j];
        }
        for (long i = 0; i < deg; ++i) out[i] += tmp[i];
    }

    ProjMatrix multiply(const ProjMatrix& x, const ProjMatrix& y) const {
        ProjMatrix r;
        r.dim = x.dim;
        r.deg = deg;
        r.c.assign(static_cast<size_t>(x.dim) * x.dim * deg, Int(0));
        std::vector<Int> tmp(2 * deg, Int(0));
        for (long i = 0; i < x.dim; ++i)
            for (long k = 0; k < x.dim; ++k) {
                const Int* a = &x.c[(static_cast<size_t>(i) * x.dim + k) * deg];
                bool nonzero = false;
                for (long t = 0; t < deg; ++t)
                    if (a[t] != 0) { nonzero = true; break; }
                if (!nonzero) continue;
                for (long j = 0; j < x.dim; ++j) {
                    const Int* b = &y.c[(static_cast<size_t>(k) * x.dim + j) * deg];
                    Int* out = &r.c[(static_cast<size_t>(i) * x.dim + j) * deg];
                    mul_acc(a, b, tmp, out);
                }
            }
        return r;
    }

    Cyclotomic entry_value(const ProjMatrix& x, long i, long j) const {
        Cyclotomic v(conductor);
        std::vector<Rat> coords(deg);
        for (long t = 0; t < deg; ++t)
            coords[t] = Rat(x.c[(static_cast<size_t>(i) * x.dim + j) * deg + t]);
        // coords already reduced (deg < phi degree)
        Cyclotomic acc(conductor);
        for (long t = 0; t < deg; ++t) {
            if (coords[t] == 0) continue;
            Cyclotomic term = Cyclotomic::root_power(conductor, t);
            term *= Cyclotomic(conductor, coords[t]);
            acc += term;
        }
        return acc;
    }

    // Scale by the inverse of the first nonzero entry, clear denominators,
    // divide by the content.
    void canonicalize(ProjMatrix& x) const {
        long first = -1;
        for (size_t e = 0; e < x.c.size() / deg; ++e) {
            for (long t = 0; t < deg; ++t)
                if (x.c[e * deg + t] != 0) { first = static_cast<long>(e); break; }
            if (first >= 0) break;
        }
        if (first < 0) throw Error("projective normalization of the zero matrix");
        Cyclotomic lead = entry_value(x, first / x.dim, first % x.dim);
        Cyclotomic inv = lead.inverse();
        // Rational-coordinate rescale of every entry.
        std::vector<Rat> scaled(x.c.size());
        Int lcm_den = 1;
        for (size_t e = 0; e < x.c.size() / deg; ++e) {
            Cyclotomic v = entry_value(x, static_cast<long>(e) / x.dim,
                                       static_cast<long>(e) % x.dim) * inv;
            const auto& co = v.coords();
            for (long t = 0; t < deg; ++t) {
                scaled[e * deg + t] = co[t];
                if (co[t] != 0)
                    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(co[t]));
            }
        }
        Int content = 0;
        std::vector<Int> ints(x.c.size());
        for (size_t e = 0; e < scaled.size(); ++e) {
            if (scaled[e] == 0) { ints[e] = 0; continue; }
            ints[e] = numerator(scaled[e]) * (lcm_den / denominator(scaled[e]));
            content = boost::multiprecision::gcd(content, ints[e]);
        }
        for (auto& v : ints) v /= content;
        x.c = std::move(ints);
    }

    ProjMatrix from_cyclotomic(const Matrix<Cyclotomic>& m) const {
        ProjMatrix r;
        r.dim = m.dim();
        r.deg = deg;
        r.c.assign(static_cast<size_t>(r.dim) * r.dim * deg, Int(0));
        Int lcm_den = 1;
        for (long i = 0; i < r.dim; ++i)
            for (long j = 0; j < r.dim; ++j)
                for (const Rat& v : m.at(i, j).coords())
                    if (v != 0) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
        for (long i = 0; i < r.dim; ++i)
            for (long j = 0; j < r.dim; ++j) {
                const auto& co = m.at(i, j).coords();
                for (long t = 0; t < static_cast<long>(co.size()); ++t)
                    if (co[t] != 0)
                        r.c[(static_cast<size_t>(i) * r.dim + j) * deg + t] =
                            numerator(co[t]) * (lcm_den / denominator(co[t]));
            }
        canonicalize(r);
        return r;
    }
};

} // namespace detail

struct BfsResult {
    Int order = 0;    // elements found (exact order when hit_cap is false)
    bool hit_cap = false;
};

// Breadth-first closure of the projectivized braid generator images on the
// lambda-block, with exact equality via the canonical form.
inline BfsResult enumerate_projective_group(long m, const Diagram& lambda, long ell,
                                            long budget = 200000) {
    Level l = Level::finite(ell);
    if (!in_gamma(lambda, l))
        throw NotInGamma(lambda.to_string() + " is not in Gamma(" + std::to_string(ell) + ")");
    long slack = m - lambda.size();
    if (slack < 0 || slack % 2 != 0)
        throw ParityViolation("m - |lambda| must be non-negative and even");

    SquareRep<Cyclotomic> rep(m, l);
    SquareSource src = block_source(m, lambda, l);
    detail::CycloContext ctx(2 * ell);

    std::vector<detail::ProjMatrix> gens;
    for (long i = 1; i <= m - 1; ++i)
        for (int sign : {1, -1}) {
            Matrix<Cyclotomic> g = rep.block_generator(src, i, sign);
            if (g.dim() == 0) throw Error("block is zero-dimensional");
            gens.push_back(ctx.from_cyclotomic(g));
        }

    std::unordered_set<std::string> visited;
    std::vector<detail::ProjMatrix> frontier;

    detail::ProjMatrix id;
    id.dim = gens.front().dim;
    id.deg = ctx.deg;
    id.c.assign(static_cast<size_t>(id.dim) * id.dim * ctx.deg, Int(0));
    for (long i = 0; i < id.dim; ++i) id.c[(static_cast<size_t>(i) * id.dim + i) * ctx.deg] = 1;

    visited.insert(id.key());
    frontier.push_back(std::move(id));

    while (!frontier.empty()) {
        std::vector<detail::ProjMatrix> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                detail::ProjMatrix p = ctx.multiply(x, g);
                ctx.canonicalize(p);
                std::string k = p.key();
                if (visited.count(k)) continue;
                if (static_cast<long>(visited.size()) >= budget)
                    return {Int(visited.size()), true};
                visited.insert(std::move(k));
                next.push_back(std::move(p));
            }
        }
        frontier = std::move(next);
    }
    return {Int(visited.size()), false};
}

} // namespace bmwsq
