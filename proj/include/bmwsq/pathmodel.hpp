#pragma once

// Exact path-model representation of the Temperley-Lieb tower. Basis vectors
// of the block labelled by a terminal diagram are the restricted tableaux
// ending there, in enumeration order. The generator e_i acts on levels
// (i-1, i, i+1) of a path: its entry between paths p, p' agreeing off level
// i is nonzero exactly when the level-(i+1) shape adds one box to each row
// of the level-(i-1) shape (so d = row difference + 1 returns), with value
//     [d(mu')] / ([d(sigma)] * [2]),
// mu' the level-i shape of the column path and sigma the shared level-(i-1)
// shape. The trace weights [d(terminal)]/[2]^m make (M1)-(M3) exact.
//
// Generic level (ell = inf) computes over rational functions in q; finite
// ell specializes every entry to the 2ell-th cyclotomic field at
// q = e^{pi i/ell}. Restricted paths keep 1 <= d <= ell-1, so no specialized
// denominator ever vanishes (asserted during construction).

#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "braid.hpp"
#include "matrix.hpp"
#include "tableaux.hpp"

namespace bmwsq {

template <class K>
struct BlockMatrix {
    std::map<Diagram, Matrix<K>> blocks;

    bool same_structure(const BlockMatrix& o) const {
        if (blocks.size() != o.blocks.size()) return false;
        auto it = o.blocks.begin();
        for (auto& [d, m] : blocks) {
            if (it->first != d || it->second.dim() != m.dim()) return false;
            ++it;
        }
        return true;
    }

    friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
        BlockMatrix r;
        for (auto& [d, m] : a.blocks) r.blocks.emplace(d, m * b.blocks.at(d));
        return r;
    }
    friend BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b) {
        BlockMatrix r;
        for (auto& [d, m] : a.blocks) r.blocks.emplace(d, m + b.blocks.at(d));
        return r;
    }
    friend BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b) {
        BlockMatrix r;
        for (auto& [d, m] : a.blocks) r.blocks.emplace(d, m - b.blocks.at(d));
        return r;
    }
    BlockMatrix& scale(const K& c) {
        for (auto& [d, m] : blocks) m.scale(c);
        return *this;
    }
    bool operator==(const BlockMatrix& o) const { return blocks == o.blocks; }
    bool operator!=(const BlockMatrix& o) const { return !(*this == o); }
    bool is_zero() const {
        for (auto& [d, m] : blocks)
            if (!m.is_zero()) return false;
        return true;
    }
};

namespace detail {
template <class K>
K make_zero_scalar(const Level& ell) {
    if constexpr (std::is_same_v<K, RationalFunction>) {
        (void)ell;
        return RationalFunction();
    } else {
        return Cyclotomic(2 * ell.value());
    }
}
} // namespace detail

template <class K>
class PathModel {
public:
    struct Block {
        Diagram terminal;
        std::vector<Tableau2Row> basis; // enum_tableaux order
        std::map<std::vector<int>, long> index;
    };

    PathModel(long m, const Level& ell)
        : m_(m), ell_(ell), zero_(detail::make_zero_scalar<K>(ell)), one_(one_like(zero_)) {
        if constexpr (std::is_same_v<K, RationalFunction>) {
            if (!ell.is_inf())
                throw Error("generic path model requires ell = inf");
        } else {
            if (ell.is_inf())
                throw Error("cyclotomic path model requires finite ell");
        }
        for (const Diagram& lam : lambda_set(m, ell)) {
            Block b;
            b.terminal = lam;
            b.basis = enum_tableaux(lam, ell);
            if (b.basis.empty()) continue;
            for (size_t i = 0; i < b.basis.size(); ++i)
                b.index.emplace(b.basis[i].steps(), static_cast<long>(i));
            blocks_.push_back(std::move(b));
        }
        generators_.resize(m_ >= 1 ? m_ - 1 : 0);
    }

    long size() const { return m_; }
    const Level& level() const { return ell_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const K& zero() const { return zero_; }
    const K& one() const { return one_; }

    K scalar(const RationalFunction& f) const {
        if constexpr (std::is_same_v<K, RationalFunction>) {
            return f;
        } else {
            return specialize(f, ell_.value(), 1);
        }
    }

    BlockMatrix<K> identity() const {
        BlockMatrix<K> r;
        for (auto& b : blocks_)
            r.blocks.emplace(b.terminal,
                             Matrix<K>::identity(static_cast<long>(b.basis.size()), zero_, one_));
        return r;
    }

    // The idempotent generator e_i, 1 <= i <= m-1. Built once, then shared.
    const BlockMatrix<K>& e(long i) const {
        if (i < 1 || i > m_ - 1)
            throw IndexOutOfRange("generator index " + std::to_string(i) +
                                  " out of range for size " + std::to_string(m_));
        std::lock_guard<std::mutex> lock(mutex_);
        auto& slot = generators_[i - 1];
        if (!slot) slot = std::make_unique<BlockMatrix<K>>(build_e(i));
        return *slot;
    }

    // g_i = (1 + q^-2) e_i - 1 and its inverse (q^2 + 1) e_i - 1.
    BlockMatrix<K> g(long i) const {
        RationalFunction q = RationalFunction::q();
        BlockMatrix<K> r = e(i);
        r.scale(scalar(RationalFunction(Rat(1)) + q.pow(-2)));
        return r - identity();
    }
    BlockMatrix<K> g_inverse(long i) const {
        RationalFunction q = RationalFunction::q();
        BlockMatrix<K> r = e(i);
        r.scale(scalar(RationalFunction(Rat(1)) + q.pow(2)));
        return r - identity();
    }

    BlockMatrix<K> represent(const BraidWord& w) const {
        if (w.strands() != m_) throw ShapeMismatch("word strand count differs from model size");
        BlockMatrix<K> acc = identity();
        for (long l : w.letters()) acc = acc * (l > 0 ? g(l) : g_inverse(-l));
        return acc;
    }

    // Markov trace: path-diagonal sum weighted by [d(terminal)]/[2]^m.
    K markov_trace(const BlockMatrix<K>& x) const {
        K t = zero_;
        for (auto& b : blocks_) {
            K w = scalar(weight_rf(b.terminal));
            t += w * x.blocks.at(b.terminal).trace();
        }
        return t;
    }

    // Inclusion along path truncation: a size-(m-1) element acts on the
    // first m-1 levels of each size-m path.
    BlockMatrix<K> embed(const PathModel& sub, const BlockMatrix<K>& a) const {
        if (sub.m_ != m_ - 1 || sub.ell_ != ell_)
            throw ShapeMismatch("embedding requires the size-(m-1) model at the same level");
        BlockMatrix<K> r;
        for (auto& b : blocks_) {
            long n = static_cast<long>(b.basis.size());
            Matrix<K> mat(n, zero_);
            for (long p = 0; p < n; ++p) {
                std::vector<int> tp(b.basis[p].steps().begin(), b.basis[p].steps().end() - 1);
                Diagram sp = b.basis[p].shape_at(m_ - 1);
                for (long p2 = 0; p2 < n; ++p2) {
                    std::vector<int> tq(b.basis[p2].steps().begin(), b.basis[p2].steps().end() - 1);
                    Diagram sq = b.basis[p2].shape_at(m_ - 1);
                    if (sp != sq) continue;
                    const auto& sb = sub.block(sp);
                    mat.at(p, p2) = a.blocks.at(sp).at(sb.index.at(tp), sb.index.at(tq));
                }
            }
            r.blocks.emplace(b.terminal, std::move(mat));
        }
        return r;
    }

    const Block& block(const Diagram& terminal) const {
        for (auto& b : blocks_)
            if (b.terminal == terminal) return b;
        throw Error("no block labelled " + terminal.to_string());
    }

private:
    static long dvalue(const Diagram& d) { return d.row(0) - d.row(1) + 1; }

    RationalFunction weight_rf(const Diagram& d) const {
        return qint(dvalue(d)) / qint(2).pow(m_);
    }

    BlockMatrix<K> build_e(long i) const {
        BlockMatrix<K> result;
        for (auto& b : blocks_) {
            long n = static_cast<long>(b.basis.size());
            Matrix<K> mat(n, zero_);
            // Group paths by everything away from level i.
            std::map<std::vector<int>, std::vector<long>> groups;
            for (long p = 0; p < n; ++p) {
                std::vector<int> key = b.basis[p].steps();
                key.erase(key.begin() + (i - 1), key.begin() + (i + 1));
                groups[key].push_back(p);
            }
            for (auto& [key, members] : groups) {
                const Tableau2Row& t0 = b.basis[members.front()];
                Diagram sigma = t0.shape_at(i - 1);
                Diagram tau = t0.shape_at(i + 1);
                if (dvalue(tau) != dvalue(sigma)) continue;
                long ds = dvalue(sigma);
                // Restricted paths keep every denominator index off the
                // vanishing class 0 mod ell.
                if (!ell_.is_inf() && (ds < 1 || ds > ell_.value() - 1))
                    throw Error("path weight index " + std::to_string(ds) +
                                " escapes [1, ell-1] at level " + std::to_string(i));
                for (long pb : members) {
                    long dm = dvalue(b.basis[pb].shape_at(i));
                    K entry = scalar(qint(dm) / (qint(ds) * qint(2)));
                    for (long pa : members) mat.at(pa, pb) = entry;
                }
            }
            result.blocks.emplace(b.terminal, std::move(mat));
        }
        return result;
    }

    long m_;
    Level ell_;
    K zero_;
    K one_;
    std::vector<Block> blocks_;
    mutable std::mutex mutex_;
    mutable std::vector<std::unique_ptr<BlockMatrix<K>>> generators_;
};

// Build-once cache of path models keyed by (size, level).
template <class K>
std::shared_ptr<const PathModel<K>> get_path_model(long m, const Level& ell) {
    static std::map<std::pair<long, long>, std::shared_ptr<const PathModel<K>>> cache;
    static std::mutex mtx;
    std::pair<long, long> key{m, ell.is_inf() ? -1 : ell.value()};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_shared<PathModel<K>>(m, ell)).first;
    return it->second;
}

struct BratteliDiagram {
    std::vector<std::vector<Diagram>> levels;
    // edges[j]: index pairs between levels[j] and levels[j+1]
    std::vector<std::vector<std::pair<long, long>>> edges;
};

inline BratteliDiagram tl_bratteli(long m, const Level& ell) {
    BratteliDiagram b;
    for (long j = 0; j <= m; ++j) b.levels.push_back(lambda_set(j, ell));
    for (long j = 0; j + 1 <= m; ++j) {
        std::vector<std::pair<long, long>> e;
        for (size_t a = 0; a < b.levels[j].size(); ++a)
            for (size_t c = 0; c < b.levels[j + 1].size(); ++c)
                if (adjacent(b.levels[j][a], b.levels[j + 1][c]))
                    e.emplace_back(a, c);
        b.edges.push_back(std::move(e));
    }
    return b;
}

inline BratteliDiagram bmw_bratteli(long m, const Level& ell) {
    BratteliDiagram b;
    for (long j = 0; j <= m; ++j) {
        std::vector<Diagram> level;
        for (const Diagram& d : gamma_set(ell, j))
            if ((j - d.size()) % 2 == 0) level.push_back(d);
        b.levels.push_back(std::move(level));
    }
    for (long j = 0; j + 1 <= m; ++j) {
        std::vector<std::pair<long, long>> e;
        for (size_t a = 0; a < b.levels[j].size(); ++a)
            for (size_t c = 0; c < b.levels[j + 1].size(); ++c)
                if (adjacent(b.levels[j][a], b.levels[j + 1][c]))
                    e.emplace_back(a, c);
        b.edges.push_back(std::move(e));
    }
    return b;
}

// Relation and trace-axiom report for the size-m model; every identity is
// checked as an exact matrix or scalar equation.
template <class K>
std::vector<std::pair<std::string, bool>> tl_relation_report(long m, const Level& ell,
                                                             int random_checks = 20) {
    auto model = get_path_model<K>(m, ell);
    auto sub = m >= 2 ? get_path_model<K>(m - 1, ell) : nullptr;
    RationalFunction q = RationalFunction::q();
    K one = model->one();
    std::vector<std::pair<std::string, bool>> rep;

    auto scaled = [&](const BlockMatrix<K>& x, const RationalFunction& f) {
        BlockMatrix<K> r = x;
        r.scale(model->scalar(f));
        return r;
    };

    bool t1 = true, t2 = true, h = true, b1 = true, b2 = true;
    bool t3 = true, t4 = true, t5 = true, t6 = true, t7 = true;
    RationalFunction inv_x = RationalFunction(Rat(1)) / (qint(2) * qint(2));
    for (long i = 1; i <= m - 1; ++i) {
        const auto& ei = model->e(i);
        BlockMatrix<K> gi = model->g(i);
        BlockMatrix<K> gii = model->g_inverse(i);
        h = h && (ei * ei == ei);
        t3 = t3 && (gi * gii == model->identity());
        t4 = t4 && (gi * ei == scaled(ei, q.pow(-2)));
        t7 = t7 && ((gi + model->identity()) * (gi - scaled(model->identity(), q.pow(-2)))).is_zero();
        for (long j = 1; j <= m - 1; ++j) {
            if (j == i) continue;
            const auto& ej = model->e(j);
            BlockMatrix<K> gj = model->g(j);
            if (std::abs(i - j) == 1) {
                t1 = t1 && (ei * ej * ei == scaled(ei, inv_x));
                b1 = b1 && (gi * gj * gi == gj * gi * gj);
                BlockMatrix<K> t6lhs =
                    gi * gj * gi + gi * gj + gj * gi + gi + gj + model->identity();
                t6 = t6 && t6lhs.is_zero();
                if (j == i + 1)
                    t5 = t5 && (ei * gj * ei ==
                                scaled(ei, -(RationalFunction(Rat(1)) / (q.pow(-2) + RationalFunction(Rat(1))))));
            } else {
                t2 = t2 && (ei * ej == ej * ei);
                b2 = b2 && (gi * gj == gj * gi);
            }
        }
    }
    rep.emplace_back("T1", t1);
    rep.emplace_back("T2", t2);
    rep.emplace_back("H", h);
    rep.emplace_back("B1", b1);
    rep.emplace_back("B2", b2);
    rep.emplace_back("T3", t3);
    rep.emplace_back("T4", t4);
    rep.emplace_back("T5", t5);
    rep.emplace_back("T6", t6);
    rep.emplace_back("T7", t7);

    rep.emplace_back("M1", model->markov_trace(model->identity()) == one);

    std::mt19937 rng(7117 + m);
    std::uniform_int_distribution<long> small(-3, 3);
    auto random_block = [&](const PathModel<K>& pm) {
        BlockMatrix<K> r;
        for (auto& b : pm.blocks()) {
            long n = static_cast<long>(b.basis.size());
            Matrix<K> mat(n, pm.zero());
            for (long a = 0; a < n; ++a)
                for (long c = 0; c < n; ++c)
                    mat.at(a, c) = pm.scalar(RationalFunction(Rat(small(rng))));
            r.blocks.emplace(b.terminal, std::move(mat));
        }
        return r;
    };

    bool m2 = true;
    for (int t = 0; t < random_checks; ++t) {
        BlockMatrix<K> a = random_block(*model), b = random_block(*model);
        m2 = m2 && (model->markov_trace(a * b) == model->markov_trace(b * a));
    }
    rep.emplace_back("M2", m2);

    bool m3 = true;
    if (m >= 2) {
        K inv_x_k = model->scalar(inv_x);
        for (int t = 0; t < random_checks; ++t) {
            BlockMatrix<K> a = random_block(*sub);
            K lhs = model->markov_trace(model->embed(*sub, a) * model->e(m - 1));
            K rhs = inv_x_k * sub->markov_trace(a);
            m3 = m3 && (lhs == rhs);
        }
    }
    rep.emplace_back("M3", m3);
    return rep;
}

} // namespace bmwsq
