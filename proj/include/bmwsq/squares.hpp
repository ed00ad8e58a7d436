#pragma once

// Symmetric square of the Temperley-Lieb path model and the realization of
// the specialized braid-relation algebra inside it via
//   Gt_i = q (g_i (x) g_i),   Et_i = x (e_i (x) e_i),   x = (q + q^-1)^2.
// Elements are kept block-diagonal over ordered pairs (s, t) of TL block
// labels, acting on V_s (x) V_t; the product trace tr2 is the weighted
// trace on each tensor factor. The decomposition into simple summands is
// computed structurally: V_s (x) V_t for s < t, and the symmetric /
// antisymmetric halves of V_s (x) V_s split by the swap involution, with
// labels
//   tensor (s,t) -> [m-s-t, t-s],  sym s -> [m-2s],  alt s -> [m-2s]^*.

#include "pathmodel.hpp"

namespace bmwsq {

template <class K>
struct TensorBlocks {
    std::map<std::pair<Diagram, Diagram>, Matrix<K>> blocks;

    friend TensorBlocks operator*(const TensorBlocks& a, const TensorBlocks& b) {
        TensorBlocks r;
        for (auto& [k, m] : a.blocks) r.blocks.emplace(k, m * b.blocks.at(k));
        return r;
    }
    friend TensorBlocks operator+(const TensorBlocks& a, const TensorBlocks& b) {
        TensorBlocks r;
        for (auto& [k, m] : a.blocks) r.blocks.emplace(k, m + b.blocks.at(k));
        return r;
    }
    friend TensorBlocks operator-(const TensorBlocks& a, const TensorBlocks& b) {
        TensorBlocks r;
        for (auto& [k, m] : a.blocks) r.blocks.emplace(k, m - b.blocks.at(k));
        return r;
    }
    TensorBlocks& scale(const K& c) {
        for (auto& [k, m] : blocks) m.scale(c);
        return *this;
    }
    bool operator==(const TensorBlocks& o) const { return blocks == o.blocks; }
    bool operator!=(const TensorBlocks& o) const { return !(*this == o); }
    bool is_zero() const {
        for (auto& [k, m] : blocks)
            if (!m.is_zero()) return false;
        return true;
    }
};

// Matrix of A acting on the symmetric square, basis e_p v e_p' for p <= p'
// in lexicographic order.
template <class K>
Matrix<K> sym_square(const Matrix<K>& a) {
    long n = a.dim();
    std::vector<std::pair<long, long>> basis;
    for (long p = 0; p < n; ++p)
        for (long p2 = p; p2 < n; ++p2) basis.emplace_back(p, p2);
    Matrix<K> r(static_cast<long>(basis.size()), zero_like(a.at(0, 0)));
    // Coefficients in the literal tensor basis e_p(x)e_p' + e_p'(x)e_p
    // (p < p') and e_p(x)e_p; images of off-diagonal vectors pick up the
    // factor 2 on diagonal rows.
    for (size_t col = 0; col < basis.size(); ++col) {
        auto [p, p2] = basis[col];
        for (size_t row = 0; row < basis.size(); ++row) {
            auto [u, u2] = basis[row];
            if (p < p2) {
                if (u < u2)
                    r.at(row, col) = a.at(u, p) * a.at(u2, p2) + a.at(u2, p) * a.at(u, p2);
                else
                    r.at(row, col) = a.at(u, p) * a.at(u, p2) + a.at(u, p) * a.at(u, p2);
            } else {
                if (u < u2)
                    r.at(row, col) = a.at(u, p) * a.at(u2, p);
                else
                    r.at(row, col) = a.at(u, p) * a.at(u, p);
            }
        }
    }
    return r;
}

// Matrix of A on the exterior square, basis e_p ^ e_p' for p < p'.
template <class K>
Matrix<K> alt_square(const Matrix<K>& a) {
    long n = a.dim();
    std::vector<std::pair<long, long>> basis;
    for (long p = 0; p < n; ++p)
        for (long p2 = p + 1; p2 < n; ++p2) basis.emplace_back(p, p2);
    Matrix<K> r(std::max<long>(static_cast<long>(basis.size()), 0), zero_like(a.at(0, 0)));
    for (size_t col = 0; col < basis.size(); ++col) {
        auto [p, p2] = basis[col];
        for (size_t row = 0; row < basis.size(); ++row) {
            auto [u, u2] = basis[row];
            r.at(row, col) = a.at(u, p) * a.at(u2, p2) - a.at(u2, p) * a.at(u, p2);
        }
    }
    return r;
}

enum class SquarePart { Tensor, Sym, Alt };

inline std::string to_string(SquarePart p) {
    switch (p) {
        case SquarePart::Tensor: return "tensor";
        case SquarePart::Sym: return "sym";
        case SquarePart::Alt: return "alt";
    }
    return "?";
}

struct SquareSource {
    SquarePart part;
    long s = 0;
    long t = 0; // tensor only, s < t

    std::string to_string() const {
        switch (part) {
            case SquarePart::Tensor:
                return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
            case SquarePart::Sym: return "(" + std::to_string(s) + ",sym)";
            case SquarePart::Alt: return "(" + std::to_string(s) + ",alt)";
        }
        return "?";
    }
};

// Simple-summand label: the diagram nu indexing the image block built from
// the given source.
inline Diagram block_label(long m, const Level& ell, const SquareSource& src) {
    auto check = [&](long p) {
        if (p < 0 || m - p < p)
            throw NotInLambda("no Lambda(" + std::to_string(m) + ") diagram with second row " +
                              std::to_string(p));
        Diagram lam = (m - p > 0) ? (p > 0 ? Diagram{m - p, p} : Diagram{m - p})
                                  : Diagram{};
        if (!in_lambda(lam, m, ell))
            throw NotInLambda(lam.to_string() + " is not in Lambda(" + std::to_string(m) +
                              ", " + ell.to_string() + ")");
    };
    check(src.s);
    switch (src.part) {
        case SquarePart::Tensor: {
            check(src.t);
            long nu1 = m - src.s - src.t;
            long nu2 = src.t - src.s;
            if (src.s >= src.t) throw Error("tensor source needs s < t");
            return nu2 ? Diagram{nu1, nu2} : Diagram{nu1};
        }
        case SquarePart::Sym: {
            long nu1 = m - 2 * src.s;
            return nu1 ? Diagram{nu1} : Diagram{};
        }
        case SquarePart::Alt: {
            long nu1 = m - 2 * src.s;
            return star(nu1 ? Diagram{nu1} : Diagram{}, ell);
        }
    }
    throw Error("bad source");
}

template <class K>
class SquareRep {
public:
    struct LabeledBlock {
        SquareSource source;
        Diagram nu;
        long dim;
    };

    SquareRep(long m, const Level& ell) : m_(m), ell_(ell) {
        if (!ell.is_inf() && ell.value() < 6)
            throw LevelTooSmall("symmetric-square construction requires ell >= 6");
        model_ = get_path_model<K>(m, ell);
        // p-index of each TL block: second row length of the terminal.
        for (auto& b : model_->blocks()) {
            pindex_.push_back(b.terminal.row(1));
            dims_.push_back(static_cast<long>(b.basis.size()));
        }
        build_decomposition();
    }

    long size() const { return m_; }
    const Level& level() const { return ell_; }
    const PathModel<K>& base() const { return *model_; }
    const std::vector<LabeledBlock>& decomposition() const { return decomp_; }

    TensorBlocks<K> identity() const {
        TensorBlocks<K> r;
        for (size_t s = 0; s < dims_.size(); ++s)
            for (size_t t = 0; t < dims_.size(); ++t)
                r.blocks.emplace(key(s, t), Matrix<K>::identity(dims_[s] * dims_[t],
                                                                model_->zero(), model_->one()));
        return r;
    }

    // Gt_i = q (g_i (x) g_i); sign -1 gives its inverse.
    TensorBlocks<K> gt(long i, int sign = 1) const {
        RationalFunction q = RationalFunction::q();
        BlockMatrix<K> g = sign > 0 ? model_->g(i) : model_->g_inverse(i);
        return tensor_of(g, g, model_->scalar(q.pow(sign > 0 ? 1 : -1)));
    }
    // Et_i = x (e_i (x) e_i), x = (q+q^-1)^2.
    TensorBlocks<K> et(long i) const {
        const BlockMatrix<K>& e = model_->e(i);
        return tensor_of(e, e, model_->scalar(qint(2) * qint(2)));
    }

    // Diagonal image of a TL element: a (x) a with an overall scalar.
    TensorBlocks<K> tensor_of(const BlockMatrix<K>& a, const BlockMatrix<K>& b,
                              const K& c) const {
        TensorBlocks<K> r;
        const auto& blocks = model_->blocks();
        for (size_t s = 0; s < blocks.size(); ++s)
            for (size_t t = 0; t < blocks.size(); ++t) {
                Matrix<K> m = Matrix<K>::kronecker(a.blocks.at(blocks[s].terminal),
                                                   b.blocks.at(blocks[t].terminal));
                m.scale(c);
                r.blocks.emplace(key(s, t), std::move(m));
            }
        return r;
    }

    // Product trace on the tensor blocks: weights multiply per factor.
    K tr2(const TensorBlocks<K>& x) const {
        const auto& blocks = model_->blocks();
        K acc = model_->zero();
        for (size_t s = 0; s < blocks.size(); ++s)
            for (size_t t = 0; t < blocks.size(); ++t)
                acc += weight(s) * weight(t) * x.blocks.at(key(s, t)).trace();
        return acc;
    }

    // The image of the word in Gt / Et generators restricted to one labeled
    // summand of the decomposition; used for eigenvalue checks and the
    // projective image enumeration. sign applies to Gt only.
    Matrix<K> block_generator(const SquareSource& src, long i, int sign = 1) const {
        BlockMatrix<K> g = sign > 0 ? model_->g(i) : model_->g_inverse(i);
        K q = model_->scalar(RationalFunction::q().pow(sign > 0 ? 1 : -1));
        switch (src.part) {
            case SquarePart::Tensor: {
                Matrix<K> m = Matrix<K>::kronecker(g.blocks.at(terminal_of(src.s)),
                                                   g.blocks.at(terminal_of(src.t)));
                m.scale(q);
                return m;
            }
            case SquarePart::Sym: {
                Matrix<K> m = sym_square(g.blocks.at(terminal_of(src.s)));
                m.scale(q);
                return m;
            }
            case SquarePart::Alt: {
                Matrix<K> m = alt_square(g.blocks.at(terminal_of(src.s)));
                m.scale(q);
                return m;
            }
        }
        throw Error("bad source");
    }

    Diagram terminal_of(long p) const {
        for (size_t i = 0; i < pindex_.size(); ++i)
            if (pindex_[i] == p) return model_->blocks()[i].terminal;
        throw NotInLambda("no TL block with second row " + std::to_string(p));
    }
    long dim_of(long p) const {
        for (size_t i = 0; i < pindex_.size(); ++i)
            if (pindex_[i] == p) return dims_[i];
        throw NotInLambda("no TL block with second row " + std::to_string(p));
    }

private:
    std::pair<Diagram, Diagram> key(size_t s, size_t t) const {
        return {model_->blocks()[s].terminal, model_->blocks()[t].terminal};
    }
    K weight(size_t s) const {
        const Diagram& d = model_->blocks()[s].terminal;
        return model_->scalar(qint(d.row(0) - d.row(1) + 1) / qint(2).pow(m_));
    }

    void build_decomposition() {
        for (size_t s = 0; s < dims_.size(); ++s) {
            long ps = pindex_[s];
            SquareSource sym{SquarePart::Sym, ps, 0};
            decomp_.push_back({sym, block_label(m_, ell_, sym), dims_[s] * (dims_[s] + 1) / 2});
            if (dims_[s] >= 2) {
                SquareSource alt{SquarePart::Alt, ps, 0};
                decomp_.push_back({alt, block_label(m_, ell_, alt), dims_[s] * (dims_[s] - 1) / 2});
            }
            for (size_t t = 0; t < dims_.size(); ++t) {
                long pt = pindex_[t];
                if (ps >= pt) continue;
                SquareSource ten{SquarePart::Tensor, ps, pt};
                decomp_.push_back({ten, block_label(m_, ell_, ten), dims_[s] * dims_[t]});
            }
        }
        std::sort(decomp_.begin(), decomp_.end(),
                  [](const LabeledBlock& a, const LabeledBlock& b) { return a.nu < b.nu; });
    }

    long m_;
    Level ell_;
    std::shared_ptr<const PathModel<K>> model_;
    std::vector<long> pindex_;
    std::vector<long> dims_;
    std::vector<LabeledBlock> decomp_;
};

template <class K>
SquareRep<K> build_square(long m, const Level& ell) {
    return SquareRep<K>(m, ell);
}

// Relation and trace report for the Gt / Et realization. Ring identities are
// exact matrix equations; trace identities are exact scalar equations.
template <class K>
std::vector<std::pair<std::string, bool>> bmw_relation_report(long m, const Level& ell,
                                                              int random_checks = 10) {
    SquareRep<K> rep(m, ell);
    const PathModel<K>& pm = rep.base();
    RationalFunction q = RationalFunction::q();
    RationalFunction r = q.pow(3);
    RationalFunction x = qint(2) * qint(2);
    std::vector<std::pair<std::string, bool>> out;

    auto scaled = [&](TensorBlocks<K> m2, const RationalFunction& f) {
        m2.scale(pm.scalar(f));
        return m2;
    };

    TensorBlocks<K> one = rep.identity();
    bool r1 = true, edef = true, r2 = true, b1 = true, b2 = true;
    for (long i = 1; i <= m - 1; ++i) {
        TensorBlocks<K> gi = rep.gt(i), gii = rep.gt(i, -1), ei = rep.et(i);
        r1 = r1 && ((gi - scaled(one, r.pow(-1))) * (gi - scaled(one, q)) *
                    (gi + scaled(one, q.pow(-1))))
                       .is_zero();
        edef = edef && (scaled(one - ei, q - q.pow(-1)) == gi - gii);
        if (i >= 2) {
            TensorBlocks<K> gprev = rep.gt(i - 1), gprev_inv = rep.gt(i - 1, -1);
            r2 = r2 && (ei * gprev * ei == scaled(ei, r)) &&
                 (ei * gprev_inv * ei == scaled(ei, r.pow(-1)));
        }
        for (long j = i + 1; j <= m - 1; ++j) {
            TensorBlocks<K> gj = rep.gt(j);
            if (j == i + 1)
                b1 = b1 && (gi * gj * gi == gj * gi * gj);
            else
                b2 = b2 && (gi * gj == gj * gi);
        }
    }
    out.emplace_back("R1", r1);
    out.emplace_back("E", edef);
    out.emplace_back("R2", r2);
    out.emplace_back("B1", b1);
    out.emplace_back("B2", b2);

    out.emplace_back("tr1", rep.tr2(one) == pm.one());

    bool tre = true, trg = true;
    for (long i = 1; i <= m - 1; ++i) {
        tre = tre && (rep.tr2(rep.et(i)) == pm.scalar(RationalFunction(Rat(1)) / x));
        trg = trg && (rep.tr2(rep.gt(i)) == pm.scalar(r / x)) &&
              (rep.tr2(rep.gt(i, -1)) == pm.scalar(r.pow(-1) / x));
    }
    out.emplace_back("trE", tre);
    out.emplace_back("trG", trg);

    // Random words in the lower generators for the symmetry and Markov
    // trace axioms.
    std::mt19937 rng(40961 + m);
    auto random_word = [&](long max_index) {
        TensorBlocks<K> acc = rep.identity();
        if (max_index < 1) return acc;
        std::uniform_int_distribution<int> len(1, 4);
        std::uniform_int_distribution<long> idx(1, max_index);
        std::uniform_int_distribution<int> kind(0, 2);
        int n = len(rng);
        for (int k = 0; k < n; ++k) {
            long i = idx(rng);
            switch (kind(rng)) {
                case 0: acc = acc * rep.gt(i); break;
                case 1: acc = acc * rep.gt(i, -1); break;
                default: acc = acc * rep.et(i); break;
            }
        }
        return acc;
    };

    bool trsym = true;
    for (int t = 0; t < random_checks; ++t) {
        TensorBlocks<K> a = random_word(m - 1), b = random_word(m - 1);
        trsym = trsym && (rep.tr2(a * b) == rep.tr2(b * a));
    }
    out.emplace_back("tr_sym", trsym);

    bool markov = true;
    if (m >= 2) {
        for (int t = 0; t < random_checks; ++t) {
            TensorBlocks<K> a = random_word(m - 2), b = random_word(m - 2);
            TensorBlocks<K> chi_g = rep.gt(m - 1), chi_e = rep.et(m - 1);
            markov = markov &&
                     (rep.tr2(a * chi_g * b) == rep.tr2(chi_g) * rep.tr2(a * b)) &&
                     (rep.tr2(a * chi_e * b) == rep.tr2(chi_e) * rep.tr2(a * b));
        }
    }
    out.emplace_back("markov", markov);
    return out;
}

// Sanity control: replacing the scalar q by q^2 in Gt must break the cubic
// eigenvalue relation. Returns true when the broken generator indeed fails.
template <class K>
bool bmw_negative_control(long m, const Level& ell) {
    SquareRep<K> rep(m, ell);
    const PathModel<K>& pm = rep.base();
    RationalFunction q = RationalFunction::q();
    BlockMatrix<K> g = pm.g(1);
    TensorBlocks<K> bad = rep.tensor_of(g, g, pm.scalar(q.pow(2)));
    TensorBlocks<K> one = rep.identity();
    auto scaled = [&](TensorBlocks<K> m2, const RationalFunction& f) {
        m2.scale(pm.scalar(f));
        return m2;
    };
    TensorBlocks<K> cubic = (bad - scaled(one, q.pow(-3))) * (bad - scaled(one, q)) *
                            (bad + scaled(one, q.pow(-1)));
    return !cubic.is_zero();
}

struct DimAuditRow {
    Diagram nu;
    std::string source;
    Int dim_block;
    Int dim_osc;
};

struct DimAudit {
    Int osc_total = 0;           // sum of |O_ell(m, nu)|^2
    Int formula_total = 0;       // from TL dims: cross terms + binomials
    Int decomposition_total = 0; // sum of squared computed block dims
    std::vector<DimAuditRow> rows;

    bool consistent() const {
        if (osc_total != formula_total || formula_total != decomposition_total) return false;
        for (auto& r : rows)
            if (r.dim_block != r.dim_osc) return false;
        return true;
    }
};

template <class K>
DimAudit dim_audit(long m, const Level& ell) {
    DimAudit audit;
    for (const Diagram& nu : gamma_set(ell, m)) {
        if ((m - nu.size()) % 2 != 0) continue;
        Int c = count_osc(m, nu, ell);
        audit.osc_total += c * c;
    }
    std::vector<Int> dims;
    for (const Diagram& lam : lambda_set(m, ell)) dims.push_back(count_tableaux(lam, ell));
    for (size_t i = 0; i < dims.size(); ++i) {
        audit.formula_total += binomial_int(dims[i] + 1, 2) * binomial_int(dims[i] + 1, 2);
        audit.formula_total += binomial_int(dims[i], 2) * binomial_int(dims[i], 2);
        for (size_t j = i + 1; j < dims.size(); ++j)
            audit.formula_total += dims[i] * dims[i] * dims[j] * dims[j];
    }
    SquareRep<K> rep(m, ell);
    for (const auto& blk : rep.decomposition()) {
        audit.decomposition_total += Int(blk.dim) * Int(blk.dim);
        Int osc = count_osc(m, blk.nu, ell);
        audit.rows.push_back({blk.nu, blk.source.to_string(), Int(blk.dim), osc});
    }
    return audit;
}

} // namespace bmwsq
