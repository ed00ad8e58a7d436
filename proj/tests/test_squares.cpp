#include <catch_amalgamated.hpp>

#include <random>

#include <bmwsq/squares.hpp>

using namespace bmwsq;

namespace {
const Level INF = Level::inf();
using RF = RationalFunction;

RF q() { return RF::q(); }

template <class K>
Matrix<K> word_on_block(const SquareRep<K>& rep, const SquareSource& src,
                        const std::vector<long>& word) {
    long d = 0;
    switch (src.part) {
        case SquarePart::Tensor: d = rep.dim_of(src.s) * rep.dim_of(src.t); break;
        case SquarePart::Sym: d = rep.dim_of(src.s) * (rep.dim_of(src.s) + 1) / 2; break;
        case SquarePart::Alt: d = rep.dim_of(src.s) * (rep.dim_of(src.s) - 1) / 2; break;
    }
    Matrix<K> acc = Matrix<K>::identity(d, rep.base().zero(), rep.base().one());
    for (long l : word) acc = acc * rep.block_generator(src, std::abs(l), l > 0 ? 1 : -1);
    return acc;
}

} // namespace

TEST_CASE("size-2 block eigenvalues", "[squares]") {
    SquareRep<RF> rep(2, INF);
    // Gt_1 acts by q^-3, -q^-1, q on the blocks labelled [0], [1,1], [2].
    for (const auto& blk : rep.decomposition()) {
        REQUIRE(blk.dim == 1);
        Matrix<RF> g = rep.block_generator(blk.source, 1);
        if (blk.nu == Diagram{}) CHECK(g.at(0, 0) == q().pow(-3));
        if (blk.nu == Diagram{1, 1}) CHECK(g.at(0, 0) == -q().pow(-1));
        if (blk.nu == Diagram{2}) CHECK(g.at(0, 0) == q());
    }
    CHECK(rep.decomposition().size() == 3);
}

TEST_CASE("decomposition at size 3", "[squares]") {
    SquareRep<RF> rep(3, INF);
    std::map<Diagram, long> dims;
    for (const auto& blk : rep.decomposition()) dims[blk.nu] = blk.dim;
    CHECK(dims == std::map<Diagram, long>{{Diagram{1}, 3},
                                          {Diagram{1, 1, 1}, 1},
                                          {Diagram{2, 1}, 2},
                                          {Diagram{3}, 1}});
}

TEST_CASE("decomposition block count", "[squares]") {
    // One symmetric and one antisymmetric summand per base block (the
    // antisymmetric part vanishes on 1-dim blocks) plus one tensor summand
    // per unordered pair.
    for (const Level& ell : {INF, Level::finite(6), Level::finite(7), Level::finite(8)}) {
        for (long m = 2; m <= 6; ++m) {
            std::vector<Int> dims;
            for (const Diagram& lam : lambda_set(m, ell)) dims.push_back(count_tableaux(lam, ell));
            long big = 0, small = 0;
            for (const Int& d : dims) (d >= 2 ? big : small) += 1;
            long expect = 2 * big + small + static_cast<long>(dims.size() * (dims.size() - 1) / 2);
            size_t got = ell.is_inf() ? SquareRep<RF>(m, ell).decomposition().size()
                                      : SquareRep<Cyclotomic>(m, ell).decomposition().size();
            CHECK(static_cast<long>(got) == expect);
        }
    }
}

TEST_CASE("block dimensions match oscillating counts", "[squares]") {
    for (const Level& ell : {INF, Level::finite(6), Level::finite(7)}) {
        for (long m = 2; m <= 5; ++m) {
            auto check = [&](const auto& rep) {
                for (const auto& blk : rep.decomposition())
                    CHECK(Int(blk.dim) == count_osc(m, blk.nu, ell));
            };
            if (ell.is_inf())
                check(SquareRep<RF>(m, ell));
            else
                check(SquareRep<Cyclotomic>(m, ell));
        }
    }
}

TEST_CASE("square generator relations", "[squares]") {
    for (long m = 2; m <= 4; ++m)
        for (auto& [name, ok] : bmw_relation_report<RF>(m, INF, 5)) {
            INFO("generic m=" << m << " relation " << name);
            CHECK(ok);
        }
    for (auto& [name, ok] : bmw_relation_report<Cyclotomic>(4, Level::finite(6), 5)) {
        INFO("ell=6 m=4 relation " << name);
        CHECK(ok);
    }
    for (auto& [name, ok] : bmw_relation_report<Cyclotomic>(3, Level::finite(7), 5)) {
        INFO("ell=7 m=3 relation " << name);
        CHECK(ok);
    }
}

TEST_CASE("negative control breaks the cubic", "[squares]") {
    CHECK(bmw_negative_control<RF>(2, INF));
    CHECK(bmw_negative_control<RF>(3, INF));
    CHECK(bmw_negative_control<Cyclotomic>(3, Level::finite(6)));
}

TEST_CASE("level bound", "[squares]") {
    CHECK_THROWS_AS(SquareRep<Cyclotomic>(2, Level::finite(5)), LevelTooSmall);
    CHECK_THROWS_AS(block_label(4, Level::finite(6), SquareSource{SquarePart::Sym, 3, 0}),
                    NotInLambda);
}

TEST_CASE("block labels", "[squares]") {
    CHECK(block_label(2, INF, {SquarePart::Tensor, 0, 1}) == Diagram{1, 1});
    CHECK(block_label(2, INF, {SquarePart::Sym, 1, 0}) == Diagram{});
    CHECK(block_label(4, Level::finite(6), {SquarePart::Alt, 1, 0}) == Diagram{2, 1, 1});
}

TEST_CASE("symmetric and exterior squares are multiplicative", "[squares]") {
    std::mt19937 rng(553311);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int t = 0; t < 30; ++t) {
        long n = 1 + t % 4;
        Matrix<RF> a(n, RF()), b(n, RF());
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                a.at(i, j) = RF(Rat(c(rng)));
                b.at(i, j) = RF(Rat(c(rng)));
            }
        CHECK(sym_square(a * b) == sym_square(a) * sym_square(b));
        CHECK(alt_square(a * b) == alt_square(a) * alt_square(b));
    }
}

TEST_CASE("product trace agrees with the decomposed blocks", "[squares]") {
    // tr2 computed on ordered tensor pairs must equal the weighted sum of
    // traces over the structural decomposition, with each s<t tensor block
    // counted for both orders.
    std::mt19937 rng(90210);
    for (long m : {3L, 4L}) {
        SquareRep<RF> rep(m, INF);
        std::uniform_int_distribution<long> letter(1, m - 1);
        std::uniform_int_distribution<int> flip(0, 1);
        for (int t = 0; t < 6; ++t) {
            std::vector<long> word;
            for (int k = 0; k < 5; ++k) {
                long l = letter(rng);
                word.push_back(flip(rng) ? l : -l);
            }
            TensorBlocks<RF> full = rep.identity();
            for (long l : word) full = full * rep.gt(std::abs(l), l > 0 ? 1 : -1);
            RF direct = rep.tr2(full);

            auto weight = [&](long p) {
                Diagram d = rep.terminal_of(p);
                return qint(d.row(0) - d.row(1) + 1) / qint(2).pow(m);
            };
            RF split;
            for (const auto& blk : rep.decomposition()) {
                RF tr = word_on_block(rep, blk.source, word).trace();
                if (blk.source.part == SquarePart::Tensor)
                    split += RF(Rat(2)) * weight(blk.source.s) * weight(blk.source.t) * tr;
                else
                    split += weight(blk.source.s) * weight(blk.source.s) * tr;
            }
            CHECK(direct == split);
        }
    }
}

TEST_CASE("squared trace factors through the base trace", "[squares]") {
    // tr2 of a braid word image is q^(exponent sum) times the squared
    // Markov trace of the underlying TL word.
    for (long m : {2L, 3L, 4L}) {
        SquareRep<RF> rep(m, INF);
        const PathModel<RF>& pm = rep.base();
        std::vector<std::vector<long>> words = {{1}, {-1}, {1, 1}, {1, 1, 1}};
        if (m >= 3) words.push_back({1, -2, 1, -2});
        for (const auto& w : words) {
            bool ok = true;
            for (long l : w)
                if (std::abs(l) > m - 1) ok = false;
            if (!ok) continue;
            BraidWord word(m, w);
            TensorBlocks<RF> full = rep.identity();
            for (long l : w) full = full * rep.gt(std::abs(l), l > 0 ? 1 : -1);
            RF base = pm.markov_trace(pm.represent(word));
            CHECK(rep.tr2(full) == q().pow(word.exponent_sum()) * base * base);
        }
    }
    SquareRep<Cyclotomic> repc(3, Level::finite(6));
    const PathModel<Cyclotomic>& pmc = repc.base();
    BraidWord w(3, {1, -2, 1, -2});
    TensorBlocks<Cyclotomic> full = repc.identity();
    for (long l : w.letters()) full = full * repc.gt(std::abs(l), l > 0 ? 1 : -1);
    Cyclotomic base = pmc.markov_trace(pmc.represent(w));
    CHECK(repc.tr2(full) == pmc.scalar(q().pow(w.exponent_sum())) * base * base);
}

namespace {

// Dimension of the span of all words in the generators, by incremental
// Gaussian elimination over the exact scalar field.
template <class K>
long generated_algebra_dim(const SquareRep<K>& rep) {
    const K zero = rep.base().zero();
    auto flatten = [&](const TensorBlocks<K>& t) {
        std::vector<K> v;
        for (auto& [k, m] : t.blocks)
            for (long i = 0; i < m.dim(); ++i)
                for (long j = 0; j < m.dim(); ++j) v.push_back(m.at(i, j));
        return v;
    };
    std::vector<std::vector<K>> rows; // reduced spanning rows
    auto insert = [&](std::vector<K> v) {
        for (auto& r : rows) {
            size_t p = 0;
            while (p < r.size() && r[p] == zero) ++p;
            if (p < v.size() && v[p] != zero) {
                K f = v[p] / r[p];
                for (size_t k = p; k < v.size(); ++k) v[k] -= f * r[k];
            }
        }
        for (auto& c : v)
            if (c != zero) {
                rows.push_back(std::move(v));
                return true;
            }
        return false;
    };
    long m = rep.size();
    std::vector<TensorBlocks<K>> frontier{rep.identity()};
    insert(flatten(frontier.front()));
    while (!frontier.empty()) {
        std::vector<TensorBlocks<K>> next;
        for (const auto& x : frontier)
            for (long i = 1; i <= m - 1; ++i)
                for (int sign : {1, -1}) {
                    TensorBlocks<K> p = x * rep.gt(i, sign);
                    if (insert(flatten(p))) next.push_back(std::move(p));
                }
        frontier = std::move(next);
    }
    return static_cast<long>(rows.size());
}

} // namespace

TEST_CASE("generated algebra fills the decomposition", "[squares]") {
    // Span closure of all generator words: the realized algebra has the
    // full direct-sum dimension, so the homomorphism onto the decomposed
    // blocks is surjective (not just dimension-consistent).
    for (long m : {2L, 3L}) {
        SquareRep<RF> rep(m, INF);
        Int expect = 0;
        for (const auto& blk : rep.decomposition()) expect += Int(blk.dim) * Int(blk.dim);
        CHECK(Int(generated_algebra_dim(rep)) == expect);
    }
    SquareRep<Cyclotomic> repc(3, Level::finite(6));
    Int expectc = 0;
    for (const auto& blk : repc.decomposition()) expectc += Int(blk.dim) * Int(blk.dim);
    CHECK(Int(generated_algebra_dim(repc)) == expectc);
}

TEST_CASE("dimension audit", "[squares]") {
    DimAudit a3 = dim_audit<RF>(3, INF);
    CHECK(a3.osc_total == 15);
    CHECK(a3.formula_total == 15);
    CHECK(a3.decomposition_total == 15);
    CHECK(a3.consistent());
    DimAudit a2 = dim_audit<Cyclotomic>(2, Level::finite(8));
    CHECK(a2.osc_total == 3);
    CHECK(a2.consistent());
    CHECK(dim_audit<Cyclotomic>(5, Level::finite(6)).consistent());
    CHECK(dim_audit<RF>(6, INF).consistent());
}
