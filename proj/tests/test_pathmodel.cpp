#include <catch_amalgamated.hpp>

#include <thread>

#include <bmwsq/pathmodel.hpp>

using namespace bmwsq;

namespace {
const Level INF = Level::inf();
using RF = RationalFunction;

RF q() { return RF::q(); }
}

TEST_CASE("size-2 eigenspace conventions", "[pathmodel]") {
    auto model = get_path_model<RF>(2, INF);
    const auto& e1 = model->e(1);
    // e_1 vanishes on the [2] block and is 1 on the [1,1] block,
    // so g_1 has eigenvalue -1 on [2] and q^-2 on [1,1].
    CHECK(e1.blocks.at(Diagram{2}).at(0, 0) == RF());
    CHECK(e1.blocks.at(Diagram{1, 1}).at(0, 0) == RF(Rat(1)));
    BlockMatrix<RF> g1 = model->g(1);
    CHECK(g1.blocks.at(Diagram{2}).at(0, 0) == RF(Rat(-1)));
    CHECK(g1.blocks.at(Diagram{1, 1}).at(0, 0) == q().pow(-2));
    CHECK_THROWS_AS(model->e(2), IndexOutOfRange);
}

TEST_CASE("rank-one idempotent at size 3", "[pathmodel]") {
    auto model = get_path_model<RF>(3, INF);
    const auto& e1 = model->e(1);
    const Matrix<RF>& blk = e1.blocks.at(Diagram{2, 1});
    REQUIRE(blk.dim() == 2);
    CHECK(blk.trace() == RF(Rat(1)));
    CHECK(blk * blk == blk);
    // rank 1: the 2x2 determinant vanishes
    CHECK(blk.at(0, 0) * blk.at(1, 1) == blk.at(0, 1) * blk.at(1, 0));
    // e_2 on the same block has identical rows (one interaction group)
    const Matrix<RF>& blk2 = model->e(2).blocks.at(Diagram{2, 1});
    CHECK(blk2.at(0, 0) == blk2.at(1, 0));
    CHECK(blk2.at(0, 1) == blk2.at(1, 1));
    CHECK(blk2.trace() == RF(Rat(1)));
    // sandwich relation with exact scalar
    BlockMatrix<RF> lhs = e1 * model->e(2) * e1;
    BlockMatrix<RF> rhs = e1;
    rhs.scale(RF(Rat(1)) / (qint(2) * qint(2)));
    CHECK(lhs == rhs);
}

TEST_CASE("relation suite", "[pathmodel]") {
    for (long m = 2; m <= 5; ++m)
        for (auto& [name, ok] : tl_relation_report<RF>(m, INF, 10)) {
            INFO("generic m=" << m << " relation " << name);
            CHECK(ok);
        }
    for (long ell : {6L, 7L}) {
        for (long m = 2; m <= 4; ++m)
            for (auto& [name, ok] : tl_relation_report<Cyclotomic>(m, Level::finite(ell), 10)) {
                INFO("ell=" << ell << " m=" << m << " relation " << name);
                CHECK(ok);
            }
    }
}

TEST_CASE("block dimensions follow tableau counts", "[pathmodel]") {
    for (const Level& ell : {INF, Level::finite(6), Level::finite(7)}) {
        for (long m = 0; m <= 8; ++m) {
            if (ell.is_inf()) {
                auto model = get_path_model<RF>(m, ell);
                for (auto& b : model->blocks())
                    CHECK(Int(b.basis.size()) == count_tableaux(b.terminal, ell));
            } else {
                auto model = get_path_model<Cyclotomic>(m, ell);
                for (auto& b : model->blocks())
                    CHECK(Int(b.basis.size()) == count_tableaux(b.terminal, ell));
            }
        }
    }
}

TEST_CASE("restriction onto predecessor bases", "[pathmodel]") {
    for (const Level& ell : {INF, Level::finite(6)}) {
        for (long m = 2; m <= 7; ++m) {
            // Truncating the block basis by one level hits each predecessor
            // label's full basis exactly once.
            for (const Diagram& lam : lambda_set(m, ell)) {
                std::map<Diagram, std::set<std::vector<int>>> seen;
                for (const Tableau2Row& t : enum_tableaux(lam, ell)) {
                    std::vector<int> trunc(t.steps().begin(), t.steps().end() - 1);
                    CHECK(seen[t.shape_at(m - 1)].insert(trunc).second);
                }
                for (const Diagram& mu : lambda_set(m - 1, ell)) {
                    size_t expect = adjacent(mu, lam) ? enum_tableaux(mu, ell).size() : 0;
                    CHECK(seen[mu].size() == expect);
                }
            }
        }
    }
}

TEST_CASE("braid word representation", "[pathmodel]") {
    auto m2 = get_path_model<RF>(2, INF);
    CHECK(m2->represent(BraidWord(2, {})) == m2->identity());
    BlockMatrix<RF> sq = m2->represent(BraidWord(2, {1, 1}));
    CHECK(sq.blocks.at(Diagram{2}).at(0, 0) == RF(Rat(1)));
    CHECK(sq.blocks.at(Diagram{1, 1}).at(0, 0) == q().pow(-4));

    auto m3 = get_path_model<RF>(3, INF);
    CHECK(m3->represent(BraidWord(3, {1, 2, 1})) == m3->represent(BraidWord(3, {2, 1, 2})));
    CHECK(m3->represent(BraidWord(3, {1, -1})) == m3->identity());
    CHECK_THROWS_AS(m3->represent(BraidWord(2, {1})), ShapeMismatch);
}

TEST_CASE("markov trace values", "[pathmodel]") {
    auto m2 = get_path_model<RF>(2, INF);
    CHECK(m2->markov_trace(m2->identity()) == RF(Rat(1)));
    CHECK(m2->markov_trace(m2->e(1)) == RF(Rat(1)) / (qint(2) * qint(2)));
    CHECK(m2->markov_trace(m2->g(1)) == -q() / qint(2));
    auto m4 = get_path_model<RF>(4, INF);
    CHECK(m4->markov_trace(m4->e(3)) == RF(Rat(1)) / (qint(2) * qint(2)));
    // Cyclotomic side
    auto c3 = get_path_model<Cyclotomic>(3, Level::finite(6));
    CHECK(c3->markov_trace(c3->identity()) == c3->one());
}

TEST_CASE("concurrent construction and reads", "[pathmodel]") {
    // The generator cache must behave as a build-once map under concurrent
    // access, and traces must come out identical on every thread.
    std::vector<std::thread> threads;
    std::vector<RF> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &results] {
            auto model = get_path_model<RF>(4, Level::inf());
            BlockMatrix<RF> w = model->represent(BraidWord(4, {1, -2, 3, 1}));
            results[t] = model->markov_trace(w * model->e(2));
        });
    for (auto& th : threads) th.join();
    for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("bratteli structure", "[pathmodel]") {
    BratteliDiagram b = tl_bratteli(2, INF);
    REQUIRE(b.levels.size() == 3);
    CHECK(b.levels[2] == std::vector<Diagram>{Diagram{1, 1}, Diagram{2}});
    CHECK(b.edges[1].size() == 2);

    BratteliDiagram b46 = tl_bratteli(4, Level::finite(6));
    CHECK(b46.levels[4] == std::vector<Diagram>{Diagram{2, 2}, Diagram{3, 1}, Diagram{4}});

    // ell = 3 collapses to a single chain.
    BratteliDiagram chain = tl_bratteli(6, Level::finite(3));
    for (auto& lvl : chain.levels) CHECK(lvl.size() == 1);

    BratteliDiagram bmw = bmw_bratteli(4, Level::finite(6));
    for (long j = 0; j <= 4; ++j)
        for (const Diagram& d : bmw.levels[j]) {
            CHECK(in_gamma(d, Level::finite(6)));
            CHECK((j - d.size()) % 2 == 0);
        }
    CHECK(bmw.levels[2] == std::vector<Diagram>{Diagram{}, Diagram{1, 1}, Diagram{2}});
}
