#include <catch_amalgamated.hpp>

#include <bmwsq/diagram.hpp>

using namespace bmwsq;

TEST_CASE("diagram basics and text format", "[diagrams]") {
    Diagram d{4, 1, 1};
    CHECK(d.size() == 6);
    CHECK(d.col(0) == 3);
    CHECK(d.col(1) == 1);
    CHECK(d.to_string() == "[4,1,1]");
    CHECK(Diagram::parse("[4,1,1]") == d);
    CHECK(Diagram::parse("[]") == Diagram{});
    CHECK(Diagram::parse(" [ 2 , 2 ] ") == Diagram{2, 2});
    CHECK_THROWS_AS(Diagram::parse("[1,2]"), ParseError);
    CHECK_THROWS_AS(Diagram::parse("[2,"), ParseError);
    CHECK_THROWS_AS(Level::parse("2"), LevelTooSmall);
    CHECK(Level::parse("inf").is_inf());
    CHECK(Level::parse("6").value() == 6);
}

TEST_CASE("lambda membership", "[diagrams]") {
    CHECK(in_lambda(Diagram{4, 2}, 6, Level::finite(6)));
    CHECK_FALSE(in_lambda(Diagram{6, 1}, 7, Level::finite(6)));
    CHECK_FALSE(in_lambda(Diagram{3, 2, 1}, 6, Level::inf()));
    CHECK(in_lambda(Diagram{}, 0, Level::finite(3)));
    CHECK_FALSE(in_lambda(Diagram{4, 2}, 5, Level::finite(6))); // size mismatch
    CHECK(lambda_set(4, Level::finite(6)) ==
          std::vector<Diagram>{Diagram{2, 2}, Diagram{3, 1}, Diagram{4}});
    CHECK(lambda_set(5, Level::finite(3)) == std::vector<Diagram>{Diagram{3, 2}});
}

TEST_CASE("gamma membership", "[diagrams]") {
    Level six = Level::finite(6);
    CHECK(in_gamma(Diagram{4, 1, 1}, six)); // the adjoined diagram
    CHECK(in_gamma(Diagram{2, 2}, six));
    CHECK_FALSE(in_gamma(Diagram{3, 2}, six));
    CHECK(in_gamma(Diagram{3, 2}, Level::finite(8)));
    CHECK(in_gamma(Diagram{10, 2}, Level::inf()));
    CHECK_FALSE(in_gamma(Diagram{2, 2, 1}, Level::inf()));
    CHECK_THROWS_AS(in_gamma(Diagram{1}, Level::finite(5)), LevelTooSmall);
    // Gamma(6) in full
    auto g6 = gamma_set(six);
    CHECK(g6.size() == 14);
    CHECK(std::count(g6.begin(), g6.end(), Diagram{3, 1, 1}) == 1);
    CHECK(std::count(g6.begin(), g6.end(), Diagram{4, 1, 1}) == 1);
    CHECK(std::count(g6.begin(), g6.end(), Diagram{3, 2}) == 0);
}

TEST_CASE("star reflection", "[diagrams]") {
    Level six = Level::finite(6);
    CHECK(star(Diagram{}, six) == Diagram{1, 1, 1, 1});
    CHECK(star(Diagram{3, 1}, six) == Diagram{3, 1});
    CHECK(star(Diagram{4}, six) == Diagram{4, 1, 1});
    CHECK_THROWS_AS(star(Diagram{5}, six), NotInGamma);
    // Involution and Gamma-closure, exhaustively for small ell
    for (long ell = 6; ell <= 10; ++ell) {
        Level l = Level::finite(ell);
        for (const Diagram& d : gamma_set(l)) {
            Diagram s = star(d, l);
            CHECK(in_gamma(s, l));
            CHECK(star(s, l) == d);
        }
    }
}

TEST_CASE("adjacency", "[diagrams]") {
    CHECK(adjacent(Diagram{2, 1}, Diagram{2, 2}));
    CHECK_FALSE(adjacent(Diagram{2, 1}, Diagram{2, 1}));
    CHECK_FALSE(adjacent(Diagram{2, 1}, Diagram{3, 2}));
    CHECK(adjacent(Diagram{}, Diagram{1}));
    CHECK_FALSE(adjacent(Diagram{3}, Diagram{2, 1}));
    for (long ell = 6; ell <= 8; ++ell) {
        Level l = Level::finite(ell);
        auto g = gamma_set(l);
        for (const Diagram& a : g)
            for (const Diagram& b : g) {
                CHECK(adjacent(a, b) == adjacent(b, a));
                if (adjacent(a, b)) CHECK(std::abs(a.size() - b.size()) == 1);
            }
    }
}

TEST_CASE("predecessor sets", "[diagrams]") {
    Level six = Level::finite(6);
    CHECK(predecessors(3, Diagram{1, 1, 1}, six) == std::set<Diagram>{Diagram{1, 1}});
    CHECK(predecessors(1, Diagram{1}, six) == std::set<Diagram>{Diagram{}});
    for (long ell = 6; ell <= 9; ++ell) {
        Level l = Level::finite(ell);
        Diagram special{ell - 2, 1, 1};
        for (long m = special.size(); m <= special.size() + 4; m += 2)
            CHECK(predecessors(m, special, l) == std::set<Diagram>{Diagram{ell - 3, 1, 1}});
    }
    CHECK_THROWS_AS(predecessors(4, Diagram{1, 1, 1}, six), ParityViolation);
    CHECK_THROWS_AS(predecessors(4, Diagram{3, 2}, six), NotInGamma);
}

TEST_CASE("distinct diagrams have distinct predecessor sets", "[diagrams]") {
    for (long ell = 6; ell <= 10; ++ell) {
        Level l = Level::finite(ell);
        auto g = gamma_set(l);
        for (long m = 3; m <= 12; ++m) {
            std::vector<Diagram> live;
            for (const Diagram& d : g)
                if (m >= d.size() && (m - d.size()) % 2 == 0) live.push_back(d);
            for (size_t i = 0; i < live.size(); ++i)
                for (size_t j = i + 1; j < live.size(); ++j)
                    CHECK(predecessors(m, live[i], l) != predecessors(m, live[j], l));
        }
    }
}
