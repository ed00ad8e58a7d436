#include <catch_amalgamated.hpp>

#include <random>
#include <thread>

#include <bmwsq/cyclotomic.hpp>
#include <bmwsq/expr.hpp>

using namespace bmwsq;

namespace {

std::mt19937 rng(20240817);

LaurentPoly random_laurent(int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> exp(-6, 6);
    std::uniform_int_distribution<long> coef(-9, 9);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(exp(rng), Rat(coef(rng)));
    return p;
}

LaurentPoly random_nonzero_laurent() {
    for (;;) {
        LaurentPoly p = random_laurent();
        if (!p.is_zero()) return p;
    }
}

RationalFunction random_rational_function() {
    return RationalFunction(random_laurent(3), random_nonzero_laurent());
}

} // namespace

TEST_CASE("quantum integers", "[coeff]") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == RationalFunction(Rat(1)));
    LaurentPoly two;
    two.set(1, Rat(1));
    two.set(-1, Rat(1));
    CHECK(qint(2) == RationalFunction(two));
    for (long n : {1L, 2L, 5L, 9L}) CHECK(qint(-n) == -qint(n));
    // [n] = (q^n - q^-n)/(q - q^-1) from first principles
    for (long n = 0; n <= 8; ++n) {
        RationalFunction q = RationalFunction::q();
        RationalFunction lhs = (q.pow(n) - q.pow(-n)) / (q - q.pow(-1));
        CHECK(lhs == qint(n));
    }
}

TEST_CASE("laurent text round trip", "[coeff]") {
    LaurentPoly trefoil;
    trefoil.set(-8, Rat(-1));
    trefoil.set(-6, Rat(1));
    trefoil.set(-2, Rat(1));
    CHECK(trefoil.to_string() == "-q^-8 + q^-6 + q^-2");
    CHECK(LaurentPoly::parse("-q^-8 + q^-6 + q^-2") == trefoil);
    CHECK(LaurentPoly::parse("0").is_zero());
    CHECK(LaurentPoly::parse("-3/2*q^2 + q - 7") ==
          LaurentPoly::parse("-7+q-3/2 q^2"));
    CHECK_THROWS_AS(LaurentPoly::parse("q^"), ParseError);
    CHECK_THROWS_AS(LaurentPoly::parse("1 + + q"), ParseError);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = random_laurent();
        CHECK(LaurentPoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("ring axioms on random triples", "[coeff]") {
    for (int i = 0; i < 1000; ++i) {
        LaurentPoly a = random_laurent(), b = random_laurent(), c = random_laurent();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
    for (int i = 0; i < 300; ++i) {
        RationalFunction a = random_rational_function();
        RationalFunction b = random_rational_function();
        RationalFunction c = random_rational_function();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("canonical forms", "[coeff]") {
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_laurent();
        LaurentPoly b = random_nonzero_laurent();
        LaurentPoly k = random_nonzero_laurent();
        CHECK(RationalFunction(a, b) == RationalFunction(a * k, b * k));
    }
    // Denominator ends up integer-primitive with positive constant term.
    RationalFunction f(LaurentPoly::parse("q^2 - 1"), LaurentPoly::parse("2*q^2 + 2*q"));
    CHECK(f.den().coeff(0) > 0);
    // (q^2-1)/(2q^2+2q) = (1 - q^-1)/2, a Laurent polynomial
    CHECK(f == RationalFunction(LaurentPoly::parse("-1/2*q^-1 + 1/2")));
    CHECK(f.as_laurent().has_value());
    CHECK(RationalFunction(Rat(1)) / RationalFunction::q() ==
          RationalFunction(LaurentPoly::monomial(-1)));
    CHECK_THROWS_AS(RationalFunction(Rat(1)) / RationalFunction(Rat(0)), DivisionByZero);
}

TEST_CASE("specialization at roots of unity", "[coeff]") {
    RationalFunction q = RationalFunction::q();
    // q + q^-1 at ell=6 is z + z^-1 for z the primitive 12th root
    Cyclotomic expect = Cyclotomic::root_power(12, 1) + Cyclotomic::root_power(12, 11);
    CHECK(specialize(q + q.pow(-1), 6, 1) == expect);
    // ... whose square is exactly 3
    CHECK(expect * expect == Cyclotomic(12, Rat(3)));
    // [ell] vanishes at q = e^{pi i/ell}
    for (long ell : {3L, 6L, 7L, 10L}) {
        CHECK(specialize(qint(ell), ell, 1).is_zero());
        CHECK(specialize(qint(ell), ell, -1).is_zero());
        CHECK(specialize(q.pow(2 * ell), ell, 1) == Cyclotomic(2 * ell, Rat(1)));
        CHECK(specialize(q.pow(2 * ell), ell, -1) == Cyclotomic(2 * ell, Rat(1)));
    }
    CHECK_THROWS_AS(specialize(RationalFunction(Rat(1)) / qint(6), 6, 1), DenominatorVanishes);
}

TEST_CASE("specialize is a ring homomorphism", "[coeff]") {
    long ell = 7;
    int done = 0;
    while (done < 500) {
        RationalFunction f = random_rational_function();
        RationalFunction g = random_rational_function();
        Cyclotomic fs(14), gs(14);
        try {
            fs = specialize(f, ell, 1);
            gs = specialize(g, ell, 1);
        } catch (const DenominatorVanishes&) {
            continue;
        }
        CHECK(specialize(f * g, ell, 1) == fs * gs);
        CHECK(specialize(f + g, ell, 1) == fs + gs);
        ++done;
    }
}

TEST_CASE("quantum integer reflection under specialization", "[coeff]") {
    for (long ell : {6L, 7L, 8L, 10L}) {
        for (long d = 1; d <= ell - 1; ++d) {
            CHECK(specialize(qint(ell - d), ell, 1) == specialize(qint(d), ell, 1));
        }
    }
}

TEST_CASE("cyclotomic field operations", "[coeff]") {
    for (long n : {12L, 14L, 16L, 20L}) {
        Cyclotomic z = Cyclotomic::root_power(n, 1);
        CHECK(z.pow(n) == Cyclotomic(n, Rat(1)));
        CHECK((z.pow(n / 2) + Cyclotomic(n, Rat(1))).is_zero()); // z^{n/2} = -1
        for (int i = 0; i < 50; ++i) {
            Cyclotomic a(n);
            std::uniform_int_distribution<long> coef(-5, 5);
            a += Cyclotomic(n, Rat(coef(rng)));
            a += z * Cyclotomic(n, Rat(coef(rng)));
            a += z.pow(2) * Cyclotomic(n, Rat(coef(rng)));
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == Cyclotomic(n, Rat(1)));
        }
    }
    CHECK_THROWS_AS(Cyclotomic(12).inverse(), DivisionByZero);
}

TEST_CASE("concurrent scalar arithmetic", "[coeff]") {
    // Values are immutable and operations pure; concurrent specialization
    // (which shares the modulus-polynomial cache) must agree everywhere.
    std::vector<std::thread> threads;
    std::vector<Cyclotomic> results(8, Cyclotomic(14));
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &results] {
            RationalFunction f = (qint(3) + qint(2).pow(2)) / qint(4);
            results[t] = specialize(f, 7, 1) * specialize(f, 7, 1).inverse();
        });
    for (auto& th : threads) th.join();
    for (int t = 0; t < 8; ++t) CHECK(results[t] == Cyclotomic(14, Rat(1)));
}

TEST_CASE("formula evaluation with r = q^3", "[coeff]") {
    RationalFunction q = RationalFunction::q();
    RationalFunction x = eval_formula("(r - r^-1)/(q - q^-1) + 1");
    CHECK(x == (q + q.pow(-1)) * (q + q.pow(-1)));
    CHECK(eval_formula("r^-1") == q.pow(-3));
    CHECK(eval_formula("r*q^-1") == q.pow(2));
    CHECK(eval_formula("1/2 + 1/2") == RationalFunction(Rat(1)));
    CHECK(eval_formula("(q+q^-1)^2") == x);
    CHECK_THROWS_AS(eval_formula("1/(q - q)"), DivisionByZero);
    CHECK_THROWS_AS(eval_formula("q + "), ParseError);
}
