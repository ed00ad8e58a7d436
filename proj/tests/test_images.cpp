#include <catch_amalgamated.hpp>

#include <bmwsq/images.hpp>

using namespace bmwsq;

using Kind = GroupDescriptor::Kind;

TEST_CASE("classification ladder", "[images]") {
    CHECK(classify_image(5, Diagram{5}, 8).kind == Kind::Trivial);
    CHECK(classify_image(2, Diagram{1, 1}, 10).kind == Kind::Trivial);
    CHECK(classify_image(3, Diagram{2, 1}, 10).kind == Kind::A5);
    CHECK(classify_image(3, Diagram{1}, 10).kind == Kind::A5);
    GroupDescriptor g10 = classify_image(4, Diagram{1, 1}, 10);
    CHECK(g10.kind == Kind::A5xPSU);
    CHECK(g10.d1 == 3);
    CHECK(classify_image(5, Diagram{1}, 6).kind == Kind::PSp);
    CHECK(classify_image(5, Diagram{1}, 6).n == 4);
    CHECK(*classify_image(5, Diagram{1}, 6).order == 25920);
    CHECK(*classify_image(3, Diagram{1}, 6).order == 12);
    GroupDescriptor semi = classify_image(4, Diagram{1, 1}, 6);
    CHECK(semi.kind == Kind::PSpSemidirect);
    CHECK(*semi.order == 108);
    GroupDescriptor gen = classify_image(6, Diagram{2, 2}, 8);
    CHECK(gen.kind == Kind::PSUxPSU);
    CHECK(gen.d1 == 5);
    CHECK(gen.d2 == 5);
    CHECK_FALSE(gen.order.has_value());
    CHECK_THROWS_AS(classify_image(4, Diagram{1}, 8), ParityViolation);
    CHECK_THROWS_AS(classify_image(4, Diagram{3, 2}, 6), NotInGamma);
    CHECK_THROWS_AS(classify_image(4, Diagram{1, 1}, 5), LevelTooSmall);
}

TEST_CASE("first matching case wins", "[images]") {
    // Boundary inputs that would also match a later case.
    CHECK(classify_image(4, Diagram{4}, 8).case_index == 1);  // also fits case 11
    CHECK(classify_image(2, Diagram{1, 1}, 10).case_index == 2);
    CHECK(classify_image(3, Diagram{1, 1, 1}, 6).case_index == 3);  // also case 5
    CHECK(classify_image(4, Diagram{1, 1, 1, 1}, 6).case_index == 4); // also case 7, 13
    CHECK(classify_image(5, Diagram{1}, 6).case_index == 5);  // also case 11
    CHECK(classify_image(6, Diagram{2}, 6).case_index == 6);  // also case 11
    CHECK(classify_image(6, Diagram{}, 6).case_index == 7);
    CHECK(classify_image(4, Diagram{1, 1}, 12).case_index == 0); // case 10 needs ell=10
}

TEST_CASE("jones image table", "[images]") {
    CHECK(tl_image_group(5, 1, 6).kind == Kind::PSp);
    CHECK(tl_image_group(5, 1, 6).n == 4);
    CHECK(tl_image_group(3, 1, 10).kind == Kind::A5);
    CHECK(tl_image_group(4, 2, 10).kind == Kind::A5);
    GroupDescriptor c = tl_image_group(4, 1, 8);
    CHECK(c.kind == Kind::PSU);
    CHECK(c.d1 == 3);
    CHECK(tl_image_group(6, 2, 6).kind == Kind::PSpSemidirect);
    CHECK_THROWS_AS(tl_image_group(4, 7, 8), NotInLambda);
}

TEST_CASE("half-twist eigenvalues on every block", "[images]") {
    // (M - q)(M + q^-1)(M - r^-1) = 0 on each labeled block.
    for (long ell : {6L, 8L}) {
        Level l = Level::finite(ell);
        SquareRep<Cyclotomic> rep(4, l);
        RationalFunction q = RationalFunction::q();
        for (const auto& blk : rep.decomposition()) {
            Matrix<Cyclotomic> g = rep.block_generator(blk.source, 1);
            Cyclotomic zero(2 * ell);
            Cyclotomic one(2 * ell, Rat(1));
            Matrix<Cyclotomic> id = Matrix<Cyclotomic>::identity(g.dim(), zero, one);
            auto scaled = [&](const RationalFunction& f) {
                Matrix<Cyclotomic> m = id;
                m.scale(specialize(f, ell, 1));
                return m;
            };
            Matrix<Cyclotomic> cubic =
                (g - scaled(q)) * (g + scaled(q.pow(-1))) * (g - scaled(q.pow(-3)));
            CHECK(cubic.is_zero());
        }
    }
}

TEST_CASE("projective closure of finite images", "[images]") {
    BfsResult a = enumerate_projective_group(3, Diagram{2, 1}, 10, 10000);
    CHECK_FALSE(a.hit_cap);
    CHECK(a.order == 60);

    BfsResult b = enumerate_projective_group(3, Diagram{1}, 6, 10000);
    CHECK_FALSE(b.hit_cap);
    CHECK(b.order == 12);

    // The published table predicts order 108 here; the exact closure is the
    // Hessian-type group (Z_3)^2 x| Sp_2(3) of order 216 (confirmed
    // independently with reduced Burau matrices). The acceptance suite
    // records the discrepancy against the published value; this test pins
    // the enumeration itself.
    BfsResult c = enumerate_projective_group(4, Diagram{1, 1}, 6, 10000);
    CHECK_FALSE(c.hit_cap);
    CHECK(c.order == 216);

    BfsResult d = enumerate_projective_group(4, Diagram{}, 10, 10000);
    CHECK_FALSE(d.hit_cap);
    CHECK(d.order == 60);
}

TEST_CASE("budget cap on infinite images", "[images]") {
    BfsResult r = enumerate_projective_group(3, Diagram{2, 1}, 7, 500);
    CHECK(r.hit_cap);
    CHECK(r.order >= 500);
}
