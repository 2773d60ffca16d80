#include <catch2/catch_amalgamated.hpp>

#include "waring/errors.hpp"
#include "waring/structure.hpp"
#include "waring/triangular.hpp"

#include "test_util.hpp"

using namespace waring;
using testutil::rmatrix;

namespace {

UTMatrix mat2(long a11, long a12, long a22) {
    UTMatrix m(2);
    m.set(1, 1, Rational(a11));
    m.set(1, 2, Rational(a12));
    m.set(2, 2, Rational(a22));
    return m;
}

} // namespace

TEST_CASE("utmatrix basics") {
    UTMatrix a(3);
    CHECK(a.is_zero());
    a.set(1, 3, Rational(5));
    CHECK(a.get(1, 3) == Rational(5));
    CHECK(a.get(2, 3) == Rational(0));
    a.set(1, 3, Rational(0));
    CHECK(a.is_zero()); // zeros are dropped, not stored

    CHECK_THROWS_AS(a.set(2, 1, Rational(1)), Error); // below the diagonal
    CHECK_THROWS_AS(a.get(0, 1), Error);
    CHECK_THROWS_AS(a.get(1, 4), Error);
}

TEST_CASE("utmatrix product oracle") {
    // [[1,2],[0,3]] * [[0,1],[0,5]] = [[0,11],[0,15]]
    const UTMatrix u = mat2(1, 2, 3);
    const UTMatrix v = mat2(0, 1, 5);
    UTMatrix want(2);
    want.set(1, 2, Rational(11));
    want.set(2, 2, Rational(15));
    CHECK(u * v == want);
}

TEST_CASE("strictly upper matrices are nilpotent") {
    SplitMix64 rng(0x9e3779ULL);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.in_range(0, 3));
        const UTMatrix a = testutil::rband(rng, n, 1);
        UTMatrix p = a;
        for (int i = 1; i < n; ++i) p = p * a;
        CHECK(p.is_zero());
    }
}

TEST_CASE("mat_eval commutator oracle") {
    // [x1,x2] at U=[[1,2],[0,3]], V=[[0,1],[0,5]]:
    // UV = [[0,11],[0,15]], VU = [[0,3],[0,15]], difference [[0,8],[0,0]].
    const NcPoly p = NcPoly::parse("[x1,x2]");
    const UTMatrix got = mat_eval(p, {mat2(1, 2, 3), mat2(0, 1, 5)});
    UTMatrix want(2);
    want.set(1, 2, Rational(8));
    CHECK(got == want);
}

TEST_CASE("mat_eval input validation") {
    const NcPoly p = NcPoly::parse("[x1,x2]");
    try {
        mat_eval(p, {mat2(1, 0, 1)});
        FAIL("arity mismatch not caught");
    } catch (const Error& e) {
        CHECK(e.code() == errc::arity_mismatch);
    }
    try {
        mat_eval(p, {mat2(1, 0, 1), UTMatrix(3)});
        FAIL("dimension mismatch not caught");
    } catch (const Error& e) {
        CHECK(e.code() == errc::dimension_mismatch);
    }
}

TEST_CASE("mat_eval respects polynomial arithmetic") {
    SplitMix64 rng(0x77aa11ULL);
    // arity is strict, so both operands must actually mention x1 and x2
    auto rpoly2 = [&rng] {
        while (true) {
            const NcPoly p = testutil::rpoly(rng, 2, 3, 3);
            if (p.var_count() == 2) return p;
        }
    };
    for (int trial = 0; trial < 50; ++trial) {
        const NcPoly a = rpoly2();
        const NcPoly b = rpoly2();
        if ((a + b).is_zero()) continue;
        const int n = 2 + static_cast<int>(rng.in_range(0, 2));
        const std::vector<UTMatrix> at = {rmatrix(rng, n), rmatrix(rng, n)};
        CHECK(mat_eval(a + b, at) == mat_eval(a, at) + mat_eval(b, at));
        CHECK(mat_eval(a * b, at) == mat_eval(a, at) * mat_eval(b, at));
    }
}

TEST_CASE("sym_eval commutator entry is the frozen bilinear form") {
    const SymUTMatrix m = sym_eval(NcPoly::parse("[x1,x2]"), 2);
    const CPoly z1_1 = CPoly::var(SymId::diag(1, 1));
    const CPoly z2_1 = CPoly::var(SymId::diag(2, 1));
    const CPoly z1_2 = CPoly::var(SymId::diag(1, 2));
    const CPoly z2_2 = CPoly::var(SymId::diag(2, 2));
    const CPoly a_1 = CPoly::var(SymId::entry(1, 2, 1));
    const CPoly a_2 = CPoly::var(SymId::entry(1, 2, 2));

    CHECK(m.get(1, 1).is_zero());
    CHECK(m.get(2, 2).is_zero());
    CHECK(m.get(1, 2) == z1_1 * a_2 + a_1 * z2_2 - z1_2 * a_1 - a_2 * z2_1);
}

TEST_CASE("sym_eval diagonal entries are renamed commutative images") {
    SplitMix64 rng(0x5ca1abULL);
    for (int trial = 0; trial < 20; ++trial) {
        const NcPoly p = testutil::rpoly(rng, 3, 3);
        const int n = 1 + static_cast<int>(rng.in_range(0, 2));
        const SymUTMatrix m = sym_eval(p, n);
        const CPoly image = commutative_image(p);
        for (int s = 1; s <= n; ++s) {
            std::map<SymId, SymId> to;
            for (int i = 1; i <= p.var_count(); ++i)
                to[SymId::diag(1, i)] = SymId::diag(s, i);
            CHECK(m.get(s, s) == image.rename(to));
        }
    }
}

TEST_CASE("sym_eval then eval agrees with mat_eval") {
    SplitMix64 rng(0xfeed01ULL);
    for (int trial = 0; trial < 40; ++trial) {
        const NcPoly p = testutil::rpoly(rng, 3, 4);
        const int m = p.var_count();
        const int n = 1 + static_cast<int>(rng.in_range(0, 3));
        std::vector<UTMatrix> at;
        PointAssignment point;
        for (int i = 1; i <= m; ++i) {
            const UTMatrix a = rmatrix(rng, n);
            at.push_back(a);
            for (int row = 1; row <= n; ++row)
                for (int col = row; col <= n; ++col) {
                    const SymId id = row == col ? SymId::diag(row, i)
                                                : SymId::entry(row, col, i);
                    point[id] = a.get(row, col);
                }
        }
        const SymUTMatrix sym = sym_eval(p, n);
        const UTMatrix direct = mat_eval(p, at);
        for (int row = 1; row <= n; ++row)
            for (int col = row; col <= n; ++col)
                REQUIRE(sym.get(row, col).eval(point) == direct.get(row, col));
    }
}

TEST_CASE("sym_eval rejects the zero polynomial") {
    try {
        sym_eval(NcPoly(), 2);
        FAIL("zero polynomial accepted");
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_polynomial_input);
    }
}

TEST_CASE("entry_polynomial matches sym_eval entry by entry") {
    SplitMix64 rng(0xab12cdULL);
    for (int trial = 0; trial < 25; ++trial) {
        const NcPoly p = testutil::rpoly(rng, 3, 4);
        const int n = 1 + static_cast<int>(rng.in_range(0, 3));
        const SymUTMatrix sym = sym_eval(p, n);
        for (int s = 1; s <= n; ++s)
            for (int t = s; t <= n; ++t)
                REQUIRE(entry_polynomial(p, n, s, t, {}) == sym.get(s, t));
    }
}

TEST_CASE("entry_polynomial applies fixed values during the walk") {
    const NcPoly p = NcPoly::parse("x1*x2");
    // (1,2) entry of U1*U2 is z1(1)*a12(2) + a12(1)*z2(2); pin a12(2) = 0
    // and z2(2) = 7 and only the second path survives, scaled.
    PointAssignment fixed;
    fixed[SymId::entry(1, 2, 2)] = Rational(0);
    fixed[SymId::diag(2, 2)] = Rational(7);
    const CPoly got = entry_polynomial(p, 2, 1, 2, fixed);
    CHECK(got == CPoly::var(SymId::entry(1, 2, 1)).scaled(Rational(7)));

    // Consistency with substitute() on the symbolic route, for a larger case.
    const NcPoly q = NcPoly::parse("[x1,x2]^2");
    PointAssignment pins;
    pins[SymId::diag(1, 1)] = Rational(2);
    pins[SymId::entry(2, 3, 2)] = Rational(-3);
    CHECK(entry_polynomial(q, 3, 1, 3, pins) ==
          sym_eval(q, 3).get(1, 3).substitute(pins));
}

TEST_CASE("band_check thresholds") {
    UTMatrix a(3);
    a.set(1, 3, Rational(4)); // depth 2
    CHECK(band_check(a, BandSpec{0}));
    CHECK(band_check(a, BandSpec{1}));
    CHECK_FALSE(band_check(a, BandSpec{2}));

    a.set(2, 3, Rational(1)); // depth 1
    CHECK(band_check(a, BandSpec{0}));
    CHECK_FALSE(band_check(a, BandSpec{1}));

    CHECK(band_check(UTMatrix(3), BandSpec{2})); // zero matrix passes any band
    CHECK_THROWS_AS(band_check(a, BandSpec{-1}), Error);
    CHECK_THROWS_AS(band_check(a, BandSpec{3}), Error);
}

TEST_CASE("band depth is where commutator powers live") {
    // sym_eval([x1,x2]^k, n) vanishes at depth < k: the square on T_5 is
    // zero everywhere except depths >= 2.
    const SymUTMatrix sq = sym_eval(NcPoly::parse("[x1,x2]^2"), 5);
    for (int s = 1; s <= 5; ++s)
        for (int t = s; t <= 5 && t - s < 2; ++t) REQUIRE(sq.get(s, t).is_zero());
    bool nonzero_somewhere = false;
    for (int s = 1; s <= 5; ++s)
        for (int t = s + 2; t <= 5; ++t)
            if (!sq.get(s, t).is_zero()) nonzero_somewhere = true;
    CHECK(nonzero_somewhere);

    SplitMix64 rng(0xbade11ULL);
    const NcPoly sq_poly = NcPoly::parse("[x1,x2]^2");
    for (int trial = 0; trial < 100; ++trial) {
        const UTMatrix value =
            mat_eval(sq_poly, {rmatrix(rng, 5), rmatrix(rng, 5)});
        REQUIRE(band_check(value, BandSpec{1}));
    }
}
