#include <catch2/catch_amalgamated.hpp>

#include "waring/errors.hpp"
#include "waring/witness.hpp"

#include "test_util.hpp"

using namespace waring;

namespace {

// band target of depth r-1 whose depth-r diagonal is everywhere nonzero
UTMatrix rtarget_nonzero_diag(SplitMix64& rng, int n, int r) {
    UTMatrix a(n);
    for (int s = 1; s + r <= n; ++s)
        a.set(s, s + r, Rational(testutil::rint_nonzero(rng, -9, 9)));
    for (int s = 1; s <= n; ++s)
        for (int col = s + r + 1; col <= n; ++col)
            a.set(s, col, Rational(testutil::rint(rng, -9, 9)));
    return a;
}

void check_single(const WitnessBundle& b, const NcPoly& p, int n,
                  const UTMatrix& target) {
    REQUIRE(b.mode == WitnessMode::single);
    REQUIRE(b.n == n);
    REQUIRE(b.verified);
    REQUIRE(b.tuples.size() == 1);
    REQUIRE(b.tuples[0].size() == static_cast<size_t>(p.var_count()));
    REQUIRE(mat_eval(p, b.tuples[0]) == target);
}

errc code_of_witness(const NcPoly& p, int n, const UTMatrix& target,
                     std::uint64_t seed) {
    try {
        image_witness(p, n, target, seed);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected image_witness to throw");
    return errc::bad_input;
}

} // namespace

TEST_CASE("step order walks depth by depth, top row first") {
    const auto got = step_order(5, 2);
    const std::vector<std::pair<int, int>> want = {
        {1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}, {1, 5}};
    CHECK(got == want);

    const auto tight = step_order(4, 2);
    const std::vector<std::pair<int, int>> want_tight = {{1, 3}, {2, 4}, {1, 4}};
    CHECK(tight == want_tight);
}

TEST_CASE("image witness soundness across configurations") {
    struct Config {
        const char* poly;
        int n;
        int r;
    };
    const Config configs[] = {
        {"[x1,x2]^2", 5, 2}, {"[x1,x2]^2", 6, 2}, {"[x1,x2]^3", 6, 3},
        {"[x1,x2]^2", 4, 2}, {"[x1,x2]^3", 5, 3},
    };
    SplitMix64 rng(0x7e577e5ULL);
    for (const Config& cfg : configs) {
        const NcPoly p = NcPoly::parse(cfg.poly);
        DYNAMIC_SECTION("poly " << cfg.poly << " n " << cfg.n) {
            for (int trial = 0; trial < 100; ++trial) {
                const UTMatrix target = rtarget_nonzero_diag(rng, cfg.n, cfg.r);
                WitnessBundle b = image_witness(p, cfg.n, target, rng.next());
                check_single(b, p, cfg.n, target);
                REQUIRE(verify_bundle(b));
            }
        }
    }
}

TEST_CASE("image witness works for polynomials in three variables") {
    const NcPoly p = NcPoly::parse("[x1,x2]*[x1,x3]");
    const OrderReport rep = compute_order(p);
    REQUIRE(rep.order == 2);
    SplitMix64 rng(0x3a3a3aULL);
    for (int trial = 0; trial < 25; ++trial) {
        const UTMatrix target = rtarget_nonzero_diag(rng, 5, 2);
        WitnessBundle b = image_witness(p, 5, target, rng.next());
        check_single(b, p, 5, target);
    }
}

TEST_CASE("image witness error paths") {
    SplitMix64 rng(0x0fa115ULL);
    const NcPoly sq = NcPoly::parse("[x1,x2]^2");

    // order 1 and order n-1 are outside the admissible range
    CHECK(code_of_witness(NcPoly::parse("[x1,x2]"), 5, UTMatrix(5), 1) ==
          errc::order_out_of_range);
    CHECK(code_of_witness(NcPoly::parse("[x1,x2]^3"), 4, UTMatrix(4), 1) ==
          errc::order_out_of_range);

    // target sticking out of the band
    UTMatrix shallow(5);
    shallow.set(1, 2, Rational(1));
    CHECK(code_of_witness(sq, 5, shallow, 1) == errc::target_not_in_band);

    // zero somewhere on the depth-r diagonal
    UTMatrix holed = rtarget_nonzero_diag(rng, 5, 2);
    holed.set(2, 4, Rational(0));
    CHECK(code_of_witness(sq, 5, holed, 1) == errc::zero_on_r_diagonal);
}

TEST_CASE("image witness is deterministic per seed") {
    SplitMix64 rng(0xd373c7ULL);
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    const UTMatrix target = rtarget_nonzero_diag(rng, 6, 2);
    const WitnessBundle a = image_witness(p, 6, target, 424242);
    const WitnessBundle b = image_witness(p, 6, target, 424242);
    REQUIRE(a.tuples.size() == b.tuples.size());
    CHECK(a.tuples[0] == b.tuples[0]);
    CHECK(a.seed == b.seed);

    const WitnessBundle c = image_witness(p, 6, target, 424243);
    check_single(c, p, 6, target); // other seeds still verify
}

TEST_CASE("sum decomposition covers arbitrary band targets") {
    SplitMix64 rng(0x5a5a5aULL);
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    for (int trial = 0; trial < 60; ++trial) {
        UTMatrix target(5);
        for (int s = 1; s <= 5; ++s)
            for (int col = s + 2; col <= 5; ++col)
                target.set(s, col, Rational(testutil::rint(rng, -9, 9)));
        WitnessBundle b = decompose_sum(p, 5, target, rng.next());
        REQUIRE(b.mode == WitnessMode::sum);
        REQUIRE(b.tuples.size() == 2);
        REQUIRE(b.verified);
        const UTMatrix sum =
            mat_eval(p, b.tuples[0]) + mat_eval(p, b.tuples[1]);
        REQUIRE(sum == target);
        REQUIRE(verify_bundle(b));
    }
}

TEST_CASE("sum decomposition handles the zero matrix") {
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    WitnessBundle b = decompose_sum(p, 5, UTMatrix(5), 77);
    REQUIRE(b.verified);
    CHECK(mat_eval(p, b.tuples[0]) + mat_eval(p, b.tuples[1]) == UTMatrix(5));
}

TEST_CASE("sum bundles verify with the tuples swapped") {
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    UTMatrix target(5);
    target.set(1, 3, Rational(1));
    target.set(3, 5, Rational(1));
    WitnessBundle b = decompose_sum(p, 5, target, 13);
    std::swap(b.tuples[0], b.tuples[1]);
    CHECK(verify_bundle(b)); // addition commutes
}

TEST_CASE("each summand image stays inside the band") {
    SplitMix64 rng(0xba2d00ULL);
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    const int r = 2;
    for (int trial = 0; trial < 20; ++trial) {
        UTMatrix target(5);
        for (int s = 1; s <= 5; ++s)
            for (int col = s + r; col <= 5; ++col)
                target.set(s, col, Rational(testutil::rint(rng, -9, 9)));
        const WitnessBundle b = decompose_sum(p, 5, target, rng.next());
        for (const auto& tuple : b.tuples)
            REQUIRE(band_check(mat_eval(p, tuple), BandSpec{r - 1}));
    }
}

TEST_CASE("sum decomposition rejects out-of-band targets") {
    UTMatrix shallow(5);
    shallow.set(2, 3, Rational(1));
    try {
        decompose_sum(NcPoly::parse("[x1,x2]^2"), 5, shallow, 1);
        FAIL("shallow target accepted");
    } catch (const Error& e) {
        CHECK(e.code() == errc::target_not_in_band);
    }
}

TEST_CASE("corner witness handles both layouts") {
    SplitMix64 rng(0xc04e34ULL);
    struct Config {
        const char* poly;
        int n;
    };
    for (const Config& cfg : {Config{"[x1,x2]^2", 4}, Config{"[x1,x2]^3", 5}}) {
        const NcPoly p = NcPoly::parse(cfg.poly);
        const int n = cfg.n;
        DYNAMIC_SECTION("poly " << cfg.poly << " n " << n) {
            for (int trial = 0; trial < 50; ++trial) {
                UTMatrix target(n);
                // first ten trials force a zero leading corner entry
                if (trial >= 10)
                    target.set(1, n - 1, Rational(testutil::rint(rng, -9, 9)));
                target.set(2, n, Rational(testutil::rint(rng, -9, 9)));
                target.set(1, n, Rational(testutil::rint(rng, -9, 9)));
                WitnessBundle b = witness_corner_case(p, n, target, rng.next());
                check_single(b, p, n, target);
                REQUIRE(verify_bundle(b));
            }
        }
    }
}

TEST_CASE("corner witness validation") {
    try {
        witness_corner_case(NcPoly::parse("[x1,x2]^2"), 5, UTMatrix(5), 1);
        FAIL("wrong order accepted");
    } catch (const Error& e) {
        CHECK(e.code() == errc::order_mismatch); // order 2 but n-2 is 3
    }
    try {
        UTMatrix shallow(4);
        shallow.set(1, 2, Rational(3));
        witness_corner_case(NcPoly::parse("[x1,x2]^2"), 4, shallow, 1);
        FAIL("shallow target accepted");
    } catch (const Error& e) {
        CHECK(e.code() == errc::target_not_in_band);
    }
    try {
        witness_corner_case(NcPoly::parse("[x1,x2]"), 3, UTMatrix(3), 1);
        FAIL("n below 4 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_input);
    }
}

TEST_CASE("verify_bundle catches tampering") {
    SplitMix64 rng(0x7a3b3eULL);
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    const UTMatrix target = rtarget_nonzero_diag(rng, 5, 2);
    WitnessBundle b = image_witness(p, 5, target, 5);
    REQUIRE(verify_bundle(b));

    WitnessBundle bad = b;
    bad.tuples[0][0].set(1, 1, bad.tuples[0][0].get(1, 1) + Rational(1));
    CHECK_FALSE(verify_bundle(bad));
    CHECK_FALSE(bad.verified);

    WitnessBundle bad2 = b;
    bad2.target.set(1, 3, bad2.target.get(1, 3) + Rational(1));
    CHECK_FALSE(verify_bundle(bad2));

    // structurally broken bundles throw instead of returning false
    WitnessBundle broken = b;
    broken.tuples[0].pop_back();
    CHECK_THROWS_AS(verify_bundle(broken), Error);
}

TEST_CASE("witness tuples obey the sparsity layout") {
    // rows above the solved region only use their first superdiagonal;
    // the layout is what makes the assembled system triangular.
    SplitMix64 rng(0x0b5e55ULL);
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    const int n = 6, r = 2;
    const UTMatrix target = rtarget_nonzero_diag(rng, n, r);
    const WitnessBundle b = image_witness(p, n, target, 31337);
    for (const UTMatrix& u : b.tuples[0])
        for (const auto& [pos, value] : u.entries()) {
            const auto [row, col] = pos;
            if (row < r && col > row)
                REQUIRE(col == row + 1); // strictly-upper mass sits on the superdiagonal
        }
}
