#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "orthopoly/decomp.hpp"
#include "test_util.hpp"

using namespace orthopoly;
using testutil::apply_form;
using testutil::poly_eq;
using testutil::ref_basis;
using testutil::ref_g;
using testutil::ref_mul;
using testutil::Rng;

TEST_CASE("g_polynomial examples") {
    Field F;
    auto cheb = RecurrenceFamily::preset(F, "chebyshev-t");
    CHECK(g_polynomial(cheb, 0) == Poly{Fp{1}});
    // G_1 = a_2 x + b_2 = 2x
    CHECK(g_polynomial(cheb, 1) == Poly{Fp{0}, Fp{2}});
}

TEST_CASE("g_polynomial equals the direct recurrence") {
    Field F;
    Rng rng(60);
    auto fam = rng.family(F, 40);
    for (u64 i = 0; i <= 32; ++i) {
        CHECK(poly_eq(g_polynomial(fam, i), ref_g(fam, i)));
    }
}

TEST_CASE("chebyshev-t moments") {
    Field F;
    auto cheb = RecurrenceFamily::preset(F, "chebyshev-t");
    MomentSeries ms = moment_series(cheb, 3);
    Fp inv2 = F.inv(Fp{2});
    Fp three_eighths = F.mul(Fp{3}, F.inv(Fp{8}));
    CHECK(ms.moments == Poly{Fp{1}, Fp{0}, inv2, Fp{0}, three_eighths});
}

TEST_CASE("first moment is 1/a_1") {
    Field F;
    Rng rng(61);
    for (int t = 0; t < 10; ++t) {
        const u64 n = 1 + rng.next() % 12;
        auto fam = rng.family(F, n);
        MomentSeries ms = moment_series(fam, n);
        CHECK(ms.moments.size() == 2 * n - 1);
        CHECK(ms.moments[0] == F.inv(fam.triple(1).a));
    }
}

TEST_CASE("moments orthogonalize the family") {
    Field F;
    Rng rng(62);
    for (int t = 0; t < 12; ++t) {
        const u64 n = 2 + rng.next() % 15;
        auto fam = rng.family(F, n);
        MomentSeries ms = moment_series(fam, n);
        std::vector<Poly> basis = ref_basis(fam, n);
        for (u64 i = 0; i < n; ++i) {
            for (u64 j = 0; j < i; ++j) {
                CHECK(apply_form(F, ms.moments, ref_mul(F, basis[i], basis[j])) == F.zero());
            }
        }
    }
}

TEST_CASE("normalization examples") {
    Field F;
    Rng rng(63);
    // d_0 = 1/a_1
    auto fam = rng.family(F, 4);
    NormalizationConstants nc = normalization(fam, 4);
    CHECK(nc.d[0] == F.inv(fam.triple(1).a));
    for (Fp d : nc.d) CHECK(d.v != 0);

    // chebyshev-t at n = 4: (1, 1/2, 1/2, 1/2)
    auto cheb = RecurrenceFamily::preset(F, "chebyshev-t");
    Fp inv2 = F.inv(Fp{2});
    NormalizationConstants cheb_nc = normalization(cheb, 4);
    CHECK(cheb_nc.d == std::vector<Fp>{Fp{1}, inv2, inv2, inv2});
}

TEST_CASE("diagonal values match the closed formula and the form") {
    Field F;
    Rng rng(64);
    for (int t = 0; t < 8; ++t) {
        const u64 n = 2 + rng.next() % 14;
        auto fam = rng.family(F, n);
        SampledCoefficients s = sample(fam, n);
        MomentSeries ms = moment_series(fam, n);
        NormalizationConstants nc = normalization(fam, n);
        std::vector<Poly> basis = ref_basis(fam, n);
        Fp gamma = F.one(); // (-1)^i c_2 ... c_{i+1}
        for (u64 i = 0; i < n; ++i) {
            if (i > 0) gamma = F.neg(F.mul(gamma, s.c[i]));
            Fp expected = F.mul(gamma, F.inv(s.a[i]));
            CHECK(nc.d[i] == expected);
            CHECK(apply_form(F, ms.moments, ref_mul(F, basis[i], basis[i])) == expected);
        }
    }
}

TEST_CASE("hankel_matrix examples") {
    Field F;
    Rng rng(65);
    auto fam = rng.family(F, 1);
    auto h1 = hankel_matrix(fam, 1);
    CHECK(h1[0][0] == F.inv(fam.triple(1).a));

    auto cheb = RecurrenceFamily::preset(F, "chebyshev-t");
    auto h2 = hankel_matrix(cheb, 2);
    Fp inv2 = F.inv(Fp{2});
    CHECK(h2[0][0] == F.one());
    CHECK(h2[0][1] == F.zero());
    CHECK(h2[1][0] == F.zero());
    CHECK(h2[1][1] == inv2);

    // Hankel structure: entry depends only on i+j
    auto fam8 = rng.family(F, 8);
    auto h = hankel_matrix(fam8, 8);
    for (u64 i = 0; i < 8; ++i) {
        for (u64 j = 0; j < 8; ++j) {
            if (i + 1 < 8 && j >= 1) CHECK(h[i][j] == h[i + 1][j - 1]);
        }
    }
}

TEST_CASE("gram factorization: B^t H B = D") {
    Field F;
    Rng rng(66);
    for (int t = 0; t < 6; ++t) {
        const u64 n = 2 + rng.next() % 31;
        auto fam = rng.family(F, n);
        BasisMatrix b = basis_matrix(fam, n);
        auto h = hankel_matrix(fam, n);
        NormalizationConstants nc = normalization(fam, n);

        // hb = H * B
        std::vector<std::vector<Fp>> hb(n, std::vector<Fp>(n, Fp{0}));
        for (u64 i = 0; i < n; ++i) {
            for (u64 k = 0; k < n; ++k) {
                if (h[i][k].v == 0) continue;
                for (u64 j = 0; j < n; ++j) {
                    hb[i][j] = F.add(hb[i][j], F.mul(h[i][k], b[k][j]));
                }
            }
        }
        // full = B^t * hb
        for (u64 i = 0; i < n; ++i) {
            for (u64 j = 0; j < n; ++j) {
                Fp acc = F.zero();
                for (u64 k = 0; k < n; ++k) acc = F.add(acc, F.mul(b[k][i], hb[k][j]));
                CHECK(acc == (i == j ? nc.d[i] : F.zero()));
            }
        }
    }
}

TEST_CASE("telescoping identity of the companion quotients") {
    Field F;
    Rng rng(67);
    for (int t = 0; t < 10; ++t) {
        auto fam = rng.family(F, 16);
        SampledCoefficients s = sample(fam, 16);
        for (u64 i = 1; i <= 12; ++i) {
            const std::size_t prec = 2 * i + 2;
            Poly f_i = ref_basis(fam, i + 1).back();
            Poly f_ip1 = ref_basis(fam, i + 2).back();
            Poly g_im1 = ref_g(fam, i - 1);
            Poly g_i = ref_g(fam, i);

            Poly hi = trunc(poly_mul(F, rev(g_i, i + 1),
                                     series_inv(F, rev(f_ip1, i + 2), prec)), prec);
            Poly lo = trunc(poly_mul(F, rev(g_im1, i),
                                     series_inv(F, rev(f_i, i + 1), prec)), prec);
            Poly diff = poly_sub(F, hi, lo);
            diff.resize(prec, Fp{0});

            // lowest nonzero coefficient sits at x^(2i) and equals
            // (-1)^i (c_2...c_{i+1}) / ((a_1...a_i)(a_1...a_{i+1}))
            for (u64 k = 0; k < 2 * i; ++k) CHECK(diff[k] == F.zero());
            Fp gamma = F.one();
            for (u64 k = 1; k <= i; ++k) gamma = F.mul(gamma, s.c[k]); // c_2...c_{i+1}
            if (i % 2 == 1) gamma = F.neg(gamma);
            Fp delta_i = F.one(), delta_ip1 = F.one();
            for (u64 k = 0; k < i; ++k) delta_i = F.mul(delta_i, s.a[k]);
            delta_ip1 = F.mul(delta_i, s.a[i]);
            Fp expected = F.mul(gamma, F.inv(F.mul(delta_i, delta_ip1)));
            CHECK(diff[2 * i] == expected);
        }
    }
}

TEST_CASE("moment truncation consistency") {
    Field F;
    Rng rng(68);
    for (u64 n : {u64{1}, u64{3}, u64{8}, u64{13}}) {
        auto fam = rng.family(F, 2 * n);
        MomentSeries small = moment_series(fam, n);
        MomentSeries big = moment_series(fam, 2 * n);
        CHECK(trunc(big.moments, 2 * n - 1) == small.moments);
    }
}

TEST_CASE("decomp examples") {
    Field F;
    auto cheb = RecurrenceFamily::preset(F, "chebyshev-t");
    CHECK(decomp(cheb, Poly{Fp{1}, Fp{0}, Fp{0}}) == std::vector<Fp>{Fp{1}, Fp{0}, Fp{0}});

    Fp inv4 = F.inv(Fp{4});
    CHECK(decomp(cheb, Poly{Fp{0}, Fp{0}, Fp{0}, Fp{1}}) ==
          std::vector<Fp>{F.zero(), F.mul(Fp{3}, inv4), F.zero(), inv4});
    CHECK_THROWS_AS(decomp(cheb, Poly{}), std::invalid_argument);
}

TEST_CASE("decomp equals naive_decomp") {
    Field F;
    Rng rng(69);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng.next() % 64;
        auto fam = rng.family(F, n);
        Poly a = rng.vec(F, n);
        CHECK(decomp(fam, a) == naive_decomp(fam, a));
    }
    for (const char* name : {"chebyshev-u", "legendre", "hermite", "laguerre"}) {
        auto fam = RecurrenceFamily::preset(F, name);
        Poly a = rng.vec(F, 41);
        CHECK(decomp(fam, a) == naive_decomp(fam, a));
    }
}

TEST_CASE("decomp equals naive_decomp at n = 1024") {
    Field F;
    Rng rng(70);
    const std::size_t n = 1024;
    auto fam = rng.family(F, n);
    Poly a = rng.vec(F, n);
    CHECK(decomp(fam, a) == naive_decomp(fam, a));
}

TEST_CASE("roundtrips in both directions") {
    Field F;
    Rng rng(71);
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{5}, std::size_t{37},
                          std::size_t{256}, std::size_t{1000}}) {
        auto fam = rng.family(F, n);
        std::vector<Fp> alpha = rng.vec(F, n);
        CHECK(decomp(fam, expand(fam, alpha)) == alpha);
        Poly a = rng.vec(F, n);
        CHECK(expand(fam, decomp(fam, a)) == a);
    }
}

TEST_CASE("family exactly n-1 long forces the appended triple") {
    // decomp pads the family with (1,0,1) at index n; the moments and
    // the normalization must use the same extension for the pipeline
    // to invert expand.
    Field F;
    Rng rng(72);
    for (std::size_t n : {std::size_t{2}, std::size_t{6}, std::size_t{16}, std::size_t{23}}) {
        auto fam = rng.family(F, n - 1); // shorter than the padded index n
        std::vector<Fp> alpha = rng.vec(F, n);
        CHECK(decomp(fam, expand(fam, alpha)) == alpha);
        CHECK(decomp(fam, naive_expand(fam, alpha)) == alpha);
    }
}

TEST_CASE("moment_series validation") {
    Field F;
    auto cheb = RecurrenceFamily::preset(F, "chebyshev-t");
    CHECK_THROWS_AS(moment_series(cheb, 0), std::invalid_argument);
    CHECK_THROWS_AS(normalization(cheb, 0), std::invalid_argument);
}

TEST_CASE("conversions over other moduli") {
    // 29 * 2^57 + 1 exercises the wide reduction path end to end.
    Field big(4179340454199820289ull);
    Rng rng(73);
    for (std::size_t n : {std::size_t{17}, std::size_t{640}}) {
        auto fam = rng.family(big, n);
        std::vector<Fp> alpha = rng.vec(big, n);
        CHECK(decomp(fam, expand(fam, alpha)) == alpha);
    }
    {
        const std::size_t n = 50;
        auto fam = rng.family(big, n);
        Poly a = rng.vec(big, n);
        CHECK(decomp(fam, a) == naive_decomp(fam, a));
    }

    // Small prime: fine within its transform capacity, capacity error beyond.
    Field small(257);
    auto fam = rng.family(small, 64);
    std::vector<Fp> alpha = rng.vec(small, 64);
    CHECK(decomp(fam, expand(fam, alpha)) == alpha);
    auto fam_big = rng.family(small, 2048);
    Poly a = rng.vec(small, 2048);
    CHECK_THROWS_AS(decomp(fam_big, a), NttCapacityError);
}
