#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modpi/qnumeric.hpp"
#include "modpi/qseries.hpp"
#include "test_util.hpp"

using namespace modpi;

namespace {
std::mt19937_64 rng(0xabcdefULL);
}

TEST_CASE("series arithmetic basics") {
    long T = 32;
    LaurentSeries one = LaurentSeries::one(T);
    LaurentSeries q = LaurentSeries::power_q(1, T);

    SUBCASE("(1+q)(1-q) = 1 - q^2") {
        LaurentSeries prod = (one + q) * (one - q);
        CHECK(prod.coeff(0) == 1);
        CHECK(prod.coeff(1) == 0);
        CHECK(prod.coeff(2) == -1);
        CHECK(prod.coeff(3) == 0);
    }

    SUBCASE("inverse of 1-q is the geometric series") {
        LaurentSeries inv = (one - q).inverse();
        for (long e = 0; e < inv.trunc(); ++e) CHECK(inv.coeff(e) == 1);
    }

    SUBCASE("series * its inverse = 1 for random invertible series") {
        for (int t = 0; t < 10; ++t) {
            std::uniform_int_distribution<long> d(-5, 5);
            std::vector<Rat> c(24);
            c[0] = Rat(1 + (t % 3));
            for (size_t i = 1; i < c.size(); ++i) c[i] = rat(d(rng), 1 + (t % 4));
            LaurentSeries s = LaurentSeries::from_coeffs(-3, std::move(c), 21);
            LaurentSeries prod = s * s.inverse();
            for (long e = prod.valuation(); e < prod.trunc(); ++e)
                CHECK(prod.coeff(e) == (e == 0 ? 1 : 0));
        }
    }

    SUBCASE("negative powers via inverse") {
        LaurentSeries s = (one - q).pow(-2);
        // 1/(1-q)^2 = sum (n+1) q^n
        for (long e = 0; e < s.trunc(); ++e) CHECK(s.coeff(e) == e + 1);
    }

    SUBCASE("rational-exponent unit powers") {
        LaurentSeries u = one + q;
        LaurentSeries h = u.pow_rat_unit(rat(1, 2));
        LaurentSeries sq = h * h;
        auto diff = LaurentSeries::first_difference(sq, u, 20);
        CHECK(!diff);
    }
}

TEST_CASE("theta series leading terms") {
    LaurentSeries t3 = theta3_series(10);
    CHECK(t3.coeff(0) == 1);
    CHECK(t3.coeff(1) == 2);
    CHECK(t3.coeff(4) == 2);
    CHECK(t3.coeff(9) == 2);
    CHECK(t3.coeff(2) == 0);

    LaurentSeries t4 = theta4_series(10);
    CHECK(t4.coeff(0) == 1);
    CHECK(t4.coeff(1) == -2);
    CHECK(t4.coeff(4) == 2);
    CHECK(t4.coeff(9) == -2);

    FracPrefixSeries t2 = theta2_series(10);
    CHECK(t2.shift() == rat(1, 4));
    CHECK(t2.body().coeff(0) == 2);
    CHECK(t2.body().coeff(2) == 2);
    CHECK(t2.body().coeff(6) == 2);
    CHECK(t2.body().coeff(1) == 0);
}

TEST_CASE("Jacobi identity theta3^4 = theta2^4 + theta4^4") {
    long order = 120;
    LaurentSeries lhs = theta3_series(order).pow(4);
    LaurentSeries rhs = theta2_series(order).pow(4).to_laurent() + theta4_series(order).pow(4);
    CHECK(!LaurentSeries::first_difference(lhs, rhs, order - 4));
}

TEST_CASE("eisenstein P against a brute-force divisor oracle") {
    long order = 400;
    LaurentSeries P = eisenstein_P_series(order);
    CHECK(P.coeff(0) == 1);
    CHECK(P.coeff(2) == -24);
    CHECK(P.coeff(4) == -72);
    CHECK(P.coeff(6) == -96);
    CHECK(P.coeff(8) == -168);
    CHECK(P.coeff(24) == -24 * 28); // sigma_1(12) = 28
    for (long m = 1; m <= 200; ++m) {
        long s = 0;
        for (long d = 1; d <= m; ++d)
            if (m % d == 0) s += d;
        CHECK(P.coeff(2 * m) == -24 * s);
        if (2 * m + 1 <= order) CHECK(P.coeff(2 * m - 1) == 0);
    }
}

TEST_CASE("euler product agrees with direct multiplication") {
    long order = 60;
    LaurentSeries pent = euler_product_series(2, order);
    LaurentSeries direct = LaurentSeries::one(order + 1);
    for (long n = 1; 2 * n <= order; ++n) {
        direct = direct * (LaurentSeries::one(order + 1) - LaurentSeries::power_q(2 * n, order + 1));
        direct = direct.truncated(order + 1);
    }
    CHECK(!LaurentSeries::first_difference(pent, direct, order));
}

TEST_CASE("theta_from_gram: identity-lattice sanity and Table-2 leading counts") {
    GramMatrix id2;
    for (int i = 0; i < 4; ++i) id2.m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    LaurentSeries t = theta_from_gram(id2, 12);
    CHECK(t.coeff(0) == 1);
    CHECK(t.coeff(2) == 8);   // 8 signed unit vectors
    CHECK(t.coeff(4) == 24);  // 24 vectors (+-1,+-1,0,0)
    // brute-force cross-check to order 12
    std::vector<long> brute(13, 0);
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long d = -3; d <= 3; ++d) {
                    long v = 2 * (a * a + b * b + c * c + d * d);
                    if (v <= 12) ++brute[static_cast<size_t>(v)];
                }
    for (long e = 0; e <= 12; ++e) CHECK(t.coeff(e) == brute[static_cast<size_t>(e)]);

    auto grams = load_gram_file(modpi_test::data_dir() + "/gram_p163.txt", 163);
    REQUIRE(grams.size() == 8);
    LaurentSeries t1 = theta_from_gram(grams[0], 20);
    CHECK(t1.coeff(0) == 1);
    CHECK(t1.coeff(2) == 4);

    SUBCASE("brute-force box oracle for M_I1 at small order") {
        std::vector<long> counts(9, 0);
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (long c = -2; c <= 2; ++c)
                    for (long d = -2; d <= 2; ++d) {
                        std::array<long, 4> x{a, b, c, d};
                        long v = grams[0].quad(x);
                        if (v <= 8) ++counts[static_cast<size_t>(v)];
                    }
        for (long e = 0; e <= 8; ++e) CHECK(t1.coeff(e) == counts[static_cast<size_t>(e)]);
    }

    SUBCASE("phi cusp-form expansion (theta_I6 - theta_I7)/4 = q^14 - q^16 - q^18 + ...") {
        LaurentSeries t6 = theta_from_gram(grams[5], 20);
        LaurentSeries t7 = theta_from_gram(grams[6], 20);
        LaurentSeries phi = (t6 - t7).scalar_div(Rat(4));
        CHECK(phi.valuation() == 14);
        CHECK(phi.coeff(14) == 1);
        CHECK(phi.coeff(16) == -1);
        CHECK(phi.coeff(18) == -1);
    }

    SUBCASE("non positive definite matrices are rejected") {
        GramMatrix bad;
        bad.m[0][0] = 2;
        bad.m[1][1] = -2;
        bad.m[2][2] = 2;
        bad.m[3][3] = 2;
        CHECK_THROWS_AS(theta_from_gram(bad, 10), std::domain_error);
    }
}

TEST_CASE("theta coefficient growth sanity: counts up to B grow like B^2") {
    auto grams = load_gram_file(modpi_test::data_dir() + "/gram_p163.txt", 163);
    auto counts = gram_counts(grams[0], 400);
    long total100 = 0, total400 = 0;
    for (long m = 0; m <= 100; ++m) total100 += counts[static_cast<size_t>(m)];
    for (long m = 0; m <= 400; ++m) total400 += counts[static_cast<size_t>(m)];
    double ratio = static_cast<double>(total400) / static_cast<double>(total100);
    CHECK(ratio > 8.0);   // quadratic growth gives ~16
    CHECK(ratio < 32.0);
    for (long m = 0; m <= 400; ++m) CHECK(counts[static_cast<size_t>(m)] >= 0);
    CHECK(counts[0] == 1);
}

TEST_CASE("varphi eta quotient: valuation -54, leading coefficient 1") {
    LaurentSeries v = eta4_quotient(163, 80);
    CHECK(v.valuation() == -54);
    CHECK(v.coeff(-54) == 1);
    CHECK(v.all_integer());
    CHECK_THROWS_AS(eta4_quotient(11, 40), std::domain_error); // 11 != 7 mod 12
}

TEST_CASE("j oracle: expansion and E4^3/Delta cross-check") {
    LaurentSeries j = j_oracle(8);
    CHECK(j.valuation() == -1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == Int("21493760"));

    LaurentSeries j2 = j_from_e4_delta(8);
    CHECK(!LaurentSeries::first_difference(j, j2, 8));
}

TEST_CASE("Lemma 1 series check") {
    auto rep = lemma1_check(5);
    CHECK(rep.ok);
    INFO(rep.detail);
    auto rep8 = lemma1_check(8);
    CHECK(rep8.ok);
}

TEST_CASE("Kexp formal identity") {
    auto rep = kexp_formal_check(100);
    INFO(rep.detail);
    CHECK(rep.ok);
}

TEST_CASE("numeric theta evaluation") {
    SUBCASE("theta3 at q -> 0 tends to 1") {
        BigReal q(Rat(1, 100000000), 128);
        BigReal v = theta3_num(q, 128);
        CHECK((v - BigReal(1, 128)).abs() < BigReal(Rat(3, 100000000), 64));
    }

    SUBCASE("k(e^-pi) = k'(e^-pi) = 1/sqrt 2 by the tau -> 1/tau symmetry") {
        unsigned prec = 192;
        BigReal q = (-BigReal::pi(prec + 32)).exp();
        auto mod = elliptic_moduli_num(q, prec);
        BigReal target = BigReal(2, prec).sqrt().pow_si(-1);
        CHECK((mod.k - target).abs() < BigReal::pow2(-160, 96));
        CHECK((mod.kprime - target).abs() < BigReal::pow2(-160, 96));
        // theta2 = theta4 at this fixed point
        BigReal t2 = theta2_num(q, prec);
        BigReal t4 = theta4_num(q, prec);
        CHECK((t2 - t4).abs() < BigReal::pow2(-160, 96));
    }

    SUBCASE("gram theta at e^{-pi/sqrt163}: positive, stable under precision doubling") {
        auto grams = load_gram_file(modpi_test::data_dir() + "/gram_p163.txt", 163);
        unsigned prec = 128;
        BigReal q = (-(BigReal::pi(prec + 64) / BigReal(163, prec + 64).sqrt())).exp();
        BigReal v1 = gram_theta_num(grams[0], q, prec);
        CHECK(v1.sgn() > 0);
        BigReal q2 = (-(BigReal::pi(2 * prec + 64) / BigReal(163, 2 * prec + 64).sqrt())).exp();
        BigReal v2 = gram_theta_num(grams[0], q2, 2 * prec);
        CHECK((v1 - v2.round_to(prec)).abs() < BigReal::pow2(-static_cast<long>(prec) + 8, 96));
    }

    SUBCASE("formal vs numeric agreement for theta3") {
        BigReal q(Rat(1, 10), 160);
        LaurentSeries t3 = theta3_series(60);
        BigReal acc(0, 192);
        for (long e = 59; e >= 0; --e) acc = acc * q + BigReal(t3.coeff(e), 192);
        BigReal direct = theta3_num(q, 160);
        CHECK((acc - direct).abs() < BigReal::pow2(-150, 96));
    }

    SUBCASE("numeric evaluation rejects q >= 1") {
        CHECK_THROWS_AS(theta3_num(BigReal(2, 64), 64), std::domain_error);
    }
}

TEST_CASE("numeric P and euler product") {
    unsigned prec = 160;
    BigReal q(Rat(1, 10), prec + 32);
    // P at q=1/10 against the formal series (trunc error ~ 1e-60)
    LaurentSeries P = eisenstein_P_series(200);
    BigReal acc(0, prec + 32);
    for (long e = 200; e >= 0; --e) acc = acc * q + BigReal(P.coeff(e), prec + 32);
    BigReal direct = eisenstein_P_num(q, prec);
    CHECK((acc - direct).abs() < BigReal::pow2(-150, 96));

    LaurentSeries E = euler_product_series(2, 200);
    BigReal acc2(0, prec + 32);
    for (long e = 200; e >= 0; --e) acc2 = acc2 * q + BigReal(E.coeff(e), prec + 32);
    BigReal direct2 = euler_even_num(q, prec);
    CHECK((acc2 - direct2).abs() < BigReal::pow2(-150, 96));
}
