#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modpi/algebraic.hpp"
#include "modpi/bigreal.hpp"
#include "modpi/intpoly.hpp"

using namespace modpi;

namespace {

std::mt19937_64 rng(0x5eed5eedULL);

Rat random_rat(long mag = 1000) {
    std::uniform_int_distribution<long> num(-mag, mag);
    std::uniform_int_distribution<long> den(1, mag);
    return rat(num(rng), den(rng));
}

} // namespace

TEST_CASE("rational arithmetic is exact: (a/b + c/d) * bd = ad + cb") {
    std::uniform_int_distribution<long> dist(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        Int a(dist(rng)), b(dist(rng)), c(dist(rng)), d(dist(rng));
        Int big = pow_int(Int(10), 25);
        a *= big; c *= big; // force multi-limb operands
        Rat lhs = (rat(a, b) + rat(c, d)) * Rat(b * d);
        CHECK(lhs == Rat(a * d + c * b));
    }
}

TEST_CASE("BigReal basics and nth roots") {
    BigReal two(2, 128);
    BigReal r = two.sqrt();
    BigReal diff = (r * r - two).abs();
    CHECK(diff < BigReal::pow2(-120, 128));

    CHECK(BigReal(8, 96).nth_root(3).to_double() == doctest::Approx(2.0));

    // bigreal_nth_root(640320, 2) = 800.1999...
    BigReal s = BigReal(640320, 128).sqrt();
    CHECK(s.to_double() == doctest::Approx(800.19997500468678));

    // (1728 * 53360^3)^(1/6) equals sqrt(640320) exactly: 1728*53360^3 = 640320^3.
    Int lhs = Int(1728) * pow_int(Int(53360), 3);
    CHECK(lhs == pow_int(Int(640320), 3));
    BigReal sixth = BigReal(lhs, 160).nth_root(6);
    CHECK((sixth - BigReal(640320, 160).sqrt()).abs() < BigReal::pow2(-140, 160));
}

TEST_CASE("BigReal double-precision re-run agreement") {
    // Results at precision P and 2P agree to within 2^-(P-4).
    for (unsigned p : {64u, 128u, 256u}) {
        BigReal a1 = BigReal(163, p).sqrt() * BigReal::pi(p) + BigReal(rat(1, 7), p) / BigReal(3, p).sqrt();
        BigReal a2 = BigReal(163, 2 * p).sqrt() * BigReal::pi(2 * p) +
                     BigReal(rat(1, 7), 2 * p) / BigReal(3, 2 * p).sqrt();
        BigReal rel = ((a1 - a2.round_to(p)) / a1).abs();
        CHECK(rel < BigReal::pow2(-static_cast<long>(p) + 4, p));
    }
}

TEST_CASE("IntPoly arithmetic and evaluation") {
    IntPoly a{-1, 0, 1};       // x^2 - 1
    IntPoly x_plus([] { return IntPoly{1, 1}; }());
    IntPoly x_minus{-1, 1};
    CHECK(a == x_plus * x_minus);
    CHECK(a.eval(Int(3)) == 8);
    CHECK(a.eval(rat(1, 2)) == rat(-3, 4));
    CHECK((a * IntPoly{0}).is_zero());
    CHECK(IntPoly{1, 2, 3}.derivative() == IntPoly{2, 6});
}

TEST_CASE("root isolation: symmetric quadratic") {
    IntPoly p{-1, 0, 1}; // x^2 - 1
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0].first < -1);
    CHECK(ivs[0].second >= -1);
    CHECK(ivs[1].first <= 1);
    CHECK(ivs[1].second > 1);
    for (auto& [lo, hi] : ivs) CHECK(p.sign_at(lo) * p.sign_at(hi) < 0);
}

TEST_CASE("root isolation: singular-moduli cubics have a unique real root") {
    IntPoly p163{-1, 400, 40, 2};
    auto ivs = isolate_real_roots(p163);
    REQUIRE(ivs.size() == 1);
    // Contained in (0, 1/256): p(0) < 0 < p(1/256).
    CHECK(p163.sign_at(Rat(0)) < 0);
    CHECK(p163.sign_at(rat(1, 256)) > 0);
    CHECK(count_real_roots(p163, Rat(0), rat(1, 256)) == 1);

    IntPoly p43{-1, 16, -8, 2};
    CHECK(isolate_real_roots(p43).size() == 1);
    IntPoly p19{-1, 4, 4, 2};
    CHECK(isolate_real_roots(p19).size() == 1);
    IntPoly p67{-1, 36, 12, 2};
    CHECK(isolate_real_roots(p67).size() == 1);
}

TEST_CASE("non-squarefree input is rejected") {
    IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1}; // (x-1)^2
    CHECK_THROWS_WITH_AS(isolate_real_roots(p), doctest::Contains("repeated root"),
                         std::domain_error);
}

TEST_CASE("refine_root: sqrt(2) and the n=19 root") {
    IntPoly p{-2, 0, 1};
    BigReal r = refine_root(p, Rat(1), Rat(2), 64);
    BigReal target = BigReal(2, 96).sqrt();
    CHECK((r - target).abs() < BigReal::pow2(-64, 96));

    IntPoly p19{-1, 4, 4, 2};
    auto iv = isolate_real_roots(p19).at(0);
    BigReal s = refine_root(p19, iv.first, iv.second, 128);
    CHECK(s.sgn() > 0);
    CHECK(s < BigReal(1, 64));
    // residual of the defining polynomial is tiny
    CHECK(p19.eval(s).abs() < BigReal::pow2(-120, 160));
}

TEST_CASE("refine_root requires a bracketing interval") {
    IntPoly p{-2, 0, 1};
    CHECK_THROWS_AS(refine_root(p, Rat(2), Rat(3), 32), std::domain_error);
}

TEST_CASE("algebraic numbers in Q(u), u the real root of 2x^3+40x^2+400x-1") {
    auto F = NumberField::create_unique_real_root(IntPoly{-1, 400, 40, 2});
    AlgebraicNumber u = AlgebraicNumber::generator(F);

    SUBCASE("u * u^-1 = 1 and the defining relation reduces to 1") {
        CHECK(u * u.inverse() == AlgebraicNumber::from_rat(F, Rat(1)));
        // 2u^3 + 40u^2 + 400u = 1
        AlgebraicNumber lhs = Rat(2) * u.pow(3) + Rat(40) * u.pow(2) + Rat(400) * u;
        CHECK(lhs == AlgebraicNumber::from_rat(F, Rat(1)));
    }

    SUBCASE("poly_eval_alg of the modulus vanishes") {
        CHECK(poly_eval_alg(IntPoly{-1, 400, 40, 2}, u).is_zero());
    }

    SUBCASE("inverse law on random elements") {
        for (int i = 0; i < 100; ++i) {
            AlgebraicNumber a(F, {random_rat(), random_rat(), random_rat()});
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == AlgebraicNumber::from_rat(F, Rat(1)));
        }
    }

    SUBCASE("commutative and associative multiplication") {
        for (int i = 0; i < 50; ++i) {
            AlgebraicNumber a(F, {random_rat(), random_rat(), random_rat()});
            AlgebraicNumber b(F, {random_rat(), random_rat(), random_rat()});
            AlgebraicNumber c(F, {random_rat(), random_rat(), random_rat()});
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
        }
    }

    SUBCASE("numeric evaluation lands in the isolating interval") {
        BigReal v = u.eval(128);
        CHECK(v.sgn() > 0);
        CHECK(v < BigReal(rat(1, 256), 64));
        // u^6 < 2^-48 since u < 2^-8
        BigReal v6 = u.pow(6).eval(128);
        CHECK(v6 < BigReal::pow2(-48, 64));
        CHECK(v6.sgn() > 0);
    }

    SUBCASE("constants evaluate exactly") {
        AlgebraicNumber five = AlgebraicNumber::from_rat(F, Rat(5));
        CHECK(five.eval(96).to_double() == 5.0);
    }

    SUBCASE("cross-field operations are rejected") {
        auto G = NumberField::create_unique_real_root(IntPoly{-1, 4, 4, 2});
        AlgebraicNumber w = AlgebraicNumber::generator(G);
        CHECK_THROWS_AS(u * w, std::domain_error);
    }

    SUBCASE("inverse of zero is rejected") {
        CHECK_THROWS_AS(AlgebraicNumber::from_rat(F, Rat(0)).inverse(), std::domain_error);
    }
}

TEST_CASE("integer_roots finds roots with multiplicity") {
    // -(x+70)(x+37)(x-74)(x-70)^3
    IntPoly p = IntPoly{70, 1} * IntPoly{37, 1} * IntPoly{-74, 1};
    IntPoly f{-70, 1};
    p = p * f * f * f;
    p = Int(-1) * p;
    auto roots = integer_roots(p);
    REQUIRE(roots.size() == 6);
    CHECK(roots[0] == -70);
    CHECK(roots[1] == -37);
    CHECK(roots[2] == 70);
    CHECK(roots[3] == 70);
    CHECK(roots[4] == 70);
    CHECK(roots[5] == 74);
}
