#include <doctest.h>

#include "nilbohr/dynamics.hpp"
#include "nilbohr/errors.hpp"
#include "nilbohr/rng.hpp"
#include "testutil.hpp"

using namespace nilbohr;
using testutil::multiples;

namespace {

Rational rat(std::int64_t n, std::int64_t d) { return make_rational(BigInt(n), BigInt(d)); }

TorusAngle random_angle(Rng& rng) {
    std::int64_t den = rng.range(2, 1000);
    return TorusAngle(rat(rng.range(0, den), den));
}

}  // namespace

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("torus distance frozen examples") {
    CHECK(torus_dist(Rational(0), Rational(0)) == 0);
    CHECK(torus_dist(rat(1, 4), rat(3, 4)) == rat(1, 2));
    CHECK(torus_dist(rat(1, 10), rat(9, 10)) == rat(1, 5));
}

TEST_CASE("torus distance is a metric on sampled points") {
    Rng rng(20240410);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = rat(rng.range(0, 97), 97);
        Rational b = rat(rng.range(0, 89), 89);
        Rational c = rat(rng.range(0, 83), 83);
        CHECK(torus_dist(a, b) == torus_dist(b, a));
        CHECK(torus_dist(a, b) <= rat(1, 2));
        CHECK(torus_dist(a, c) <= torus_dist(a, b) + torus_dist(b, c));
        CHECK((torus_dist(a, b) == 0) == (a == b));
    }
}

TEST_CASE("angle normalization") {
    CHECK(TorusAngle(rat(7, 2)).value() == rat(1, 2));
    CHECK(TorusAngle(rat(-1, 4)).value() == rat(3, 4));
    CHECK(TorusAngle(Rational(5)).value() == 0);
    CHECK(angle_multiple(TorusAngle(rat(1, 3)), BigInt(5)).value() == rat(2, 3));
}

TEST_CASE("bohr_set frozen examples") {
    Interval window{0, 100};
    BohrTarget fixed({TorusAngle()}, {Arc(TorusAngle(), rat(1, 10))});
    CHECK(bohr_set(fixed, window).count() == 100);

    BohrTarget half({TorusAngle(rat(1, 2))}, {Arc(TorusAngle(), rat(1, 4))});
    CHECK(bohr_set(half, window).same_members(multiples(2, 0, 100)));

    BohrTarget quarter({TorusAngle(rat(1, 4))}, {Arc(TorusAngle(), rat(1, 8))});
    CHECK(bohr_set(quarter, window).same_members(multiples(4, 0, 100)));
}

TEST_CASE("bohr_set with several coordinates") {
    BohrTarget t({TorusAngle(rat(1, 2)), TorusAngle(rat(1, 3))},
                 {Arc(TorusAngle(), rat(1, 4)), Arc(TorusAngle(), rat(1, 6))});
    CHECK(bohr_set(t, {0, 120}).same_members(multiples(6, 0, 120)));
}

TEST_CASE("bohr_set off-center arc") {
    // n/4 within 1/8 of 1/4: exactly n ≡ 1 (mod 4)
    BohrTarget t({TorusAngle(rat(1, 4))}, {Arc(TorusAngle(rat(1, 4)), rat(1, 8))});
    WindowedSet s = bohr_set(t, {0, 40});
    for (std::int64_t n = 0; n < 40; ++n) CHECK(s.contains(n) == (n % 4 == 1));
}

TEST_CASE("bohr_set windows with negative lo") {
    BohrTarget half({TorusAngle(rat(1, 2))}, {Arc(TorusAngle(), rat(1, 4))});
    WindowedSet s = bohr_set(half, {-10, 10});
    for (std::int64_t n = -10; n < 10; ++n) CHECK(s.contains(n) == (n % 2 == 0));
}

TEST_CASE("arc validation") {
    CHECK_THROWS_AS(Arc(TorusAngle(), Rational(0)), PreconditionViolated);
    CHECK_THROWS_AS(Arc(TorusAngle(), rat(2, 3)), PreconditionViolated);
    CHECK_THROWS_AS(BohrTarget({}, {}), PreconditionViolated);
    CHECK_THROWS_AS(BohrTarget({TorusAngle()}, {}), PreconditionViolated);
}

TEST_CASE("skew orbit frozen examples") {
    Rng rng(20240411);
    SkewSystem sys{random_angle(rng), random_angle(rng), random_angle(rng)};
    TorusPoint p0 = skew_orbit(sys, 0);
    CHECK(p0.x == sys.x0);
    CHECK(p0.y == sys.y0);
    TorusPoint p1 = skew_orbit(sys, 1);
    CHECK(p1.x == angle_sum(sys.x0, sys.alpha));
    CHECK(p1.y == angle_sum(sys.y0, sys.x0));

    SkewSystem zero{TorusAngle(rat(3, 7)), TorusAngle(), TorusAngle()};
    TorusPoint p5 = skew_orbit(zero, 5);
    CHECK(p5.x == angle_multiple(zero.alpha, BigInt(5)));
    CHECK(p5.y == angle_multiple(zero.alpha, BigInt(10)));  // C(5,2) = 10
}

TEST_CASE("skew closed form agrees with iteration") {
    Rng rng(20240412);
    for (int trial = 0; trial < 10; ++trial) {
        SkewSystem sys{random_angle(rng), random_angle(rng), random_angle(rng)};
        TorusPoint p{sys.x0, sys.y0};
        for (std::int64_t n = 0; n <= 300; ++n) {
            CHECK(skew_orbit(sys, n) == p);
            p = skew_step(sys, p);
        }
    }
}

TEST_CASE("skew closed form matches the inverse map for negative n") {
    SkewSystem sys{TorusAngle(rat(2, 9)), TorusAngle(rat(1, 5)), TorusAngle(rat(3, 4))};
    // one backwards step: (x,y) -> (x - alpha, y - x + alpha)
    TorusPoint back = skew_orbit(sys, -1);
    CHECK(skew_step(sys, back) == TorusPoint{sys.x0, sys.y0});
}

TEST_CASE("poly_return_set frozen examples") {
    Interval window{0, 100};
    PolyTarget zero(TorusAngle(), 1, 0, 0, rat(1, 4));
    CHECK(poly_return_set(zero, window).count() == 100);

    PolyTarget half(TorusAngle(rat(1, 2)), 1, 0, 0, rat(1, 4));
    CHECK(poly_return_set(half, window).same_members(multiples(2, 0, 100)));

    PolyTarget third(TorusAngle(rat(1, 3)), 1, 0, 0, rat(1, 6));
    CHECK(poly_return_set(third, window).same_members(multiples(3, 0, 100)));
}

TEST_CASE("poly with c2 = 0 reduces to a rotation set") {
    Rng rng(20240413);
    for (int trial = 0; trial < 10; ++trial) {
        TorusAngle alpha = random_angle(rng);
        std::int64_t c1 = rng.range(1, 20);
        Rational radius = rat(1, rng.range(3, 30));
        PolyTarget poly(alpha, 0, c1, 0, radius);
        BohrTarget rot({angle_multiple(alpha, BigInt(c1))}, {Arc(TorusAngle(), radius)});
        CHECK(poly_return_set(poly, {0, 200}) == bohr_set(rot, {0, 200}));
    }
}

TEST_CASE("bohr shift-coherence via the triangle inequality") {
    Rng rng(20240414);
    for (int trial = 0; trial < 6; ++trial) {
        TorusAngle alpha = random_angle(rng);
        Rational r1 = rat(1, rng.range(5, 20));
        Rational r2 = rat(1, rng.range(5, 20));
        BohrTarget t1({alpha}, {Arc(TorusAngle(), r1)});
        BohrTarget t2({alpha}, {Arc(TorusAngle(), r2)});
        BohrTarget t3({alpha}, {Arc(TorusAngle(), r1 + r2)});
        Interval w{0, 150};
        WindowedSet s1 = bohr_set(t1, w), s2 = bohr_set(t2, w), s3 = bohr_set(t3, w);
        for (std::int64_t n : s1.values())
            for (std::int64_t m : s2.values())
                if (n + m < w.hi) CHECK(s3.contains(n + m));
    }
}

TEST_CASE("window sweeps can be partitioned and unioned") {
    Rng rng(20240424);
    for (int trial = 0; trial < 5; ++trial) {
        TorusAngle alpha = random_angle(rng);
        BohrTarget t({alpha}, {Arc(TorusAngle(), rat(1, rng.range(3, 12)))});
        WindowedSet whole = bohr_set(t, {0, 200});
        std::int64_t cut = rng.range(1, 200);
        WindowedSet left = bohr_set(t, {0, cut});
        WindowedSet right = bohr_set(t, {cut, 200});
        for (std::int64_t n = 0; n < 200; ++n)
            CHECK(whole.contains(n) == (n < cut ? left.contains(n) : right.contains(n)));

        PolyTarget pt(alpha, 1, 0, 0, rat(1, 7));
        WindowedSet pwhole = poly_return_set(pt, {0, 150});
        WindowedSet pleft = poly_return_set(pt, {0, 70});
        WindowedSet pright = poly_return_set(pt, {70, 150});
        for (std::int64_t n = 0; n < 150; ++n)
            CHECK(pwhole.contains(n) == (n < 70 ? pleft.contains(n) : pright.contains(n)));
    }
}

TEST_CASE("continued fraction convergents") {
    CHECK(cf_convergent("sqrt2", 0) == Rational(1));
    CHECK(cf_convergent("sqrt2", 1) == rat(3, 2));
    CHECK(cf_convergent("sqrt2", 2) == rat(7, 5));
    CHECK(cf_convergent("sqrt2", 3) == rat(17, 12));
    CHECK(cf_convergent("golden", 4) == rat(8, 5));
    CHECK(cf_convergent("e", 0) == Rational(2));
    CHECK(cf_convergent("e", 2) == rat(8, 3));
    CHECK(cf_convergent("e", 5) == rat(87, 32));
    CHECK(denominator(cf_convergent("sqrt2", 40)) > BigInt("1000000000000"));
    CHECK_THROWS_AS(cf_convergent("pi", 3), PreconditionViolated);
    CHECK_THROWS_AS(cf_convergent("sqrt2", -1), PreconditionViolated);
}

TEST_CASE("angle literals") {
    CHECK(parse_angle("1/2").value() == rat(1, 2));
    CHECK(parse_angle("5/4").value() == rat(1, 4));
    CHECK(parse_angle("-1/4").value() == rat(3, 4));
    CHECK(parse_angle("cf:golden:10").value() == rat(55, 89));  // 144/89 mod 1
    CHECK(parse_angle("cf:e:5").value() == rat(23, 32));        // 87/32 mod 1
    CHECK_THROWS_AS(parse_angle("cf:sqrt2"), PreconditionViolated);
    CHECK_THROWS_AS(parse_angle("cf:sqrt2:x"), PreconditionViolated);
    CHECK_THROWS_AS(parse_angle("1/0"), PreconditionViolated);
    CHECK_THROWS_AS(parse_angle("zzz"), PreconditionViolated);
}

TEST_SUITE_END();
