#pragma once

#include <string_view>
#include <vector>

#include "nilbohr/rational.hpp"
#include "nilbohr/setcore.hpp"

namespace nilbohr {

// A point of the circle R/Z as an exact rational normalized into [0, 1).
// Irrational rotation numbers are represented by high-denominator
// continued-fraction convergents (see cf_convergent); all arithmetic
// stays exact, so orbits reproduce bit-for-bit at any window scale.
class TorusAngle {
public:
    TorusAngle() : value_(0) {}
    explicit TorusAngle(const Rational& value) : value_(mod1(value)) {}
    static TorusAngle from_fraction(BigInt num, BigInt den) {
        return TorusAngle(make_rational(std::move(num), std::move(den)));
    }

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    friend bool operator==(const TorusAngle& a, const TorusAngle& b) {
        return a.value_ == b.value_;
    }

private:
    Rational value_;
};

// min(|a-b| mod 1, 1 - |a-b| mod 1), exact, in [0, 1/2].
Rational torus_dist(const Rational& a, const Rational& b);
Rational torus_distance(const TorusAngle& a, const TorusAngle& b);

TorusAngle angle_multiple(const TorusAngle& a, const BigInt& n);
TorusAngle angle_sum(const TorusAngle& a, const TorusAngle& b);

// Open arc of the circle. Radius is capped at 1/2 (the torus diameter).
struct Arc {
    TorusAngle center;
    Rational radius;

    Arc(TorusAngle c, Rational r);
    bool contains(const Rational& x) const { return torus_dist(x, center.value()) < radius; }
};

// Return-time target on T^m: n qualifies when n*angle_i lands inside
// arc_i for every i. A Bohr_0 target has every arc centered at 0.
struct BohrTarget {
    std::vector<TorusAngle> angles;
    std::vector<Arc> arcs;

    BohrTarget(std::vector<TorusAngle> angles_, std::vector<Arc> arcs_);
    std::size_t dimension() const { return angles.size(); }
    bool zero_centered() const;
};

// {n in window : n*angle_i in arc_i for all i}, exact.
WindowedSet bohr_set(const BohrTarget& t, Interval window);

// The 2-step skew product on T^2: (x, y) -> (x + alpha, y + x).
struct SkewSystem {
    TorusAngle alpha;
    TorusAngle x0, y0;
};

struct TorusPoint {
    TorusAngle x, y;
    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

// n-th image of the base point in closed form:
//   x_n = x0 + n*alpha,  y_n = y0 + n*x0 + C(n,2)*alpha   (mod 1).
TorusPoint skew_orbit(const SkewSystem& sys, std::int64_t n);

// One application of the defining map; n-fold iteration must agree with
// skew_orbit exactly.
TorusPoint skew_step(const SkewSystem& sys, const TorusPoint& p);

// Quadratic return-time target: n qualifies when q(n)*alpha is within
// radius of 0, where q(n) = c2*n^2 + c1*n + c0.
struct PolyTarget {
    TorusAngle alpha;
    std::int64_t c2 = 1, c1 = 0, c0 = 0;
    Rational radius;

    PolyTarget(TorusAngle alpha_, std::int64_t c2_, std::int64_t c1_, std::int64_t c0_,
               Rational radius_);
};

WindowedSet poly_return_set(const PolyTarget& t, Interval window);
bool poly_target_hits(const PolyTarget& t, std::int64_t n);

// Angle literal syntax used by the CLI and config files:
//   "p/q"          exact rational
//   "cf:<name>:<k>" k-th continued-fraction convergent (0-based) of a
//                   named constant; names: sqrt2, golden, e.
TorusAngle parse_angle(std::string_view text);
Rational cf_convergent(std::string_view name, int k);

}  // namespace nilbohr
