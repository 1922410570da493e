#include "nilbohr/dynamics.hpp"

#include <charconv>

#include "nilbohr/errors.hpp"

namespace nilbohr {

Rational torus_dist(const Rational& a, const Rational& b) {
    Rational f = mod1(a - b);
    Rational g = Rational(1) - f;
    return f < g ? f : g;
}

Rational torus_distance(const TorusAngle& a, const TorusAngle& b) {
    return torus_dist(a.value(), b.value());
}

TorusAngle angle_multiple(const TorusAngle& a, const BigInt& n) {
    return TorusAngle(a.value() * Rational(n));
}

TorusAngle angle_sum(const TorusAngle& a, const TorusAngle& b) {
    return TorusAngle(a.value() + b.value());
}

Arc::Arc(TorusAngle c, Rational r) : center(std::move(c)), radius(std::move(r)) {
    if (radius <= 0 || radius > Rational(1, 2))
        throw PreconditionViolated("arc radius must lie in (0, 1/2]");
}

BohrTarget::BohrTarget(std::vector<TorusAngle> angles_, std::vector<Arc> arcs_)
    : angles(std::move(angles_)), arcs(std::move(arcs_)) {
    if (angles.empty()) throw PreconditionViolated("Bohr target needs at least one angle");
    if (angles.size() != arcs.size())
        throw PreconditionViolated("Bohr target needs one arc per angle");
}

bool BohrTarget::zero_centered() const {
    for (const Arc& a : arcs)
        if (!a.center.is_zero()) return false;
    return true;
}

WindowedSet bohr_set(const BohrTarget& t, Interval window) {
    WindowedSet out(window.lo, window.hi);
    const std::size_t m = t.dimension();
    // walk n*alpha_i incrementally: cur_i := cur_i + alpha_i (mod 1)
    std::vector<Rational> cur(m);
    for (std::size_t i = 0; i < m; ++i)
        cur[i] = mod1(t.angles[i].value() * Rational(BigInt(window.lo)));
    for (std::int64_t n = window.lo; n < window.hi; ++n) {
        bool inside = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (!t.arcs[i].contains(cur[i])) {
                inside = false;
                break;
            }
        }
        if (inside) out.insert(n);
        for (std::size_t i = 0; i < m; ++i) {
            cur[i] += t.angles[i].value();
            if (cur[i] >= 1) cur[i] -= 1;
        }
    }
    return out;
}

TorusPoint skew_orbit(const SkewSystem& sys, std::int64_t n) {
    BigInt N(n);
    BigInt choose2 = N * (N - 1) / 2;
    Rational x = sys.x0.value() + Rational(N) * sys.alpha.value();
    Rational y = sys.y0.value() + Rational(N) * sys.x0.value() + Rational(choose2) * sys.alpha.value();
    return {TorusAngle(x), TorusAngle(y)};
}

TorusPoint skew_step(const SkewSystem& sys, const TorusPoint& p) {
    return {angle_sum(p.x, sys.alpha), angle_sum(p.y, p.x)};
}

PolyTarget::PolyTarget(TorusAngle alpha_, std::int64_t c2_, std::int64_t c1_, std::int64_t c0_,
                       Rational radius_)
    : alpha(std::move(alpha_)), c2(c2_), c1(c1_), c0(c0_), radius(std::move(radius_)) {
    if (radius <= 0 || radius > Rational(1, 2))
        throw PreconditionViolated("poly target radius must lie in (0, 1/2]");
}

namespace {

Rational poly_angle(const PolyTarget& t, std::int64_t n) {
    BigInt N(n);
    BigInt q = BigInt(t.c2) * N * N + BigInt(t.c1) * N + BigInt(t.c0);
    return mod1(Rational(q) * t.alpha.value());
}

}  // namespace

bool poly_target_hits(const PolyTarget& t, std::int64_t n) {
    return torus_dist(poly_angle(t, n), Rational(0)) < t.radius;
}

WindowedSet poly_return_set(const PolyTarget& t, Interval window) {
    WindowedSet out(window.lo, window.hi);
    for (std::int64_t n = window.lo; n < window.hi; ++n)
        if (poly_target_hits(t, n)) out.insert(n);
    return out;
}

Rational cf_convergent(std::string_view name, int k) {
    if (k < 0) throw PreconditionViolated("convergent index must be >= 0");
    auto coeff = [&](int i) -> BigInt {
        if (name == "sqrt2") return i == 0 ? 1 : 2;
        if (name == "golden") return 1;
        if (name == "e") {
            if (i == 0) return 2;
            if (i % 3 == 2) return 2 * ((i + 1) / 3);
            return 1;
        }
        throw PreconditionViolated("unknown constant '" + std::string(name) +
                                   "' (supported: sqrt2, golden, e)");
    };
    BigInt h_prev = 1, h_prev2 = 0;  // h_{-1}, h_{-2}
    BigInt k_prev = 0, k_prev2 = 1;  // k_{-1}, k_{-2}
    BigInt h, kk;
    for (int i = 0; i <= k; ++i) {
        BigInt a = coeff(i);
        h = a * h_prev + h_prev2;
        kk = a * k_prev + k_prev2;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = kk;
    }
    return make_rational(h, kk);
}

TorusAngle parse_angle(std::string_view text) {
    if (text.starts_with("cf:")) {
        std::string_view rest = text.substr(3);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw PreconditionViolated("angle literal 'cf:<name>:<k>' expected, got '" +
                                       std::string(text) + "'");
        std::string_view name = rest.substr(0, colon);
        std::string_view idx = rest.substr(colon + 1);
        int k = 0;
        auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), k);
        if (ec != std::errc() || ptr != idx.data() + idx.size())
            throw PreconditionViolated("bad convergent index in '" + std::string(text) + "'");
        return TorusAngle(cf_convergent(name, k));
    }
    return TorusAngle(parse_rational(text));
}

}  // namespace nilbohr
