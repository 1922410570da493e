#include "nilbohr/constructions.hpp"

#include <algorithm>
#include <set>

#include "nilbohr/errors.hpp"
#include "nilbohr/rng.hpp"

namespace nilbohr {

AvoiderState avoider_init(const WindowedSet& b, int d) {
    if (d < 1) throw PreconditionViolated("avoider requires d >= 1");
    AvoiderState s;
    s.d = d;
    s.b = b;
    s.e = {0};
    s.bj = b;  // B_0 = B - 0
    return s;
}

namespace {

std::optional<std::int64_t> choose_next(const WindowedSet& bj, const ChoicePolicy& pol, int step) {
    switch (pol.kind) {
        case PolicyKind::Smallest:
            return bj.next_member(1);
        case PolicyKind::SmallestAbove:
            return bj.next_member(std::max<std::int64_t>(pol.threshold + 1, 1));
        case PolicyKind::RandomSeeded: {
            std::int64_t from = std::max<std::int64_t>(bj.lo(), 1);
            if (from >= bj.hi()) return std::nullopt;
            std::int64_t positives = bj.count_in({from, bj.hi()});
            if (positives == 0) return std::nullopt;
            Rng rng(mix_seed(pol.seed, static_cast<std::uint64_t>(step)));
            std::int64_t skip = bj.count() - positives;  // members below 1
            auto v = bj.kth(skip + static_cast<std::int64_t>(rng.below(positives)));
            return v;
        }
    }
    return std::nullopt;
}

}  // namespace

std::variant<AvoiderState, Stuck> avoider_step(const AvoiderState& s, const ChoicePolicy& pol) {
    const int j = static_cast<int>(s.p.size()) + 1;
    auto choice = choose_next(s.bj, pol, j);
    if (!choice) return Stuck{j, {}};
    const std::int64_t pj = *choice;
    const std::int64_t top = s.b.hi() - 1;

    // E_j = {0} ∪ (E_{j-1}+p_j) ∪ (E_{j-2}+p_{j-1}) ∪ ... (min(j,d) terms)
    std::set<std::int64_t> merged;
    merged.insert(0);
    const int terms = std::min(j, s.d);
    for (int i = 1; i <= terms; ++i) {
        const std::vector<std::int64_t>& source = (i == 1) ? s.e : s.history[i - 2];
        const std::int64_t shift = (i == 1) ? pj : s.p[j - i];  // p_{j-i+1}
        for (std::int64_t q : source) {
            std::int64_t v = q + shift;
            if (v <= top) merged.insert(v);
        }
    }

    AvoiderState next;
    next.d = s.d;
    next.b = s.b;
    next.p = s.p;
    next.p.push_back(pj);
    next.e.assign(merged.begin(), merged.end());
    for (std::int64_t q : next.e)
        if (q != 0 && !s.b.contains(q))
            throw VerificationFailed("avoider invariant broken: " + std::to_string(q) +
                                     " in E_j but not in B");
    next.bj = s.b;
    for (std::int64_t q : next.e)
        if (q != 0) next.bj.intersect_with(s.b.shifted_down(q));
    if (s.d > 1) {
        next.history.push_back(s.e);
        for (const auto& older : s.history) {
            if (next.history.size() >= static_cast<std::size_t>(s.d - 1)) break;
            next.history.push_back(older);
        }
    }
    return next;
}

std::variant<AvoiderReport, Stuck> avoider_run(const WindowedSet& b, int d, int steps,
                                               const ChoicePolicy& pol) {
    if (steps < 1) throw PreconditionViolated("avoider_run requires steps >= 1");
    AvoiderState state = avoider_init(b, d);
    for (int k = 0; k < steps; ++k) {
        auto out = avoider_step(state, pol);
        if (std::holds_alternative<Stuck>(out)) {
            Stuck stuck = std::get<Stuck>(out);
            stuck.partial_p = state.p;
            return stuck;
        }
        state = std::move(std::get<AvoiderState>(out));
    }

    AvoiderReport report;
    report.p = state.p;
    report.steps_completed = steps;
    report.checked_cap = b.hi() - 1;
    WindowedSet sums = sh_d(GapSumSpec(state.p, d), report.checked_cap);
    for (std::int64_t v : sums.values())
        if (!b.contains(v))
            throw VerificationFailed("gap-sum " + std::to_string(v) + " escaped B");
    if (state.p.size() <= 20) {
        WindowedSet oracle = sh_d_oracle(GapSumSpec(state.p, d), report.checked_cap);
        if (!(oracle == sums))
            throw VerificationFailed("sh_d and sh_d_oracle disagree on the avoider output");
    }
    report.sums_checked = sums.count();
    report.verified = true;
    return report;
}

CounterexampleSpec::CounterexampleSpec(TorusAngle alpha_, Rational epsilon_, int target_count_,
                                       std::int64_t search_bound_, Rational target_)
    : alpha(std::move(alpha_)),
      epsilon(std::move(epsilon_)),
      target(std::move(target_)),
      target_count(target_count_),
      search_bound(search_bound_) {
    if (epsilon <= 0 || epsilon > Rational(1, 2))
        throw PreconditionViolated("epsilon must lie in (0, 1/2]");
    if (target_count < 1) throw PreconditionViolated("target_count must be >= 1");
    if (search_bound < target_count)
        throw PreconditionViolated("search_bound must be >= target_count");
}

std::variant<WindowedSet, SearchNotFound> counterexample_search(const CounterexampleSpec& spec) {
    const Rational& alpha = spec.alpha.value();
    const Rational target = mod1(spec.target);
    std::vector<std::int64_t> chosen;
    for (std::int64_t n = 1; n <= spec.search_bound; ++n) {
        Rational sq = mod1(Rational(BigInt(n) * n) * alpha);
        if (!(torus_dist(sq, target) < spec.epsilon)) continue;
        bool ok = true;
        for (std::int64_t m : chosen) {
            Rational cross = mod1(Rational(BigInt(n) * m) * alpha);
            if (!(torus_dist(cross, Rational(0)) < spec.epsilon)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(n);
        if (static_cast<int>(chosen.size()) == spec.target_count)
            return WindowedSet::from_values(0, chosen.back() + 1, chosen);
    }
    return SearchNotFound{std::move(chosen)};
}

CounterexampleVerifyReport counterexample_verify(const WindowedSet& s, const PolyTarget& t,
                                                 const std::optional<Rational>& search_epsilon) {
    CounterexampleVerifyReport report;
    if (search_epsilon)
        report.guarantee = (2 * t.radius + 4 * (*search_epsilon)) < Rational(1, 3);
    WindowedSet diffs = delta_set(s);
    report.delta_count = diffs.count();
    if (diffs.span() < 1 || report.delta_count == 0) {
        report.empty = true;
        report.omega_count = 0;
        return report;
    }
    WindowedSet omega = poly_return_set(t, diffs.window());
    report.omega_count = omega.count();
    WindowedSet common = diffs;
    common.intersect_with(omega);
    report.empty = common.empty();
    if (!report.empty) report.witness = common.first();
    return report;
}

std::optional<PiecewiseWitness> pw_witness(const WindowedSet& a, const WindowedSet& lambda,
                                           const IntervalFamily& jks, std::int64_t min_len,
                                           const std::string& lambda_id) {
    if (min_len < 1) throw PreconditionViolated("pw_witness requires min_len >= 1");
    for (const Interval& j : jks.intervals())
        if (j.lo < lambda.lo() || j.hi > lambda.hi() || j.lo < a.lo() || j.hi > a.hi())
            throw PreconditionViolated("family interval outside a window");

    PiecewiseWitness witness;
    witness.lambda_id = lambda_id;
    for (std::size_t k = 0; k < jks.intervals().size(); ++k) {
        const Interval j = jks.intervals()[k];
        // violations are lambda members missing from a; the longest clean
        // stretch lies between consecutive violations or the range ends
        std::int64_t best_len = 0, best_start = j.lo;
        std::int64_t prev = j.lo - 1;
        for (auto v = lambda.next_member(j.lo); v && *v < j.hi; v = lambda.next_member(*v + 1)) {
            if (a.contains(*v)) continue;
            std::int64_t len = *v - prev - 1;
            if (len > best_len) {
                best_len = len;
                best_start = prev + 1;
            }
            prev = *v;
        }
        std::int64_t len = j.hi - prev - 1;
        if (len > best_len) {
            best_len = len;
            best_start = prev + 1;
        }
        if (best_len >= min_len)
            witness.picked.push_back({{best_start, best_start + best_len}, k});
    }
    if (witness.picked.empty()) return std::nullopt;
    std::stable_sort(witness.picked.begin(), witness.picked.end(),
                     [](const PiecewiseWitness::Pick& x, const PiecewiseWitness::Pick& y) {
                         return x.interval.length() < y.interval.length();
                     });
    return witness;
}

}  // namespace nilbohr
