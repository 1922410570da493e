#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilbohr/dynamics.hpp"
#include "nilbohr/setcore.hpp"

namespace nilbohr {

// How the next p_j is selected from the positive part of B_{j-1}.
enum class PolicyKind { Smallest, SmallestAbove, RandomSeeded };

struct ChoicePolicy {
    PolicyKind kind = PolicyKind::Smallest;
    std::int64_t threshold = 0;  // SmallestAbove: smallest member > threshold
    std::uint64_t seed = 0;      // RandomSeeded: uniform draw, step j uses mix_seed(seed, j)

    static ChoicePolicy smallest() { return {}; }
    static ChoicePolicy smallest_above(std::int64_t t) {
        return {PolicyKind::SmallestAbove, t, 0};
    }
    static ChoicePolicy random_seeded(std::uint64_t s) {
        return {PolicyKind::RandomSeeded, 0, s};
    }
};

// State of the gap-sum avoider recursion after j completed steps:
//   E_0 = {0},  E_j = {0} ∪ (E_{j-1}+p_j) ∪ ... ∪ (E_{j-min(j,d)}+p_{j-min(j,d)+1})
//   B_j = ⋂_{q in E_j} (B - q), within the window
//   p_j chosen from the positive part of B_{j-1}
// Members of E_j are exactly the word sums e_1 p_1 + ... + e_j p_j whose
// 1-pattern has no block of d consecutive zeros after the first 1
// (trailing zeros included). Sums beyond the window top are dropped; the
// windowed guarantee is unaffected because every gap-sum of P that fits
// the window decomposes through surviving members.
struct AvoiderState {
    int d = 1;
    WindowedSet b;
    std::vector<std::int64_t> p;   // p_1..p_j
    std::vector<std::int64_t> e;   // E_j, sorted, 0 always present
    WindowedSet bj;                // B_j

    // E_{j-1}, E_{j-2}, ... (most recent first, at most d-1 kept): the
    // recursion window for the next step.
    std::vector<std::vector<std::int64_t>> history;
};

AvoiderState avoider_init(const WindowedSet& b, int d);

// The step that could not be taken (1-based). A first-class outcome:
// on structured complements the recursion is expected to die out.
// avoider_run fills partial_p with the choices made before dying.
struct Stuck {
    int at_step = 0;
    std::vector<std::int64_t> partial_p;
};

std::variant<AvoiderState, Stuck> avoider_step(const AvoiderState& s, const ChoicePolicy& pol);

struct AvoiderReport {
    std::vector<std::int64_t> p;
    int steps_completed = 0;
    bool verified = false;       // SH_d(P) ∩ [1, checked_cap] ⊆ B, exact
    std::int64_t checked_cap = 0;
    std::int64_t sums_checked = 0;
};

// Runs `steps` steps and verifies the gap-sum guarantee against the
// window. Verification failure throws VerificationFailed (a bug, never an
// expected outcome).
std::variant<AvoiderReport, Stuck> avoider_run(const WindowedSet& b, int d, int steps,
                                               const ChoicePolicy& pol);

// Greedy search for n_1 < n_2 < ... with every n_j^2 * alpha within
// epsilon of the target point (default 1/3) and every cross product
// n_i * n_j * alpha within epsilon of 0.
struct CounterexampleSpec {
    TorusAngle alpha;
    Rational epsilon;
    Rational target = Rational(1, 3);
    int target_count = 1;
    std::int64_t search_bound = 1;

    CounterexampleSpec(TorusAngle alpha_, Rational epsilon_, int target_count_,
                       std::int64_t search_bound_, Rational target_ = Rational(1, 3));
};

struct SearchNotFound {
    std::vector<std::int64_t> partial;  // what the greedy scan did collect
};

std::variant<WindowedSet, SearchNotFound> counterexample_search(const CounterexampleSpec& spec);

struct CounterexampleVerifyReport {
    bool empty = false;                    // Δ(S) ∩ Ω = ∅
    std::optional<std::int64_t> witness;   // offending difference when nonempty
    std::int64_t delta_count = 0;
    std::int64_t omega_count = 0;
    // When the search tolerance is supplied: whether 2*radius + 4*epsilon < 1/3,
    // the margin under which emptiness is forced by the triangle inequality.
    std::optional<bool> guarantee;
};

CounterexampleVerifyReport counterexample_verify(
    const WindowedSet& s, const PolyTarget& t,
    const std::optional<Rational>& search_epsilon = std::nullopt);

// One extracted subinterval per usable member of the input family,
// ordered so the lengths are nondecreasing.
struct PiecewiseWitness {
    struct Pick {
        Interval interval;
        std::size_t k;  // index of the containing family member
    };
    std::string lambda_id;
    std::vector<Pick> picked;
};

// For each family interval J_k, the longest subinterval I with
// lambda ∩ I ⊆ a and |I| >= min_len (leftmost on ties), discovered by a
// sweep over violation positions. nullopt when no interval qualifies.
std::optional<PiecewiseWitness> pw_witness(const WindowedSet& a, const WindowedSet& lambda,
                                           const IntervalFamily& jks, std::int64_t min_len,
                                           const std::string& lambda_id = "lambda");

}  // namespace nilbohr
