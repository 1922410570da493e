#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilbohr/dynamics.hpp"
#include "nilbohr/setcore.hpp"

namespace nilbohr {

// Outcome of a dual-class (star) check over a finite universe. Exhaustive
// checks prove "holds" on their universe; the sampled gap-sum check can
// only refute, so its positive verdict reads "not-refuted-at-budget".
struct StarReport {
    std::string check;
    Interval universe;
    int r_or_d = 0;
    std::string params;
    bool refuted = false;
    bool exhaustive = false;
    std::vector<std::int64_t> witness;  // refuting E / S / P, empty otherwise
    std::uint64_t enumerated = 0;       // candidates up to the verdict, in canonical order
    std::uint64_t seed = 0;

    std::string verdict() const;
    // check,universe,params,verdict,witness,enumerated,seed
    std::string csv() const;
    static std::string csv_header();
};

// holds iff a ∩ Sumset(E) != ∅ for every r-element E ⊆ [1, m].
// Lexicographically earliest refuting E otherwise. C(m, r) <= 10^8.
// Workers partition by leading element; the verdict and the witness are
// independent of the thread count.
StarReport check_sumset_star(const WindowedSet& a, int r, std::int64_t m, int threads = 1);

// holds iff a ∩ Δ(S) != ∅ for every r-element S ⊆ [0, m].
StarReport check_delta_star(const WindowedSet& a, int r, std::int64_t m, int threads = 1);

// Sampled surrogate for the gap-sum star class: a deterministic
// adversarial family (constant sequences, doubling ramps) followed by
// seeded random length-`len` sequences with entries in [1, top]. Refuted
// when some sampled P has sh_d(P) ∩ a = ∅ within the window.
StarReport check_shd_star_sampled(const WindowedSet& a, int d, int len, int trials,
                                  std::uint64_t seed);

struct ClassIdentityReport {
    bool pass = false;
    std::uint64_t family_size = 0;     // |{Δ(S)}| = |{Sumset(E)}| on the universe
    std::uint64_t delta_instances = 0;
    std::uint64_t fs_instances = 0;
    std::uint64_t degenerate_excluded = 0;  // arithmetic-progression triples
    std::string detail;
};

// Exhaustive finite check that 3-point difference sets and 2-element
// sumsets generate the same family over [0, m], via the explicit map
// Δ({a,b,c}) = Sumset({b-a, c-b}). Triples with b-a = c-b map to a
// repeated-element pair, which the sumset side rules out by type; they
// are excluded and counted. Requires m <= 200.
ClassIdentityReport class_identity_delta3_fs2(std::int64_t m);

struct PigeonholeReport {
    int trials = 0;
    int held = 0;
    bool all_held = false;
    std::optional<std::vector<std::int64_t>> failing_s;
    std::uint64_t seed = 0;
};

// For seeded random sets S of `count` distinct integers, checks that
// Δ(S) meets the zero-centered Bohr target. With count at least the cell
// bound ceil(1/rho_min)^m + 1 this is a theorem; any failure is a bug in
// the arithmetic. Throws PreconditionViolated below the bound.
PigeonholeReport bohr0_hits_differences(const BohrTarget& t, int count, int trials,
                                        std::uint64_t seed);

}  // namespace nilbohr
