#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nilbohr/rational.hpp"

namespace nilbohr {

// Half-open integer interval [lo, hi).
struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::int64_t length() const { return hi - lo; }
    bool contains(std::int64_t n) const { return n >= lo && n < hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite truncation of a set of integers to a window [lo, hi),
// bitmap-backed: bit k holds membership of lo + k. Every operation on
// whole sets is a pure function; a constructed value never mutates
// behind the caller's back.
class WindowedSet {
public:
    WindowedSet() : lo_(0), hi_(0) {}
    WindowedSet(std::int64_t lo, std::int64_t hi);

    static WindowedSet full(std::int64_t lo, std::int64_t hi);
    static WindowedSet from_values(std::int64_t lo, std::int64_t hi,
                                   const std::vector<std::int64_t>& values);

    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }
    std::int64_t span() const { return hi_ - lo_; }
    Interval window() const { return {lo_, hi_}; }

    bool window_contains(std::int64_t n) const { return n >= lo_ && n < hi_; }

    // Membership; false for anything outside the window.
    bool contains(std::int64_t n) const {
        if (!window_contains(n)) return false;
        std::uint64_t k = static_cast<std::uint64_t>(n - lo_);
        return (words_[k >> 6] >> (k & 63)) & 1u;
    }

    void insert(std::int64_t n);
    void erase(std::int64_t n);

    std::int64_t count() const;
    bool empty() const { return count() == 0; }

    std::vector<std::int64_t> values() const;

    // Smallest member >= from, if any.
    std::optional<std::int64_t> next_member(std::int64_t from) const;
    std::optional<std::int64_t> first() const { return next_member(lo_); }
    // k-th smallest member, 0-based.
    std::optional<std::int64_t> kth(std::int64_t k) const;

    // Every member of *this is a member of other (windows may differ).
    bool subset_of(const WindowedSet& other) const;
    // Same members, windows ignored.
    bool same_members(const WindowedSet& other) const;

    // Members inside [range.lo, range.hi); requires the range within the window.
    std::int64_t count_in(Interval range) const;

    // In-place intersection / union; both require identical windows.
    void intersect_with(const WindowedSet& other);
    void union_with(const WindowedSet& other);

    // {n in window : n + q in *this}, on the same window. Requires q >= 0.
    WindowedSet shifted_down(std::int64_t q) const;

    // Window and members both equal.
    friend bool operator==(const WindowedSet& a, const WindowedSet& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.words_ == b.words_;
    }

private:
    std::int64_t lo_, hi_;
    std::vector<std::uint64_t> words_;

    void check_inside(std::int64_t n) const;
};

// A finite positive-integer sequence P together with the gap parameter d.
// P is a sequence, not a set: order matters and repeated entries occupy
// distinct positions.
struct GapSumSpec {
    std::vector<std::int64_t> p;
    int d = 1;

    GapSumSpec(std::vector<std::int64_t> entries, int gap);
};

// Finite family of half-open intervals, each nonempty.
class IntervalFamily {
public:
    explicit IntervalFamily(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    bool lengths_nondecreasing() const;

private:
    std::vector<Interval> intervals_;
};

// Positive differences {b - a : a, b in s, b > a}, on window [1, span).
WindowedSet delta_set(const WindowedSet& s);

// All nonempty-subset sums of distinct positive integers, on window
// [1, total + 1). Entries are deduplicated (set semantics). Throws
// BoundExceeded when more than max_elements distinct entries are given.
WindowedSet sumset(const std::vector<std::int64_t>& e, int max_elements = 24);

// Sums of entries at index sets i_1 < ... < i_k with i_{t+1} - i_t <= d
// (zero-blocks between chosen positions shorter than d; positions before
// the first choice are unconstrained). Result on window [1, cap + 1);
// sums beyond cap are discarded during the sweep. Frontier DP over
// (last chosen index, partial sum).
WindowedSet sh_d(const GapSumSpec& spec, std::int64_t cap);

// Independent brute force for sh_d: enumerates all index subsets and
// filters the gap constraint. Requires |p| <= 20.
WindowedSet sh_d_oracle(const GapSumSpec& spec, std::int64_t cap);

// max over the family of |s ∩ [a,b)| / (b - a), exact.
Rational upper_density(const WindowedSet& s, const IntervalFamily& fam);

// Largest distance between consecutive members of s within range, with
// boundary gaps measured from the range ends; nullopt when s misses the
// range entirely (an unbounded gap at window scale).
std::optional<std::int64_t> max_gap(const WindowedSet& s, Interval range);

}  // namespace nilbohr
