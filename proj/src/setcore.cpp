#include "nilbohr/setcore.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "nilbohr/errors.hpp"

namespace nilbohr {

namespace {

// Bitmaps live in memory; anything wider than this is a usage error,
// not a legitimate window.
constexpr std::int64_t kMaxSpan = std::int64_t(1) << 31;

std::size_t word_count(std::int64_t span) {
    return static_cast<std::size_t>((span + 63) / 64);
}

}  // namespace

WindowedSet::WindowedSet(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    if (hi < lo) throw PreconditionViolated("window with hi < lo");
    if (hi - lo > kMaxSpan) throw PreconditionViolated("window span too large");
    words_.assign(word_count(hi - lo), 0);
}

WindowedSet WindowedSet::full(std::int64_t lo, std::int64_t hi) {
    WindowedSet s(lo, hi);
    std::int64_t span = hi - lo;
    if (span == 0) return s;
    for (auto& w : s.words_) w = ~std::uint64_t(0);
    // clear the tail beyond span
    int tail = static_cast<int>(span & 63);
    if (tail != 0) s.words_.back() &= (std::uint64_t(1) << tail) - 1;
    return s;
}

WindowedSet WindowedSet::from_values(std::int64_t lo, std::int64_t hi,
                                     const std::vector<std::int64_t>& values) {
    WindowedSet s(lo, hi);
    for (std::int64_t v : values) s.insert(v);
    return s;
}

void WindowedSet::check_inside(std::int64_t n) const {
    if (!window_contains(n))
        throw PreconditionViolated("value " + std::to_string(n) + " outside window [" +
                                   std::to_string(lo_) + "," + std::to_string(hi_) + ")");
}

void WindowedSet::insert(std::int64_t n) {
    check_inside(n);
    std::uint64_t k = static_cast<std::uint64_t>(n - lo_);
    words_[k >> 6] |= std::uint64_t(1) << (k & 63);
}

void WindowedSet::erase(std::int64_t n) {
    check_inside(n);
    std::uint64_t k = static_cast<std::uint64_t>(n - lo_);
    words_[k >> 6] &= ~(std::uint64_t(1) << (k & 63));
}

std::int64_t WindowedSet::count() const {
    std::int64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

std::vector<std::int64_t> WindowedSet::values() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            int b = std::countr_zero(w);
            out.push_back(lo_ + static_cast<std::int64_t>(i * 64 + b));
            w &= w - 1;
        }
    }
    return out;
}

std::optional<std::int64_t> WindowedSet::next_member(std::int64_t from) const {
    if (from < lo_) from = lo_;
    if (from >= hi_) return std::nullopt;
    std::uint64_t k = static_cast<std::uint64_t>(from - lo_);
    std::size_t i = k >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t(0) << (k & 63));
    while (true) {
        if (w != 0) {
            std::int64_t n = lo_ + static_cast<std::int64_t>(i * 64 + std::countr_zero(w));
            return n < hi_ ? std::optional<std::int64_t>(n) : std::nullopt;
        }
        if (++i >= words_.size()) return std::nullopt;
        w = words_[i];
    }
}

std::optional<std::int64_t> WindowedSet::kth(std::int64_t k) const {
    if (k < 0) return std::nullopt;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        int pc = std::popcount(w);
        if (k >= pc) {
            k -= pc;
            continue;
        }
        while (true) {
            int b = std::countr_zero(w);
            if (k == 0) return lo_ + static_cast<std::int64_t>(i * 64 + b);
            w &= w - 1;
            --k;
        }
    }
    return std::nullopt;
}

bool WindowedSet::subset_of(const WindowedSet& other) const {
    if (lo_ == other.lo_ && hi_ == other.hi_) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }
    for (std::int64_t v : values())
        if (!other.contains(v)) return false;
    return true;
}

bool WindowedSet::same_members(const WindowedSet& other) const {
    return subset_of(other) && other.subset_of(*this);
}

std::int64_t WindowedSet::count_in(Interval range) const {
    if (range.lo < lo_ || range.hi > hi_)
        throw PreconditionViolated("count_in range outside the window");
    std::int64_t c = 0;
    std::int64_t k = range.lo - lo_;
    const std::int64_t end = range.hi - lo_;
    while (k < end) {
        std::size_t i = static_cast<std::size_t>(k >> 6);
        std::uint64_t w = words_[i] & (~std::uint64_t(0) << (k & 63));
        std::int64_t word_end = static_cast<std::int64_t>((i + 1) * 64);
        if (end < word_end) {
            int tail = static_cast<int>(end & 63);
            if (tail != 0) w &= (std::uint64_t(1) << tail) - 1;
        }
        c += std::popcount(w);
        k = word_end;
    }
    return c;
}

void WindowedSet::intersect_with(const WindowedSet& other) {
    if (lo_ != other.lo_ || hi_ != other.hi_)
        throw PreconditionViolated("intersect_with requires identical windows");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

void WindowedSet::union_with(const WindowedSet& other) {
    if (lo_ != other.lo_ || hi_ != other.hi_)
        throw PreconditionViolated("union_with requires identical windows");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

WindowedSet WindowedSet::shifted_down(std::int64_t q) const {
    if (q < 0) throw PreconditionViolated("shifted_down requires q >= 0");
    WindowedSet out(lo_, hi_);
    if (q >= span()) return out;
    std::size_t whole = static_cast<std::size_t>(q >> 6);
    int rem = static_cast<int>(q & 63);
    std::size_t n = words_.size();
    for (std::size_t i = 0; i + whole < n; ++i) {
        std::uint64_t w = words_[i + whole] >> rem;
        if (rem != 0 && i + whole + 1 < n) w |= words_[i + whole + 1] << (64 - rem);
        out.words_[i] = w;
    }
    return out;
}

GapSumSpec::GapSumSpec(std::vector<std::int64_t> entries, int gap) : p(std::move(entries)), d(gap) {
    if (d < 1) throw PreconditionViolated("gap parameter d must be >= 1");
    for (std::int64_t v : p)
        if (v < 1) throw PreconditionViolated("sequence entries must be >= 1");
}

IntervalFamily::IntervalFamily(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (const Interval& iv : intervals_)
        if (iv.hi <= iv.lo) throw PreconditionViolated("interval family members must be nonempty");
}

bool IntervalFamily::lengths_nondecreasing() const {
    for (std::size_t i = 1; i < intervals_.size(); ++i)
        if (intervals_[i].length() < intervals_[i - 1].length()) return false;
    return true;
}

WindowedSet delta_set(const WindowedSet& s) {
    std::int64_t span = s.span();
    WindowedSet out(1, std::max<std::int64_t>(span, 1));
    if (span < 2) return out;
    // acc bit k (at window position lo + k) means some member pair differs by k
    WindowedSet acc(s.lo(), s.hi());
    for (std::int64_t a : s.values()) acc.union_with(s.shifted_down(a - s.lo()));
    for (std::int64_t v : acc.values()) {
        std::int64_t k = v - s.lo();
        if (k >= 1) out.insert(k);
    }
    return out;
}

WindowedSet sumset(const std::vector<std::int64_t>& e, int max_elements) {
    std::vector<std::int64_t> elems(e);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (std::int64_t v : elems)
        if (v < 1) throw PreconditionViolated("sumset elements must be >= 1");
    if (static_cast<int>(elems.size()) > max_elements)
        throw BoundExceeded("sumset over " + std::to_string(elems.size()) + " elements exceeds bound " +
                            std::to_string(max_elements));
    std::int64_t total = 0;
    for (std::int64_t v : elems) {
        if (total > kMaxSpan - v) throw BoundExceeded("sumset total too large for a bitmap");
        total += v;
    }
    if (elems.empty()) return WindowedSet(1, 1);
    // reach[s] = 1 iff some subset sums to s; bit 0 is the empty subset
    std::vector<std::uint64_t> reach(word_count(total + 1), 0);
    reach[0] = 1;
    for (std::int64_t x : elems) {
        std::size_t whole = static_cast<std::size_t>(x >> 6);
        int rem = static_cast<int>(x & 63);
        for (std::size_t i = reach.size(); i-- > 0;) {
            if (i < whole) break;
            std::uint64_t w = reach[i - whole] << rem;
            if (rem != 0 && i > whole) w |= reach[i - whole - 1] >> (64 - rem);
            reach[i] |= w;
        }
    }
    WindowedSet out(1, total + 1);
    for (std::size_t i = 0; i < reach.size(); ++i) {
        std::uint64_t w = reach[i];
        if (i == 0) w &= ~std::uint64_t(1);
        while (w != 0) {
            int b = std::countr_zero(w);
            std::int64_t v = static_cast<std::int64_t>(i * 64 + b);
            if (v <= total) out.insert(v);
            w &= w - 1;
        }
    }
    return out;
}

namespace {

// Bit s of a frontier row means: sum s is achievable with the last chosen
// index equal to the row's position.
struct SumRow {
    std::vector<std::uint64_t> bits;
};

void shift_up_into(const std::vector<std::uint64_t>& src, std::int64_t x, std::int64_t cap,
                   std::vector<std::uint64_t>& dst) {
    std::fill(dst.begin(), dst.end(), 0);
    if (x > cap) return;
    std::size_t whole = static_cast<std::size_t>(x >> 6);
    int rem = static_cast<int>(x & 63);
    std::size_t n = dst.size();
    for (std::size_t i = n; i-- > 0;) {
        if (i < whole) break;
        std::uint64_t w = src[i - whole] << rem;
        if (rem != 0 && i > whole) w |= src[i - whole - 1] >> (64 - rem);
        dst[i] = w;
    }
    // drop sums beyond cap
    int tail = static_cast<int>((cap + 1) & 63);
    if (tail != 0) dst.back() &= (std::uint64_t(1) << tail) - 1;
}

}  // namespace

WindowedSet sh_d(const GapSumSpec& spec, std::int64_t cap) {
    if (cap < 1) throw PreconditionViolated("sh_d requires cap >= 1");
    if (cap + 1 > kMaxSpan) throw PreconditionViolated("sh_d cap too large for a bitmap");
    const std::size_t nwords = word_count(cap + 1);
    std::vector<std::uint64_t> result(nwords, 0);
    std::deque<SumRow> frontier;  // rows for the last d indices, most recent first
    std::vector<std::uint64_t> acc(nwords), row(nwords);
    for (std::size_t i = 0; i < spec.p.size(); ++i) {
        // sums that may precede a choice at index i: empty (start here) or
        // any row within gap distance d
        std::fill(acc.begin(), acc.end(), 0);
        acc[0] = 1;
        for (const SumRow& r : frontier)
            for (std::size_t w = 0; w < nwords; ++w) acc[w] |= r.bits[w];
        shift_up_into(acc, spec.p[i], cap, row);
        for (std::size_t w = 0; w < nwords; ++w) result[w] |= row[w];
        frontier.push_front(SumRow{row});
        if (frontier.size() > static_cast<std::size_t>(spec.d)) frontier.pop_back();
    }
    WindowedSet out(1, cap + 1);
    result[0] &= ~std::uint64_t(1);
    for (std::size_t i = 0; i < nwords; ++i) {
        std::uint64_t w = result[i];
        while (w != 0) {
            int b = std::countr_zero(w);
            std::int64_t v = static_cast<std::int64_t>(i * 64 + b);
            if (v >= 1 && v <= cap) out.insert(v);
            w &= w - 1;
        }
    }
    return out;
}

WindowedSet sh_d_oracle(const GapSumSpec& spec, std::int64_t cap) {
    if (cap < 1) throw PreconditionViolated("sh_d_oracle requires cap >= 1");
    const std::size_t n = spec.p.size();
    if (n > 20) throw BoundExceeded("sh_d_oracle limited to 20 entries");
    std::set<std::int64_t> sums;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int last = -1;
        bool ok = true;
        __int128 sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            if (last >= 0 && static_cast<int>(i) - last > spec.d) {
                ok = false;
                break;
            }
            last = static_cast<int>(i);
            sum += spec.p[i];
        }
        if (ok && sum >= 1 && sum <= cap) sums.insert(static_cast<std::int64_t>(sum));
    }
    WindowedSet out(1, cap + 1);
    for (std::int64_t s : sums) out.insert(s);
    return out;
}

Rational upper_density(const WindowedSet& s, const IntervalFamily& fam) {
    if (fam.size() == 0) throw EmptyFamily("upper_density over an empty interval family");
    Rational best(0);
    for (const Interval& iv : fam.intervals()) {
        if (iv.lo < s.lo() || iv.hi > s.hi())
            throw PreconditionViolated("density interval outside the set window");
        Rational ratio(BigInt(s.count_in(iv)), BigInt(iv.length()));
        if (ratio > best) best = ratio;
    }
    return best;
}

std::optional<std::int64_t> max_gap(const WindowedSet& s, Interval range) {
    if (range.lo < s.lo() || range.hi > s.hi() || range.hi <= range.lo)
        throw PreconditionViolated("max_gap range outside the set window");
    auto m = s.next_member(range.lo);
    if (!m || *m >= range.hi) return std::nullopt;
    std::int64_t best = *m - range.lo;  // gap from the range start
    std::int64_t prev = *m;
    while (true) {
        auto nxt = s.next_member(prev + 1);
        if (!nxt || *nxt >= range.hi) break;
        best = std::max(best, *nxt - prev);
        prev = *nxt;
    }
    best = std::max(best, (range.hi - 1) - prev);  // gap to the range end
    return best;
}

}  // namespace nilbohr
