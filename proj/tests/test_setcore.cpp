#include <doctest.h>

#include <algorithm>

#include "nilbohr/errors.hpp"
#include "nilbohr/rng.hpp"
#include "nilbohr/setcore.hpp"
#include "testutil.hpp"

using namespace nilbohr;
using testutil::make_set;
using testutil::multiples;

TEST_SUITE_BEGIN("setcore");

TEST_CASE("windowed set basics") {
    WindowedSet s(3, 200);
    CHECK(s.span() == 197);
    CHECK(s.empty());
    s.insert(3);
    s.insert(100);
    s.insert(199);
    CHECK(s.count() == 3);
    CHECK(s.contains(100));
    CHECK_FALSE(s.contains(4));
    CHECK_FALSE(s.contains(-5));
    CHECK_FALSE(s.contains(500));
    CHECK(s.values() == std::vector<std::int64_t>{3, 100, 199});
    CHECK(*s.next_member(4) == 100);
    CHECK(*s.kth(2) == 199);
    CHECK_FALSE(s.kth(3).has_value());
    s.erase(100);
    CHECK(s.count() == 2);
    CHECK_THROWS_AS(s.insert(200), PreconditionViolated);
    CHECK_THROWS_AS(WindowedSet(5, 4), PreconditionViolated);
}

TEST_CASE("full window and count_in") {
    WindowedSet s = WindowedSet::full(10, 150);
    CHECK(s.count() == 140);
    CHECK(s.count_in({10, 20}) == 10);
    CHECK(s.count_in({149, 150}) == 1);
    CHECK_THROWS_AS(s.count_in({0, 5}), PreconditionViolated);
}

TEST_CASE("shifted_down") {
    WindowedSet s = make_set(0, 20, {3, 7, 12, 19});
    WindowedSet t = s.shifted_down(3);  // n such that n+3 is a member
    CHECK(t.values() == std::vector<std::int64_t>{0, 4, 9, 16});
    CHECK(s.shifted_down(25).empty());
    CHECK_THROWS_AS(s.shifted_down(-1), PreconditionViolated);
}

TEST_CASE("subset and equality") {
    WindowedSet a = make_set(0, 50, {2, 4, 8});
    WindowedSet b = make_set(-10, 60, {2, 4, 8, 16});
    CHECK(a.subset_of(b));
    CHECK_FALSE(b.subset_of(a));
    CHECK_FALSE(a.same_members(b));
    b.erase(16);
    CHECK(a.same_members(b));
}

TEST_CASE("delta_set frozen examples") {
    CHECK(delta_set(make_set(0, 1, {0})).empty());
    CHECK(delta_set(make_set(0, 6, {0, 5})).values() == std::vector<std::int64_t>{5});
    CHECK(delta_set(make_set(0, 10, {1, 4, 9})).values() == std::vector<std::int64_t>{3, 5, 8});
}

TEST_CASE("delta_set matches pair enumeration") {
    Rng rng(20240401);
    for (int trial = 0; trial < 40; ++trial) {
        std::int64_t lo = rng.range(-50, 50);
        std::int64_t span = rng.range(2, 300);
        std::size_t k = static_cast<std::size_t>(rng.range(0, std::min<std::int64_t>(span, 40)));
        auto vals = k ? Rng(rng.next()).distinct(lo, lo + span, k) : std::vector<std::int64_t>{};
        WindowedSet s = make_set(lo, lo + span, vals);
        CHECK(delta_set(s).values() == testutil::to_vec(testutil::delta_oracle(vals)));
    }
}

TEST_CASE("delta_set shift-intersection reformulation") {
    Rng rng(20240408);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t k = static_cast<std::size_t>(rng.range(0, 30));
        auto vals = k ? Rng(rng.next()).distinct(0, 120, k) : std::vector<std::int64_t>{};
        WindowedSet s = make_set(0, 120, vals);
        WindowedSet diffs = delta_set(s);
        for (std::int64_t n = 1; n < s.span(); ++n) {
            WindowedSet meet = s;
            meet.intersect_with(s.shifted_down(n));
            CHECK(diffs.contains(n) == !meet.empty());
        }
    }
}

TEST_CASE("sumset frozen examples") {
    CHECK(sumset({3}).values() == std::vector<std::int64_t>{3});
    CHECK(sumset({1, 2}).values() == std::vector<std::int64_t>{1, 2, 3});
    CHECK(sumset({1, 2, 4}).values() == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("sumset matches mask enumeration") {
    Rng rng(20240402);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t k = static_cast<std::size_t>(rng.range(1, 9));
        std::vector<std::int64_t> e;
        for (std::size_t i = 0; i < k; ++i) e.push_back(rng.range(1, 60));
        CHECK(sumset(e).values() == testutil::to_vec(testutil::sumset_oracle(e)));
    }
}

TEST_CASE("sumset cardinality bound, super-increasing equality") {
    Rng rng(20240403);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t k = static_cast<std::size_t>(rng.range(1, 12));
        std::vector<std::int64_t> e;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < k; ++i) {
            std::int64_t v = total + rng.range(1, 10);  // exceeds the sum of all smaller
            e.push_back(v);
            total += v;
        }
        CHECK(sumset(e).count() == (std::int64_t(1) << k) - 1);
    }
    CHECK(sumset({1, 1, 2}).count() == 3);  // duplicates collapse: {1,2,3}
}

TEST_CASE("sumset bounds and validation") {
    std::vector<std::int64_t> too_many;
    for (std::int64_t v = 1; v <= 25; ++v) too_many.push_back(v);
    CHECK_THROWS_AS(sumset(too_many), BoundExceeded);
    CHECK(sumset(too_many, 25).count() > 0);
    CHECK_THROWS_AS(sumset({0, 3}), PreconditionViolated);
    CHECK_THROWS_AS(sumset({-2}), PreconditionViolated);
}

TEST_CASE("sh_d frozen examples") {
    CHECK(sh_d(GapSumSpec({7}, 1), 100).values() == std::vector<std::int64_t>{7});
    CHECK(sh_d(GapSumSpec({7}, 3), 100).values() == std::vector<std::int64_t>{7});
    CHECK(sh_d(GapSumSpec({1, 2, 4}, 1), 100).values() ==
          std::vector<std::int64_t>{1, 2, 3, 4, 6, 7});
    CHECK(sh_d(GapSumSpec({1, 2, 4}, 2), 100).values() ==
          std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7});
    CHECK(sh_d(GapSumSpec({1, 2, 4}, 2), 100).same_members(sumset({1, 2, 4})));
}

TEST_CASE("sh_d_oracle frozen examples") {
    CHECK(sh_d_oracle(GapSumSpec({5, 5}, 1), 100).values() == std::vector<std::int64_t>{5, 10});
    CHECK(sh_d_oracle(GapSumSpec({1, 10}, 1), 100).values() ==
          std::vector<std::int64_t>{1, 10, 11});
    WindowedSet s = sh_d_oracle(GapSumSpec({1, 10, 100}, 1), 200);
    CHECK_FALSE(s.contains(101));  // indices {1,3} violate the gap bound
    CHECK(s.values() == std::vector<std::int64_t>{1, 10, 11, 100, 110, 111});
}

TEST_CASE("sh_d equals its oracle") {
    Rng rng(20240404);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 11));
        std::vector<std::int64_t> p;
        for (std::size_t i = 0; i < n; ++i) p.push_back(rng.range(1, 50));
        int d = static_cast<int>(rng.range(1, 5));
        GapSumSpec spec(p, d);
        CHECK(sh_d(spec, 400) == sh_d_oracle(spec, 400));
    }
}

TEST_CASE("sh_d monotone in d") {
    Rng rng(20240405);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 10));
        std::vector<std::int64_t> p;
        for (std::size_t i = 0; i < n; ++i) p.push_back(rng.range(1, 40));
        int d = static_cast<int>(rng.range(1, 4));
        CHECK(sh_d(GapSumSpec(p, d), 300).subset_of(sh_d(GapSumSpec(p, d + 1), 300)));
    }
}

TEST_CASE("sh_1 equals differences of partial sums") {
    Rng rng(20240406);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 12));
        std::vector<std::int64_t> p;
        for (std::size_t i = 0; i < n; ++i) p.push_back(rng.range(1, 30));
        std::int64_t start = rng.range(0, 20);
        std::vector<std::int64_t> partials{start};
        for (std::int64_t v : p) partials.push_back(partials.back() + v);
        std::int64_t cap = rng.range(1, 400);
        WindowedSet lhs = sh_d(GapSumSpec(p, 1), cap);
        WindowedSet partial_set = make_set(start, partials.back() + 1, partials);
        WindowedSet rhs = delta_set(partial_set);
        for (std::int64_t v = 1; v <= cap; ++v) CHECK(lhs.contains(v) == rhs.contains(v));
        for (std::int64_t v : rhs.values())
            if (v <= cap) CHECK(lhs.contains(v));
    }
}

TEST_CASE("sumset identity at |P| = d+1") {
    Rng rng(20240407);
    for (int trial = 0; trial < 30; ++trial) {
        int d = static_cast<int>(rng.range(1, 5));
        auto p = Rng(rng.next()).distinct(1, 40, static_cast<std::size_t>(d) + 1);
        WindowedSet lhs = sh_d(GapSumSpec(p, d), 400);
        CHECK(lhs.same_members(sumset(p)));
    }
}

TEST_CASE("sh_d cap discards large sums") {
    WindowedSet s = sh_d(GapSumSpec({3, 4}, 1), 5);
    CHECK(s.values() == std::vector<std::int64_t>{3, 4});
    CHECK(s.hi() == 6);
}

TEST_CASE("sh_d validation") {
    CHECK_THROWS_AS(GapSumSpec({1, 2}, 0), PreconditionViolated);
    CHECK_THROWS_AS(GapSumSpec({0}, 1), PreconditionViolated);
    CHECK_THROWS_AS(sh_d(GapSumSpec({1}, 1), 0), PreconditionViolated);
    std::vector<std::int64_t> long_p(21, 1);
    CHECK_THROWS_AS(sh_d_oracle(GapSumSpec(long_p, 1), 10), BoundExceeded);
}

TEST_CASE("upper_density") {
    WindowedSet full = WindowedSet::full(0, 100);
    CHECK(upper_density(full, IntervalFamily({{0, 10}, {5, 95}})) == Rational(1));
    WindowedSet none(0, 100);
    CHECK(upper_density(none, IntervalFamily({{0, 10}})) == Rational(0));
    WindowedSet evens = multiples(2, 0, 100);
    CHECK(upper_density(evens, IntervalFamily({{0, 10}})) == Rational(1, 2));
    CHECK_THROWS_AS(upper_density(full, IntervalFamily({})), EmptyFamily);
    CHECK_THROWS_AS(upper_density(full, IntervalFamily({{0, 200}})), PreconditionViolated);
    CHECK_THROWS_AS(IntervalFamily({{5, 5}}), PreconditionViolated);
}

TEST_CASE("max_gap") {
    WindowedSet sevens = multiples(7, 0, 700);
    CHECK(*max_gap(sevens, {0, 700}) == 7);
    WindowedSet none(0, 700);
    CHECK_FALSE(max_gap(none, {0, 700}).has_value());
    WindowedSet s = make_set(0, 60, {0, 3, 50});
    CHECK(*max_gap(s, {0, 60}) == 47);
    CHECK_THROWS_AS(max_gap(s, {0, 100}), PreconditionViolated);
}

TEST_SUITE_END();
