#include <doctest.h>

#include "nilbohr/errors.hpp"
#include "nilbohr/rng.hpp"
#include "nilbohr/setio.hpp"
#include "testutil.hpp"

using namespace nilbohr;
using testutil::make_set;

TEST_SUITE_BEGIN("setio");

TEST_CASE("parse basics") {
    WindowedSet s = set_from_text("#window 0 10\n2-4\n7\n");
    CHECK(s.lo() == 0);
    CHECK(s.hi() == 10);
    CHECK(s.values() == std::vector<std::int64_t>{2, 3, 4, 7});
}

TEST_CASE("empty body is the empty set") {
    WindowedSet s = set_from_text("#window 3 9\n");
    CHECK(s.empty());
    CHECK(s.lo() == 3);
    CHECK(s.hi() == 9);
}

TEST_CASE("overlapping ranges union") {
    WindowedSet s = set_from_text("#window 0 20\n1-5\n3-8\n");
    CHECK(s.values() == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("negative members and windows") {
    WindowedSet s = set_from_text("#window -10 5\n-5--2\n0\n");
    CHECK(s.values() == std::vector<std::int64_t>{-5, -4, -3, -2, 0});
    std::string text = set_to_text(s);
    CHECK(set_from_text(text) == s);
}

TEST_CASE("comments and blank lines are skipped") {
    WindowedSet s = set_from_text("\n#window 0 5\n# a note\n\n2\n");
    CHECK(s.values() == std::vector<std::int64_t>{2});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(set_from_text(""), ParseError);
    CHECK_THROWS_AS(set_from_text("1\n2\n"), ParseError);
    try {
        set_from_text("#window 0 10\n3\nbanana\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    try {
        set_from_text("#window 0 10\n5-2\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(set_from_text("#window 0 10\n12\n"), ParseError);
    CHECK_THROWS_AS(set_from_text("#window 10 0\n"), ParseError);
}

TEST_CASE("serialize canonical runs") {
    WindowedSet s = make_set(0, 12, {1, 2, 3, 7, 9, 10});
    CHECK(set_to_text(s) == "#window 0 12\n1-3\n7\n9-10\n");
}

TEST_CASE("round-trip is lossless") {
    Rng rng(20240409);
    for (int trial = 0; trial < 60; ++trial) {
        std::int64_t lo = rng.range(-100, 100);
        std::int64_t span = rng.range(0, 400);
        WindowedSet s(lo, lo + span);
        if (span > 0) {
            std::size_t k = static_cast<std::size_t>(rng.range(0, std::min<std::int64_t>(span, 64)));
            for (auto v : Rng(rng.next()).distinct(lo, lo + span, k)) s.insert(v);
        }
        CHECK(set_from_text(set_to_text(s)) == s);
    }
}

TEST_SUITE_END();
