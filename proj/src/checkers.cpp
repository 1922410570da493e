#include "nilbohr/checkers.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "nilbohr/csv.hpp"
#include "nilbohr/errors.hpp"
#include "nilbohr/rng.hpp"

namespace nilbohr {

std::string StarReport::verdict() const {
    if (refuted) return "refuted";
    return exhaustive ? "holds" : "not-refuted-at-budget";
}

std::string StarReport::csv_header() {
    return "check,universe,params,verdict,witness,enumerated,seed\n";
}

std::string StarReport::csv() const {
    return csv_row({check,
                    "[" + std::to_string(universe.lo) + "," + std::to_string(universe.hi) + ")",
                    params, verdict(), join_ints(witness), std::to_string(enumerated),
                    std::to_string(seed)});
}

namespace {

constexpr std::uint64_t kBudget = 100'000'000;

// C(n, k) saturating above the budget range.
std::uint64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        if (out > (UINT64_MAX / 4) / static_cast<std::uint64_t>(n)) return UINT64_MAX / 2;
        out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return out;
}

// 1-based position of the combination in lex order over [vmin, vmax].
std::uint64_t combo_rank(const std::vector<std::int64_t>& c, std::int64_t vmin,
                         std::int64_t vmax) {
    std::uint64_t rank = 0;
    std::int64_t prev = vmin - 1;
    const std::int64_t r = static_cast<std::int64_t>(c.size());
    for (std::int64_t i = 0; i < r; ++i) {
        for (std::int64_t v = prev + 1; v < c[i]; ++v) rank += binom(vmax - v, r - 1 - i);
        prev = c[i];
    }
    return rank + 1;
}

// Enumerates r-combinations of [vmin, vmax] in lex order, first element
// fixed per stratum; Test(combo) -> true means the combination is
// "hit" (not a witness). Returns the earliest witness of the stratum.
template <class Test>
std::optional<std::vector<std::int64_t>> scan_stratum(std::int64_t first, int r,
                                                      std::int64_t vmax, Test&& test) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(r));
    c[0] = first;
    if (r == 1) return test(c) ? std::nullopt : std::optional(c);
    for (int i = 1; i < r; ++i) c[i] = first + i;
    if (c[r - 1] > vmax) return std::nullopt;
    while (true) {
        if (!test(c)) return c;
        // advance the suffix (positions 1..r-1)
        int i = r - 1;
        while (i >= 1 && c[i] == vmax - (r - 1 - i)) --i;
        if (i < 1) return std::nullopt;
        ++c[i];
        for (int t = i + 1; t < r; ++t) c[t] = c[t - 1] + 1;
    }
}

template <class Test>
StarReport scan_star(std::string name, std::int64_t vmin, std::int64_t vmax, int r, int threads,
                     const std::string& params, Test test) {
    StarReport report;
    report.check = std::move(name);
    report.universe = {vmin, vmax + 1};
    report.r_or_d = r;
    report.params = params;
    report.exhaustive = true;
    if (r < 1) throw PreconditionViolated("star check requires r >= 1");
    const std::int64_t nvalues = vmax - vmin + 1;
    const std::uint64_t total = binom(nvalues, r);
    if (total > kBudget)
        throw BudgetExceeded("enumeration of " + std::to_string(total) +
                             " candidates exceeds the 1e8 budget");
    if (total == 0) {
        report.enumerated = 0;
        return report;
    }
    threads = std::max(1, threads);

    std::mutex best_mutex;
    std::optional<std::vector<std::int64_t>> best;
    std::atomic<std::int64_t> best_first{vmax + 1};

    auto worker = [&](int id) {
        for (std::int64_t f = vmin + id; f + r - 1 <= vmax; f += threads) {
            if (f > best_first.load(std::memory_order_relaxed)) break;
            auto found = scan_stratum(f, r, vmax, test);
            if (found) {
                std::lock_guard<std::mutex> lock(best_mutex);
                if (!best || *found < *best) {
                    best = found;
                    std::int64_t cur = best_first.load(std::memory_order_relaxed);
                    while (f < cur && !best_first.compare_exchange_weak(cur, f)) {
                    }
                }
                break;
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    if (best) {
        report.refuted = true;
        report.witness = *best;
        report.enumerated = combo_rank(*best, vmin, vmax);
    } else {
        report.enumerated = total;
    }
    return report;
}

// any nonempty subset of e sums into a?
bool some_subset_sum_hits(const WindowedSet& a, const std::vector<std::int64_t>& e) {
    // DFS with running sum; every nonempty subset is visited once
    std::vector<std::pair<std::size_t, std::int64_t>> stack;
    for (std::size_t i = 0; i < e.size(); ++i) stack.push_back({i, 0});
    while (!stack.empty()) {
        auto [i, base] = stack.back();
        stack.pop_back();
        std::int64_t sum = base + e[i];
        if (a.contains(sum)) return true;
        for (std::size_t nxt = i + 1; nxt < e.size(); ++nxt) stack.push_back({nxt, sum});
    }
    return false;
}

}  // namespace

StarReport check_sumset_star(const WindowedSet& a, int r, std::int64_t m, int threads) {
    if (m < 1) throw PreconditionViolated("sumset star universe needs m >= 1");
    auto test = [&a](const std::vector<std::int64_t>& e) { return some_subset_sum_hits(a, e); };
    return scan_star("sumset_star", 1, m, r, threads,
                     "r=" + std::to_string(r) + ";m=" + std::to_string(m), test);
}

StarReport check_delta_star(const WindowedSet& a, int r, std::int64_t m, int threads) {
    if (m < 0) throw PreconditionViolated("delta star universe needs m >= 0");
    auto test = [&a](const std::vector<std::int64_t>& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (a.contains(s[j] - s[i])) return true;
        return false;
    };
    return scan_star("delta_star", 0, m, r, threads,
                     "r=" + std::to_string(r) + ";m=" + std::to_string(m), test);
}

StarReport check_shd_star_sampled(const WindowedSet& a, int d, int len, int trials,
                                  std::uint64_t seed) {
    if (d < 1 || len < 1 || trials < 0)
        throw PreconditionViolated("shd star check needs d >= 1, len >= 1, trials >= 0");
    StarReport report;
    report.check = "shd_star_sampled";
    report.universe = {a.lo(), a.hi()};
    report.r_or_d = d;
    report.params = "d=" + std::to_string(d) + ";len=" + std::to_string(len) +
                    ";trials=" + std::to_string(trials);
    report.seed = seed;
    report.exhaustive = false;

    const std::int64_t top = a.hi() - 1;
    std::vector<std::vector<std::int64_t>> candidates;
    if (top >= 1) {
        for (std::int64_t c = 1; c <= std::min<std::int64_t>(top, 64); ++c)
            candidates.emplace_back(len, c);
        for (std::int64_t s : {1, 2, 3, 5, 7}) {
            if (s > top) break;
            std::vector<std::int64_t> ramp;
            std::int64_t v = s;
            for (int i = 0; i < len; ++i) {
                ramp.push_back(v);
                v = std::min(v * 2, top);
            }
            candidates.push_back(std::move(ramp));
        }
        Rng rng(seed);
        for (int t = 0; t < trials; ++t) {
            std::int64_t max_entry = (t % 2 == 0) ? top : std::max<std::int64_t>(1, top / len);
            std::vector<std::int64_t> p;
            p.reserve(len);
            for (int i = 0; i < len; ++i) p.push_back(rng.range(1, max_entry + 1));
            candidates.push_back(std::move(p));
        }
    } else {
        // window holds no positive integers: any sequence misses a
        report.refuted = true;
        report.witness.assign(len, 1);
        report.enumerated = 1;
        return report;
    }

    for (const auto& p : candidates) {
        ++report.enumerated;
        WindowedSet sums = sh_d(GapSumSpec(p, d), top);
        bool hit = false;
        for (auto v = sums.first(); v; v = sums.next_member(*v + 1)) {
            if (a.contains(*v)) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            report.refuted = true;
            report.witness = p;
            return report;
        }
    }
    return report;
}

ClassIdentityReport class_identity_delta3_fs2(std::int64_t m) {
    if (m < 2 || m > 200) throw PreconditionViolated("class identity check needs 2 <= m <= 200");
    ClassIdentityReport report;
    std::set<std::vector<std::int64_t>> delta_family, fs_family;

    for (std::int64_t a = 0; a <= m; ++a) {
        for (std::int64_t b = a + 1; b <= m; ++b) {
            for (std::int64_t c = b + 1; c <= m; ++c) {
                ++report.delta_instances;
                std::int64_t u = b - a, v = c - b;
                WindowedSet s = WindowedSet::from_values(a, c + 1, {a, b, c});
                std::vector<std::int64_t> diffs = delta_set(s).values();
                if (u == v) {
                    ++report.degenerate_excluded;
                    // the degenerate triple really does collapse to {u, 2u}
                    if (diffs != std::vector<std::int64_t>{u, 2 * u}) {
                        report.detail = "degenerate triple gave unexpected differences";
                        return report;
                    }
                    continue;
                }
                std::vector<std::int64_t> image = sumset({u, v}).values();
                if (diffs != image) {
                    report.detail = "bijection failed at {" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + "}";
                    return report;
                }
                delta_family.insert(diffs);
            }
        }
    }
    for (std::int64_t x = 1; x <= m; ++x) {
        for (std::int64_t y = x + 1; y <= m; ++y) {
            if (x + y > m) continue;
            ++report.fs_instances;
            std::vector<std::int64_t> sums = sumset({x, y}).values();
            WindowedSet s = WindowedSet::from_values(0, x + y + 1, {0, x, x + y});
            if (delta_set(s).values() != sums) {
                report.detail = "inverse map failed at {" + std::to_string(x) + "," +
                                std::to_string(y) + "}";
                return report;
            }
            fs_family.insert(sums);
        }
    }
    report.family_size = delta_family.size();
    report.pass = (delta_family == fs_family);
    if (!report.pass) report.detail = "families differ";
    return report;
}

PigeonholeReport bohr0_hits_differences(const BohrTarget& t, int count, int trials,
                                        std::uint64_t seed) {
    if (!t.zero_centered())
        throw PreconditionViolated("difference pigeonhole needs a zero-centered target");
    if (trials < 1) throw PreconditionViolated("trials must be >= 1");
    Rational rho_min = t.arcs[0].radius;
    for (const Arc& arc : t.arcs) rho_min = std::min(rho_min, arc.radius);
    // cells = ceil(1/rho_min)^m, the pigeonhole threshold
    BigInt cells_1d = (denominator(rho_min) + numerator(rho_min) - 1) / numerator(rho_min);
    BigInt cells = 1;
    for (std::size_t i = 0; i < t.dimension(); ++i) cells *= cells_1d;
    BigInt bound = cells + 1;
    if (BigInt(count) < bound)
        throw PreconditionViolated("count " + std::to_string(count) +
                                   " is below the pigeonhole bound " + bound.str());

    PigeonholeReport report;
    report.trials = trials;
    report.seed = seed;
    const std::int64_t value_range = std::int64_t(1) << 20;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        std::vector<std::int64_t> s = rng.distinct(0, value_range, static_cast<std::size_t>(count));
        WindowedSet sw = WindowedSet::from_values(s.front(), s.back() + 1, s);
        WindowedSet diffs = delta_set(sw);
        bool found = false;
        for (auto v = diffs.first(); v && !found; v = diffs.next_member(*v + 1)) {
            bool inside = true;
            for (std::size_t i = 0; i < t.dimension(); ++i) {
                if (!t.arcs[i].contains(mod1(Rational(BigInt(*v)) * t.angles[i].value()))) {
                    inside = false;
                    break;
                }
            }
            found = inside;
        }
        if (found) {
            ++report.held;
        } else if (!report.failing_s) {
            report.failing_s = s;
        }
    }
    report.all_held = (report.held == report.trials);
    return report;
}

}  // namespace nilbohr
