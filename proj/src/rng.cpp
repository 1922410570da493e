#include "nilbohr/rng.hpp"

#include <algorithm>

#include "nilbohr/errors.hpp"

namespace nilbohr {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw PreconditionViolated("Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) throw PreconditionViolated("Rng::range with empty interval");
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo)));
}

std::vector<std::int64_t> Rng::distinct(std::int64_t lo, std::int64_t hi, std::size_t k) {
    if (hi <= lo || static_cast<std::uint64_t>(hi - lo) < k)
        throw PreconditionViolated("Rng::distinct: interval too small");
    std::vector<std::int64_t> out;
    out.reserve(k);
    while (out.size() < k) {
        std::int64_t v = range(lo, hi);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace nilbohr
