#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace nilbohr {

// All randomness in the project flows through this wrapper so that runs
// replicate bit-for-bit across platforms: std::mt19937_64 (fully specified
// by the standard) plus modulo rejection for bounded draws. Nothing here
// uses std::uniform_int_distribution, whose output is implementation
// defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n), n >= 1. Rejects draws from the biased tail.
    std::uint64_t below(std::uint64_t n);

    // Uniform in [lo, hi), hi > lo.
    std::int64_t range(std::int64_t lo, std::int64_t hi);

    // k distinct values from [lo, hi), sorted ascending.
    std::vector<std::int64_t> distinct(std::int64_t lo, std::int64_t hi, std::size_t k);

private:
    std::mt19937_64 gen_;
};

// Stateless per-index seed derivation (splitmix64 finalizer), used when a
// single run seed must drive independent sub-draws.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace nilbohr
