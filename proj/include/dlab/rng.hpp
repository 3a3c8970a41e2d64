#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dlab {

// All randomness in the library flows through these helpers. std::mt19937_64
// produces a portable bit stream, but the standard <random> distributions do
// not, so uniform values are built from raw engine output directly. This
// keeps every seeded artifact byte-reproducible across standard libraries.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent random streams derived from one experiment seed. Student
// streams must not depend on teacher configuration: arms of one figure share
// the student initialization and sample order by construction.
enum class SeedStream : std::uint64_t {
    teacher_init = 1,
    ranker_init = 2,
    student_init = 3,
    student_order = 4,
};

inline std::uint64_t derive_seed(std::uint64_t base, SeedStream stream) {
    return splitmix64(base ^ (0x9E3779B97F4A7C15ull *
                              static_cast<std::uint64_t>(stream)));
}

// Uniform in [0,1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Unbiased integer in [0, n) by rejection sampling.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Fisher-Yates permutation of 0..n-1.
inline std::vector<std::uint32_t> random_permutation(std::uint32_t n,
                                                     std::uint64_t seed) {
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    for (std::uint32_t i = n; i > 1; --i) {
        const auto j = static_cast<std::uint32_t>(uniform_below(rng, i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

} // namespace dlab
