#pragma once

#include <cstdint>
#include <random>

namespace ergolab {

/// splitmix64 step; used to derive independent sub-seeds so that
/// randomized sweeps give identical results at any parallelism degree.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for subtask `index` of a run seeded by `seed`.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    splitmix64(s);
    return splitmix64(s);
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index = 0) {
    return std::mt19937_64(sub_seed(seed, index));
}

} // namespace ergolab
