#pragma once

#include <cstdint>

namespace lotto {

// splitmix64 (Steele, Lea, Flood 2014). Counter-based: each next() adds the
// golden-gamma constant and mixes, so streams derived from distinct seeds are
// independent for our purposes and a (seed, partition) pair fully determines
// the sequence.
struct SplitMix64 {
    std::uint64_t state{0};

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

// Decorrelates partition streams from a user seed.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t partition) {
    SplitMix64 mixer(seed ^ (0xd1342543de82ef95ull * (partition + 1)));
    return mixer.next();
}

}  // namespace lotto
