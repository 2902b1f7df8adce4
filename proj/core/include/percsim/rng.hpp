#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace percsim {

/// SplitMix64 step. Advances `state` and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ generator, seeded from a 64-bit value through SplitMix64.
///
/// The algorithm is pinned so that seeded runs reproduce bit-identical
/// output streams across platforms; do not swap in std:: distributions,
/// whose outputs are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        for (auto& w : s_) w = splitmix64(seed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, n). Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_;
};

/// Independent sub-streams of one base seed. A replica draws its bond
/// permutation, site permutation and dilution mask from separate streams,
/// so e.g. skipping the dilution stage cannot shift the bond permutation.
enum class SeedStream : std::uint64_t {
    bond_order = 1,
    site_order = 2,
    dilution = 3,
};

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t replica, SeedStream stream) {
    std::uint64_t s = base;
    std::uint64_t h = splitmix64(s);
    s = h ^ replica;
    h = splitmix64(s);
    s = h ^ static_cast<std::uint64_t>(stream);
    return splitmix64(s);
}

/// Sub-base seed for an indexed block of work (a lattice size in a size
/// scan, a grid point in an epsilon scan). Replicas branch off the result
/// via derive_seed. The XOR constant keeps block chains disjoint from
/// replica chains.
inline std::uint64_t derive_block_seed(std::uint64_t base, std::uint64_t block) {
    std::uint64_t s = base ^ 0xa5a5a5a5a5a5a5a5ULL;
    std::uint64_t h = splitmix64(s);
    s = h ^ block;
    return splitmix64(s);
}

/// Fisher-Yates shuffle driven by Rng::below; deterministic given the seed.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace percsim
