#pragma once

#include <cmath>
#include <cstdint>

namespace sepwalk {

/// Small, fast, portable stream generator (splitmix64). State is a single
/// 64-bit word, so one generator per lattice edge stays cheap. Output is a
/// pure function of the seed: runs are bit-reproducible across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr SplitMix64() = default;
    constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/// Derives an independent child seed from (seed, tag). Used to split one
/// master seed into environment / clock / mark streams and one stream per
/// edge, so the components are independent by construction.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 g(seed ^ (tag * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
    std::uint64_t a = g.next();
    SplitMix64 h(a + 0x2545f4914f6cdd1dULL);
    return h.next();
}

/// Stream tags for the walker/environment decomposition.
namespace stream_tag {
inline constexpr std::uint64_t arrows = 0x41;
inline constexpr std::uint64_t config = 0x43;
inline constexpr std::uint64_t clock = 0x4b;
inline constexpr std::uint64_t marks = 0x4d;
inline constexpr std::uint64_t replica = 0x52;
}  // namespace stream_tag

/// Uniform double in [0, 1), 53 random bits.
inline double uniform01(SplitMix64& g) {
    return static_cast<double>(g.next() >> 11) * 0x1.0p-53;
}

/// Strictly positive Exp(rate) variate. The u == 0 branch has probability
/// 2^-53 but would produce a zero gap and break strict monotonicity of
/// per-edge event times, so it is skipped deterministically.
inline double exp_gap(SplitMix64& g, double rate = 1.0) {
    double u;
    do {
        u = uniform01(g);
    } while (u == 0.0);
    return -std::log1p(-u) / rate;
}

inline bool bernoulli(SplitMix64& g, double p) { return uniform01(g) < p; }

}  // namespace sepwalk
