#ifndef MCF_RNG_HPP
#define MCF_RNG_HPP

#include <cstdint>

namespace mcf {

/// Deterministic 64-bit generator (SplitMix64), splittable by stream id.
///
/// The exact update rule is part of the tool's file-format contract: a given
/// (seed, stream) pair must produce the same outputs on every platform, so we
/// do not use std::mt19937 or any distribution from <random>.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {
        // burn one output so nearby (seed, stream) pairs decorrelate
        next_u64();
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Uses the multiply-shift range reduction,
    /// which is bias-negligible for the n used here and fully portable.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace mcf

#endif
