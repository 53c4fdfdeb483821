#pragma once

#include <cstdint>
#include <initializer_list>

namespace bperc {

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based random stream: the i-th stream for a given seed is a pure
/// function of (seed, i), so trial-level work can be sharded across any
/// number of workers with identical results.
class RngStream {
  public:
    explicit RngStream(std::uint64_t key) : state_(key) {}

    /// Substream for work unit `index` under `seed`. Distinct indices map to
    /// distinct keys (the finalizer is bijective).
    static RngStream derive(std::uint64_t seed, std::uint64_t index) {
        return RngStream(mix64(mix64(seed) + index));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform double in [0,1).
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform in {0,...,n-1} (n >= 1); unbiased via rejection.
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

  private:
    std::uint64_t state_;
};

/// Fold a list of values into a derived seed (order-sensitive). Used to key
/// per-point substreams in sweeps so identical points get identical streams.
inline std::uint64_t seed_mix(std::uint64_t seed, std::initializer_list<std::uint64_t> vals) {
    std::uint64_t h = mix64(seed);
    for (std::uint64_t v : vals) h = mix64(h + v);
    return h;
}

}  // namespace bperc
