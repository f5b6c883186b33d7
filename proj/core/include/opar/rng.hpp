#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace opar {

namespace detail {

// splitmix64 finalizer, used to derive well-separated engine seeds from
// (seed, stream) pairs.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Deterministic random stream. The engine (std::mt19937_64) is fully
/// specified by the standard and all derived draws below avoid the
/// implementation-defined standard-library distributions, so a (seed, stream)
/// pair produces the same sequence on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(detail::splitmix64(detail::splitmix64(seed) ^ stream)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform01() * static_cast<double>(hi - lo + 1));
    }

    /// Standard normal via Box-Muller (cosine branch only).
    double gaussian() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));  // 1-u1 in (0,1]
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace opar
