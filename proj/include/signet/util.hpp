#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace signet {

/// Deterministic random source. All randomized code in the library draws
/// through this wrapper instead of the std distributions, whose output is
/// implementation-defined; the raw mt19937_64 stream is portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t uniform_int(std::uint64_t bound) { return eng_() % bound; }

    /// Standard normal via Box-Muller on explicit uniforms.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::mt19937_64 eng_;
};

/// FNV-1a 64-bit digest, used as the stable input fingerprint in reports
/// and cache keys.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(std::uint64_t v);

/// Round to `digits` significant decimal digits. Reports pass every double
/// through this so that serialized numbers are stable across runs.
double round_sig(double x, int digits = 12);

/// Lower median of an unsorted vector (element at 0-based rank (n-1)/2).
/// The input is consumed.
template <typename T>
T lower_median(std::vector<T> v) {
    const std::size_t rank = (v.size() - 1) / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(rank), v.end());
    return v[rank];
}

/// Run fn(begin, end, chunk_index) over [0, count) split into contiguous
/// chunks, one per worker. Deterministic partition: results must be combined
/// associatively by the caller (we only use integer accumulators).
void parallel_chunks(std::size_t count, int threads,
                     const std::function<void(std::size_t, std::size_t, int)>& fn);

/// Effective worker count: `requested` if > 0, otherwise hardware concurrency.
int resolve_threads(int requested);

}  // namespace signet
