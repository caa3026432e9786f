#ifndef RECSIM_RNG_HPP
#define RECSIM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace recsim {

// Splittable counter-style generator built on the splitmix64 finalizer.
// A stream is identified by (seed, stream_id); identical identifiers give
// bit-identical sequences on every platform. All distribution transforms
// below are fixed algorithms (inverse CDF / Box-Muller), not delegated to
// the standard library, so sequences are stable across toolchains.
class RngStream {
public:
    explicit RngStream(uint64_t seed, uint64_t stream_id = 0)
        : seed_(seed), stream_id_(stream_id),
          state_(mix64(mix64(seed + 0x9E3779B97F4A7C15ULL) ^
                       mix64(stream_id + 0xBF58476D1CE4E5B9ULL))) {}

    uint64_t seed() const { return seed_; }
    uint64_t stream_id() const { return stream_id_; }

    // Derive an independent child stream; deterministic in (this stream, child_id).
    RngStream split(uint64_t child_id) const {
        return RngStream(mix64(state_ ^ mix64(child_id + 1)), child_id);
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Standard normal via Box-Muller; consumes two uniforms per call.
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        // guard against log(0)
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.283185307179586476925286766559 * u2);
    }

    // Uniform integer in [0, n); n >= 1.
    uint64_t next_below(uint64_t n) {
        uint64_t v = static_cast<uint64_t>(next_double() * static_cast<double>(n));
        return v >= n ? n - 1 : v;
    }

    static uint64_t mix64(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t seed_;
    uint64_t stream_id_;
    uint64_t state_;
};

} // namespace recsim

#endif
