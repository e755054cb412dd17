#pragma once

#include <cmath>
#include <cstdint>

namespace udgmcp {

// splitmix64 (Steele, Lea, Flood). The generator is fixed by hand so that a
// seed reproduces the same stream on every platform; std::uniform_* adapters
// are avoided because their output is not pinned down by the standard.
class splitmix64 {
public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53-bit resolution
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, hi)
    double uniform(double hi) { return u01() * hi; }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // standard normal via Box-Muller; u1 is kept away from 0 so log stays finite
    double gaussian() {
        double u1 = (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
        double u2 = u01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    std::uint64_t state_;
};

// Stream derived from (seed, index). Parallel rounds each pull from their own
// stream, so the fan-out order cannot change the result.
inline splitmix64 derived_stream(std::uint64_t seed, std::uint64_t index) {
    splitmix64 mix(seed ^ (0xA0761D6478BD642Full * (index + 1)));
    return splitmix64(mix.next());
}

}  // namespace udgmcp
