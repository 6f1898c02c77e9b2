#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hsi {

// Seeded random stream with fixed draw mappings. std::mt19937_64 output is
// pinned by the standard and the conversions below are plain arithmetic, so
// a given seed yields the same draw sequence on every platform. Distribution
// adapters from <random> are avoided on purpose: their outputs differ across
// standard libraries.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return double(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound). Modulo draw; bias is < bound / 2^64 and exactly
    // zero when bound is a power of two.
    std::uint64_t next_below(std::uint64_t bound) { return engine_() % bound; }

    // Standard normal via Box-Muller, two uniforms per pair.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = next_unit();
        } while (u1 <= 0.0);
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace hsi
