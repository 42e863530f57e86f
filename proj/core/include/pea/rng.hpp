#pragma once

#include <cstdint>
#include <random>

namespace pea {

// splitmix64 (Steele, Lea, Flood 2014); used to derive independent sub-seeds.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Sub-seed for logical stream `stream` of a user seed. Distinct streams give
// decorrelated generators; the mapping is fixed so outputs are portable.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g{seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))};
    return g.next();
}

// Portable random source: mt19937_64 (bit-exact per the standard) with
// hand-rolled distributions, because std::uniform_real_distribution and
// std::normal_distribution are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi); returns lo when lo == hi.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller; draws come in cached pairs.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Uniform integer on {0, ..., n-1}, rejection-sampled to avoid modulo bias.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            std::uint64_t x = eng_();
            if (x >= threshold) return x % n;
        }
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace pea
