#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace vcfes {

// Seeded generator with hand-rolled value mappings. std::mt19937_64 has a
// standard-fixed output sequence, but the std distributions do not, so every
// mapping from raw bits to values lives here to keep outputs identical
// across platforms and library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform integer in [0, n). Modulo bias is irrelevant at the sizes
    /// used here (n far below 2^32).
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

    /// Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    /// Fisher-Yates; std::shuffle is unspecified so it is spelled out.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace vcfes
