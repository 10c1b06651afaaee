#ifndef CCHP_MOEA_RANDOM_HPP
#define CCHP_MOEA_RANDOM_HPP

#include <cstdint>
#include <random>

namespace cchp::moea {

// Deterministic pseudo-random stream. The mapping from engine output to
// doubles/ints is pinned here so a seed reproduces the same draw sequence
// regardless of standard-library distribution internals.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

    // Uniform integer in [lo, hi], bounds inclusive.
    std::size_t uniform_index(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace cchp::moea

#endif
