#ifndef CRITCURV_RANDOM_HPP
#define CRITCURV_RANDOM_HPP

#include <cstdint>
#include <random>

namespace critcurv {

/// Seeded generator whose uniform draws are bit-identical across standard
/// libraries (std::uniform_real_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double canonical() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

    /// Seed for an independent stream, e.g. one per parameter point.
    std::uint64_t derive() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace critcurv

#endif  // CRITCURV_RANDOM_HPP
