#pragma once

#include <cstdint>
#include <random>

namespace scarlab {

/// Deterministic, seedable normal sampler. The engine is std::mt19937_64
/// (fully specified by the standard) and variates come from the Box-Muller
/// transform with uniforms u = 1 - (x >> 11) * 2^-53, so identical seeds
/// reproduce identical draws independent of the standard library's own
/// std::normal_distribution implementation.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

    double operator()(double mean, double stddev) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + stddev * spare_;
        }
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return mean + stddev * r * std::cos(angle);
    }

private:
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53; // [0, 1)
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace scarlab
