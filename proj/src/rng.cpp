#include "qgini/rng.hpp"

#include <cmath>
#include <numbers>

namespace qgini {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace

std::uint64_t SplitMix64::next() {
    state_ += kGamma;
    return mix(state_);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform01_open_low() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::uniform_sym() { return 2.0 * uniform01() - 1.0; }

void SplitMix64::gaussian_pair(double& re, double& im) {
    const double u1 = uniform01_open_low();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    re = r * std::cos(theta);
    im = r * std::sin(theta);
}

std::uint64_t SplitMix64::derive(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + kGamma * (index + 1));
}

}  // namespace qgini
