// Counter-based 64-bit generator (splitmix64). Chosen over <random>
// distributions because those are implementation-defined and the
// experiments must be bit-reproducible across platforms.
#pragma once

#include <cstdint>

namespace qgini {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // [0, 1), 53-bit mantissa.
    double uniform01();
    // (0, 1], safe as a log argument.
    double uniform01_open_low();
    // [-1, 1).
    double uniform_sym();
    // Standard complex Gaussian via Box-Muller; exactly two draws.
    void gaussian_pair(double& re, double& im);

    // Independent substream for (seed, index); used to make parallel
    // sampling and per-trial noise independent of scheduling order.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

  private:
    std::uint64_t state_;
};

}  // namespace qgini
