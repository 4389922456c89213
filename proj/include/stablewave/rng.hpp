#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace stablewave {

/// SplitMix64 stream used to derive independent sub-seeds from one master
/// seed.  Output is part of the on-disk reproducibility contract.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

/// Uniform draw in [0, 1) built directly from engine bits; the standard
/// library distributions are not bit-reproducible across implementations,
/// so every sampler here is hand-rolled on top of mt19937_64.
inline double uniform01(std::mt19937_64& g) { return (g() >> 11) * 0x1.0p-53; }

/// Unit-rate exponential, strictly positive (zero-probability draws of
/// u == 0 are skipped so Poisson arrival times stay strictly increasing).
inline double exponential1(std::mt19937_64& g) {
    double u;
    do {
        u = uniform01(g);
    } while (u <= 0.0);
    return -std::log1p(-u);
}

/// One standard-normal pair via Box-Muller.
inline void normal_pair(std::mt19937_64& g, double& z0, double& z1) {
    double u;
    do {
        u = uniform01(g);
    } while (u <= 0.0);
    const double r = std::sqrt(-2.0 * std::log(u));
    const double phi = 2.0 * M_PI * uniform01(g);
    z0 = r * std::cos(phi);
    z1 = r * std::sin(phi);
}

}  // namespace stablewave
