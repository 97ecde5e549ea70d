#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace bohr {

/// Derives an independent stream seed from a master seed and a trial index.
/// Splitmix64 finalizer; used everywhere a sweep needs per-trial streams so
/// that results do not depend on trial scheduling.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    double gaussian(double sigma = 1.0) {
        return std::normal_distribution<double>(0.0, sigma)(engine_);
    }

    std::complex<double> complex_gaussian(double sigma = 1.0) {
        return {gaussian(sigma), gaussian(sigma)};
    }

    /// Uniform integer in [0, n).
    int index(int n) {
        return std::uniform_int_distribution<int>(0, n - 1)(engine_);
    }

    bool coin() { return index(2) == 1; }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace bohr
