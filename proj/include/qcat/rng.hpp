// rng.hpp — deterministic random streams. mt19937_64 output is pinned by
// the standard and the uniform/normal transforms below are spelled out, so
// a (seed, stream) pair reproduces bit-identical values on any platform.

#pragma once

#include <cmath>
#include <cstdint>
#include <complex>
#include <random>

namespace qcat {

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : eng_(mix(seed, stream)) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (explicit, no library distribution).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform(); // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Re(z), Im(z) i.i.d. standard normal.
    std::complex<double> complex_normal() { return {normal(), normal()}; }

private:
    // splitmix64 over (seed, stream) decorrelates substreams.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        auto step = [](std::uint64_t& x) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        std::uint64_t x = seed;
        std::uint64_t a = step(x);
        x ^= stream * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL;
        std::uint64_t b = step(x);
        return a ^ (b + 0x9e3779b97f4a7c15ULL);
    }

    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace qcat
