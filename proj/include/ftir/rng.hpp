#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace ftir {

// Deterministic random stream with fixed, documented transforms.
//
// Engine: std::mt19937_64 (standardized output sequence for a given seed).
// uniform():  (x >> 11) * 2^-53, giving a double in [0, 1).
// normal():   Box-Muller on two uniforms; values are produced in pairs and
//             the second is cached, so call order matters for reproducibility.
// gamma():    Marsaglia-Tsang squeeze method for shape >= 1, with the
//             boost gamma(a) = gamma(a+1) * U^(1/a) for shape < 1.
//
// std::<distribution> types are deliberately not used; their output is
// implementation-defined and would break cross-platform reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // integer in [0, n)
    std::uint64_t integer(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
    }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    double gamma(double shape) {
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0) * std::pow(u > 0.0 ? u : 0x1.0p-53, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = uniform();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // symmetric Dirichlet draw of length k
    std::vector<double> dirichlet(std::size_t k, double concentration) {
        std::vector<double> out(k);
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            out[i] = gamma(concentration);
            sum += out[i];
        }
        if (sum <= 0.0) {
            // pathological underflow: fall back to a one-hot at a uniform index
            const std::size_t j = static_cast<std::size_t>(integer(k));
            for (std::size_t i = 0; i < k; ++i) out[i] = (i == j) ? 1.0 : 0.0;
            return out;
        }
        for (std::size_t i = 0; i < k; ++i) out[i] /= sum;
        return out;
    }

    // Fisher-Yates shuffle
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(integer(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

// splitmix64 finalizer; used to derive independent substream seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace ftir
