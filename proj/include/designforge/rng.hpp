#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace designforge {

// Deterministic source for every randomized operation. Normals come from the
// Marsaglia polar transform (libstdc++'s normal_distribution is
// implementation-defined, which would tie outputs to the standard library).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    double uniform01() {
        return (gen_() >> 11) * 0x1.0p-53;  // 53 uniform bits in [0,1)
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    // Uniform point on S^{d-1} by normalizing a standard normal vector.
    std::vector<double> unit_vector(int d) {
        std::vector<double> x(d);
        double norm2;
        do {
            norm2 = 0.0;
            for (int i = 0; i < d; ++i) {
                x[i] = normal();
                norm2 += x[i] * x[i];
            }
        } while (norm2 == 0.0);
        double inv = 1.0 / std::sqrt(norm2);
        for (double& xi : x) xi *= inv;
        return x;
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stream derivation for retries and substructures (splitmix64 mix).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace designforge
