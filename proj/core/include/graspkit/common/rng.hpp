// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <random>

namespace grasp {

// Deterministic random source. mt19937_64 output is fully specified by the
// standard; the value transforms below are our own so that streams are
// bit-identical across compilers (std::uniform_real_distribution and friends
// are implementation-defined and must not be used anywhere in this codebase).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive range. Modulo bias is irrelevant for the ranges used here.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(gen_() % span);
    }

    // Standard normal via Box-Muller; consumes two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    Eigen::Vector3d normal3() {
        Eigen::Vector3d v;
        v.x() = normal();
        v.y() = normal();
        v.z() = normal();
        return v;
    }

    Eigen::Vector3d on_sphere() {
        // Marsaglia rejection; expected <1.3 iterations.
        for (;;) {
            const double x = uniform(-1.0, 1.0);
            const double y = uniform(-1.0, 1.0);
            const double z = uniform(-1.0, 1.0);
            const double n2 = x * x + y * y + z * z;
            if (n2 > 1e-12 && n2 <= 1.0) {
                const double inv = 1.0 / std::sqrt(n2);
                return {x * inv, y * inv, z * inv};
            }
        }
    }

    Eigen::Vector3d in_ball(double radius) {
        const Eigen::Vector3d dir = on_sphere();
        const double r = radius * std::cbrt(uniform());
        return dir * r;
    }

    // Derive an independent child seed; used to give parallel work items
    // their own streams without sharing state.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
        std::uint64_t z = seed ^ (salt + 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

   private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace grasp
