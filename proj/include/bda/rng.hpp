/*
 * Copyright 2026 the bda authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstdint>

namespace bda {

inline constexpr double kPi = 3.14159265358979323846;

/// Deterministic random generator (xoshiro256++ seeded via splitmix64).
///
/// std::* distributions are implementation-defined, so every draw here is
/// spelled out explicitly: identical seeds give identical streams on any
/// platform, which the augmentation and training reproducibility contracts
/// rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * u01(); }

    /// Uniform integer in [a, b] inclusive.
    std::int64_t uniform_int(std::int64_t a, std::int64_t b) {
        const std::uint64_t span = static_cast<std::uint64_t>(b - a) + 1;
        return a + static_cast<std::int64_t>(next_u64() % span);
    }

    bool bernoulli(double p) { return u01() < p; }

    /// Standard normal via Box-Muller (one value per call, no caching).
    double normal() {
        double u1 = u01();
        while (u1 <= 1e-300) u1 = u01();
        const double u2 = u01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    /// Derived generator for a parallel stream (per-sample seeds).
    Rng fork(std::uint64_t stream) const {
        std::uint64_t x = s_[0] ^ (stream * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull);
        return Rng(splitmix64(x));
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
};

} // namespace bda
