// Copyright 2026 The bwshadow developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Counter-based, splittable pseudo-random generator.
 *
 * Streams are derived from (master seed, stream index), so shot k of an
 * experiment reads the same bits no matter how work is scheduled. All
 * sampling primitives are implemented here rather than via <random>
 * distributions, whose output is implementation-defined.
 */

#pragma once

#include <cmath>
#include <cstdint>

#include "bwshadow/bitvec.hpp"

namespace bwshadow {

/// splitmix64 output function; also used as the seed mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed)) {}

    /// Derived stream for one shot (or other unit of work).
    static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
        Rng r(0);
        r.state_ = mix64(mix64(master_seed) ^ mix64(index + 0x632be59bd9b4e019ull));
        return r;
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    bool bit() { return next() >> 63; }

    /// Unbiased integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t zone = (~std::uint64_t{0} / bound) * bound;
        std::uint64_t x = next();
        while (x >= zone) {
            x = next();
        }
        return x % bound;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 == 0.0) {
            u1 = uniform();
        }
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    BitVec bits(std::size_t nbits) {
        BitVec v(nbits);
        for (std::size_t w = 0; w < v.word_count(); ++w) {
            v.set_word(w, next());
        }
        v.trim();
        return v;
    }

    /// Uniform nonzero vector, by rejection.
    BitVec nonzero_bits(std::size_t nbits) {
        BitVec v = bits(nbits);
        while (!v.any()) {
            v = bits(nbits);
        }
        return v;
    }

  private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace bwshadow
