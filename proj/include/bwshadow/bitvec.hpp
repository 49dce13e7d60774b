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
 * Packed bit vectors over F2 with word-parallel helpers.
 */

#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bwshadow {

/// Fixed-length vector over F2, packed into 64-bit words.
class BitVec {
  public:
    BitVec() = default;

    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static BitVec basis(std::size_t nbits, std::size_t k) {
        BitVec v(nbits);
        v.set(k, true);
        return v;
    }

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        assert(i < nbits_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(std::size_t i) { set(i, !get(i)); }

    BitVec &operator^=(const BitVec &other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }

    friend BitVec operator^(BitVec lhs, const BitVec &rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool any() const {
        for (auto w : words_) {
            if (w != 0) {
                return true;
            }
        }
        return false;
    }

    int popcount() const {
        int c = 0;
        for (auto w : words_) {
            c += std::popcount(w);
        }
        return c;
    }

    /// Parity of the AND with `other` (the F2 dot product).
    bool dot(const BitVec &other) const {
        assert(nbits_ == other.nbits_);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    bool operator==(const BitVec &other) const = default;

    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t w) const { return words_[w]; }
    void set_word(std::size_t w, std::uint64_t value) {
        words_[w] = value;
        trim();
    }

    /// Clears bits beyond size(); needed after writing raw words.
    void trim() {
        const std::size_t rem = nbits_ & 63;
        if (rem != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << rem) - 1;
        }
    }

  private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace bwshadow
