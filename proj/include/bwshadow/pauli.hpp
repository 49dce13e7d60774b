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
 * Pauli strings in binary symplectic form and the brickwork combinatorics
 * built on top of them (weight vector, supported bricks, partition of the
 * brick support).
 *
 * Encoding: per qubit q the pair (z, x) lives at bits (2q, 2q+1); qubit 0
 * is the leftmost character of the text form. W(0,0)=I, W(0,1)=X,
 * W(1,0)=Z, W(1,1)=Y.
 */

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bwshadow/bitvec.hpp"

namespace bwshadow {

enum class Boundary { periodic, open };

inline const char *to_string(Boundary b) {
    return b == Boundary::periodic ? "periodic" : "open";
}

class PauliString {
  public:
    /// Identity on n qubits. n must be even and >= 2.
    explicit PauliString(int n) : n_(check_qubits(n)), bits_(2 * static_cast<std::size_t>(n)) {}

    static PauliString parse(std::string_view text) {
        if (text.empty()) {
            throw std::invalid_argument("Pauli string is empty");
        }
        if (text.size() % 2 != 0) {
            throw std::invalid_argument("Pauli string has odd length " +
                                        std::to_string(text.size()));
        }
        PauliString p(static_cast<int>(text.size()));
        for (std::size_t q = 0; q < text.size(); ++q) {
            switch (text[q]) {
            case 'I':
                break;
            case 'X':
                p.set_x(static_cast<int>(q), true);
                break;
            case 'Z':
                p.set_z(static_cast<int>(q), true);
                break;
            case 'Y':
                p.set_z(static_cast<int>(q), true);
                p.set_x(static_cast<int>(q), true);
                break;
            default:
                throw std::invalid_argument("invalid Pauli letter '" +
                                            std::string(1, text[q]) + "' at position " +
                                            std::to_string(q));
            }
        }
        return p;
    }

    static PauliString from_bits(int n, BitVec bits) {
        PauliString p(n);
        if (bits.size() != static_cast<std::size_t>(2 * n)) {
            throw std::invalid_argument("bit vector length does not match qubit count");
        }
        p.bits_ = std::move(bits);
        return p;
    }

    int qubits() const { return n_; }

    bool z(int q) const { return bits_.get(2 * static_cast<std::size_t>(q)); }
    bool x(int q) const { return bits_.get(2 * static_cast<std::size_t>(q) + 1); }
    void set_z(int q, bool v) { bits_.set(2 * static_cast<std::size_t>(q), v); }
    void set_x(int q, bool v) { bits_.set(2 * static_cast<std::size_t>(q) + 1, v); }

    char letter(int q) const {
        static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
        return table[(z(q) ? 2 : 0) | (x(q) ? 1 : 0)];
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(n_), 'I');
        for (int q = 0; q < n_; ++q) {
            s[static_cast<std::size_t>(q)] = letter(q);
        }
        return s;
    }

    const BitVec &bits() const { return bits_; }

    bool is_identity() const { return !bits_.any(); }

    /// True when no qubit carries an X or Y letter.
    bool is_z_type() const {
        for (std::size_t w = 0; w < bits_.word_count(); ++w) {
            if (bits_.word(w) & 0xaaaaaaaaaaaaaaaaull) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const PauliString &other) const = default;

  private:
    static int check_qubits(int n) {
        if (n < 2 || n % 2 != 0) {
            throw std::invalid_argument("qubit count must be even and >= 2, got " +
                                        std::to_string(n));
        }
        return n;
    }

    int n_;
    BitVec bits_;
};

/// wt(v): per-qubit indicator of a non-identity letter.
inline BitVec weight_vector(const PauliString &v) {
    BitVec w(static_cast<std::size_t>(v.qubits()));
    for (int q = 0; q < v.qubits(); ++q) {
        w.set(static_cast<std::size_t>(q), v.z(q) || v.x(q));
    }
    return w;
}

/// |suppLC(v)|: number of qubits with a non-identity letter.
inline int lc_support_size(const PauliString &v) { return weight_vector(v).popcount(); }

/// The vector of supported second-layer bricks. Brick i (0-based) covers
/// qubits (2i+1, 2i+2 mod n); with open boundary the wrap brick does not
/// exist and its bit is fixed to 0.
struct BrickSupport {
    int n_bricks = 0;
    BitVec bits;
    Boundary boundary = Boundary::periodic;

    int weight() const { return bits.popcount(); }
};

inline BrickSupport brick_support(const PauliString &v, Boundary b) {
    const int n = v.qubits();
    const BitVec wt = weight_vector(v);
    BrickSupport s;
    s.n_bricks = n / 2;
    s.bits = BitVec(static_cast<std::size_t>(n / 2));
    s.boundary = b;
    for (int i = 0; i < n / 2; ++i) {
        const int a = 2 * i + 1;
        const int bq = (2 * i + 2) % n;
        bool on = wt.get(static_cast<std::size_t>(a)) || wt.get(static_cast<std::size_t>(bq));
        if (b == Boundary::open && i == n / 2 - 1) {
            on = false;
        }
        s.bits.set(static_cast<std::size_t>(i), on);
    }
    return s;
}

/// Sizes of the maximal runs of ones in a brick-support vector, cyclic under
/// periodic boundary. Stored as a descending-sorted multiset; the all-ones
/// periodic vector is flagged instead of stored as a single part.
struct BwPartition {
    std::vector<int> parts;
    bool is_full_cycle = false;

    int sum() const {
        int s = 0;
        for (int p : parts) {
            s += p;
        }
        return s;
    }
    int count() const { return static_cast<int>(parts.size()); }
};

inline BwPartition bw_partition(const BrickSupport &s) {
    BwPartition p;
    const int m = s.n_bricks;
    const int weight = s.weight();
    if (weight == 0) {
        return p;
    }
    if (weight == m) {
        // only reachable under periodic boundary: open forces the last bit to 0
        p.is_full_cycle = true;
        return p;
    }
    // rotate the scan so it starts just after a zero; under open boundary the
    // last bit is zero, so this also covers the linear case
    int start = 0;
    while (s.bits.get(static_cast<std::size_t>((start + m - 1) % m))) {
        ++start;
    }
    int run = 0;
    for (int k = 0; k < m; ++k) {
        const int i = (start + k) % m;
        if (s.bits.get(static_cast<std::size_t>(i))) {
            ++run;
        } else if (run > 0) {
            p.parts.push_back(run);
            run = 0;
        }
    }
    if (run > 0) {
        p.parts.push_back(run);
    }
    std::sort(p.parts.begin(), p.parts.end(), std::greater<int>());
    return p;
}

inline BwPartition bw_partition(const PauliString &v, Boundary b) {
    return bw_partition(brick_support(v, b));
}

} // namespace bwshadow
