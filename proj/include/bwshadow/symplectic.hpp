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
 * The binary symplectic group Sp(2n, 2): form evaluation, transvections,
 * and uniform sampling via the Koenig-Smolin enumeration.
 *
 * Vectors use the (z, x) interleaved layout of PauliString, so the form
 * pairs bits (2i, 2i+1).
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bwshadow/bitvec.hpp"
#include "bwshadow/exact.hpp"
#include "bwshadow/rng.hpp"

namespace bwshadow {

/// Symplectic form [u, v] = sum_i (u_{2i} v_{2i+1} + u_{2i+1} v_{2i}) mod 2.
inline bool symplectic_inner(const BitVec &u, const BitVec &v) {
    constexpr std::uint64_t kEven = 0x5555555555555555ull;
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < u.word_count(); ++w) {
        const std::uint64_t a = u.word(w);
        const std::uint64_t b = v.word(w);
        acc ^= (a & (b >> 1) & kEven) ^ ((a >> 1) & b & kEven);
    }
    return std::popcount(acc) & 1;
}

/// Transvection T_h(v) = v + [v, h] h.
inline BitVec transvection(const BitVec &h, BitVec v) {
    if (symplectic_inner(h, v)) {
        v ^= h;
    }
    return v;
}

/// Finds (h1, h2) with T_{h2}(T_{h1}(x)) = y for nonzero x, y. A zero
/// output vector stands for the identity transvection.
inline std::pair<BitVec, BitVec> find_transvection(const BitVec &x, const BitVec &y) {
    const std::size_t nn = x.size();
    BitVec h1(nn), h2(nn);
    if (x == y) {
        return {h1, h2};
    }
    if (symplectic_inner(x, y)) {
        h1 = x ^ y;
        return {h1, h2};
    }
    BitVec z(nn);
    for (std::size_t ii = 0; ii < nn; ii += 2) {
        const bool xs = x.get(ii) || x.get(ii + 1);
        const bool ys = y.get(ii) || y.get(ii + 1);
        if (xs && ys) {
            z.set(ii, x.get(ii) != y.get(ii));
            z.set(ii + 1, x.get(ii + 1) != y.get(ii + 1));
            if (!z.get(ii) && !z.get(ii + 1)) {
                z.set(ii + 1, true);
                if (x.get(ii) != x.get(ii + 1)) {
                    z.set(ii, true);
                }
            }
            h1 = x ^ z;
            h2 = y ^ z;
            return {h1, h2};
        }
    }
    // supports are pair-disjoint: pick one pair from each side
    for (std::size_t ii = 0; ii < nn; ii += 2) {
        if ((x.get(ii) || x.get(ii + 1)) && !(y.get(ii) || y.get(ii + 1))) {
            if (x.get(ii) == x.get(ii + 1)) {
                z.set(ii + 1, true);
            } else {
                z.set(ii + 1, x.get(ii));
                z.set(ii, x.get(ii + 1));
            }
            break;
        }
    }
    for (std::size_t ii = 0; ii < nn; ii += 2) {
        if (!(x.get(ii) || x.get(ii + 1)) && (y.get(ii) || y.get(ii + 1))) {
            if (y.get(ii) == y.get(ii + 1)) {
                z.set(ii + 1, true);
            } else {
                z.set(ii + 1, y.get(ii));
                z.set(ii, y.get(ii + 1));
            }
            break;
        }
    }
    h1 = x ^ z;
    h2 = y ^ z;
    return {h1, h2};
}

/// An element of Sp(2n, 2); row r holds the image of basis vector e_r.
class SymplecticMatrix {
  public:
    SymplecticMatrix() = default;

    static SymplecticMatrix identity(int nq) {
        SymplecticMatrix g;
        g.nq_ = nq;
        const std::size_t nn = 2 * static_cast<std::size_t>(nq);
        g.rows_.reserve(nn);
        for (std::size_t r = 0; r < nn; ++r) {
            g.rows_.push_back(BitVec::basis(nn, r));
        }
        return g;
    }

    static SymplecticMatrix from_rows(std::vector<BitVec> rows) {
        SymplecticMatrix g;
        g.nq_ = static_cast<int>(rows.size() / 2);
        g.rows_ = std::move(rows);
        return g;
    }

    int qubits() const { return nq_; }
    const BitVec &row(std::size_t r) const { return rows_[r]; }
    std::size_t dim() const { return rows_.size(); }

    /// Image of v under the linear map (XOR of rows at the set bits of v).
    BitVec apply(const BitVec &v) const {
        BitVec out(v.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (v.get(r)) {
                out ^= rows_[r];
            }
        }
        return out;
    }

    /// Checks [g e_a, g e_b] = [e_a, e_b] on all basis pairs.
    bool is_symplectic() const {
        const std::size_t nn = rows_.size();
        for (std::size_t a = 0; a < nn; ++a) {
            for (std::size_t b = a + 1; b < nn; ++b) {
                const bool want = (a ^ 1) == b; // paired coordinates
                if (symplectic_inner(rows_[a], rows_[b]) != want) {
                    return false;
                }
            }
        }
        return true;
    }

    bool operator==(const SymplecticMatrix &other) const {
        return rows_ == other.rows_;
    }

  private:
    int nq_ = 0;
    std::vector<BitVec> rows_;
};

/// |Sp(2n, 2)| = prod_{j=1..n} (4^j - 1) 2^(2j-1).
inline BigInt sp_order(int nq) {
    BigInt o = 1;
    for (int j = 1; j <= nq; ++j) {
        o *= (pow_int(4, static_cast<unsigned>(j)) - 1) *
             pow_int(2, static_cast<unsigned>(2 * j - 1));
    }
    return o;
}

namespace detail {

// One recursion level of the Koenig-Smolin construction. f1 is the image
// drawn for e_1 (nonzero, 2j bits); bits holds the 2j-1 free bits choosing
// the image of e_2. Rows of g (dimension 2j) are updated in place.
inline void ks_apply_level(std::vector<BitVec> &rows, const BitVec &f1_in,
                           const BitVec &bits) {
    const std::size_t nn = f1_in.size();
    BitVec e1 = BitVec::basis(nn, 0);
    auto [t1, t2] = find_transvection(e1, f1_in);
    BitVec eprime = e1;
    for (std::size_t j = 2; j < nn; ++j) {
        eprime.set(j, bits.get(j - 1));
    }
    BitVec h0 = transvection(t1, eprime);
    h0 = transvection(t2, h0);
    BitVec f1 = f1_in;
    if (bits.get(0)) {
        f1 = BitVec(nn); // drop the T_{f1} factor
    }
    for (auto &row : rows) {
        row = transvection(t1, std::move(row));
        row = transvection(t2, std::move(row));
        row = transvection(h0, std::move(row));
        row = transvection(f1, std::move(row));
    }
}

// Grows each row by two leading coordinates (the direct sum with I_2).
inline std::vector<BitVec> ks_embed(const std::vector<BitVec> &rows, std::size_t nn) {
    std::vector<BitVec> out;
    out.reserve(rows.size() + 2);
    out.push_back(BitVec::basis(nn, 0));
    out.push_back(BitVec::basis(nn, 1));
    for (const auto &r : rows) {
        BitVec e(nn);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r.get(j)) {
                e.set(j + 2, true);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

template <typename DrawLevel>
SymplecticMatrix ks_build(int nq, DrawLevel &&draw) {
    // collect the per-level draws outermost-first, then build inside out
    std::vector<std::pair<BitVec, BitVec>> levels;
    levels.reserve(static_cast<std::size_t>(nq));
    for (int j = nq; j >= 1; --j) {
        levels.push_back(draw(j));
    }
    std::vector<BitVec> rows;
    rows.push_back(BitVec::basis(2, 0));
    rows.push_back(BitVec::basis(2, 1));
    ks_apply_level(rows, levels.back().first, levels.back().second);
    for (int j = 2; j <= nq; ++j) {
        rows = ks_embed(rows, 2 * static_cast<std::size_t>(j));
        const auto &lvl = levels[static_cast<std::size_t>(nq - j)];
        ks_apply_level(rows, lvl.first, lvl.second);
    }
    return SymplecticMatrix::from_rows(std::move(rows));
}

} // namespace detail

/// Decodes index i in [0, sp_order(nq)) into a distinct group element.
/// Intended for exhaustive small-n enumeration; requires the order to fit
/// the index type at every level (nq <= 15).
inline SymplecticMatrix symplectic_from_index(std::uint64_t i, int nq) {
    if (nq < 1 || nq > 15) {
        throw std::invalid_argument("symplectic_from_index supports 1 <= nq <= 15");
    }
    auto draw = [&i](int j) {
        const std::size_t nn = 2 * static_cast<std::size_t>(j);
        const std::uint64_t s = (std::uint64_t{1} << nn) - 1;
        const std::uint64_t k = (i % s) + 1;
        i /= s;
        BitVec f1(nn);
        for (std::size_t b = 0; b < nn; ++b) {
            f1.set(b, (k >> b) & 1u);
        }
        const std::uint64_t bmod = std::uint64_t{1} << (nn - 1);
        const std::uint64_t braw = i % bmod;
        i /= bmod;
        BitVec bits(nn - 1);
        for (std::size_t b = 0; b + 1 < nn; ++b) {
            bits.set(b, (braw >> b) & 1u);
        }
        return std::make_pair(std::move(f1), std::move(bits));
    };
    return detail::ks_build(nq, draw);
}

/// Uniformly random element of Sp(2 nq, 2).
inline SymplecticMatrix random_symplectic(int nq, Rng &rng) {
    auto draw = [&rng](int j) {
        const std::size_t nn = 2 * static_cast<std::size_t>(j);
        BitVec f1 = rng.nonzero_bits(nn);
        BitVec bits = rng.bits(nn - 1);
        return std::make_pair(std::move(f1), std::move(bits));
    };
    return detail::ks_build(nq, draw);
}

} // namespace bwshadow
