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
 * Clifford elements as phase-tracked tableaus.
 *
 * An element stores the conjugation images of the 2n Pauli generators
 * (Z_q at slot 2q, X_q at slot 2q+1) with explicit sign bits. The action
 * on an arbitrary Pauli follows from the generator images and the Pauli
 * multiplication phases, which keeps the implementation free of any
 * particular alpha_g cocycle convention.
 *
 * The brickwork element applies the shifted layer (bricks on qubit pairs
 * (2i+1, 2i+2 mod n)) first and the unshifted layer (pairs (2i, 2i+1))
 * second; this is the orientation whose frame operator is diagonal with
 * the eigenvalues computed in frame_op.hpp.
 */

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bwshadow/pauli.hpp"
#include "bwshadow/rng.hpp"
#include "bwshadow/symplectic.hpp"

namespace bwshadow {

namespace detail {
// i-exponent of W(u) W(v) = i^phi W(u+v) per qubit, indexed by
// (uz<<3)|(ux<<2)|(vz<<1)|vx. Derived from W(z,x) = (-i)^(zx) Z^z X^x.
inline constexpr std::array<std::uint8_t, 16> kMulPhase = {
    0, 0, 0, 0,  // I * {I,X,Z,Y}
    0, 0, 3, 1,  // X * ...
    0, 1, 0, 3,  // Z * ...
    0, 3, 1, 0}; // Y * ...
} // namespace detail

/// Phase exponent phi (mod 4) with W(u) W(v) = i^phi W(u xor v).
inline int pauli_mul_phase(const BitVec &u, const BitVec &v) {
    int phi = 0;
    for (std::size_t w = 0; w < u.word_count(); ++w) {
        std::uint64_t a = u.word(w);
        std::uint64_t b = v.word(w);
        std::uint64_t busy = a | b;
        while (busy != 0) {
            const int k = std::countr_zero(busy) & ~1; // qubit slot within word
            const unsigned idx = static_cast<unsigned>(((a >> k) & 3) << 2 | ((b >> k) & 3));
            // bits are stored (z at even, x at odd): reorder into table index
            const unsigned uz = (idx >> 2) & 1, ux = (idx >> 3) & 1;
            const unsigned vz = idx & 1, vx = (idx >> 1) & 1;
            phi += detail::kMulPhase[(uz << 3) | (ux << 2) | (vz << 1) | vx];
            busy &= ~(std::uint64_t{3} << k);
        }
    }
    return phi & 3;
}

/// i^phase * W(bits); Hermitian Paulis have phase in {0, 2}.
class SignedPauli {
  public:
    SignedPauli() = default;
    explicit SignedPauli(std::size_t nbits) : bits_(nbits) {}
    SignedPauli(BitVec bits, int phase) : bits_(std::move(bits)), phase_(phase & 3) {}

    static SignedPauli from_pauli(const PauliString &p) { return SignedPauli(p.bits(), 0); }

    static SignedPauli z_generator(int n, int q) {
        SignedPauli s(2 * static_cast<std::size_t>(n));
        s.bits_.set(2 * static_cast<std::size_t>(q), true);
        return s;
    }

    static SignedPauli x_generator(int n, int q) {
        SignedPauli s(2 * static_cast<std::size_t>(n));
        s.bits_.set(2 * static_cast<std::size_t>(q) + 1, true);
        return s;
    }

    const BitVec &bits() const { return bits_; }
    int phase_exponent() const { return phase_; }

    bool is_real() const { return (phase_ & 1) == 0; }

    /// +1 or -1; requires a real phase.
    int sign() const {
        if (!is_real()) {
            throw std::logic_error("Pauli phase is imaginary");
        }
        return phase_ == 0 ? 1 : -1;
    }

    SignedPauli &operator*=(const SignedPauli &other) {
        phase_ = (phase_ + other.phase_ + pauli_mul_phase(bits_, other.bits_)) & 3;
        bits_ ^= other.bits_;
        return *this;
    }

    friend SignedPauli operator*(SignedPauli lhs, const SignedPauli &rhs) {
        lhs *= rhs;
        return lhs;
    }

    bool x_any() const {
        for (std::size_t w = 0; w < bits_.word_count(); ++w) {
            if (bits_.word(w) & 0xaaaaaaaaaaaaaaaaull) {
                return true;
            }
        }
        return false;
    }

    bool z(int q) const { return bits_.get(2 * static_cast<std::size_t>(q)); }
    bool x(int q) const { return bits_.get(2 * static_cast<std::size_t>(q) + 1); }

    /// Z-part as a length-n vector (bit q = z_q).
    BitVec z_vec(int n) const {
        BitVec v(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            v.set(static_cast<std::size_t>(q), z(q));
        }
        return v;
    }

    bool operator==(const SignedPauli &other) const = default;

  private:
    BitVec bits_;
    int phase_ = 0;
};

class CliffordElement {
  public:
    explicit CliffordElement(int n) : n_(n) {
        img_.reserve(2 * static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            img_.push_back(SignedPauli::z_generator(n, q));
            img_.push_back(SignedPauli::x_generator(n, q));
        }
    }

    static CliffordElement identity(int n) { return CliffordElement(n); }

    int qubits() const { return n_; }

    const SignedPauli &image_of_z(int q) const { return img_[2 * static_cast<std::size_t>(q)]; }
    const SignedPauli &image_of_x(int q) const {
        return img_[2 * static_cast<std::size_t>(q) + 1];
    }
    void set_image(int slot, SignedPauli p) { img_[static_cast<std::size_t>(slot)] = std::move(p); }
    const SignedPauli &image(int slot) const { return img_[static_cast<std::size_t>(slot)]; }

    /// Generator sign bits (slot order Z_0, X_0, Z_1, ...), the tableau's
    /// phase data.
    BitVec sign_bits() const {
        BitVec s(img_.size());
        for (std::size_t j = 0; j < img_.size(); ++j) {
            s.set(j, img_[j].sign() < 0);
        }
        return s;
    }

    /// g v without phase tracking: XOR of the image bits at the set bits
    /// of v.
    BitVec apply_linear(const BitVec &v) const {
        BitVec out(v.size());
        for (std::size_t j = 0; j < img_.size(); ++j) {
            if (v.get(j)) {
                out ^= img_[j].bits();
            }
        }
        return out;
    }

    /// The linear part g as a symplectic matrix (row r = image of e_r).
    SymplecticMatrix symplectic() const {
        std::vector<BitVec> rows;
        rows.reserve(img_.size());
        for (const auto &p : img_) {
            rows.push_back(p.bits());
        }
        return SymplecticMatrix::from_rows(std::move(rows));
    }

    /// U W U^dag for an arbitrary phase-tracked Pauli.
    SignedPauli conjugate(const SignedPauli &p) const {
        // W(v) = (-i)^{|z & x|} prod_q Z_q^{z_q} prod_q X_q^{x_q}
        int overlap = 0;
        for (int q = 0; q < n_; ++q) {
            overlap += (p.z(q) && p.x(q)) ? 1 : 0;
        }
        SignedPauli out(BitVec(2 * static_cast<std::size_t>(n_)),
                        (p.phase_exponent() + 3 * overlap) & 3);
        for (int q = 0; q < n_; ++q) {
            if (p.z(q)) {
                out *= image_of_z(q);
            }
        }
        for (int q = 0; q < n_; ++q) {
            if (p.x(q)) {
                out *= image_of_x(q);
            }
        }
        return out;
    }

    SignedPauli conjugate_pauli(const PauliString &p) const {
        return conjugate(SignedPauli::from_pauli(p));
    }

    /// Element of the composite circuit "this, then next" (next o this).
    CliffordElement then(const CliffordElement &next) const {
        CliffordElement out(n_);
        for (std::size_t j = 0; j < img_.size(); ++j) {
            out.img_[j] = next.conjugate(img_[j]);
        }
        return out;
    }

    /// Embeds a local element acting on the given qubits of an n-qubit
    /// register.
    static CliffordElement embed(const CliffordElement &local, const std::vector<int> &qubits,
                                 int n) {
        CliffordElement out(n);
        for (int lq = 0; lq < local.qubits(); ++lq) {
            for (int zx = 0; zx < 2; ++zx) {
                const SignedPauli &src = local.image(2 * lq + zx);
                BitVec bits(2 * static_cast<std::size_t>(n));
                for (int mq = 0; mq < local.qubits(); ++mq) {
                    const int gq = qubits[static_cast<std::size_t>(mq)];
                    bits.set(2 * static_cast<std::size_t>(gq), src.z(mq));
                    bits.set(2 * static_cast<std::size_t>(gq) + 1, src.x(mq));
                }
                out.set_image(2 * qubits[static_cast<std::size_t>(lq)] + zx,
                              SignedPauli(std::move(bits), src.phase_exponent()));
            }
        }
        return out;
    }

  private:
    int n_;
    std::vector<SignedPauli> img_;
};

/// Uniform element of the 2-qubit Clifford group mod global phase:
/// a Koenig-Smolin symplectic part plus 4 uniform generator sign bits.
inline CliffordElement sample_local_clifford(Rng &rng) {
    const SymplecticMatrix g = random_symplectic(2, rng);
    CliffordElement c(2);
    const std::uint64_t signs = rng.next();
    for (int j = 0; j < 4; ++j) {
        c.set_image(j, SignedPauli(g.row(static_cast<std::size_t>(j)),
                                   ((signs >> j) & 1u) ? 2 : 0));
    }
    return c;
}

/// Uniform single-qubit Clifford mod phase (24 elements).
inline CliffordElement sample_one_qubit_clifford(Rng &rng) {
    const SymplecticMatrix g = random_symplectic(1, rng);
    CliffordElement c(1);
    const std::uint64_t signs = rng.next();
    for (int j = 0; j < 2; ++j) {
        c.set_image(j, SignedPauli(g.row(static_cast<std::size_t>(j)),
                                   ((signs >> j) & 1u) ? 2 : 0));
    }
    return c;
}

/// Qubit pairs of the unshifted layer: (2i, 2i+1).
inline std::vector<int> unshifted_pair(int i) { return {2 * i, 2 * i + 1}; }

/// Qubit pairs of the shifted layer: (2i+1, 2i+2 mod n).
inline std::vector<int> shifted_pair(int i, int n) { return {2 * i + 1, (2 * i + 2) % n}; }

inline int shifted_brick_count(int n, Boundary b) {
    return b == Boundary::periodic ? n / 2 : n / 2 - 1;
}

/// Builds the one-round brickwork element from local bricks. `unshifted`
/// holds the n/2 bricks on pairs (2i, 2i+1); `shifted` the bricks on pairs
/// (2i+1, 2i+2 mod n), n/2 of them for periodic boundary and n/2 - 1 for
/// open. The shifted layer acts first.
inline CliffordElement assemble_brickwork(const std::vector<CliffordElement> &unshifted,
                                          const std::vector<CliffordElement> &shifted,
                                          Boundary b, int n) {
    if (static_cast<int>(unshifted.size()) != n / 2) {
        throw std::invalid_argument("unshifted layer must hold n/2 bricks");
    }
    if (static_cast<int>(shifted.size()) != shifted_brick_count(n, b)) {
        throw std::invalid_argument("shifted layer brick count does not match boundary");
    }
    CliffordElement first(n);
    for (int i = 0; i < static_cast<int>(shifted.size()); ++i) {
        const CliffordElement local = CliffordElement::embed(shifted[static_cast<std::size_t>(i)],
                                                             shifted_pair(i, n), n);
        for (int lq : shifted_pair(i, n)) {
            first.set_image(2 * lq, local.image_of_z(lq));
            first.set_image(2 * lq + 1, local.image_of_x(lq));
        }
    }
    CliffordElement second(n);
    for (int i = 0; i < n / 2; ++i) {
        const CliffordElement local = CliffordElement::embed(
            unshifted[static_cast<std::size_t>(i)], unshifted_pair(i), n);
        for (int lq : unshifted_pair(i)) {
            second.set_image(2 * lq, local.image_of_z(lq));
            second.set_image(2 * lq + 1, local.image_of_x(lq));
        }
    }
    return first.then(second);
}

/// Samples a full brickwork element (all bricks independent).
inline CliffordElement sample_brickwork(int n, Boundary b, Rng &rng) {
    std::vector<CliffordElement> unshifted;
    unshifted.reserve(static_cast<std::size_t>(n / 2));
    for (int i = 0; i < n / 2; ++i) {
        unshifted.push_back(sample_local_clifford(rng));
    }
    std::vector<CliffordElement> shifted;
    const int nb = shifted_brick_count(n, b);
    shifted.reserve(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i) {
        shifted.push_back(sample_local_clifford(rng));
    }
    return assemble_brickwork(unshifted, shifted, b, n);
}

/// Samples one layer of independent single-qubit Cliffords (the LC
/// ensemble).
inline CliffordElement sample_local_layer(int n, Rng &rng) {
    CliffordElement out(n);
    for (int q = 0; q < n; ++q) {
        const CliffordElement c = sample_one_qubit_clifford(rng);
        const CliffordElement e = CliffordElement::embed(c, {q}, n);
        out.set_image(2 * q, e.image_of_z(q));
        out.set_image(2 * q + 1, e.image_of_x(q));
    }
    return out;
}

} // namespace bwshadow
