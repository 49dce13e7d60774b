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
 * Stabilizer simulation of the shadow protocol: measure U|0...0> in the
 * computational basis and evaluate snapshot values <i|U W(v) U^dag|i>.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bwshadow/clifford.hpp"
#include "bwshadow/pauli.hpp"
#include "bwshadow/rng.hpp"

namespace bwshadow {

/// One experiment record; `value` is the snapshot before frame rescaling.
struct Snapshot {
    std::uint64_t shot_index = 0;
    std::uint64_t seed = 0;
    BitVec outcome;
    int value = 0;
};

/// Destabilizer/stabilizer tableau of the state U|0...0>.
class StabilizerTableau {
  public:
    explicit StabilizerTableau(const CliffordElement &u) : n_(u.qubits()) {
        destab_.reserve(static_cast<std::size_t>(n_));
        stab_.reserve(static_cast<std::size_t>(n_));
        for (int q = 0; q < n_; ++q) {
            destab_.push_back(u.image_of_x(q));
            stab_.push_back(u.image_of_z(q));
        }
    }

    int qubits() const { return n_; }

    /// Measures qubits 0..n-1 in order; outcome bit q is the result for
    /// qubit q. Deterministic outcomes consume no randomness.
    BitVec measure_all(Rng &rng) {
        BitVec outcome(static_cast<std::size_t>(n_));
        for (int q = 0; q < n_; ++q) {
            outcome.set(static_cast<std::size_t>(q), measure_z(q, rng));
        }
        return outcome;
    }

  private:
    bool measure_z(int q, Rng &rng) {
        int p = -1;
        for (int j = 0; j < n_; ++j) {
            if (stab_[static_cast<std::size_t>(j)].x(q)) {
                p = j;
                break;
            }
        }
        if (p >= 0) {
            const bool r = rng.bit();
            const SignedPauli pivot = stab_[static_cast<std::size_t>(p)];
            for (int j = 0; j < n_; ++j) {
                if (j != p && stab_[static_cast<std::size_t>(j)].x(q)) {
                    stab_[static_cast<std::size_t>(j)] *= pivot;
                }
                if (destab_[static_cast<std::size_t>(j)].x(q)) {
                    destab_[static_cast<std::size_t>(j)] *= pivot;
                }
            }
            destab_[static_cast<std::size_t>(p)] = pivot;
            SignedPauli zq = SignedPauli::z_generator(n_, q);
            if (r) {
                zq = SignedPauli(zq.bits(), 2);
            }
            stab_[static_cast<std::size_t>(p)] = zq;
            return r;
        }
        // deterministic: Z_q = +-prod of stabilizers flagged by the
        // destabilizers that anticommute with Z_q
        SignedPauli acc(2 * static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) {
            if (destab_[static_cast<std::size_t>(j)].x(q)) {
                acc *= stab_[static_cast<std::size_t>(j)];
            }
        }
        return acc.sign() < 0;
    }

    int n_;
    std::vector<SignedPauli> destab_;
    std::vector<SignedPauli> stab_;
};

/// Samples a computational-basis outcome of U|0...0>.
inline BitVec measure_all(const CliffordElement &u, Rng &rng) {
    StabilizerTableau t(u);
    return t.measure_all(rng);
}

/// <i|U W(v) U^dag|i> through the sign-tracked tableau: 0 when the image
/// has X support, otherwise (-1)^(sign + (gv)_z . i).
inline int snapshot_value_general(const CliffordElement &u, const BitVec &outcome,
                                  const PauliString &v) {
    const SignedPauli img = u.conjugate_pauli(v);
    if (img.x_any()) {
        return 0;
    }
    int val = img.sign();
    if (img.z_vec(u.qubits()).dot(outcome)) {
        val = -val;
    }
    return val;
}

/// Fast path for Z-type v paired with an outcome of measure_all(u): the
/// snapshot is +1 exactly when (gv)_x = 0. (U|0> is a +1 eigenstate of
/// U W(v) U^dag, so every outcome in its support gives +1.)
inline int snapshot_value_ztype(const CliffordElement &u, const BitVec & /*outcome*/,
                                const PauliString &v) {
    if (!v.is_z_type()) {
        throw std::invalid_argument("snapshot_value_ztype requires a Z-type Pauli");
    }
    const BitVec gv = u.apply_linear(v.bits());
    for (std::size_t w = 0; w < gv.word_count(); ++w) {
        if (gv.word(w) & 0xaaaaaaaaaaaaaaaaull) {
            return 0;
        }
    }
    return 1;
}

} // namespace bwshadow
