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
 * Brute-force verification of the analytic results: dense evaluation of
 * the two-copy trace formulas and Monte-Carlo estimation of frame
 * eigenvalues on dense statevectors.
 *
 * None of this code touches the recurrences; agreement between the two
 * routes is what the tests certify.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bwshadow/clifford.hpp"
#include "bwshadow/pauli.hpp"
#include "bwshadow/rng.hpp"

namespace bwshadow::oracle {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix4cd;
using MatrixX = Eigen::MatrixXcd;
using VectorX = Eigen::VectorXcd;

/// 4x4 flip of the two copies of one qubit leg: |a,b> -> |b,a>.
inline Eigen::Matrix4d flip_leg() {
    Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            f((b << 1) | a, (a << 1) | b) = 1.0;
        }
    }
    return f;
}

/// F_(2) = F (x) F in leg-major order: index = (leg a digit)*4 + (leg b
/// digit), each leg digit holding the two copy bits of one qubit.
inline Eigen::MatrixXd flip_brick_legs() {
    const Eigen::Matrix4d f = flip_leg();
    Eigen::MatrixXd out(16, 16);
    for (int ra = 0; ra < 4; ++ra) {
        for (int rb = 0; rb < 4; ++rb) {
            for (int ca = 0; ca < 4; ++ca) {
                for (int cb = 0; cb < 4; ++cb) {
                    out(ra * 4 + rb, ca * 4 + cb) = f(ra, ca) * f(rb, cb);
                }
            }
        }
    }
    return out;
}

/// The same copy swap in copy-major order (index = copy1 state * 4 +
/// copy2 state), the layout used by the moment checks.
inline Eigen::MatrixXd flip_brick_copies() {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(16, 16);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            f(b * 4 + a, a * 4 + b) = 1.0;
        }
    }
    return f;
}

/// First-layer brick operator 1 + F_(2) on one doubled brick site.
inline Eigen::MatrixXd brick_first_layer() {
    return Eigen::MatrixXd::Identity(16, 16) + flip_brick_legs();
}

/// Supported-brick operator 4 F_(2) - 1.
inline Eigen::MatrixXd brick_second_layer() {
    return 4.0 * flip_brick_legs() - Eigen::MatrixXd::Identity(16, 16);
}

namespace detail {

// Basis indices pack one 2-bit copy pair per qubit leg: leg q occupies
// bits (2q, 2q+1). A brick on legs (a, b) reads the local 16-dim index
// (leg a)*4 + (leg b).
inline int leg_digit(std::uint64_t e, int q) { return static_cast<int>((e >> (2 * q)) & 3); }

inline std::uint64_t with_leg(std::uint64_t e, int q, int digit) {
    return (e & ~(std::uint64_t{3} << (2 * q))) | (static_cast<std::uint64_t>(digit) << (2 * q));
}

struct BrickLegs {
    int a, b;
};

// Tr[A_layer * B_layer] where A_layer is the product of `first` over
// abricks and B_layer the product of `second` over bbricks (identity on
// uncovered legs). Enumerates, for every basis state e, the sparse column
// of B_layer at e against the sparse row of A_layer at e.
inline double staggered_trace(int n, const std::vector<BrickLegs> &abricks,
                              const std::vector<BrickLegs> &bbricks,
                              const Eigen::MatrixXd &first, const Eigen::MatrixXd &second) {
    const std::uint64_t dim = std::uint64_t{1} << (2 * n);
    double total = 0.0;
    std::vector<std::pair<std::uint64_t, double>> cols, next;
    for (std::uint64_t e = 0; e < dim; ++e) {
        // column of the B layer at e
        cols.assign(1, {e, 1.0});
        for (const auto &legs : bbricks) {
            const int c_local = leg_digit(e, legs.a) * 4 + leg_digit(e, legs.b);
            next.clear();
            for (const auto &[idx, val] : cols) {
                for (int r = 0; r < 16; ++r) {
                    const double w = second(r, c_local);
                    if (w == 0.0) {
                        continue;
                    }
                    std::uint64_t idx2 = with_leg(idx, legs.a, r / 4);
                    idx2 = with_leg(idx2, legs.b, r % 4);
                    next.emplace_back(idx2, val * w);
                }
            }
            cols.swap(next);
        }
        // weight by the A-layer row at e
        for (const auto &[idx, val] : cols) {
            double w = val;
            for (const auto &legs : abricks) {
                const int r_local = leg_digit(e, legs.a) * 4 + leg_digit(e, legs.b);
                const int c_local = leg_digit(idx, legs.a) * 4 + leg_digit(idx, legs.b);
                w *= first(r_local, c_local);
                if (w == 0.0) {
                    break;
                }
            }
            total += w;
        }
    }
    return total;
}

} // namespace detail

/// Dense evaluation of the periodic trace
/// Tr[(1+F)^(x n/2) D (4F-1)^(x n/2) D^-1]; the shift D enters as an index
/// permutation, never as a matrix.
inline double dense_tper(int n) {
    if (n < 2 || n > 8 || n % 2 != 0) {
        throw std::invalid_argument("dense_tper supports even n in [2, 8]");
    }
    std::vector<detail::BrickLegs> abricks, bbricks;
    for (int i = 0; i < n / 2; ++i) {
        abricks.push_back({2 * i, 2 * i + 1});
        bbricks.push_back({2 * i + 1, (2 * i + 2) % n});
    }
    return detail::staggered_trace(n, abricks, bbricks, brick_first_layer(),
                                   brick_second_layer());
}

/// Dense evaluation of the open trace
/// Tr[(1+F)^(x n/2) {1_4 (x) (4F-1)^(x n/2-1) (x) 1_4}].
inline double dense_topen(int n) {
    if (n < 2 || n > 8 || n % 2 != 0) {
        throw std::invalid_argument("dense_topen supports even n in [2, 8]");
    }
    std::vector<detail::BrickLegs> abricks, bbricks;
    for (int i = 0; i < n / 2; ++i) {
        abricks.push_back({2 * i, 2 * i + 1});
    }
    for (int i = 0; i + 1 < n / 2; ++i) {
        bbricks.push_back({2 * i + 1, 2 * i + 2});
    }
    return detail::staggered_trace(n, abricks, bbricks, brick_first_layer(),
                                   brick_second_layer());
}

/// Haar-random 4x4 unitary: Ginibre matrix, QR, R-phase correction.
inline Matrix4 haar_unitary4(Rng &rng) {
    Matrix4 a;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            a(r, c) = Complex(rng.normal(), rng.normal());
        }
    }
    Eigen::HouseholderQR<Matrix4> qr(a);
    Matrix4 q = qr.householderQ();
    const Matrix4 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < 4; ++c) {
        q.col(c) *= r(c, c) / std::abs(r(c, c));
    }
    return q;
}

/// W(v)|b> = phase |b xor x>, applied in place. Basis convention: qubit 0
/// is the most significant bit of the index.
inline void apply_signed_pauli(const SignedPauli &p, int n, VectorX &psi) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    int base = p.phase_exponent();
    for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        if (p.x(q)) {
            xmask |= bit;
        }
        if (p.z(q)) {
            zmask |= bit;
        }
        if (p.x(q) && p.z(q)) {
            base = (base + 3) & 3; // (-i) per Y letter
        }
    }
    static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    VectorX out(psi.size());
    for (std::uint64_t b = 0; b < dim; ++b) {
        const std::uint64_t tgt = b ^ xmask;
        const int zpar = std::popcount(tgt & zmask) & 1; // Z acts after the flip
        out(static_cast<Eigen::Index>(tgt)) =
            kPhase[(base + 2 * zpar) & 3] * psi(static_cast<Eigen::Index>(b));
    }
    psi.swap(out);
}

inline MatrixX dense_pauli(const PauliString &v) {
    const int n = v.qubits();
    const std::uint64_t dim = std::uint64_t{1} << n;
    MatrixX m = MatrixX::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t b = 0; b < dim; ++b) {
        VectorX e = VectorX::Zero(static_cast<Eigen::Index>(dim));
        e(static_cast<Eigen::Index>(b)) = 1.0;
        apply_signed_pauli(SignedPauli::from_pauli(v), n, e);
        m.col(static_cast<Eigen::Index>(b)) = e;
    }
    return m;
}

/// The state U|0...0> of a tableau element, via the stabilizer projector.
/// Global phase is fixed by making the largest-magnitude amplitude real
/// positive.
inline VectorX dense_state_zero(const CliffordElement &u) {
    const int n = u.qubits();
    const std::uint64_t dim = std::uint64_t{1} << n;
    MatrixX proj = MatrixX::Identity(static_cast<Eigen::Index>(dim),
                                     static_cast<Eigen::Index>(dim));
    for (int q = 0; q < n; ++q) {
        const SignedPauli &s = u.image_of_z(q);
        MatrixX w = MatrixX::Zero(proj.rows(), proj.cols());
        for (Eigen::Index c = 0; c < proj.cols(); ++c) {
            VectorX col = proj.col(c);
            apply_signed_pauli(s, n, col);
            w.col(c) = col;
        }
        proj = 0.5 * (proj + w);
    }
    Eigen::Index best = 0;
    proj.colwise().norm().maxCoeff(&best);
    VectorX psi = proj.col(best);
    psi.normalize();
    Eigen::Index peak = 0;
    psi.cwiseAbs().maxCoeff(&peak);
    psi *= std::conj(psi(peak)) / std::abs(psi(peak));
    return psi;
}

/// Dense matrix of a tableau element (small n only): column i is the
/// conjugated X-string applied to U|0>.
inline MatrixX dense_unitary(const CliffordElement &u) {
    const int n = u.qubits();
    if (n > 10) {
        throw std::invalid_argument("dense_unitary is limited to n <= 10");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    const VectorX psi0 = dense_state_zero(u);
    MatrixX m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t i = 0; i < dim; ++i) {
        SignedPauli xs(2 * static_cast<std::size_t>(n));
        {
            BitVec bits(2 * static_cast<std::size_t>(n));
            for (int q = 0; q < n; ++q) {
                if ((i >> (n - 1 - q)) & 1u) {
                    bits.set(2 * static_cast<std::size_t>(q) + 1, true);
                }
            }
            xs = SignedPauli(std::move(bits), 0);
        }
        VectorX col = psi0;
        apply_signed_pauli(u.conjugate(xs), n, col);
        m.col(static_cast<Eigen::Index>(i)) = col;
    }
    return m;
}

enum class BrickMode { haar, clifford };

/// Applies a 4x4 brick to qubits (a, b) of a statevector (qubit 0 = MSB).
inline void apply_brick(const Matrix4 &u, int a, int b, int n, VectorX &psi) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t abit = std::uint64_t{1} << (n - 1 - a);
    const std::uint64_t bbit = std::uint64_t{1} << (n - 1 - b);
    for (std::uint64_t base = 0; base < dim; ++base) {
        if ((base & abit) || (base & bbit)) {
            continue;
        }
        const std::uint64_t i00 = base;
        const std::uint64_t i01 = base | bbit;
        const std::uint64_t i10 = base | abit;
        const std::uint64_t i11 = base | abit | bbit;
        const Eigen::Vector4cd amp(psi(static_cast<Eigen::Index>(i00)),
                                   psi(static_cast<Eigen::Index>(i01)),
                                   psi(static_cast<Eigen::Index>(i10)),
                                   psi(static_cast<Eigen::Index>(i11)));
        const Eigen::Vector4cd res = u * amp;
        psi(static_cast<Eigen::Index>(i00)) = res(0);
        psi(static_cast<Eigen::Index>(i01)) = res(1);
        psi(static_cast<Eigen::Index>(i10)) = res(2);
        psi(static_cast<Eigen::Index>(i11)) = res(3);
    }
}

inline Matrix4 sample_brick_matrix(BrickMode mode, Rng &rng) {
    if (mode == BrickMode::haar) {
        return haar_unitary4(rng);
    }
    const CliffordElement c = sample_local_clifford(rng);
    return dense_unitary(c);
}

struct McEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    long shots = 0;
};

/// Monte-Carlo estimate of <v|S|v>: per shot draw a brickwork circuit U
/// and a uniform basis state i, and average <i|U W(v) U^dag|i>^2 (the
/// uniform i estimates the normalized sum over outcomes).
inline McEstimate brute_force_frame_eigenvalue(const PauliString &v, Boundary b,
                                               BrickMode mode, long shots,
                                               std::uint64_t seed) {
    const int n = v.qubits();
    if (n > 6) {
        throw std::invalid_argument("brute_force_frame_eigenvalue is limited to n <= 6");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    const SignedPauli w = SignedPauli::from_pauli(v);
    double sum = 0.0;
    double sum2 = 0.0;
    const int n_shifted = shifted_brick_count(n, b);
    std::vector<Matrix4> unshifted(static_cast<std::size_t>(n / 2));
    std::vector<Matrix4> shifted(static_cast<std::size_t>(n_shifted));
    for (long s = 0; s < shots; ++s) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(s));
        for (auto &m : unshifted) {
            m = sample_brick_matrix(mode, rng);
        }
        for (auto &m : shifted) {
            m = sample_brick_matrix(mode, rng);
        }
        const std::uint64_t i = rng.below(dim);
        // psi = U^dag |i>, applying adjoints outermost layer first
        VectorX psi = VectorX::Zero(static_cast<Eigen::Index>(dim));
        psi(static_cast<Eigen::Index>(i)) = 1.0;
        for (int k = 0; k < n / 2; ++k) {
            apply_brick(unshifted[static_cast<std::size_t>(k)].adjoint(), 2 * k, 2 * k + 1, n,
                        psi);
        }
        for (int k = 0; k < n_shifted; ++k) {
            apply_brick(shifted[static_cast<std::size_t>(k)].adjoint(), 2 * k + 1,
                        (2 * k + 2) % n, n, psi);
        }
        VectorX wpsi = psi;
        apply_signed_pauli(w, n, wpsi);
        const double x = psi.dot(wpsi).real();
        sum += x * x;
        sum2 += x * x * x * x;
    }
    McEstimate e;
    e.shots = shots;
    e.mean = sum / static_cast<double>(shots);
    const double var = sum2 / static_cast<double>(shots) - e.mean * e.mean;
    e.std_err = std::sqrt(std::max(var, 0.0) / static_cast<double>(shots));
    return e;
}

struct SecondMomentReport {
    double max_state_sigmas = 0.0; // |0><0| twirl vs (1 + F)/20
    double max_pauli_sigmas = 0.0; // W(v) (x) W(v) twirl vs (4F - 1)/15
    double max_cross_sigmas = 0.0; // W(u) (x) W(v), u != v, vs 0
    long shots = 0;
    bool pass = false;
};

/// Empirical single-brick second moments against the analytic forms.
/// Deviations are reported in per-entry Monte-Carlo standard errors.
inline SecondMomentReport second_moment_check(BrickMode mode, long shots,
                                              std::uint64_t seed) {
    using Mat16 = Eigen::Matrix<Complex, 16, 16>;
    using Mat16d = Eigen::Matrix<double, 16, 16>;
    const PauliString vz = PauliString::parse("ZX");
    const PauliString vu = PauliString::parse("IY");
    const MatrixX wv = dense_pauli(vz);
    const MatrixX wu = dense_pauli(vu);

    Mat16 sum_state = Mat16::Zero(), sum_pauli = Mat16::Zero(), sum_cross = Mat16::Zero();
    Mat16d sq_state = Mat16d::Zero(), sq_pauli = Mat16d::Zero(), sq_cross = Mat16d::Zero();
    for (long s = 0; s < shots; ++s) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(s));
        const Matrix4 u = sample_brick_matrix(mode, rng);
        const Eigen::Vector4cd psi = u.col(0);
        Eigen::Matrix<Complex, 16, 1> big;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                big(a * 4 + b) = psi(a) * psi(b);
            }
        }
        const Mat16 t1 = big * big.adjoint();
        const Matrix4 av = u * wv * u.adjoint();
        const Matrix4 au = u * wu * u.adjoint();
        Mat16 t2, t3;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                for (int c = 0; c < 4; ++c) {
                    for (int d = 0; d < 4; ++d) {
                        t2(a * 4 + c, b * 4 + d) = av(a, b) * av(c, d);
                        t3(a * 4 + c, b * 4 + d) = au(a, b) * av(c, d);
                    }
                }
            }
        }
        sum_state += t1;
        sum_pauli += t2;
        sum_cross += t3;
        sq_state += t1.cwiseAbs2();
        sq_pauli += t2.cwiseAbs2();
        sq_cross += t3.cwiseAbs2();
    }

    const double inv = 1.0 / static_cast<double>(shots);
    const Eigen::MatrixXd flip = flip_brick_copies();
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(16, 16);
    const Eigen::MatrixXd want_state = (eye + flip) / 20.0;
    const Eigen::MatrixXd want_pauli = (4.0 * flip - eye) / 15.0;
    const Eigen::MatrixXd want_cross = Eigen::MatrixXd::Zero(16, 16);

    auto sigmas = [&](const Mat16 &sum, const Mat16d &sq, const Eigen::MatrixXd &want) {
        double worst = 0.0;
        for (int r = 0; r < 16; ++r) {
            for (int c = 0; c < 16; ++c) {
                const Complex mean = sum(r, c) * inv;
                const double var = std::max(sq(r, c) * inv - std::norm(mean), 0.0);
                const double se = std::sqrt(var * inv) + 1e-12;
                worst = std::max(worst, std::abs(mean - want(r, c)) / se);
            }
        }
        return worst;
    };

    SecondMomentReport rep;
    rep.shots = shots;
    rep.max_state_sigmas = sigmas(sum_state, sq_state, want_state);
    rep.max_pauli_sigmas = sigmas(sum_pauli, sq_pauli, want_pauli);
    rep.max_cross_sigmas = sigmas(sum_cross, sq_cross, want_cross);
    rep.pass = rep.max_state_sigmas < 5.0 && rep.max_pauli_sigmas < 5.0 &&
               rep.max_cross_sigmas < 5.0;
    return rep;
}

} // namespace bwshadow::oracle
