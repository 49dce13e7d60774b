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

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <string>

#include "bwshadow/clifford.hpp"
#include "bwshadow/oracle.hpp"

using namespace bwshadow;

namespace {

// Dense single-qubit Pauli products ground the phase table.
Eigen::Matrix2cd dense1(int z, int x) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    const std::complex<double> im(0, 1);
    Eigen::Matrix2cd Z, X;
    Z << 1, 0, 0, -1;
    X << 0, 1, 1, 0;
    if (z && x) {
        m = -im * Z * X; // Y
    } else if (z) {
        m = Z;
    } else if (x) {
        m = X;
    }
    return m;
}

std::string key_of(const SymplecticMatrix &g) {
    std::string k;
    for (std::size_t r = 0; r < g.dim(); ++r) {
        for (std::size_t c = 0; c < g.dim(); ++c) {
            k += g.row(r).get(c) ? '1' : '0';
        }
    }
    return k;
}

} // namespace

TEST_CASE("single-qubit multiplication phases match dense products") {
    const std::complex<double> im(0, 1);
    for (int uz = 0; uz < 2; ++uz) {
        for (int ux = 0; ux < 2; ++ux) {
            for (int vz = 0; vz < 2; ++vz) {
                for (int vx = 0; vx < 2; ++vx) {
                    BitVec u(2), v(2);
                    u.set(0, uz);
                    u.set(1, ux);
                    v.set(0, vz);
                    v.set(1, vx);
                    const int phi = pauli_mul_phase(u, v);
                    const Eigen::Matrix2cd lhs = dense1(uz, ux) * dense1(vz, vx);
                    const Eigen::Matrix2cd rhs =
                        std::pow(im, phi) * dense1(uz ^ vz, ux ^ vx);
                    CHECK((lhs - rhs).norm() < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("multi-qubit signed products match dense kroneckers") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const int n = 2;
        const PauliString a = PauliString::from_bits(n, rng.bits(4));
        const PauliString b = PauliString::from_bits(n, rng.bits(4));
        const SignedPauli prod = SignedPauli::from_pauli(a) * SignedPauli::from_pauli(b);
        const oracle::MatrixX lhs = oracle::dense_pauli(a) * oracle::dense_pauli(b);
        oracle::MatrixX rhs =
            oracle::dense_pauli(PauliString::from_bits(n, a.bits() ^ b.bits()));
        const std::complex<double> im(0, 1);
        rhs *= std::pow(im, prod.phase_exponent());
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("identity element conjugates trivially") {
    const CliffordElement id = CliffordElement::identity(4);
    const PauliString v = PauliString::parse("XYZI");
    const SignedPauli img = id.conjugate_pauli(v);
    CHECK(img.bits() == v.bits());
    CHECK(img.phase_exponent() == 0);
}

TEST_CASE("local Clifford samples are symplectic and deterministic") {
    Rng a(5), b(5);
    const CliffordElement c1 = sample_local_clifford(a);
    const CliffordElement c2 = sample_local_clifford(b);
    CHECK(c1.symplectic() == c2.symplectic());
    CHECK(c1.sign_bits() == c2.sign_bits());
    CHECK(c1.symplectic().is_symplectic());
}

TEST_CASE("local Clifford sampling covers Sp(4,2) uniformly") {
    Rng rng(11);
    std::map<std::string, int> counts;
    const int draws = 100000;
    for (int t = 0; t < draws; ++t) {
        counts[key_of(sample_local_clifford(rng).symplectic())] += 1;
    }
    CHECK(counts.size() == 720);
    double chi2 = 0.0;
    const double expected = static_cast<double>(draws) / 720.0;
    for (const auto &[k, c] : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // chi-square with 719 dof; p > 1e-3 via the Wilson-Hilferty threshold
    const double dof = 719.0;
    const double z = 3.0902; // upper 1e-3 normal quantile
    const double threshold =
        dof * std::pow(1.0 - 2.0 / (9.0 * dof) + z * std::sqrt(2.0 / (9.0 * dof)), 3.0);
    CHECK(chi2 < threshold);
}

TEST_CASE("tableau conjugation agrees with the dense unitary") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        const CliffordElement c = sample_local_clifford(rng);
        const oracle::MatrixX u = oracle::dense_unitary(c);
        CHECK((u * u.adjoint() - oracle::MatrixX::Identity(4, 4)).norm() < 1e-10);
        for (std::uint64_t bits = 1; bits < 16; ++bits) {
            BitVec vb(4);
            for (int k = 0; k < 4; ++k) {
                vb.set(k, (bits >> k) & 1u);
            }
            const PauliString v = PauliString::from_bits(2, vb);
            const SignedPauli img = c.conjugate_pauli(v);
            const oracle::MatrixX lhs = u * oracle::dense_pauli(v) * u.adjoint();
            oracle::MatrixX rhs =
                oracle::dense_pauli(PauliString::from_bits(2, img.bits()));
            rhs *= static_cast<double>(img.sign());
            CHECK((lhs - rhs).norm() < 1e-10);
        }
    }
}

TEST_CASE("brickwork assembly on identity bricks is the identity") {
    const int n = 6;
    std::vector<CliffordElement> l1(3, CliffordElement::identity(2));
    std::vector<CliffordElement> l2(3, CliffordElement::identity(2));
    const CliffordElement u = assemble_brickwork(l1, l2, Boundary::periodic, n);
    const PauliString z2 = PauliString::parse("IZIIII");
    const SignedPauli img = u.conjugate_pauli(z2);
    CHECK(img.bits() == z2.bits());
    CHECK(img.sign() == 1);
    CHECK(u.symplectic() == SymplecticMatrix::identity(n));
}

TEST_CASE("assembly validates brick counts") {
    std::vector<CliffordElement> l1(2, CliffordElement::identity(2));
    std::vector<CliffordElement> l2(2, CliffordElement::identity(2));
    CHECK_THROWS_AS(assemble_brickwork(l1, l2, Boundary::open, 4), std::invalid_argument);
    l2.pop_back();
    CHECK_NOTHROW(assemble_brickwork(l1, l2, Boundary::open, 4));
    CHECK_THROWS_AS(assemble_brickwork(l1, l2, Boundary::periodic, 4), std::invalid_argument);
}

namespace {

// Equality of unitaries up to global phase.
bool same_up_to_phase(const oracle::MatrixX &a, const oracle::MatrixX &b) {
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    const std::complex<double> phase = a(r, c) / b(r, c);
    if (std::abs(std::abs(phase) - 1.0) > 1e-9) {
        return false;
    }
    return (a - phase * b).norm() < 1e-9;
}

} // namespace

TEST_CASE("composition matches dense matrix products") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        const CliffordElement a = sample_local_clifford(rng);
        const CliffordElement b = sample_local_clifford(rng);
        const CliffordElement ab = a.then(b);
        CHECK(same_up_to_phase(oracle::dense_unitary(b) * oracle::dense_unitary(a),
                               oracle::dense_unitary(ab)));
    }
}

TEST_CASE("n=2 periodic assembly is a plain product of its two bricks") {
    Rng rng(18);
    const CliffordElement a = sample_local_clifford(rng); // shifted brick, pair (1, 0)
    const CliffordElement b = sample_local_clifford(rng); // unshifted brick, pair (0, 1)
    const CliffordElement u = assemble_brickwork({b}, {a}, Boundary::periodic, 2);
    const CliffordElement ea = CliffordElement::embed(a, {1, 0}, 2);
    const oracle::MatrixX dense =
        oracle::dense_unitary(b) * oracle::dense_unitary(ea);
    CHECK(same_up_to_phase(dense, oracle::dense_unitary(u)));
}

TEST_CASE("assembled brickwork preserves the symplectic form") {
    Rng rng(19);
    for (int n : {2, 10, 64}) {
        for (Boundary b : {Boundary::periodic, Boundary::open}) {
            const CliffordElement u = sample_brickwork(n, b, rng);
            CHECK(u.symplectic().is_symplectic());
        }
    }
}

TEST_CASE("assembled brickwork conjugation matches dense on n=4") {
    Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        const CliffordElement u = sample_brickwork(4, Boundary::periodic, rng);
        const oracle::MatrixX ud = oracle::dense_unitary(u);
        CHECK((ud * ud.adjoint() - oracle::MatrixX::Identity(16, 16)).norm() < 1e-10);
        for (int rep = 0; rep < 8; ++rep) {
            const PauliString v = PauliString::from_bits(4, rng.nonzero_bits(8));
            const SignedPauli img = u.conjugate_pauli(v);
            const oracle::MatrixX lhs = ud * oracle::dense_pauli(v) * ud.adjoint();
            oracle::MatrixX rhs = oracle::dense_pauli(PauliString::from_bits(4, img.bits()));
            rhs *= static_cast<double>(img.sign());
            CHECK((lhs - rhs).norm() < 1e-9);
        }
    }
}

TEST_CASE("local layer conjugates qubits independently") {
    Rng rng(29);
    const CliffordElement u = sample_local_layer(6, rng);
    CHECK(u.symplectic().is_symplectic());
    // a single-qubit Pauli stays on its qubit
    const PauliString v = PauliString::parse("IIZIII");
    const SignedPauli img = u.conjugate_pauli(v);
    for (int q = 0; q < 6; ++q) {
        if (q != 2) {
            CHECK_FALSE(img.z(q));
            CHECK_FALSE(img.x(q));
        }
    }
}
