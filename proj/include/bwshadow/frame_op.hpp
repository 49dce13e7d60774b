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
 * Frame-operator eigenvalues for one-round brickwork circuits and for the
 * local-Clifford ensemble.
 *
 * The brickwork eigenvalue of a Pauli v is dispatched on the partition of
 * its brick support: the all-bricks-supported periodic case evaluates to
 * s_per(n), every other case is a product of s_open(2l+2) over the part
 * sizes l. Two independent routes are provided: exact rationals from the
 * integer recurrences
 *
 *     t1(n) = 24 t3(n-2)                      t1(n) = 24 t2(n-2)
 *     t2(n) = 24 t3(n-2) + 60 t2(n-2)         t2(n) = 24 t1(n-2) + 60 t2(n-2)
 *     t3(n) = 24 t1(n-2) + 60 t3(n-2)
 *     (t1,t2,t3)(2) = (0, 60, 24)             (t1,t2)(4) = (48, 216)
 *
 * with s_per(n) = (t1+t2)(n) / (10 sqrt(3))^n and
 * s_open(m) = (4 t1 + 2 t2)(m) / (15^(m/2-1) (2 sqrt(5))^m), and the
 * closed forms in sqrt(41) used as floating-point cross-checks.
 */

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "bwshadow/exact.hpp"
#include "bwshadow/pauli.hpp"

namespace bwshadow {

enum class Ensemble { bw_periodic, bw_open, local_clifford };

inline const char *to_string(Ensemble e) {
    switch (e) {
    case Ensemble::bw_periodic:
        return "bw-periodic";
    case Ensemble::bw_open:
        return "bw-open";
    default:
        return "local-clifford";
    }
}

inline Ensemble bw_ensemble(Boundary b) {
    return b == Boundary::periodic ? Ensemble::bw_periodic : Ensemble::bw_open;
}

namespace detail {
inline int check_even(int n, int min, const char *what) {
    if (n < min || n % 2 != 0) {
        throw std::invalid_argument(std::string(what) + " requires an even argument >= " +
                                    std::to_string(min) + ", got " + std::to_string(n));
    }
    return n;
}
} // namespace detail

struct PeriodicRecurrenceState {
    BigInt t1, t2, t3;
    int n = 2;

    BigInt t_per() const { return t1 + t2; }
};

struct OpenRecurrenceState {
    BigInt t1, t2;
    int n = 4;

    BigInt t_open() const { return 4 * t1 + 2 * t2; }
};

inline PeriodicRecurrenceState t_periodic_exact(int n) {
    detail::check_even(n, 2, "t_periodic_exact");
    PeriodicRecurrenceState s{0, 60, 24, 2};
    for (int m = 4; m <= n; m += 2) {
        BigInt t1 = 24 * s.t3;
        BigInt t2 = 24 * s.t3 + 60 * s.t2;
        BigInt t3 = 24 * s.t1 + 60 * s.t3;
        s.t1 = std::move(t1);
        s.t2 = std::move(t2);
        s.t3 = std::move(t3);
        s.n = m;
    }
    return s;
}

inline OpenRecurrenceState t_open_exact(int n) {
    detail::check_even(n, 4, "t_open_exact");
    OpenRecurrenceState s{48, 216, 4};
    for (int m = 6; m <= n; m += 2) {
        BigInt t1 = 24 * s.t2;
        BigInt t2 = 24 * s.t1 + 60 * s.t2;
        s.t1 = std::move(t1);
        s.t2 = std::move(t2);
        s.n = m;
    }
    return s;
}

/// Exact s_per(n) = t_per(n) / (10^n 3^(n/2)).
inline BigRat s_per_exact(int n) {
    const BigInt t = t_periodic_exact(n).t_per();
    return BigRat(t, pow_int(10, static_cast<unsigned>(n)) *
                         pow_int(3, static_cast<unsigned>(n / 2)));
}

/// Exact s_open(m) = t_open(m) / (15^(m/2-1) 20^(m/2)).
inline BigRat s_open_exact(int m) {
    const BigInt t = t_open_exact(m).t_open();
    return BigRat(t, pow_int(15, static_cast<unsigned>(m / 2 - 1)) *
                         pow_int(20, static_cast<unsigned>(m / 2)));
}

/// Closed form: ((sqrt41+5)^(m/2) + (-1)^(m/2) (sqrt41-5)^(m/2)) / (5 sqrt2)^m.
inline double s_per_closed(int m) {
    detail::check_even(m, 2, "s_per_closed");
    const double r = std::sqrt(41.0);
    const int h = m / 2;
    const double sign = (h % 2 == 0) ? 1.0 : -1.0;
    const double num = std::pow(r + 5.0, h) + sign * std::pow(r - 5.0, h);
    return num / std::pow(50.0, h);
}

/// Closed form with the (25 -+ 3 sqrt41) weights.
inline double s_open_closed(int m) {
    detail::check_even(m, 4, "s_open_closed");
    const double r = std::sqrt(41.0);
    const int h = m / 2;
    const double sign = (h % 2 == 0) ? -1.0 : 1.0; // (-1)^(m/2+1)
    const double num =
        (25.0 - 3.0 * r) * std::pow(r + 5.0, h) + sign * (25.0 + 3.0 * r) * std::pow(r - 5.0, h);
    return 5.0 / (2.0 * r) * num / std::pow(50.0, h);
}

enum class EigenvalueMode { exact, floating };

struct FrameEigenvalue {
    std::optional<BigRat> exact;
    double value = 1.0;
    Ensemble ensemble = Ensemble::bw_periodic;
};

/// <v|S|v> for the brickwork ensemble with the given boundary.
inline FrameEigenvalue frame_eigenvalue(const PauliString &v, Boundary b,
                                        EigenvalueMode mode = EigenvalueMode::exact) {
    const BrickSupport support = brick_support(v, b);
    const BwPartition part = bw_partition(support);
    FrameEigenvalue out;
    out.ensemble = bw_ensemble(b);
    if (mode == EigenvalueMode::exact) {
        BigRat value = 1;
        if (part.is_full_cycle) {
            value = s_per_exact(v.qubits());
        } else {
            for (int l : part.parts) {
                value *= s_open_exact(2 * l + 2);
            }
        }
        out.exact = value;
        out.value = to_double(value);
    } else {
        double value = 1.0;
        if (part.is_full_cycle) {
            value = s_per_closed(v.qubits());
        } else {
            for (int l : part.parts) {
                value *= s_open_closed(2 * l + 2);
            }
        }
        out.value = value;
    }
    return out;
}

/// <v|S_LC|v> = 3^(-|suppLC(v)|), always exact.
inline FrameEigenvalue lc_frame_eigenvalue(const PauliString &v) {
    FrameEigenvalue out;
    out.ensemble = Ensemble::local_clifford;
    out.exact = BigRat(1, pow_int(3, static_cast<unsigned>(lc_support_size(v))));
    out.value = to_double(*out.exact);
    return out;
}

inline FrameEigenvalue frame_eigenvalue(const PauliString &v, Ensemble e,
                                        EigenvalueMode mode = EigenvalueMode::exact) {
    switch (e) {
    case Ensemble::bw_periodic:
        return frame_eigenvalue(v, Boundary::periodic, mode);
    case Ensemble::bw_open:
        return frame_eigenvalue(v, Boundary::open, mode);
    default:
        return lc_frame_eigenvalue(v);
    }
}

/// Single-snapshot second-moment bound 1/<v|S|v> (the "variance" of the
/// comparison sections, understood up to first-moment terms).
inline double variance_bound(const PauliString &v, Ensemble e,
                             Boundary b = Boundary::periodic) {
    if (v.is_identity()) {
        throw std::invalid_argument("variance bound is vacuous for the identity Pauli");
    }
    const FrameEigenvalue s = (e == Ensemble::local_clifford)
                                  ? lc_frame_eigenvalue(v)
                                  : frame_eigenvalue(v, b, EigenvalueMode::exact);
    return to_double(BigRat(1) / *s.exact);
}

struct BoundConstants {
    double a;     // (sqrt41 + 5)^(1/2) / (5 sqrt2)
    double b;     // magnitude of the second root, (sqrt41 - 5)^(1/2) / (5 sqrt2)
    double c;     // 5 (25 - 3 sqrt41) / (2 sqrt41)
    double d;     // 5 (25 + 3 sqrt41) / (2 sqrt41)
    double gamma; // (1/c) / (1 - (d/c) |b/a|^4)
    double delta; // 1/a
};

inline BoundConstants bound_constants() {
    const double r = std::sqrt(41.0);
    BoundConstants k{};
    k.a = std::sqrt(r + 5.0) / (5.0 * std::sqrt(2.0));
    k.b = std::sqrt(r - 5.0) / (5.0 * std::sqrt(2.0));
    k.c = 5.0 * (25.0 - 3.0 * r) / (2.0 * r);
    k.d = 5.0 * (25.0 + 3.0 * r) / (2.0 * r);
    const double q = std::pow(k.b / k.a, 4.0);
    k.gamma = (1.0 / k.c) / (1.0 - (k.d / k.c) * q);
    k.delta = 1.0 / k.a;
    return k;
}

/// varBW <= 2.2^(#parts) * 4.4^(sum of parts); empty partitions give 1.
inline double general_variance_bound(const BwPartition &p) {
    if (p.is_full_cycle) {
        throw std::invalid_argument(
            "general variance bound applies to non-full-cycle partitions only");
    }
    return std::pow(2.2, p.count()) * std::pow(4.4, p.sum());
}

} // namespace bwshadow
