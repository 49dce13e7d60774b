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
 * Arbitrary-precision integers and rationals for exact eigenvalue work.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bwshadow {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigRat &r) { return r.convert_to<double>(); }

inline BigInt pow_int(const BigInt &base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) {
            r *= b;
        }
        b *= b;
        e >>= 1;
    }
    return r;
}

inline BigRat pow_rat(const BigRat &base, unsigned exp) {
    return BigRat(pow_int(boost::multiprecision::numerator(base), exp),
                  pow_int(boost::multiprecision::denominator(base), exp));
}

} // namespace bwshadow
