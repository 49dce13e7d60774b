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
 * Serialization helpers: the length-prefixed hex form of bit vectors and
 * stable number formatting for CSV bodies.
 */

#pragma once

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bwshadow/bitvec.hpp"
#include "bwshadow/stabilizer.hpp"

namespace bwshadow {

/// "<nbits>:<hex>", bits packed big-endian within each byte (bit 0 of the
/// vector is the high bit of the first byte).
inline std::string to_hex(const BitVec &v) {
    static const char *digits = "0123456789abcdef";
    std::string out = std::to_string(v.size());
    out += ':';
    const std::size_t nbytes = (v.size() + 7) / 8;
    for (std::size_t byte = 0; byte < nbytes; ++byte) {
        unsigned val = 0;
        for (std::size_t k = 0; k < 8; ++k) {
            const std::size_t bit = byte * 8 + k;
            if (bit < v.size() && v.get(bit)) {
                val |= 1u << (7 - k);
            }
        }
        out += digits[val >> 4];
        out += digits[val & 0xf];
    }
    return out;
}

inline BitVec from_hex(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("hex bit vector must be '<nbits>:<hex>'");
    }
    const std::size_t nbits = std::stoul(std::string(text.substr(0, colon)));
    const std::string_view hex = text.substr(colon + 1);
    if (hex.size() != 2 * ((nbits + 7) / 8)) {
        throw std::invalid_argument("hex payload length does not match bit count");
    }
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') {
            return static_cast<unsigned>(c - '0');
        }
        if (c >= 'a' && c <= 'f') {
            return static_cast<unsigned>(c - 'a' + 10);
        }
        if (c >= 'A' && c <= 'F') {
            return static_cast<unsigned>(c - 'A' + 10);
        }
        throw std::invalid_argument("invalid hex digit");
    };
    BitVec v(nbits);
    for (std::size_t bit = 0; bit < nbits; ++bit) {
        const unsigned byte = nibble(hex[2 * (bit / 8)]) << 4 | nibble(hex[2 * (bit / 8) + 1]);
        v.set(bit, (byte >> (7 - bit % 8)) & 1u);
    }
    return v;
}

/// Shortest round-trip decimal form; identical across runs.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline void write_snapshot_csv_header(std::ostream &os) {
    os << "shot_index,seed,outcome_hex,value\n";
}

inline void write_snapshot_csv_row(std::ostream &os, const Snapshot &s) {
    os << s.shot_index << ',' << s.seed << ',' << to_hex(s.outcome) << ',' << s.value << '\n';
}

} // namespace bwshadow
