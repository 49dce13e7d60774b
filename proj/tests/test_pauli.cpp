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

#include "bwshadow/io.hpp"
#include "bwshadow/pauli.hpp"
#include "bwshadow/rng.hpp"

using namespace bwshadow;

namespace {

BitVec bits_of(std::initializer_list<int> vals) {
    BitVec v(vals.size());
    std::size_t i = 0;
    for (int b : vals) {
        v.set(i++, b != 0);
    }
    return v;
}

PauliString random_pauli(int n, Rng &rng) {
    return PauliString::from_bits(n, rng.bits(2 * static_cast<std::size_t>(n)));
}

} // namespace

TEST_CASE("parse maps letters to (z, x) pairs") {
    const PauliString p = PauliString::parse("ZX");
    CHECK(p.z(0));
    CHECK_FALSE(p.x(0));
    CHECK_FALSE(p.z(1));
    CHECK(p.x(1));

    const PauliString id = PauliString::parse("II");
    CHECK(id.is_identity());
    CHECK_FALSE(id.bits().any());
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::parse("XIZ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliString(3), std::invalid_argument);
    CHECK_THROWS_AS(PauliString(0), std::invalid_argument);
}

TEST_CASE("parse/render round trip") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 * static_cast<int>(1 + rng.below(12));
        const PauliString p = random_pauli(n, rng);
        CHECK(PauliString::parse(p.str()) == p);
    }
}

TEST_CASE("weight vector") {
    CHECK(weight_vector(PauliString::parse("IIII")) == bits_of({0, 0, 0, 0}));
    CHECK(weight_vector(PauliString::parse("YY")) == bits_of({1, 1}));
    CHECK(weight_vector(PauliString::parse("XIZZXIIYIY")) ==
          bits_of({1, 0, 1, 1, 1, 0, 0, 1, 0, 1}));
}

TEST_CASE("brick support follows the pairing (2i, 2i+1) with wraparound") {
    // supported bricks {1, 3, 5} with partition {2, 1} after the wrap merge
    const PauliString fig2 = PauliString::parse("XIZIIZIIIY");
    CHECK(brick_support(fig2, Boundary::periodic).bits == bits_of({1, 0, 1, 0, 1}));

    // per the definition, adjacent-qubit support inside bricks:
    CHECK(brick_support(PauliString::parse("XIZZXIIYIY"), Boundary::periodic).bits ==
          bits_of({1, 1, 0, 1, 1}));

    CHECK_FALSE(brick_support(PauliString::parse("IIIIIIIIII"), Boundary::periodic).bits.any());
    CHECK_FALSE(brick_support(PauliString::parse("IIIIIIIIII"), Boundary::open).bits.any());

    // open boundary forces the wrap brick off
    CHECK(brick_support(PauliString::parse("ZZZZ"), Boundary::open).bits == bits_of({1, 0}));
    CHECK(brick_support(PauliString::parse("ZZZZ"), Boundary::periodic).bits == bits_of({1, 1}));
}

TEST_CASE("partition of the brick support") {
    const PauliString fig2 = PauliString::parse("XIZIIZIIIY");
    const BwPartition p = bw_partition(fig2, Boundary::periodic);
    CHECK(p.parts == std::vector<int>{2, 1});
    CHECK_FALSE(p.is_full_cycle);

    CHECK(bw_partition(PauliString::parse("IIII"), Boundary::periodic).parts.empty());

    const BwPartition full = bw_partition(PauliString::parse("ZZZZZZZZZZ"), Boundary::periodic);
    CHECK(full.is_full_cycle);
    CHECK(full.parts.empty());
}

TEST_CASE("partition sums to the brick weight and respects size limits") {
    Rng rng(23);
    for (int t = 0; t < 400; ++t) {
        const int n = 2 * static_cast<int>(2 + rng.below(10));
        const PauliString v = random_pauli(n, rng);
        for (Boundary b : {Boundary::periodic, Boundary::open}) {
            const BrickSupport s = brick_support(v, b);
            const BwPartition p = bw_partition(s);
            if (p.is_full_cycle) {
                CHECK(b == Boundary::periodic);
                CHECK(s.weight() == n / 2);
            } else {
                CHECK(p.sum() == s.weight());
                for (int part : p.parts) {
                    CHECK(part <= (b == Boundary::open ? n / 2 - 1 : n / 2 - 1));
                }
            }
        }
    }
}

TEST_CASE("open boundary never yields a full cycle") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 * static_cast<int>(2 + rng.below(10));
        CHECK_FALSE(bw_partition(random_pauli(n, rng), Boundary::open).is_full_cycle);
    }
}

TEST_CASE("brick support only depends on the weight vector") {
    Rng rng(37);
    const char letters[3] = {'X', 'Y', 'Z'};
    for (int t = 0; t < 200; ++t) {
        const int n = 2 * static_cast<int>(2 + rng.below(8));
        const PauliString v = random_pauli(n, rng);
        std::string swapped = v.str();
        for (char &c : swapped) {
            if (c != 'I') {
                c = letters[rng.below(3)];
            }
        }
        const PauliString w = PauliString::parse(swapped);
        for (Boundary b : {Boundary::periodic, Boundary::open}) {
            CHECK(brick_support(v, b).bits == brick_support(w, b).bits);
        }
    }
}

TEST_CASE("cyclic rotation leaves the periodic partition multiset unchanged") {
    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 * static_cast<int>(2 + rng.below(8));
        const PauliString v = random_pauli(n, rng);
        const BrickSupport s = brick_support(v, Boundary::periodic);
        const BwPartition base = bw_partition(s);
        const int shift = static_cast<int>(rng.below(static_cast<std::uint64_t>(s.n_bricks)));
        BrickSupport rot = s;
        for (int i = 0; i < s.n_bricks; ++i) {
            rot.bits.set(static_cast<std::size_t>((i + shift) % s.n_bricks),
                         s.bits.get(static_cast<std::size_t>(i)));
        }
        const BwPartition rotated = bw_partition(rot);
        CHECK(rotated.parts == base.parts);
        CHECK(rotated.is_full_cycle == base.is_full_cycle);
    }
}

TEST_CASE("local Clifford support size") {
    CHECK(lc_support_size(PauliString::parse("IIIIII")) == 0);
    CHECK(lc_support_size(PauliString::parse("XIZZXIIYIY")) == 6);
    CHECK(lc_support_size(PauliString::parse("YY")) == 2);
}

TEST_CASE("hex serialization round trip") {
    CHECK(to_hex(bits_of({1, 0, 1, 0})) == "4:a0");
    Rng rng(47);
    for (int t = 0; t < 200; ++t) {
        const std::size_t nbits = 1 + rng.below(130);
        const BitVec v = rng.bits(nbits);
        CHECK(from_hex(to_hex(v)) == v);
    }
    CHECK_THROWS_AS(from_hex("8"), std::invalid_argument);
    CHECK_THROWS_AS(from_hex("8:a"), std::invalid_argument);
    CHECK_THROWS_AS(from_hex("8:zz"), std::invalid_argument);
}
