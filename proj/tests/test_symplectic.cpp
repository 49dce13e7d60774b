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
#include <set>
#include <string>

#include "bwshadow/rng.hpp"
#include "bwshadow/symplectic.hpp"

using namespace bwshadow;

namespace {

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

TEST_CASE("symplectic form pairs adjacent coordinates") {
    BitVec z1 = BitVec::basis(4, 0);
    BitVec x1 = BitVec::basis(4, 1);
    BitVec z2 = BitVec::basis(4, 2);
    CHECK(symplectic_inner(z1, x1));
    CHECK_FALSE(symplectic_inner(z1, z2));
    CHECK_FALSE(symplectic_inner(z1, z1));
}

TEST_CASE("transvections move x to y") {
    Rng rng(3);
    for (int t = 0; t < 500; ++t) {
        const std::size_t nn = 2 * (1 + rng.below(8));
        const BitVec x = rng.nonzero_bits(nn);
        const BitVec y = rng.nonzero_bits(nn);
        const auto [h1, h2] = find_transvection(x, y);
        CHECK(transvection(h2, transvection(h1, x)) == y);
    }
}

TEST_CASE("group order") {
    CHECK(sp_order(1) == 6);
    CHECK(sp_order(2) == 720);
    CHECK(sp_order(3) == 1451520);
}

TEST_CASE("index enumeration of Sp(2,2) is exhaustive") {
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < 6; ++i) {
        const SymplecticMatrix g = symplectic_from_index(i, 1);
        CHECK(g.is_symplectic());
        seen.insert(key_of(g));
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("index enumeration of Sp(4,2) is exhaustive") {
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < 720; ++i) {
        const SymplecticMatrix g = symplectic_from_index(i, 2);
        CHECK(g.is_symplectic());
        seen.insert(key_of(g));
    }
    CHECK(seen.size() == 720);
}

TEST_CASE("random elements are symplectic at many sizes") {
    Rng rng(7);
    for (int nq : {1, 2, 3, 8, 32}) {
        for (int t = 0; t < 10; ++t) {
            CHECK(random_symplectic(nq, rng).is_symplectic());
        }
    }
}

TEST_CASE("sampling is deterministic per seed") {
    Rng a(123), b(123);
    CHECK(random_symplectic(3, a) == random_symplectic(3, b));
    Rng c(124);
    CHECK_FALSE(random_symplectic(3, a) == random_symplectic(3, c));
}

TEST_CASE("matrix application is linear and invertible on basis images") {
    Rng rng(9);
    const SymplecticMatrix g = random_symplectic(4, rng);
    const BitVec u = rng.bits(8);
    const BitVec v = rng.bits(8);
    CHECK(g.apply(u ^ v) == (g.apply(u) ^ g.apply(v)));
    CHECK(symplectic_inner(g.apply(u), g.apply(v)) == symplectic_inner(u, v));
}
