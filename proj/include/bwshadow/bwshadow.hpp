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

#pragma once

#include "bwshadow/bitvec.hpp"
#include "bwshadow/clifford.hpp"
#include "bwshadow/estimation.hpp"
#include "bwshadow/exact.hpp"
#include "bwshadow/frame_op.hpp"
#include "bwshadow/io.hpp"
#include "bwshadow/oracle.hpp"
#include "bwshadow/pauli.hpp"
#include "bwshadow/rng.hpp"
#include "bwshadow/stabilizer.hpp"
#include "bwshadow/symplectic.hpp"
