// Copyright 2026 The hopfq8 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Umbrella header.

#pragma once

#include "hopfq8/acceptance.hpp"
#include "hopfq8/algebra.hpp"
#include "hopfq8/enumerate.hpp"
#include "hopfq8/equivariance.hpp"
#include "hopfq8/errors.hpp"
#include "hopfq8/field_arith.hpp"
#include "hopfq8/fixed_algebra.hpp"
#include "hopfq8/group.hpp"
#include "hopfq8/linalg.hpp"
#include "hopfq8/named.hpp"
#include "hopfq8/oracles.hpp"
#include "hopfq8/poly.hpp"
#include "hopfq8/rational.hpp"
#include "hopfq8/wedderburn.hpp"
