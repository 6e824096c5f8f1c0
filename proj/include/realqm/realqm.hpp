// Copyright 2026 The realqm Authors
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

#ifndef REALQM_REALQM_HPP_
#define REALQM_REALQM_HPP_

#include "realqm/checks.hpp"
#include "realqm/decompositions.hpp"
#include "realqm/dynamics.hpp"
#include "realqm/errors.hpp"
#include "realqm/expm.hpp"
#include "realqm/matrix.hpp"
#include "realqm/oscillator.hpp"
#include "realqm/random.hpp"
#include "realqm/realification.hpp"
#include "realqm/states.hpp"
#include "realqm/tensor.hpp"

#endif  // REALQM_REALQM_HPP_
