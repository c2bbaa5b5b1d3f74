// Copyright 2026 The Dicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the numerical library. The CLI front end lives in
// dicke/cli.hpp and pulls in CLI11 and nlohmann json on top of this.

#ifndef DICKE_DICKE_HPP
#define DICKE_DICKE_HPP

#include "dicke/spin.hpp"
#include "dicke/basis.hpp"
#include "dicke/coefficients.hpp"
#include "dicke/ladder.hpp"
#include "dicke/antisym.hpp"
#include "dicke/linalg.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/csv.hpp"
#include "dicke/tables.hpp"
#include "dicke/svg.hpp"
#include "dicke/figures.hpp"

#endif  // DICKE_DICKE_HPP
