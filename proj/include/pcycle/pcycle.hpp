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

// Convenience umbrella for the whole toolkit.

#pragma once

#include "pcycle/cycle.hpp"
#include "pcycle/cycle_gen.hpp"
#include "pcycle/errors.hpp"
#include "pcycle/generator.hpp"
#include "pcycle/heuristics.hpp"
#include "pcycle/oracle.hpp"
#include "pcycle/paths.hpp"
#include "pcycle/rational.hpp"
#include "pcycle/solution.hpp"
#include "pcycle/solution_io.hpp"
#include "pcycle/topology.hpp"
#include "pcycle/verify.hpp"
