// Copyright 2026 The Authors.
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

#pragma once

#include "pcf/bench.hpp"
#include "pcf/forest.hpp"
#include "pcf/graph.hpp"
#include "pcf/instances.hpp"
#include "pcf/io.hpp"
#include "pcf/matching.hpp"
#include "pcf/matroid_union.hpp"
#include "pcf/maxpt.hpp"
#include "pcf/oracle.hpp"
#include "pcf/ratio.hpp"
#include "pcf/solvers.hpp"
