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

#include <string>

#include "divmax/instance.hpp"
#include "divmax/testkit.hpp"

namespace divmax {

// Instance files are JSON:
//   { "labels": ["a","b","c"],
//     "distances": [[0,1,2],[1,0,1],[2,1,0]],
//     "lambda": 1.0,
//     "objective": {"type":"modular","weights":[4,1,0]}
//                | {"type":"coverage","topic_weights":[2,3],"covers":[[0],[0,1],[1]]},
//     "constraint": {"type":"uniform","p":2}
//                 | {"type":"partition","parts":[[0,1],[2]],"capacities":[1,1]} }
// Loading validates the distance matrix (recomputing alpha) and every
// cross-field invariant; malformed input raises SolverError with a one-line
// diagnostic.

Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);

std::string instance_to_json(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

std::string report_to_json(const SolveReport& report, const Instance& inst);
std::string ratio_report_to_json(const RatioReport& report,
                                 const std::string& algorithm, double alpha);
std::string bound_check_to_json(const BoundCheck& check);

}  // namespace divmax
