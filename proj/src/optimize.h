// Copyright 2026 The telesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <vector>

namespace telesim::detail {

struct MinimizeResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

/// Nelder-Mead minimisation with an initial simplex of edge `step` around `start`.
/// Stops after `max_iterations` or when the simplex size drops below `size_tol`.
MinimizeResult nelder_mead(
    const std::function<double(const std::vector<double> &)> &objective,
    const std::vector<double> &start,
    double step,
    int max_iterations,
    double size_tol = 1e-12);

}  // namespace telesim::detail
