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

#include "telesim/tolerance.h"

#include <cstdlib>
#include <string>

namespace telesim {

double tau_num() {
    static const double value = [] {
        const char *env = std::getenv("TELESIM_TOLERANCE");
        if (env == nullptr || *env == '\0') {
            return 1e-10;
        }
        char *end = nullptr;
        double parsed = std::strtod(env, &end);
        if (end == env || !(parsed > 0.0)) {
            return 1e-10;
        }
        return parsed;
    }();
    return value;
}

}  // namespace telesim
