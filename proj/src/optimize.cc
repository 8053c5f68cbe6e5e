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

#include "optimize.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <memory>

namespace telesim::detail {

namespace {

using Objective = std::function<double(const std::vector<double> &)>;

double trampoline(const gsl_vector *v, void *params) {
    const auto &objective = *static_cast<const Objective *>(params);
    std::vector<double> x(v->size);
    for (std::size_t i = 0; i < v->size; ++i) {
        x[i] = gsl_vector_get(v, i);
    }
    return objective(x);
}

struct VectorDeleter {
    void operator()(gsl_vector *v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
    void operator()(gsl_multimin_fminimizer *m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

MinimizeResult nelder_mead(
    const Objective &objective, const std::vector<double> &start, double step, int max_iterations, double size_tol) {
    const std::size_t n = start.size();
    MinimizeResult result{start, objective(start), 0};
    if (n == 0 || max_iterations <= 0) {
        return result;
    }

    std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
    std::unique_ptr<gsl_vector, VectorDeleter> steps(gsl_vector_alloc(n));
    for (std::size_t i = 0; i < n; ++i) {
        gsl_vector_set(x.get(), i, start[i]);
    }
    gsl_vector_set_all(steps.get(), step);

    gsl_multimin_function fn;
    fn.n = n;
    fn.f = &trampoline;
    fn.params = const_cast<Objective *>(&objective);

    std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> minimizer(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
    gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), steps.get());

    for (int iter = 1; iter <= max_iterations; ++iter) {
        if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) {
            break;
        }
        result.iterations = iter;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(minimizer.get()), size_tol) == GSL_SUCCESS) {
            break;
        }
    }

    double best = minimizer->fval;
    if (best < result.value) {
        result.value = best;
        for (std::size_t i = 0; i < n; ++i) {
            result.x[i] = gsl_vector_get(minimizer->x, i);
        }
    }
    return result;
}

}  // namespace telesim::detail
