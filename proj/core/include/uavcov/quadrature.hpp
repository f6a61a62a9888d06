// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace uavcov {

struct QuadratureResult
{
    double value = 0.0;
    double abs_error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

// Globally adaptive 15-point Gauss-Kronrod on [a, b]. Bisects the interval
// with the largest error estimate until abs_error <= max(abs_tol, rel_tol*|value|)
// or max_subdivisions is reached. Never throws; callers inspect `converged`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_subdivisions);

}  // namespace uavcov
