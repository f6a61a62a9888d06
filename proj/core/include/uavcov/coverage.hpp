// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uavcov/mc_oracle.hpp"
#include "uavcov/model.hpp"

namespace uavcov {

// 1 - exp(-pi * S_D^(2/alpha) * lambda_serving * S_thr^(-2/alpha) / sum(lambda_interferers)).
// Throws ModelError if the interferer densities sum to zero.
double coverage_closed_form(const CoverageModel& model);

// exp(-s^(2/alpha) * sum(lambda * P^(2/alpha))) over the given tiers.
double laplace_interference(double s, std::span<const TierParams> tiers, double alpha);

struct QuadratureSettings
{
    double abs_tol = 1e-15;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;
    // Upper bound on the neglected radial tail beyond the truncation radius.
    double tail_tolerance = 1e-12;
};

enum class IntegrandForm
{
    printed,          // interference-limited theorem integrand
    noise_augmented,  // extra exp(-(S_thr/P) * sigma^2 * r^alpha) factor
};

struct IntegralResult
{
    double p_cov = 0.0;            // clamped to [0, 1]
    double raw = 0.0;              // 1 - lambda * 2*pi * radial_integral, unclamped
    double radial_integral = 0.0;  // int_0^R r * integrand(r) dr
    double error_estimate = 0.0;
    double truncation_radius = 0.0;
    int subdivisions = 0;
};

// Product of the two exponentials in the theorem integrand at radius r
// (without the 2*pi*r Jacobian). Equals 1 at r = 0.
double coverage_integrand(const CoverageModel& model, double r, IntegrandForm form = IntegrandForm::printed);

// 1 - lambda_serving * 2*pi * int_0^inf r * integrand(r) dr, by adaptive
// quadrature on [0, R] where R makes the Gaussian tail below tail_tolerance.
// Throws NumericalError (carrying the achieved error) if the quadrature does
// not converge.
IntegralResult coverage_integral(const CoverageModel& model, const QuadratureSettings& quad = {},
                                 IntegrandForm form = IntegrandForm::printed);

enum class Method
{
    closed_form,
    integral,
    monte_carlo,
};

// "closed-form", "integral", "mc".
const char* method_name(Method m);
// Inverse of method_name; throws DomainError on an unknown name.
Method parse_method(const std::string& name);

struct CurveSample
{
    double threshold_db = 0.0;
    double p_cov = 0.0;

    friend bool operator==(const CurveSample&, const CurveSample&) = default;
};

struct CoverageCurve
{
    Method method = Method::closed_form;
    std::vector<CurveSample> samples;
    std::string scenario_name;
    std::map<std::string, std::string> metadata;
};

struct SweepOptions
{
    QuadratureSettings quadrature;
    IntegrandForm integrand = IntegrandForm::printed;
    McOptions monte_carlo;
};

// One sample per threshold (dB), evaluated with the model's threshold
// replaced. Thresholds must be strictly increasing (DomainError otherwise).
// Per-point failures are rethrown with the offending threshold in the message.
CoverageCurve sweep(const CoverageModel& model_template, std::span<const double> thresholds_db, Method method,
                    const SweepOptions& options = {});

// Thresholds start, start+step, ... up to and including stop (within step/1e6).
std::vector<double> threshold_grid(double start_db, double stop_db, double step_db);

inline constexpr double kTolerableCoverageLevel = 0.55;

struct TolerableThreshold
{
    std::optional<double> threshold_db;  // unset when no sample reaches the level
    double p_cov = 0.0;                  // coverage at threshold_db
    bool saturated = false;              // the last grid point still qualifies
};

// Largest sampled threshold whose coverage is at least `level`.
TolerableThreshold tolerable_threshold(const CoverageCurve& curve, double level = kTolerableCoverageLevel);

}  // namespace uavcov
