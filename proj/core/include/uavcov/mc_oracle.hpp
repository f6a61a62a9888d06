// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "uavcov/geometry.hpp"
#include "uavcov/model.hpp"

namespace uavcov {

// Monte Carlo oracle for the coverage expressions: Poisson fields of
// interferers, unit-mean exponential (Rayleigh power) fading on every link.

using RngStream = std::mt19937_64;

// Independent generator per (seed, stream_id). Trial t always draws from
// stream t, so aggregate results do not depend on how trials are scheduled.
RngStream rng_stream(std::uint64_t seed, std::uint64_t stream_id);

struct PppField
{
    std::vector<Point3D> points;  // z = 0
    double density_per_m2 = 0.0;
    double region_radius_m = 0.0;
};

inline constexpr double kDefaultMaxExpectedPoints = 1e7;
inline constexpr double kDefaultOracleRadius = 10'000.0;
inline constexpr double kZ99 = 2.576;

// Homogeneous PPP on the disc of the given radius centred at the origin.
// Throws DomainError for negative inputs and ResourceError when the expected
// point count exceeds max_expected_points.
PppField sample_ppp(double density_per_m2, double radius_m, RngStream& rng,
                    double max_expected_points = kDefaultMaxExpectedPoints);

enum class ServingPlacement
{
    fixed_distance,  // one serving node at serving_distance_m
    random_ppp,      // serving candidates drawn from the serving tier's PPP
};

struct FixedInterferer
{
    double distance_m = 0.0;
    double power_w = 0.0;
};

struct McOptions
{
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 1;
    // Disc radius for the Poisson fields. Unset means kDefaultOracleRadius,
    // which is only accepted for alpha > 2.
    std::optional<double> radius_m;
    ServingPlacement placement = ServingPlacement::fixed_distance;
    double serving_distance_m = 1.0;
    bool rayleigh_fading = true;
    bool ppp_interference = true;
    std::vector<FixedInterferer> fixed_interferers;
    unsigned threads = 1;
    double max_expected_points = kDefaultMaxExpectedPoints;
    // Reject a radius whose truncation-bias estimate exceeds a tenth of the
    // worst-case 99% half-width for the requested trial count.
    bool enforce_tail_bound = true;
};

struct McEstimate
{
    // Fraction of trials in which some serving candidate exceeds the threshold
    // (for a fixed serving node: the fraction with SINR > threshold).
    double p_cov = 0.0;
    std::uint64_t trials = 0;
    double half_width_99 = 0.0;  // kZ99 * sqrt(p(1-p)/trials)
    std::uint64_t seed = 0;

    // 1 - mean number of serving candidates above threshold: the per-trial
    // counterpart of "1 - sum lambda * integral" in the union-bound form.
    double complement_union = 0.0;
    double complement_union_half_width_99 = 0.0;  // from the sample variance of the counts

    double radius_m = 0.0;
    double tail_estimate = 0.0;  // estimated truncation bias; +inf when alpha <= 2
    bool radius_dependent = false;
};

// Per-link exceedance probability at distance r in an unbounded Poisson field
// with Rayleigh fading:
//   exp(-C(alpha) * (T/P)^(2/alpha) * r^2 * sum(lambda_i P_i^(2/alpha)) - T sigma^2 r^alpha / P),
// with C(alpha) = pi * (2 pi / alpha) / sin(2 pi / alpha). Requires alpha > 2.
double ppp_link_coverage(const CoverageModel& model, double r);

// First-order estimate of the bias introduced by truncating the fields to a
// disc of `radius_m` (plus, for random serving placement, the serving
// candidates lost outside it). +inf when alpha <= 2.
double truncation_tail_estimate(const CoverageModel& model, const McOptions& options, double radius_m);

// Radius >= start_m whose tail estimate is below `target`, within 0.1% of the
// smallest such radius (assuming the estimate decreases with radius).
double radius_for_tail(const CoverageModel& model, const McOptions& options, double target,
                       double start_m = 1.0);

// Throws DomainError for trials == 0 or invalid models, ValidationError when
// alpha <= 2 and no radius is given or when the tail bound is violated, and
// ResourceError when a field would exceed the point budget.
McEstimate empirical_coverage(const CoverageModel& model, const McOptions& options);

// Same draws for every threshold (common random numbers), so the estimates
// are exactly non-increasing in threshold. thresholds are linear ratios,
// non-decreasing.
std::vector<McEstimate> empirical_coverage_sweep(const CoverageModel& model_template,
                                                 std::span<const double> thresholds,
                                                 const McOptions& options);

}  // namespace uavcov
