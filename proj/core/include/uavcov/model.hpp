// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace uavcov {

// One class of transmitters sharing density and power.
struct TierParams
{
    double density_per_m2 = 0.0;
    double tx_power_w = 0.0;

    friend bool operator==(const TierParams&, const TierParams&) = default;
};

// Inputs of the stochastic-geometry coverage expressions.
struct CoverageModel
{
    TierParams serving;
    std::vector<TierParams> interferers;
    double threshold = 1.0;         // SINR threshold, linear ratio
    double alpha = 2.0;             // path-loss exponent
    double noise_variance_w = 0.0;  // sigma^2
    double downlink_sinr = 1.0;     // representative link SINR, linear ratio

    friend bool operator==(const CoverageModel&, const CoverageModel&) = default;
};

// Throws DomainError when any invariant is violated: non-positive density,
// power, threshold or alpha, negative noise, or no interfering tier.
void validate(const CoverageModel& model);

double total_interferer_density(const CoverageModel& model);

}  // namespace uavcov
