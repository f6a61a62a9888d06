// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>

#include "uavcov/geometry.hpp"
#include "uavcov/link_budget.hpp"
#include "uavcov/model.hpp"
#include "uavcov/scenario.hpp"

namespace uavcov {

// A scenario resolved into link objects, the point SINR at the representative
// geometry, and the coverage model fed with that SINR.
struct DerivedModel
{
    NodeLayout layout;
    std::variant<ConventionalLink, IrsLink> link;
    double rx_power_w = 0.0;
    InterferenceSum interference;
    double noise_w = 0.0;
    double downlink_sinr = 0.0;
    // Serving-link length used by the fixed-distance Monte Carlo oracle:
    // UAV -> user, or IRS -> user for the reflected path.
    double serving_distance_m = 0.0;
    CoverageModel model;  // threshold left at 1 (0 dB)
};

// Builds geometry, link budget, point SINR and the coverage model.
// Throws ValidationError for invalid scenarios and GeometryError for
// degenerate layouts.
DerivedModel derive_model(const Scenario& s);

}  // namespace uavcov
