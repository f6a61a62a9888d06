// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "uavcov/units.hpp"

namespace uavcov {

// Direct UAV -> user downlink.
struct ConventionalLink
{
    double tx_power_w = 0.0;
    Frequency carrier;
    double ref_distance_m = 1.0;
    double attenuation_linear = 1.0;  // mu, already converted from dB
    double distance_m = 0.0;
};

// Micro BS -> IRS -> user reflected downlink (far-field plate model).
struct IrsLink
{
    double feed_power_w = 0.0;
    Frequency carrier;
    double element_len_x_m = 0.0;
    double element_len_y_m = 0.0;
    std::uint32_t elements_m = 1;
    std::uint32_t elements_n = 1;
    double tx_gain_linear = 1.0;
    double rx_gain_linear = 1.0;
    double incidence_rad = 0.0;
    double departure_rad = 0.0;
    double reflection_amplitude_sq = 1.0;
    double d1_m = 0.0;  // BS -> IRS
    double d2_m = 0.0;  // IRS -> user
};

struct InterferenceSum
{
    double total_w = 0.0;
};

// P_t / (K0 * d^2 * mu). Throws DomainError if d < d0.
double conventional_rx_power(const ConventionalLink& link);

// 4*pi*dx*dy / lambda^2.
double scattering_gain(double element_len_x_m, double element_len_y_m, double wavelength_m);

// dx*dy*lambda^2*M^2*N^2*Gt*Gr*Gsct*cos(theta_t)*cos(theta_r)*A^2 / ((d1*d2)^2 * 64*pi^3) * P.
// Throws GeometryError for zero hop lengths and DomainError for angles at or
// beyond 90 degrees.
double irs_rx_power(const IrsLink& link);

double sinr(double rx_power_w, InterferenceSum interference, double noise_w);

InterferenceSum aggregate_interference(std::span<const double> contributions_w);

}  // namespace uavcov
