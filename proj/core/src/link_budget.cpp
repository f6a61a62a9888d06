// SPDX-License-Identifier: Apache-2.0
#include "uavcov/link_budget.hpp"

#include <cmath>
#include <string>

#include "uavcov/errors.hpp"

namespace uavcov {

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be positive and finite");
    }
}

}  // namespace

double conventional_rx_power(const ConventionalLink& link)
{
    require_positive(link.tx_power_w, "transmit power");
    require_positive(link.attenuation_linear, "attenuation factor");
    require_positive(link.distance_m, "link distance");
    const double k0 = free_space_constant(link.carrier, link.ref_distance_m);
    if (link.distance_m < link.ref_distance_m) {
        throw DomainError("link distance is inside the reference distance");
    }
    const double d = link.distance_m;
    return link.tx_power_w / (k0 * d * d * link.attenuation_linear);
}

double scattering_gain(double element_len_x_m, double element_len_y_m, double wavelength_m)
{
    require_positive(element_len_x_m, "element length");
    require_positive(element_len_y_m, "element width");
    require_positive(wavelength_m, "wavelength");
    return 4.0 * kPi * element_len_x_m * element_len_y_m / (wavelength_m * wavelength_m);
}

double irs_rx_power(const IrsLink& link)
{
    require_positive(link.feed_power_w, "feed power");
    require_positive(link.tx_gain_linear, "IRS transmit gain");
    require_positive(link.rx_gain_linear, "IRS receive gain");
    if (link.elements_m == 0 || link.elements_n == 0) {
        throw DomainError("IRS element counts must be positive");
    }
    if (!(link.reflection_amplitude_sq > 0.0) || link.reflection_amplitude_sq > 1.0) {
        throw DomainError("reflection amplitude squared must lie in (0, 1]");
    }
    if (!(link.d1_m > 0.0) || !(link.d2_m > 0.0)) {
        throw GeometryError("IRS hop distances must be positive");
    }
    const double cos_t = std::cos(link.incidence_rad);
    const double cos_r = std::cos(link.departure_rad);
    if (!(link.incidence_rad >= 0.0 && link.incidence_rad < kPi / 2) ||
        !(link.departure_rad >= 0.0 && link.departure_rad < kPi / 2)) {
        throw DomainError("IRS angles must lie in [0, 90) degrees");
    }

    const double lambda = wavelength(link.carrier);
    const double g_sct = scattering_gain(link.element_len_x_m, link.element_len_y_m, lambda);
    const double m2 = static_cast<double>(link.elements_m) * link.elements_m;
    const double n2 = static_cast<double>(link.elements_n) * link.elements_n;
    const double hops = link.d1_m * link.d2_m;

    const double numerator = link.element_len_x_m * link.element_len_y_m * lambda * lambda * m2 * n2 *
                             link.tx_gain_linear * link.rx_gain_linear * g_sct * cos_t * cos_r *
                             link.reflection_amplitude_sq;
    const double denominator = hops * hops * 64.0 * kPi * kPi * kPi;
    return numerator / denominator * link.feed_power_w;
}

double sinr(double rx_power_w, InterferenceSum interference, double noise_w)
{
    require_positive(noise_w, "noise power");
    require_positive(rx_power_w, "received power");
    if (!(interference.total_w >= 0.0) || !std::isfinite(interference.total_w)) {
        throw DomainError("interference must be non-negative and finite");
    }
    return rx_power_w / (interference.total_w + noise_w);
}

InterferenceSum aggregate_interference(std::span<const double> contributions_w)
{
    InterferenceSum sum;
    for (double c : contributions_w) {
        if (!(c >= 0.0) || !std::isfinite(c)) {
            throw DomainError("interference contributions must be non-negative and finite");
        }
        sum.total_w += c;
    }
    return sum;
}

}  // namespace uavcov
