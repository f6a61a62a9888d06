// SPDX-License-Identifier: Apache-2.0
#include "uavcov/derive.hpp"

#include <vector>

#include "uavcov/units.hpp"

namespace uavcov {

DerivedModel derive_model(const Scenario& s)
{
    validate(s);

    DerivedModel d;
    d.layout = s.effective_layout();
    const Frequency carrier = Frequency::from_ghz(s.carrier_ghz);
    const double mu = db_to_linear(Decibel{s.attenuation_mu_db});

    if (s.architecture == Architecture::conventional_uav) {
        ConventionalLink link{s.tx_power_w, carrier, 1.0, mu, distance(d.layout.uav_or_irs, d.layout.user)};
        d.rx_power_w = conventional_rx_power(link);
        d.serving_distance_m = link.distance_m;
        d.link = link;
    } else {
        const CascadeDistances hops = cascade_distances(d.layout);
        const double lambda = wavelength(carrier);
        const IrsSettings& irs = *s.irs;
        IrsLink link;
        link.feed_power_w = s.tx_power_w;
        link.carrier = carrier;
        link.element_len_x_m = lambda / 2.0;
        link.element_len_y_m = lambda / 2.0;
        link.elements_m = irs.elements;
        link.elements_n = irs.elements;
        link.tx_gain_linear = db_to_linear(Decibel{irs.tx_gain_db});
        link.rx_gain_linear = db_to_linear(Decibel{irs.rx_gain_db});
        link.incidence_rad = irs.incidence_deg * kPi / 180.0;
        link.departure_rad = irs.departure_deg * kPi / 180.0;
        link.reflection_amplitude_sq = irs.reflection_amplitude * irs.reflection_amplitude;
        link.d1_m = hops.bs_to_irs;
        link.d2_m = hops.irs_to_user;
        d.rx_power_w = irs_rx_power(link);
        d.serving_distance_m = hops.irs_to_user;
        d.link = link;
    }

    std::vector<double> contributions;
    for (const auto& tier : s.interferers) {
        contributions.push_back(
            conventional_rx_power({tier.power_w, carrier, 1.0, mu, distance(tier.position, d.layout.user)}));
    }
    d.interference = aggregate_interference(contributions);
    d.noise_w = dbm_to_watts(DbmPower{s.noise_dbm});
    d.downlink_sinr = sinr(d.rx_power_w, d.interference, d.noise_w);

    d.model.serving = {s.serving_density_per_m2, s.tx_power_w};
    for (const auto& tier : s.interferers) {
        d.model.interferers.push_back({tier.density_per_m2, tier.power_w});
    }
    d.model.threshold = 1.0;
    d.model.alpha = s.alpha;
    d.model.noise_variance_w = d.noise_w;
    d.model.downlink_sinr = d.downlink_sinr;
    return d;
}

}  // namespace uavcov
