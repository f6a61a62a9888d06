// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavcov/geometry.hpp"

namespace uavcov {

inline constexpr int kSchemaVersion = 1;

enum class Architecture
{
    conventional_uav,
    irs_uav,
};

const char* architecture_name(Architecture a);

struct IrsSettings
{
    std::uint32_t elements = 32;  // M = N = elements
    double tx_gain_db = 20.0;
    double rx_gain_db = 20.0;
    double incidence_deg = 45.0;
    double departure_deg = 45.0;
    double reflection_amplitude = 0.9;

    friend bool operator==(const IrsSettings&, const IrsSettings&) = default;
};

// An interfering tier: its density and power feed the coverage expressions,
// and one representative node at `position` contributes to the point SINR.
struct InterferingTier
{
    std::string name;
    double density_per_m2 = 0.0;
    double power_w = 0.0;
    Point3D position;

    friend bool operator==(const InterferingTier&, const InterferingTier&) = default;
};

struct SweepGrid
{
    double start_db = -10.0;
    double stop_db = 30.0;
    double step_db = 1.0;

    friend bool operator==(const SweepGrid&, const SweepGrid&) = default;
};

struct Scenario
{
    std::string name;
    Architecture architecture = Architecture::conventional_uav;
    double carrier_ghz = 2.0;
    // UAV transmit power (conventional) or micro BS feed power towards the IRS.
    double tx_power_w = 1.0;
    double uav_altitude_m = 200.0;
    std::optional<IrsSettings> irs;  // present iff architecture == irs_uav
    double attenuation_mu_db = 3.0;
    double alpha = 2.0;
    double noise_dbm = -90.0;
    double serving_density_per_m2 = 0.0;
    std::vector<InterferingTier> interferers;
    std::optional<NodeLayout> layout;  // unset: default_layout(uav_altitude_m)
    SweepGrid sweep;

    friend bool operator==(const Scenario&, const Scenario&) = default;

    NodeLayout effective_layout() const;
};

// Table 1 densities: 1000 / (pi * 100^2) per m^2 for UAV/IRS and micro BSs,
// a fifth of that for macro BSs.
double reference_density_per_m2();
double macro_density_per_m2();

// Table 1 IRS defaults; the antenna gain is 20 dB at 2 GHz and 14 dB on
// mmWave carriers.
IrsSettings default_irs_settings(double carrier_ghz);

// Macro (30 W) and co-channel micro (8 W) interferers at their reference sites.
std::vector<InterferingTier> default_interferers();

// Throws ValidationError naming the first offending field.
void validate(const Scenario& s);

// Parses a YAML scenario document. Only schema_version, name, architecture,
// carrier_ghz, tx_power_w and uav_altitude_m are required; everything else
// takes the reference defaults. Unknown keys are rejected.
Scenario parse_scenario(std::string_view text);

// Canonical document; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

// Reads and parses a file. Throws IoError if it cannot be read.
Scenario load_scenario_file(const std::filesystem::path& path);

// Canonical preset names in catalog order.
std::vector<std::string> preset_names();

// Short names ("fig3d") mapped to canonical presets.
std::vector<std::pair<std::string, std::string>> preset_aliases();

// Throws CatalogError listing the valid names.
Scenario preset(std::string_view name);

}  // namespace uavcov
