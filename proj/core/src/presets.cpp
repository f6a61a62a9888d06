// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <string>

#include "uavcov/errors.hpp"
#include "uavcov/scenario.hpp"

namespace uavcov {

namespace {

Scenario base(std::string name, Architecture arch, double carrier_ghz, double power_w, double altitude_m)
{
    Scenario s;
    s.name = std::move(name);
    s.architecture = arch;
    s.carrier_ghz = carrier_ghz;
    s.tx_power_w = power_w;
    s.uav_altitude_m = altitude_m;
    s.serving_density_per_m2 = reference_density_per_m2();
    s.interferers = default_interferers();
    if (arch == Architecture::irs_uav) {
        s.irs = default_irs_settings(carrier_ghz);
    }
    return s;
}

Scenario irs(std::string name, double carrier_ghz, double power_w, double altitude_m, std::uint32_t elements)
{
    Scenario s = base(std::move(name), Architecture::irs_uav, carrier_ghz, power_w, altitude_m);
    s.irs->elements = elements;
    return s;
}

std::vector<Scenario> build_catalog()
{
    std::vector<Scenario> out;
    struct Fig1
    {
        const char* tag;
        double altitude_m;
        double irs_power_w;
        std::uint32_t elements;
    };
    for (const Fig1& f : {Fig1{"fig1a", 200.0, 0.1, 32}, Fig1{"fig1b", 200.0, 0.2, 32}, Fig1{"fig1c", 100.0, 0.2, 32},
                          Fig1{"fig1d", 200.0, 0.1, 64}}) {
        const std::string tag = f.tag;
        out.push_back(base(tag + "_conv_0.5W", Architecture::conventional_uav, 2.0, 0.5, f.altitude_m));
        out.push_back(base(tag + "_conv_1W", Architecture::conventional_uav, 2.0, 1.0, f.altitude_m));
        const std::string power = f.irs_power_w == 0.1 ? "0.1W" : "0.2W";
        out.push_back(irs(tag + "_irs_" + power, 2.0, f.irs_power_w, f.altitude_m, f.elements));
    }

    const double carriers[] = {30.0, 55.0, 80.0, 100.0};
    struct Fig2
    {
        const char* tag;
        double power_w;
        double altitude_m;
    };
    for (const Fig2& f : {Fig2{"fig2a", 6.0, 100.0}, Fig2{"fig2b", 8.0, 100.0}, Fig2{"fig2c", 6.0, 50.0},
                          Fig2{"fig2d", 8.0, 50.0}}) {
        for (double c : carriers) {
            out.push_back(base(std::string(f.tag) + "_" + std::to_string(static_cast<int>(c)) + "GHz",
                               Architecture::conventional_uav, c, f.power_w, f.altitude_m));
        }
    }

    struct Fig3
    {
        const char* tag;
        std::uint32_t elements;
        double altitude_m;
    };
    for (const Fig3& f : {Fig3{"fig3a", 128, 100.0}, Fig3{"fig3b", 128, 50.0}, Fig3{"fig3c", 256, 100.0},
                          Fig3{"fig3d", 256, 50.0}}) {
        for (double c : carriers) {
            out.push_back(
                irs(std::string(f.tag) + "_" + std::to_string(static_cast<int>(c)) + "GHz", c, 4.0, f.altitude_m,
                    f.elements));
        }
    }
    return out;
}

const std::vector<Scenario>& catalog()
{
    static const std::vector<Scenario> presets = build_catalog();
    return presets;
}

}  // namespace

std::vector<std::string> preset_names()
{
    std::vector<std::string> names;
    for (const auto& s : catalog()) {
        names.push_back(s.name);
    }
    return names;
}

std::vector<std::pair<std::string, std::string>> preset_aliases()
{
    std::vector<std::pair<std::string, std::string>> out = {
        {"fig1a", "fig1a_irs_0.1W"},
        {"fig1b", "fig1b_irs_0.2W"},
        {"fig1c", "fig1c_irs_0.2W"},
        {"fig1d", "fig1d_irs_0.1W"},
    };
    for (const char* fig : {"fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b", "fig3c", "fig3d"}) {
        out.emplace_back(fig, std::string(fig) + "_30GHz");
    }
    return out;
}

Scenario preset(std::string_view name)
{
    std::string canonical(name);
    for (const auto& [alias, target] : preset_aliases()) {
        if (alias == name) {
            canonical = target;
        }
    }
    const auto& all = catalog();
    const auto it = std::find_if(all.begin(), all.end(), [&](const Scenario& s) { return s.name == canonical; });
    if (it == all.end()) {
        std::vector<std::string> valid = preset_names();
        std::string list;
        for (const auto& n : valid) {
            list += list.empty() ? n : ", " + n;
        }
        throw CatalogError("unknown preset '" + std::string(name) + "'; valid presets: " + list, std::move(valid));
    }
    return *it;
}

}  // namespace uavcov
