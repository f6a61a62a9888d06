// SPDX-License-Identifier: Apache-2.0
#include "uavcov/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "uavcov/errors.hpp"
#include "uavcov/format.hpp"
#include "uavcov/units.hpp"

namespace uavcov {

namespace {

std::string join(const std::string& parent, const std::string& key)
{
    return parent.empty() ? key : parent + "." + key;
}

void reject_unknown(const YAML::Node& map, const std::string& path, std::initializer_list<const char*> allowed)
{
    const std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto& kv : map) {
        const std::string key = kv.first.as<std::string>();
        if (!known.contains(key)) {
            throw ValidationError(join(path, key), "unknown key");
        }
    }
}

YAML::Node require_map(const YAML::Node& node, const std::string& path)
{
    if (!node.IsMap()) {
        throw ValidationError(path, "expected a mapping");
    }
    return node;
}

std::string scalar(const YAML::Node& node, const std::string& path)
{
    if (!node.IsScalar()) {
        throw ValidationError(path, "expected a scalar value");
    }
    return node.Scalar();
}

double number(const YAML::Node& node, const std::string& path)
{
    const std::string text = scalar(node, path);
    double v = 0.0;
    if (!parse_double(text, v)) {
        throw ValidationError(path, "expected a number, got '" + text + "'");
    }
    return v;
}

std::int64_t integer(const YAML::Node& node, const std::string& path)
{
    const std::string text = scalar(node, path);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw ValidationError(path, "expected an integer, got '" + text + "'");
    }
    return v;
}

Point3D point(const YAML::Node& node, const std::string& path)
{
    if (!node.IsSequence() || node.size() != 3) {
        throw ValidationError(path, "expected [x, y, z]");
    }
    return {number(node[0], path + "[0]"), number(node[1], path + "[1]"), number(node[2], path + "[2]")};
}

template <typename F>
void optional_field(const YAML::Node& map, const char* key, const std::string& path, F&& apply)
{
    if (const YAML::Node n = map[key]) {
        apply(n, join(path, key));
    }
}

YAML::Node required(const YAML::Node& map, const char* key)
{
    const YAML::Node n = map[key];
    if (!n) {
        throw ValidationError(key, "missing required key");
    }
    return n;
}

Architecture parse_architecture(const std::string& text, const std::string& path)
{
    if (text == "conventional_uav") {
        return Architecture::conventional_uav;
    }
    if (text == "irs_uav") {
        return Architecture::irs_uav;
    }
    throw ValidationError(path, "expected conventional_uav or irs_uav, got '" + text + "'");
}

void check_positive(double v, const std::string& path)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ValidationError(path, "must be positive and finite, got " + format_double(v));
    }
}

void check_finite(double v, const std::string& path)
{
    if (!std::isfinite(v)) {
        throw ValidationError(path, "must be finite");
    }
}

void check_position(const Point3D& p, const std::string& path)
{
    try {
        validate_position(p);
    } catch (const Error& e) {
        throw ValidationError(path, e.what());
    }
}

YAML::Emitter& emit_point(YAML::Emitter& out, const Point3D& p)
{
    out << YAML::Flow << YAML::BeginSeq << format_double(p.x) << format_double(p.y) << format_double(p.z)
        << YAML::EndSeq;
    return out;
}

}  // namespace

const char* architecture_name(Architecture a)
{
    return a == Architecture::irs_uav ? "irs_uav" : "conventional_uav";
}

NodeLayout Scenario::effective_layout() const
{
    return layout.value_or(default_layout(uav_altitude_m));
}

double reference_density_per_m2()
{
    return 1000.0 / (kPi * 100.0 * 100.0);
}

double macro_density_per_m2()
{
    return reference_density_per_m2() / 5.0;
}

IrsSettings default_irs_settings(double carrier_ghz)
{
    IrsSettings s;
    const double gain = carrier_ghz > 6.0 ? 14.0 : 20.0;
    s.tx_gain_db = gain;
    s.rx_gain_db = gain;
    return s;
}

std::vector<InterferingTier> default_interferers()
{
    return {
        {"macro_bs", macro_density_per_m2(), 30.0, {kMacroCellWidth + kMicroCellHalfWidth, 0.0, kMacroBsHeight}},
        {"micro_bs", reference_density_per_m2(), 8.0, {6.0 * kMicroCellHalfWidth, 0.0, kMicroBsHeight}},
    };
}

void validate(const Scenario& s)
{
    if (s.name.empty()) {
        throw ValidationError("name", "must not be empty");
    }
    check_positive(s.carrier_ghz, "carrier_ghz");
    check_positive(s.tx_power_w, "tx_power_w");
    check_positive(s.uav_altitude_m, "uav_altitude_m");
    if (s.architecture == Architecture::irs_uav && !s.irs) {
        throw ValidationError("irs", "required for irs_uav scenarios");
    }
    if (s.architecture == Architecture::conventional_uav && s.irs) {
        throw ValidationError("irs", "only allowed for irs_uav scenarios");
    }
    if (s.irs) {
        const IrsSettings& irs = *s.irs;
        if (irs.elements == 0) {
            throw ValidationError("irs.elements", "must be at least 1");
        }
        check_finite(irs.tx_gain_db, "irs.tx_gain_db");
        check_finite(irs.rx_gain_db, "irs.rx_gain_db");
        if (!(irs.incidence_deg >= 0.0 && irs.incidence_deg < 90.0)) {
            throw ValidationError("irs.incidence_deg", "must lie in [0, 90)");
        }
        if (!(irs.departure_deg >= 0.0 && irs.departure_deg < 90.0)) {
            throw ValidationError("irs.departure_deg", "must lie in [0, 90)");
        }
        if (!(irs.reflection_amplitude > 0.0 && irs.reflection_amplitude <= 1.0)) {
            throw ValidationError("irs.reflection_amplitude", "must lie in (0, 1]");
        }
    }
    check_finite(s.attenuation_mu_db, "attenuation_mu_db");
    check_positive(s.alpha, "alpha");
    check_finite(s.noise_dbm, "noise_dbm");
    check_positive(s.serving_density_per_m2, "serving_density_per_m2");
    if (s.interferers.empty()) {
        throw ValidationError("interferers", "at least one interfering tier is required");
    }
    for (std::size_t i = 0; i < s.interferers.size(); ++i) {
        const std::string path = "interferers[" + std::to_string(i) + "]";
        const InterferingTier& t = s.interferers[i];
        if (t.name.empty()) {
            throw ValidationError(path + ".name", "must not be empty");
        }
        check_positive(t.density_per_m2, path + ".density_per_m2");
        check_positive(t.power_w, path + ".power_w");
        check_position(t.position, path + ".position");
    }
    if (s.layout) {
        check_position(s.layout->macro_bs, "layout.macro_bs");
        check_position(s.layout->micro_bs, "layout.micro_bs");
        check_position(s.layout->uav_or_irs, "layout.uav_or_irs");
        check_position(s.layout->user, "layout.user");
    }
    check_finite(s.sweep.start_db, "sweep.start_db");
    check_finite(s.sweep.stop_db, "sweep.stop_db");
    check_positive(s.sweep.step_db, "sweep.step_db");
    if (s.sweep.stop_db < s.sweep.start_db) {
        throw ValidationError("sweep.stop_db", "must not be below start_db");
    }
}

Scenario parse_scenario(std::string_view text)
{
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ValidationError("<document>", std::string("malformed document: ") + e.what());
    }
    require_map(root, "<document>");
    reject_unknown(root, "",
                   {"schema_version", "name", "architecture", "carrier_ghz", "tx_power_w", "uav_altitude_m", "irs",
                    "attenuation_mu_db", "alpha", "noise_dbm", "serving_density_per_m2", "interferers", "layout",
                    "sweep"});

    const std::int64_t version = integer(required(root, "schema_version"), "schema_version");
    if (version != kSchemaVersion) {
        throw ValidationError("schema_version", "unsupported version " + std::to_string(version));
    }

    Scenario s;
    s.name = scalar(required(root, "name"), "name");
    s.architecture = parse_architecture(scalar(required(root, "architecture"), "architecture"), "architecture");
    s.carrier_ghz = number(required(root, "carrier_ghz"), "carrier_ghz");
    s.tx_power_w = number(required(root, "tx_power_w"), "tx_power_w");
    s.uav_altitude_m = number(required(root, "uav_altitude_m"), "uav_altitude_m");
    s.serving_density_per_m2 = reference_density_per_m2();
    s.interferers = default_interferers();
    if (s.architecture == Architecture::irs_uav) {
        s.irs = default_irs_settings(s.carrier_ghz);
    }

    optional_field(root, "irs", "", [&](const YAML::Node& n, const std::string& path) {
        require_map(n, path);
        reject_unknown(n, path,
                       {"elements", "tx_gain_db", "rx_gain_db", "incidence_deg", "departure_deg",
                        "reflection_amplitude"});
        IrsSettings irs = s.irs.value_or(default_irs_settings(s.carrier_ghz));
        optional_field(n, "elements", path, [&](const YAML::Node& v, const std::string& p) {
            const std::int64_t e = integer(v, p);
            if (e < 1 || e > 1'000'000) {
                throw ValidationError(p, "must lie in [1, 1000000]");
            }
            irs.elements = static_cast<std::uint32_t>(e);
        });
        optional_field(n, "tx_gain_db", path, [&](const YAML::Node& v, const std::string& p) { irs.tx_gain_db = number(v, p); });
        optional_field(n, "rx_gain_db", path, [&](const YAML::Node& v, const std::string& p) { irs.rx_gain_db = number(v, p); });
        optional_field(n, "incidence_deg", path, [&](const YAML::Node& v, const std::string& p) { irs.incidence_deg = number(v, p); });
        optional_field(n, "departure_deg", path, [&](const YAML::Node& v, const std::string& p) { irs.departure_deg = number(v, p); });
        optional_field(n, "reflection_amplitude", path,
                       [&](const YAML::Node& v, const std::string& p) { irs.reflection_amplitude = number(v, p); });
        s.irs = irs;
    });
    optional_field(root, "attenuation_mu_db", "", [&](const YAML::Node& v, const std::string& p) { s.attenuation_mu_db = number(v, p); });
    optional_field(root, "alpha", "", [&](const YAML::Node& v, const std::string& p) { s.alpha = number(v, p); });
    optional_field(root, "noise_dbm", "", [&](const YAML::Node& v, const std::string& p) { s.noise_dbm = number(v, p); });
    optional_field(root, "serving_density_per_m2", "",
                   [&](const YAML::Node& v, const std::string& p) { s.serving_density_per_m2 = number(v, p); });
    optional_field(root, "interferers", "", [&](const YAML::Node& n, const std::string& path) {
        if (!n.IsSequence()) {
            throw ValidationError(path, "expected a list of tiers");
        }
        s.interferers.clear();
        for (std::size_t i = 0; i < n.size(); ++i) {
            const std::string p = path + "[" + std::to_string(i) + "]";
            const YAML::Node t = require_map(n[i], p);
            reject_unknown(t, p, {"name", "density_per_m2", "power_w", "position"});
            InterferingTier tier;
            for (const char* key : {"name", "density_per_m2", "power_w", "position"}) {
                if (!t[key]) {
                    throw ValidationError(p + "." + key, "missing required key");
                }
            }
            tier.name = scalar(t["name"], p + ".name");
            tier.density_per_m2 = number(t["density_per_m2"], p + ".density_per_m2");
            tier.power_w = number(t["power_w"], p + ".power_w");
            tier.position = point(t["position"], p + ".position");
            s.interferers.push_back(std::move(tier));
        }
    });
    optional_field(root, "layout", "", [&](const YAML::Node& n, const std::string& path) {
        require_map(n, path);
        reject_unknown(n, path, {"macro_bs", "micro_bs", "uav_or_irs", "user"});
        NodeLayout layout = default_layout(s.uav_altitude_m);
        optional_field(n, "macro_bs", path, [&](const YAML::Node& v, const std::string& p) { layout.macro_bs = point(v, p); });
        optional_field(n, "micro_bs", path, [&](const YAML::Node& v, const std::string& p) { layout.micro_bs = point(v, p); });
        optional_field(n, "uav_or_irs", path, [&](const YAML::Node& v, const std::string& p) { layout.uav_or_irs = point(v, p); });
        optional_field(n, "user", path, [&](const YAML::Node& v, const std::string& p) { layout.user = point(v, p); });
        s.layout = layout;
    });
    optional_field(root, "sweep", "", [&](const YAML::Node& n, const std::string& path) {
        require_map(n, path);
        reject_unknown(n, path, {"start_db", "stop_db", "step_db"});
        optional_field(n, "start_db", path, [&](const YAML::Node& v, const std::string& p) { s.sweep.start_db = number(v, p); });
        optional_field(n, "stop_db", path, [&](const YAML::Node& v, const std::string& p) { s.sweep.stop_db = number(v, p); });
        optional_field(n, "step_db", path, [&](const YAML::Node& v, const std::string& p) { s.sweep.step_db = number(v, p); });
    });

    validate(s);
    return s;
}

std::string serialize_scenario(const Scenario& s)
{
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "schema_version" << YAML::Value << kSchemaVersion;
    out << YAML::Key << "name" << YAML::Value << YAML::DoubleQuoted << s.name;
    out << YAML::Key << "architecture" << YAML::Value << architecture_name(s.architecture);
    out << YAML::Key << "carrier_ghz" << YAML::Value << format_double(s.carrier_ghz);
    out << YAML::Key << "tx_power_w" << YAML::Value << format_double(s.tx_power_w);
    out << YAML::Key << "uav_altitude_m" << YAML::Value << format_double(s.uav_altitude_m);
    if (s.irs) {
        out << YAML::Key << "irs" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "elements" << YAML::Value << s.irs->elements;
        out << YAML::Key << "tx_gain_db" << YAML::Value << format_double(s.irs->tx_gain_db);
        out << YAML::Key << "rx_gain_db" << YAML::Value << format_double(s.irs->rx_gain_db);
        out << YAML::Key << "incidence_deg" << YAML::Value << format_double(s.irs->incidence_deg);
        out << YAML::Key << "departure_deg" << YAML::Value << format_double(s.irs->departure_deg);
        out << YAML::Key << "reflection_amplitude" << YAML::Value << format_double(s.irs->reflection_amplitude);
        out << YAML::EndMap;
    }
    out << YAML::Key << "attenuation_mu_db" << YAML::Value << format_double(s.attenuation_mu_db);
    out << YAML::Key << "alpha" << YAML::Value << format_double(s.alpha);
    out << YAML::Key << "noise_dbm" << YAML::Value << format_double(s.noise_dbm);
    out << YAML::Key << "serving_density_per_m2" << YAML::Value << format_double(s.serving_density_per_m2);
    out << YAML::Key << "interferers" << YAML::Value << YAML::BeginSeq;
    for (const auto& t : s.interferers) {
        out << YAML::BeginMap;
        out << YAML::Key << "name" << YAML::Value << YAML::DoubleQuoted << t.name;
        out << YAML::Key << "density_per_m2" << YAML::Value << format_double(t.density_per_m2);
        out << YAML::Key << "power_w" << YAML::Value << format_double(t.power_w);
        out << YAML::Key << "position" << YAML::Value;
        emit_point(out, t.position);
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    if (s.layout) {
        out << YAML::Key << "layout" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "macro_bs" << YAML::Value;
        emit_point(out, s.layout->macro_bs);
        out << YAML::Key << "micro_bs" << YAML::Value;
        emit_point(out, s.layout->micro_bs);
        out << YAML::Key << "uav_or_irs" << YAML::Value;
        emit_point(out, s.layout->uav_or_irs);
        out << YAML::Key << "user" << YAML::Value;
        emit_point(out, s.layout->user);
        out << YAML::EndMap;
    }
    out << YAML::Key << "sweep" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "start_db" << YAML::Value << format_double(s.sweep.start_db);
    out << YAML::Key << "stop_db" << YAML::Value << format_double(s.sweep.stop_db);
    out << YAML::Key << "step_db" << YAML::Value << format_double(s.sweep.step_db);
    out << YAML::EndMap;
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

Scenario load_scenario_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open scenario file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading scenario file " + path.string());
    }
    return parse_scenario(buffer.str());
}

}  // namespace uavcov
