// SPDX-License-Identifier: Apache-2.0
#include "uavcov_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "uavcov/coverage.hpp"
#include "uavcov/derive.hpp"
#include "uavcov/errors.hpp"
#include "uavcov/format.hpp"
#include "uavcov/mc_oracle.hpp"
#include "uavcov/scenario.hpp"
#include "uavcov/units.hpp"
#include "uavcov/version.hpp"

namespace uavcov::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr const char* kStdout = "-";
constexpr const char* kManifestSchema = "uavcov-run-manifest/1";

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string command;
    std::string preset;
    std::string scenario_path;
    std::vector<std::string> items;
    std::vector<std::string> presets;
    std::vector<std::string> scenario_paths;
    std::string method = "closed-form";
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 1;
    std::optional<double> radius;
    std::string serving = "random";
    unsigned threads = 1;
    bool with_noise = false;
    double tolerance = 1e-3;
    std::vector<double> thresholds_db;
    std::string show;
    std::string out;
    std::string manifest;
    std::string replay_manifest;
};

struct Artifact
{
    std::string target;  // file path, or kStdout
    std::string content;
};

struct Execution
{
    std::vector<Artifact> artifacts;
    std::vector<std::pair<std::string, std::string>> scenarios;  // name, hash
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    Json metadata = Json::object();
    int exit_code = kExitOk;
};

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string fixed(double v, int digits)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
    return std::string(buf, res.ptr);
}

std::unique_ptr<CLI::App> make_app(Options& o)
{
    auto app = std::make_unique<CLI::App>("Coverage probability of conventional and IRS-assisted UAV links", "uavcov");
    app->require_subcommand(1);
    app->set_version_flag("--version", kVersion);

    auto add_source = [&](CLI::App* sub) {
        auto* p = sub->add_option("--preset", o.preset, "Bundled scenario name (see `uavcov presets`)");
        auto* s = sub->add_option("--scenario", o.scenario_path, "Scenario file (YAML)");
        p->excludes(s);
    };
    auto add_mc = [&](CLI::App* sub) {
        sub->add_option("--trials", o.trials, "Monte Carlo trials")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1'000'000'000}));
        sub->add_option("--seed", o.seed, "Monte Carlo seed");
        sub->add_option("--radius", o.radius, "Disc radius for the Poisson fields, metres")->check(CLI::PositiveNumber);
        sub->add_option("--serving", o.serving, "Serving node placement")->check(CLI::IsMember({"fixed", "random"}));
        sub->add_option("--threads", o.threads, "Worker threads for Monte Carlo")->check(CLI::Range(1u, 256u));
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "Output file (default: stdout)");
        sub->add_option("--manifest", o.manifest, "Run manifest path (default: <out>.manifest.json)");
    };

    auto* curve = app->add_subcommand("curve", "Coverage probability over the scenario's threshold sweep");
    add_source(curve);
    curve->add_option("--method", o.method, "Evaluation method")->check(CLI::IsMember({"closed-form", "integral", "mc"}));
    curve->add_flag("--with-noise", o.with_noise, "Add the noise factor to the integral");
    add_mc(curve);
    add_out(curve);

    auto* compare = app->add_subcommand("compare", "Side-by-side curves and tolerable thresholds");
    compare->add_option("items", o.items, "Preset names or scenario files (*.yaml, *.yml)");
    compare->add_option("--preset", o.presets, "Bundled scenario (repeatable)");
    compare->add_option("--scenario", o.scenario_paths, "Scenario file (repeatable)");
    compare->add_option("--method", o.method, "Evaluation method")->check(CLI::IsMember({"closed-form", "integral", "mc"}));
    compare->add_flag("--with-noise", o.with_noise, "Add the noise factor to the integral");
    add_out(compare);

    auto* validate = app->add_subcommand("validate", "Cross-check closed form, integral and Monte Carlo");
    add_source(validate);
    add_mc(validate);
    validate->add_option("--tolerance", o.tolerance, "Allowed |closed form - integral|")->check(CLI::NonNegativeNumber);
    validate->add_option("--thresholds", o.thresholds_db, "Thresholds in dB (default: the scenario sweep)")->delimiter(',');
    add_out(validate);

    auto* presets = app->add_subcommand("presets", "List bundled scenarios");
    presets->add_option("--show", o.show, "Print one preset as a scenario document");
    add_out(presets);

    auto* replay = app->add_subcommand("replay", "Re-run a recorded command and check its outputs");
    replay->add_option("manifest", o.replay_manifest, "Run manifest")->required();
    replay->add_option("--out", o.out, "Write the regenerated outputs here");

    return app;
}

Options parse(const std::vector<std::string>& args, std::unique_ptr<CLI::App>& app)
{
    Options o;
    app = make_app(o);
    std::vector<const char*> argv{"uavcov"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    app->parse(static_cast<int>(argv.size()), argv.data());
    o.command = app->get_subcommands().front()->get_name();
    return o;
}

bool looks_like_file(const std::string& item)
{
    const fs::path p(item);
    const std::string ext = p.extension().string();
    return ext == ".yaml" || ext == ".yml" || item.find('/') != std::string::npos;
}

Scenario load_source(const Options& o)
{
    if (o.preset.empty() == o.scenario_path.empty()) {
        throw UsageError("exactly one of --preset or --scenario is required");
    }
    return o.preset.empty() ? load_scenario_file(o.scenario_path) : preset(o.preset);
}

void record(Execution& ex, const Scenario& s)
{
    ex.scenarios.emplace_back(s.name, hex64(fnv1a64(serialize_scenario(s))));
}

std::vector<double> scenario_thresholds(const Scenario& s)
{
    return threshold_grid(s.sweep.start_db, s.sweep.stop_db, s.sweep.step_db);
}

McOptions mc_options(const Options& o, const DerivedModel& d, std::span<const double> thresholds_db)
{
    McOptions mc;
    mc.trials = o.trials;
    mc.seed = o.seed;
    mc.threads = o.threads;
    mc.placement = o.serving == "fixed" ? ServingPlacement::fixed_distance : ServingPlacement::random_ppp;
    mc.serving_distance_m = d.serving_distance_m;
    mc.radius_m = o.radius;
    if (!mc.radius_m && d.model.alpha > 2.0) {
        const double target = 0.1 * kZ99 * 0.5 / std::sqrt(static_cast<double>(mc.trials));
        double radius = 1.0;
        for (double t_db : thresholds_db) {
            CoverageModel m = d.model;
            m.threshold = db_to_linear(Decibel{t_db});
            radius = std::max(radius, radius_for_tail(m, mc, target, radius));
        }
        mc.radius_m = radius;
    }
    return mc;
}

void require_radius_for_low_alpha(const Options& o, const Scenario& s)
{
    if (s.alpha <= 2.0 && !o.radius) {
        throw ValidationError("radius", "alpha = " + format_double(s.alpha) +
                                            " <= 2: the interference of an unbounded Poisson field diverges, so the "
                                            "Monte Carlo oracle needs an explicit --radius and its result depends on it");
    }
}

CoverageCurve run_curve(const Options& o, const Scenario& s, Method method, Execution& ex)
{
    const DerivedModel d = derive_model(s);
    const std::vector<double> thresholds = scenario_thresholds(s);
    SweepOptions opts;
    opts.integrand = o.with_noise ? IntegrandForm::noise_augmented : IntegrandForm::printed;
    if (method == Method::monte_carlo) {
        require_radius_for_low_alpha(o, s);
        opts.monte_carlo = mc_options(o, d, thresholds);
        ex.seed = o.seed;
        ex.trials = o.trials;
    }
    CoverageCurve curve = sweep(d.model, thresholds, method, opts);
    curve.scenario_name = s.name;
    Json meta = Json::object();
    for (const auto& [k, v] : curve.metadata) {
        meta[k] = v;
    }
    meta["downlink_sinr_db"] = format_double(linear_to_db(d.downlink_sinr));
    ex.metadata[s.name] = meta;
    return curve;
}

Execution cmd_curve(const Options& o)
{
    Execution ex;
    const Scenario s = load_source(o);
    record(ex, s);
    const Method method = parse_method(o.method);
    const CoverageCurve curve = run_curve(o, s, method, ex);

    std::string csv = "threshold_db,p_cov,method,scenario\n";
    for (const auto& sample : curve.samples) {
        csv += format_double(sample.threshold_db) + "," + format_double(sample.p_cov) + "," + method_name(method) +
               "," + csv_field(s.name) + "\n";
    }
    ex.artifacts.push_back({o.out.empty() ? kStdout : o.out, std::move(csv)});
    return ex;
}

std::string describe_tolerable(const TolerableThreshold& t)
{
    if (!t.threshold_db) {
        return "none (p_cov < " + fixed(kTolerableCoverageLevel, 2) + " across the sweep)";
    }
    std::string text = format_double(*t.threshold_db) + " dB (p_cov " + fixed(t.p_cov, 3) + ")";
    if (t.saturated) {
        text += ", saturated at the end of the sweep";
    }
    return text;
}

Execution cmd_compare(const Options& o)
{
    Execution ex;
    std::vector<Scenario> scenarios;
    for (const auto& item : o.items) {
        scenarios.push_back(looks_like_file(item) ? load_scenario_file(item) : preset(item));
    }
    for (const auto& name : o.presets) {
        scenarios.push_back(preset(name));
    }
    for (const auto& path : o.scenario_paths) {
        scenarios.push_back(load_scenario_file(path));
    }
    if (scenarios.size() < 2) {
        throw UsageError("compare needs at least two scenarios");
    }
    for (const auto& s : scenarios) {
        if (!(s.sweep == scenarios.front().sweep)) {
            throw UsageError("scenario '" + s.name + "' has a different sweep grid from '" + scenarios.front().name +
                             "'");
        }
        record(ex, s);
    }
    const Method method = parse_method(o.method);
    if (method == Method::monte_carlo) {
        throw UsageError("compare supports closed-form and integral; use `curve --method mc` per scenario");
    }

    std::vector<CoverageCurve> curves;
    for (const auto& s : scenarios) {
        curves.push_back(run_curve(o, s, method, ex));
    }

    std::string csv = "threshold_db";
    for (const auto& s : scenarios) {
        csv += "," + csv_field(s.name);
    }
    csv += "\n";
    for (std::size_t k = 0; k < curves.front().samples.size(); ++k) {
        csv += format_double(curves.front().samples[k].threshold_db);
        for (const auto& c : curves) {
            csv += "," + format_double(c.samples[k].p_cov);
        }
        csv += "\n";
    }

    std::size_t width = 8;
    for (const auto& s : scenarios) {
        width = std::max(width, s.name.size());
    }
    std::string summary = "tolerable SINR threshold (largest threshold with p_cov >= " +
                          fixed(kTolerableCoverageLevel, 2) + ", method " + method_name(method) + ")\n";
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const std::string& name = scenarios[i].name;
        summary += "  " + name + std::string(width - name.size() + 2, ' ') +
                   describe_tolerable(tolerable_threshold(curves[i])) + "\n";
    }

    ex.artifacts.push_back({o.out.empty() ? kStdout : o.out, std::move(csv)});
    if (!o.out.empty()) {
        ex.artifacts.push_back({o.out + ".summary.txt", summary});
    }
    ex.artifacts.push_back({kStdout, std::move(summary)});
    return ex;
}

Execution cmd_validate(const Options& o)
{
    Execution ex;
    const Scenario s = load_source(o);
    record(ex, s);
    require_radius_for_low_alpha(o, s);
    const DerivedModel d = derive_model(s);
    const std::vector<double> thresholds = o.thresholds_db.empty() ? scenario_thresholds(s) : o.thresholds_db;
    for (std::size_t k = 1; k < thresholds.size(); ++k) {
        if (!(thresholds[k] > thresholds[k - 1])) {
            throw UsageError("--thresholds must be strictly increasing");
        }
    }

    std::vector<double> linear;
    for (double t : thresholds) {
        linear.push_back(db_to_linear(Decibel{t}));
    }
    const McOptions mc = mc_options(o, d, thresholds);
    const std::vector<McEstimate> estimates = empirical_coverage_sweep(d.model, linear, mc);
    const bool random = mc.placement == ServingPlacement::random_ppp;
    ex.seed = o.seed;
    ex.trials = o.trials;

    std::string csv =
        "threshold_db,closed_form,integral,mc_p_cov,mc_complement_union,mc_reference_half_width_99,status\n";
    std::size_t cf_mismatch = 0;
    std::size_t mc_mismatch = 0;
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
        CoverageModel m = d.model;
        m.threshold = linear[k];
        const double cf = coverage_closed_form(m);
        const IntegralResult integral =
            coverage_integral(m, {}, o.with_noise ? IntegrandForm::noise_augmented : IntegrandForm::printed);
        const McEstimate& e = estimates[k];
        const double mc_value = random ? e.complement_union : e.p_cov;
        const double mc_hw = random ? e.complement_union_half_width_99 : e.half_width_99;
        const bool cf_ok = std::abs(cf - integral.p_cov) <= o.tolerance;
        const bool mc_ok = std::abs(mc_value - integral.raw) <= mc_hw;
        cf_mismatch += cf_ok ? 0 : 1;
        mc_mismatch += mc_ok ? 0 : 1;
        std::string status = cf_ok && mc_ok ? "ok" : "";
        if (!cf_ok) {
            status = "closed-form-vs-integral";
        }
        if (!mc_ok) {
            status += status.empty() ? "mc-excludes-integral" : "+mc-excludes-integral";
        }
        csv += format_double(thresholds[k]) + "," + format_double(cf) + "," + format_double(integral.raw) + "," +
               format_double(e.p_cov) + "," + format_double(e.complement_union) + "," + format_double(mc_hw) + "," +
               status + "\n";
    }

    std::string summary = "scenario " + s.name + ": " + std::to_string(thresholds.size()) + " thresholds, " +
                          std::to_string(o.trials) + " trials, seed " + std::to_string(o.seed) + ", radius " +
                          format_double(mc.radius_m.value_or(kDefaultOracleRadius)) + " m, " +
                          (random ? "random serving placement (complement-union estimate)"
                                  : "fixed serving distance (p_cov estimate)") +
                          "\n";
    if (s.alpha <= 2.0) {
        summary += "note: alpha <= 2, Monte Carlo values depend on the chosen radius\n";
    }
    summary += "closed form vs integral: " + std::to_string(cf_mismatch) + " disagreement(s) beyond " +
               format_double(o.tolerance) + "\n";
    summary += "integral outside the Monte Carlo 99% interval: " + std::to_string(mc_mismatch) + "\n";
    summary += cf_mismatch + mc_mismatch == 0 ? "verdict: agree\n" : "verdict: DISAGREE\n";
    ex.exit_code = cf_mismatch + mc_mismatch == 0 ? kExitOk : kExitNumerical;

    ex.metadata[s.name] = {{"radius_m", format_double(mc.radius_m.value_or(kDefaultOracleRadius))},
                           {"placement", random ? "random" : "fixed"}};
    ex.artifacts.push_back({o.out.empty() ? kStdout : o.out, std::move(csv)});
    ex.artifacts.push_back({kStdout, std::move(summary)});
    return ex;
}

Execution cmd_presets(const Options& o)
{
    Execution ex;
    if (!o.show.empty()) {
        const Scenario s = preset(o.show);
        record(ex, s);
        ex.artifacts.push_back({o.out.empty() ? kStdout : o.out, serialize_scenario(s)});
        return ex;
    }
    std::string text = "name,architecture,carrier_ghz,tx_power_w,uav_altitude_m,irs_elements\n";
    for (const auto& name : preset_names()) {
        const Scenario s = preset(name);
        text += s.name + "," + architecture_name(s.architecture) + "," + format_double(s.carrier_ghz) + "," +
                format_double(s.tx_power_w) + "," + format_double(s.uav_altitude_m) + "," +
                (s.irs ? std::to_string(s.irs->elements) : "") + "\n";
    }
    text += "\nalias,preset\n";
    for (const auto& [alias, target] : preset_aliases()) {
        text += alias + "," + target + "\n";
    }
    ex.artifacts.push_back({o.out.empty() ? kStdout : o.out, std::move(text)});
    return ex;
}

Execution execute(const Options& o)
{
    if (o.command == "curve") {
        return cmd_curve(o);
    }
    if (o.command == "compare") {
        return cmd_compare(o);
    }
    if (o.command == "validate") {
        return cmd_validate(o);
    }
    return cmd_presets(o);
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open " + path + " for writing");
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.close();
    if (!f) {
        throw IoError("failed writing " + path);
    }
}

void emit(const Execution& ex, std::ostream& out)
{
    for (const auto& a : ex.artifacts) {
        if (a.target == kStdout) {
            out << a.content;
        } else {
            write_file(a.target, a.content);
        }
    }
    out.flush();
}

std::string absolute(const std::string& path)
{
    return fs::absolute(fs::path(path)).lexically_normal().string();
}

// Paths become absolute so a manifest can be replayed from any directory.
std::vector<std::string> portable_argv(const std::vector<std::string>& args, const Options& o)
{
    static const std::vector<std::string> path_flags = {"--scenario", "--out", "--manifest"};
    std::vector<std::string> outv;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        const auto eq = a.find('=');
        const std::string flag = a.substr(0, eq);
        const bool is_path_flag = std::find(path_flags.begin(), path_flags.end(), flag) != path_flags.end();
        if (is_path_flag && eq != std::string::npos) {
            outv.push_back(flag + "=" + absolute(a.substr(eq + 1)));
        } else if (is_path_flag && i + 1 < args.size()) {
            outv.push_back(a);
            outv.push_back(absolute(args[++i]));
        } else if (o.command == "compare" && std::find(o.items.begin(), o.items.end(), a) != o.items.end() &&
                   looks_like_file(a)) {
            outv.push_back(absolute(a));
        } else {
            outv.push_back(a);
        }
    }
    return outv;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json manifest_json(const std::vector<std::string>& args, const Options& o, const Execution& ex)
{
    Json j;
    j["schema"] = kManifestSchema;
    j["version"] = kVersion;
    j["command"] = o.command;
    j["argv"] = portable_argv(args, o);
    j["cwd"] = fs::current_path().string();
    j["timestamp"] = utc_timestamp();
    Json scenarios = Json::array();
    for (const auto& [name, hash] : ex.scenarios) {
        scenarios.push_back({{"name", name}, {"fnv1a64", hash}});
    }
    j["scenarios"] = scenarios;
    j["seeds"] = ex.seed ? Json::array({*ex.seed}) : Json::array();
    j["trials"] = ex.trials ? Json(*ex.trials) : Json(nullptr);
    Json outputs = Json::array();
    for (const auto& a : ex.artifacts) {
        outputs.push_back({{"path", a.target == kStdout ? std::string(kStdout) : absolute(a.target)},
                           {"fnv1a64", hex64(fnv1a64(a.content))},
                           {"bytes", a.content.size()}});
    }
    j["outputs"] = outputs;
    j["metadata"] = ex.metadata;
    j["exit_code"] = ex.exit_code;
    return j;
}

std::optional<std::string> manifest_path(const Options& o)
{
    if (!o.manifest.empty()) {
        return o.manifest;
    }
    if (!o.out.empty()) {
        return o.out + ".manifest.json";
    }
    return std::nullopt;
}

int replay(const Options& ro, std::ostream& out, std::ostream& err)
{
    std::ifstream f(ro.replay_manifest, std::ios::binary);
    if (!f) {
        throw IoError("cannot open manifest " + ro.replay_manifest);
    }
    Json j;
    try {
        j = Json::parse(f);
    } catch (const Json::exception& e) {
        throw ValidationError("manifest", std::string("not valid JSON: ") + e.what());
    }
    if (!j.contains("schema") || j["schema"] != kManifestSchema || !j.contains("argv") || !j.contains("outputs")) {
        throw ValidationError("manifest", "not a uavcov run manifest");
    }
    const auto argv = j["argv"].get<std::vector<std::string>>();

    std::unique_ptr<CLI::App> app;
    Options o;
    try {
        o = parse(argv, app);
    } catch (const CLI::ParseError& e) {
        throw ValidationError("manifest.argv", std::string("recorded command no longer parses: ") + e.what());
    }
    if (o.command == "replay") {
        throw ValidationError("manifest.argv", "a replay cannot replay another replay");
    }
    if (j.value("version", "") != std::string(kVersion)) {
        err << "warning: manifest written by version " << j.value("version", "?") << ", replaying with " << kVersion
            << "\n";
    }

    Execution ex = execute(o);
    for (std::size_t i = 0; i < ex.scenarios.size() && i < j["scenarios"].size(); ++i) {
        if (j["scenarios"][i].value("fnv1a64", "") != ex.scenarios[i].second) {
            err << "warning: scenario '" << ex.scenarios[i].first << "' changed since the manifest was written\n";
        }
    }

    const Json& recorded = j["outputs"];
    std::size_t mismatches = recorded.size() == ex.artifacts.size() ? 0 : 1;
    for (std::size_t i = 0; i < ex.artifacts.size() && i < recorded.size(); ++i) {
        if (recorded[i].value("fnv1a64", "") != hex64(fnv1a64(ex.artifacts[i].content))) {
            err << "mismatch: output " << recorded[i].value("path", "?") << " differs from the recorded bytes\n";
            ++mismatches;
        }
    }

    if (!ro.out.empty()) {
        // Redirect file outputs: the recorded --out path is replaced by the new one.
        const std::string old_out = o.out.empty() ? std::string() : o.out;
        Execution redirected = ex;
        bool wrote_primary = false;
        for (auto& a : redirected.artifacts) {
            if (a.target == kStdout && !wrote_primary && o.out.empty()) {
                a.target = ro.out;
                wrote_primary = true;
            } else if (a.target != kStdout && !old_out.empty() && a.target.starts_with(old_out)) {
                a.target = ro.out + a.target.substr(old_out.size());
            }
        }
        for (auto it = redirected.artifacts.begin(); it != redirected.artifacts.end();) {
            it = it->target == kStdout ? redirected.artifacts.erase(it) : it + 1;
        }
        emit(redirected, out);
    }

    out << "replayed `" << o.command << "`: " << ex.artifacts.size() << " output(s), "
        << (mismatches == 0 ? "all byte-identical" : std::to_string(mismatches) + " mismatch(es)") << "\n";
    return mismatches == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string q = "\"";
    for (char c : text) {
        q += c == '"' ? "\"\"" : std::string(1, c);
    }
    return q + "\"";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::unique_ptr<CLI::App> app;
    Options o;
    try {
        o = parse(args, app);
    } catch (const CLI::ParseError& e) {
        const int code = app->exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (o.command == "replay") {
            return replay(o, out, err);
        }
        const Execution ex = execute(o);
        emit(ex, out);
        if (const auto path = manifest_path(o)) {
            write_file(*path, manifest_json(args, o, ex).dump(2) + "\n");
        }
        return ex.exit_code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CatalogError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << " (achieved error " << format_double(e.achieved_error()) << ")\n";
        return kExitNumerical;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace uavcov::cli
