// SPDX-License-Identifier: Apache-2.0
#include "uavcov/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uavcov/errors.hpp"
#include "uavcov/format.hpp"
#include "uavcov/quadrature.hpp"
#include "uavcov/units.hpp"

namespace uavcov {

void validate(const CoverageModel& model)
{
    auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive(model.serving.density_per_m2) || !positive(model.serving.tx_power_w)) {
        throw DomainError("serving tier density and power must be positive");
    }
    if (model.interferers.empty()) {
        throw DomainError("coverage model needs at least one interfering tier");
    }
    for (const auto& tier : model.interferers) {
        if (!(tier.density_per_m2 >= 0.0) || !std::isfinite(tier.density_per_m2) || !positive(tier.tx_power_w)) {
            throw DomainError("interfering tier density must be non-negative and power positive");
        }
    }
    if (!positive(model.threshold)) {
        throw DomainError("SINR threshold must be positive");
    }
    if (!positive(model.alpha)) {
        throw DomainError("path-loss exponent must be positive");
    }
    if (!(model.noise_variance_w >= 0.0) || !std::isfinite(model.noise_variance_w)) {
        throw DomainError("noise variance must be non-negative");
    }
    if (!positive(model.downlink_sinr)) {
        throw DomainError("downlink SINR must be positive");
    }
}

double total_interferer_density(const CoverageModel& model)
{
    double sum = 0.0;
    for (const auto& tier : model.interferers) {
        sum += tier.density_per_m2;
    }
    return sum;
}

double coverage_closed_form(const CoverageModel& model)
{
    validate(model);
    const double density_sum = total_interferer_density(model);
    if (!(density_sum > 0.0)) {
        throw ModelError("interfering tier densities sum to zero");
    }
    const double delta = 2.0 / model.alpha;
    const double exponent = kPi * std::pow(model.downlink_sinr, delta) * model.serving.density_per_m2 *
                            std::pow(model.threshold, -delta) / density_sum;
    return -std::expm1(-exponent);
}

double laplace_interference(double s, std::span<const TierParams> tiers, double alpha)
{
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw DomainError("Laplace argument must be non-negative and finite");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError("path-loss exponent must be positive");
    }
    const double delta = 2.0 / alpha;
    double weight = 0.0;
    for (const auto& tier : tiers) {
        if (!(tier.density_per_m2 >= 0.0) || !(tier.tx_power_w > 0.0)) {
            throw DomainError("tier density must be non-negative and power positive");
        }
        weight += tier.density_per_m2 * std::pow(tier.tx_power_w, delta);
    }
    if (s == 0.0) {
        return 1.0;
    }
    return std::exp(-std::pow(s, delta) * weight);
}

namespace {

struct IntegrandCoefficients
{
    double interference = 0.0;  // (T/P)^(2/alpha) * sum(lambda_i P_i^(2/alpha))
    double direct = 0.0;        // T/P
    double noise = 0.0;         // (T/P) * sigma^2, multiplies r^alpha
};

IntegrandCoefficients coefficients(const CoverageModel& model)
{
    const double delta = 2.0 / model.alpha;
    const double ratio = model.threshold / model.serving.tx_power_w;
    double weight = 0.0;
    for (const auto& tier : model.interferers) {
        weight += tier.density_per_m2 * std::pow(tier.tx_power_w, delta);
    }
    return {std::pow(ratio, delta) * weight, ratio, ratio * model.noise_variance_w};
}

double integrand_from(const IntegrandCoefficients& c, double alpha, double r, IntegrandForm form)
{
    const double r2 = r * r;
    double exponent = -(c.interference + c.direct) * r2;
    if (form == IntegrandForm::noise_augmented && c.noise > 0.0) {
        exponent -= c.noise * std::pow(r, alpha);
    }
    return std::exp(exponent);
}

}  // namespace

double coverage_integrand(const CoverageModel& model, double r, IntegrandForm form)
{
    validate(model);
    if (!(r >= 0.0)) {
        throw DomainError("radius must be non-negative");
    }
    return integrand_from(coefficients(model), model.alpha, r, form);
}

IntegralResult coverage_integral(const CoverageModel& model, const QuadratureSettings& quad, IntegrandForm form)
{
    validate(model);
    if (!(quad.rel_tol > 0.0) || !(quad.abs_tol >= 0.0) || quad.max_subdivisions < 1 ||
        !(quad.tail_tolerance > 0.0)) {
        throw DomainError("invalid quadrature settings");
    }

    const IntegrandCoefficients c = coefficients(model);
    const double gauss = c.interference + c.direct;
    const double lambda = model.serving.density_per_m2;

    // int_R^inf r exp(-g r^2) dr = exp(-g R^2) / (2g). R keeps both the absolute
    // tail of the coverage value, lambda*pi*exp(-g R^2)/g, and the relative tail
    // of the radial integral, exp(-g R^2), below tail_tolerance. The optional
    // noise factor only shrinks the tail.
    const double log_absolute = std::log(lambda * kPi / (gauss * quad.tail_tolerance));
    const double log_relative = -std::log(quad.tail_tolerance);
    const double radius = std::sqrt(std::max({log_absolute, log_relative, 1.0}) / gauss);

    const auto radial = [&](double r) { return r * integrand_from(c, model.alpha, r, form); };
    const QuadratureResult q =
        integrate_adaptive(radial, 0.0, radius, quad.abs_tol, quad.rel_tol, quad.max_subdivisions);
    if (!q.converged) {
        throw NumericalError("radial quadrature did not converge (achieved error " + format_double(q.abs_error) +
                                 ")",
                             q.abs_error);
    }

    IntegralResult out;
    out.radial_integral = q.value;
    out.raw = 1.0 - lambda * 2.0 * kPi * q.value;
    out.p_cov = std::clamp(out.raw, 0.0, 1.0);
    out.error_estimate = lambda * 2.0 * kPi * q.abs_error;
    out.truncation_radius = radius;
    out.subdivisions = q.subdivisions;
    return out;
}

const char* method_name(Method m)
{
    switch (m) {
    case Method::closed_form:
        return "closed-form";
    case Method::integral:
        return "integral";
    case Method::monte_carlo:
        return "mc";
    }
    return "unknown";
}

Method parse_method(const std::string& name)
{
    if (name == "closed-form") {
        return Method::closed_form;
    }
    if (name == "integral") {
        return Method::integral;
    }
    if (name == "mc") {
        return Method::monte_carlo;
    }
    throw DomainError("unknown method '" + name + "' (expected closed-form, integral or mc)");
}

std::vector<double> threshold_grid(double start_db, double stop_db, double step_db)
{
    if (!std::isfinite(start_db) || !std::isfinite(stop_db) || !(step_db > 0.0) || !std::isfinite(step_db)) {
        throw DomainError("sweep grid needs finite bounds and a positive step");
    }
    std::vector<double> grid;
    if (stop_db < start_db) {
        return grid;
    }
    const double span = (stop_db - start_db) / step_db;
    const auto count = static_cast<long long>(std::floor(span + 1e-6)) + 1;
    if (count > 1'000'000) {
        throw DomainError("sweep grid has more than 10^6 points");
    }
    grid.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        grid.push_back(start_db + static_cast<double>(i) * step_db);
    }
    return grid;
}

namespace {

template <typename F>
double with_threshold_context(double threshold_db, F&& fn)
{
    const std::string where = "at threshold " + format_double(threshold_db) + " dB: ";
    try {
        return fn();
    } catch (const NumericalError& e) {
        throw NumericalError(where + e.what(), e.achieved_error());
    } catch (const ModelError& e) {
        throw ModelError(where + e.what());
    } catch (const DomainError& e) {
        throw DomainError(where + e.what());
    }
}

std::string join(const std::vector<double>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += format_double(values[i]);
    }
    return out;
}

}  // namespace

CoverageCurve sweep(const CoverageModel& model_template, std::span<const double> thresholds_db, Method method,
                    const SweepOptions& options)
{
    for (std::size_t i = 1; i < thresholds_db.size(); ++i) {
        if (!(thresholds_db[i] > thresholds_db[i - 1])) {
            throw DomainError("sweep thresholds must be strictly increasing");
        }
    }

    CoverageCurve curve;
    curve.method = method;
    curve.samples.reserve(thresholds_db.size());
    if (thresholds_db.empty()) {
        return curve;
    }

    switch (method) {
    case Method::closed_form: {
        for (double t_db : thresholds_db) {
            const double p = with_threshold_context(t_db, [&] {
                CoverageModel m = model_template;
                m.threshold = db_to_linear(Decibel{t_db});
                return coverage_closed_form(m);
            });
            curve.samples.push_back({t_db, p});
        }
        break;
    }
    case Method::integral: {
        std::vector<double> raw;
        std::vector<double> errors;
        for (double t_db : thresholds_db) {
            IntegralResult r;
            with_threshold_context(t_db, [&] {
                CoverageModel m = model_template;
                m.threshold = db_to_linear(Decibel{t_db});
                r = coverage_integral(m, options.quadrature, options.integrand);
                return r.p_cov;
            });
            curve.samples.push_back({t_db, r.p_cov});
            raw.push_back(r.raw);
            errors.push_back(r.error_estimate);
        }
        curve.metadata["integrand"] =
            options.integrand == IntegrandForm::printed ? "printed" : "noise_augmented";
        curve.metadata["quad_rel_tol"] = format_double(options.quadrature.rel_tol);
        curve.metadata["quad_abs_tol"] = format_double(options.quadrature.abs_tol);
        curve.metadata["quad_max_subdivisions"] = std::to_string(options.quadrature.max_subdivisions);
        curve.metadata["quad_tail_tolerance"] = format_double(options.quadrature.tail_tolerance);
        curve.metadata["raw_p_cov"] = join(raw);
        curve.metadata["error_estimate"] = join(errors);
        break;
    }
    case Method::monte_carlo: {
        std::vector<double> linear;
        linear.reserve(thresholds_db.size());
        for (double t_db : thresholds_db) {
            linear.push_back(db_to_linear(Decibel{t_db}));
        }
        const std::vector<McEstimate> est = empirical_coverage_sweep(model_template, linear, options.monte_carlo);
        std::vector<double> hw;
        std::vector<double> cu;
        double tail = 0.0;
        for (std::size_t i = 0; i < est.size(); ++i) {
            curve.samples.push_back({thresholds_db[i], est[i].p_cov});
            hw.push_back(est[i].half_width_99);
            cu.push_back(est[i].complement_union);
            tail = std::max(tail, est[i].tail_estimate);
        }
        const McOptions& mc = options.monte_carlo;
        curve.metadata["seed"] = std::to_string(mc.seed);
        curve.metadata["trials"] = std::to_string(mc.trials);
        curve.metadata["radius_m"] = format_double(est.front().radius_m);
        curve.metadata["placement"] =
            mc.placement == ServingPlacement::fixed_distance ? "fixed_distance" : "random_ppp";
        curve.metadata["serving_distance_m"] = format_double(mc.serving_distance_m);
        curve.metadata["tail_estimate"] = format_double(tail);
        curve.metadata["radius_dependent"] = est.front().radius_dependent ? "true" : "false";
        curve.metadata["half_width_99"] = join(hw);
        curve.metadata["complement_union"] = join(cu);
        break;
    }
    }
    return curve;
}

TolerableThreshold tolerable_threshold(const CoverageCurve& curve, double level)
{
    TolerableThreshold out;
    for (std::size_t k = 0; k < curve.samples.size(); ++k) {
        if (curve.samples[k].p_cov >= level) {
            out.threshold_db = curve.samples[k].threshold_db;
            out.p_cov = curve.samples[k].p_cov;
            out.saturated = k + 1 == curve.samples.size();
        }
    }
    return out;
}

}  // namespace uavcov
