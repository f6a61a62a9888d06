// SPDX-License-Identifier: Apache-2.0
#include "uavcov/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "uavcov/errors.hpp"
#include "uavcov/format.hpp"
#include "uavcov/quadrature.hpp"
#include "uavcov/units.hpp"

namespace uavcov {

namespace {

__extension__ using Uint128 = unsigned __int128;

std::uint64_t splitmix64(std::uint64_t& state)
{
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// r^-alpha from r^2.
class PathGain
{
  public:
    explicit PathGain(double alpha) : half_alpha_(0.5 * alpha) {}

    double operator()(double r2) const
    {
        if (half_alpha_ == 1.0) {
            return 1.0 / r2;
        }
        if (half_alpha_ == 2.0) {
            return 1.0 / (r2 * r2);
        }
        return std::pow(r2, -half_alpha_);
    }

  private:
    double half_alpha_;
};

double ppp_constant(double alpha)
{
    const double delta = 2.0 / alpha;
    return kPi * (kPi * delta) / std::sin(kPi * delta);
}

void validate_for_oracle(const CoverageModel& model)
{
    CoverageModel probe = model;
    probe.threshold = 1.0;
    validate(probe);
}

double interference_weight(const CoverageModel& model)
{
    double w = 0.0;
    for (const auto& tier : model.interferers) {
        w += tier.density_per_m2 * tier.tx_power_w;
    }
    return w;
}

struct Accumulator
{
    std::vector<std::uint64_t> covered;
    std::vector<std::uint64_t> exceed;
    std::vector<Uint128> exceed_sq;

    explicit Accumulator(std::size_t n) : covered(n, 0), exceed(n, 0), exceed_sq(n, 0) {}

    void merge(const Accumulator& o)
    {
        for (std::size_t k = 0; k < covered.size(); ++k) {
            covered[k] += o.covered[k];
            exceed[k] += o.exceed[k];
            exceed_sq[k] += o.exceed_sq[k];
        }
    }
};

struct TrialPlan
{
    const CoverageModel* model = nullptr;
    const McOptions* options = nullptr;
    std::span<const double> thresholds;
    double radius_sq = 0.0;
    std::vector<double> interferer_means;
    double serving_mean = 0.0;
};

void run_trials(const TrialPlan& plan, std::uint64_t first, std::uint64_t last, Accumulator& acc)
{
    const CoverageModel& model = *plan.model;
    const McOptions& opt = *plan.options;
    const PathGain gain(model.alpha);
    const std::size_t n_thr = plan.thresholds.size();
    std::vector<double> serving_sinr;

    for (std::uint64_t t = first; t < last; ++t) {
        RngStream rng = rng_stream(opt.seed, t);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::exponential_distribution<double> expo(1.0);
        auto fade = [&] { return opt.rayleigh_fading ? expo(rng) : 1.0; };

        double interference = 0.0;
        if (opt.ppp_interference) {
            for (std::size_t i = 0; i < model.interferers.size(); ++i) {
                const double mean = plan.interferer_means[i];
                if (!(mean > 0.0)) {
                    continue;
                }
                std::poisson_distribution<std::int64_t> count(mean);
                const std::int64_t n = count(rng);
                const double power = model.interferers[i].tx_power_w;
                for (std::int64_t k = 0; k < n; ++k) {
                    const double r2 = plan.radius_sq * unif(rng);
                    interference += fade() * power * gain(r2);
                }
            }
        }
        for (const auto& fixed : opt.fixed_interferers) {
            interference += fade() * fixed.power_w * gain(fixed.distance_m * fixed.distance_m);
        }
        const double denom = interference + model.noise_variance_w;

        serving_sinr.clear();
        if (opt.placement == ServingPlacement::fixed_distance) {
            const double r0 = opt.serving_distance_m;
            serving_sinr.push_back(fade() * model.serving.tx_power_w * gain(r0 * r0) / denom);
        } else {
            std::poisson_distribution<std::int64_t> count(plan.serving_mean);
            const std::int64_t n = plan.serving_mean > 0.0 ? count(rng) : 0;
            for (std::int64_t k = 0; k < n; ++k) {
                const double r2 = plan.radius_sq * unif(rng);
                serving_sinr.push_back(fade() * model.serving.tx_power_w * gain(r2) / denom);
            }
        }

        for (std::size_t k = 0; k < n_thr; ++k) {
            const double thr = plan.thresholds[k];
            std::uint64_t c = 0;
            for (double s : serving_sinr) {
                c += s > thr ? 1 : 0;
            }
            acc.covered[k] += c > 0 ? 1 : 0;
            acc.exceed[k] += c;
            acc.exceed_sq[k] += static_cast<Uint128>(c) * c;
        }
    }
}

}  // namespace

RngStream rng_stream(std::uint64_t seed, std::uint64_t stream_id)
{
    std::uint64_t state = seed;
    const std::uint64_t a = splitmix64(state);
    std::uint64_t mixed = stream_id ^ a;
    return RngStream(splitmix64(mixed));
}

PppField sample_ppp(double density_per_m2, double radius_m, RngStream& rng, double max_expected_points)
{
    if (!(density_per_m2 >= 0.0) || !std::isfinite(density_per_m2)) {
        throw DomainError("PPP density must be non-negative and finite");
    }
    if (!(radius_m >= 0.0) || !std::isfinite(radius_m)) {
        throw DomainError("PPP radius must be non-negative and finite");
    }
    PppField field;
    field.density_per_m2 = density_per_m2;
    field.region_radius_m = radius_m;

    const double mean = density_per_m2 * kPi * radius_m * radius_m;
    if (mean > max_expected_points) {
        throw ResourceError("expected PPP point count " + format_double(mean) + " exceeds the cap of " +
                            format_double(max_expected_points));
    }
    if (!(mean > 0.0)) {
        return field;
    }
    std::poisson_distribution<std::int64_t> count(mean);
    const std::int64_t n = count(rng);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    field.points.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        const double r = radius_m * std::sqrt(unif(rng));
        const double theta = 2.0 * kPi * unif(rng);
        field.points.push_back({r * std::cos(theta), r * std::sin(theta), 0.0});
    }
    return field;
}

double ppp_link_coverage(const CoverageModel& model, double r)
{
    if (!(model.alpha > 2.0)) {
        throw DomainError("unbounded-field link coverage requires alpha > 2");
    }
    const double delta = 2.0 / model.alpha;
    const double ratio = model.threshold / model.serving.tx_power_w;
    double weight = 0.0;
    for (const auto& tier : model.interferers) {
        weight += tier.density_per_m2 * std::pow(tier.tx_power_w, delta);
    }
    const double interference = ppp_constant(model.alpha) * std::pow(ratio, delta) * r * r * weight;
    const double noise = ratio * model.noise_variance_w * std::pow(r, model.alpha);
    return std::exp(-interference - noise);
}

double truncation_tail_estimate(const CoverageModel& model, const McOptions& options, double radius_m)
{
    if (!(model.alpha > 2.0)) {
        return std::numeric_limits<double>::infinity();
    }
    if (!options.ppp_interference && options.placement == ServingPlacement::fixed_distance) {
        return 0.0;
    }
    const double alpha = model.alpha;
    const double p_serving = model.serving.tx_power_w;
    // Mean interference beyond R at unit power and unit distance scale:
    // 2*pi*sum(lambda_i P_i) * R^(2-alpha) / (alpha-2).
    const double far_field = options.ppp_interference
                                 ? 2.0 * kPi * interference_weight(model) * std::pow(radius_m, 2.0 - alpha) /
                                       (alpha - 2.0)
                                 : 0.0;
    auto tail_exponent = [&](double r) { return model.threshold * std::pow(r, alpha) / p_serving * far_field; };

    if (options.placement == ServingPlacement::fixed_distance) {
        const double r0 = options.serving_distance_m;
        return ppp_link_coverage(model, r0) * tail_exponent(r0);
    }

    const double delta = 2.0 / alpha;
    double weight = 0.0;
    for (const auto& tier : model.interferers) {
        weight += tier.density_per_m2 * std::pow(tier.tx_power_w, delta);
    }
    const double gauss =
        ppp_constant(alpha) * std::pow(model.threshold / p_serving, delta) * weight;
    if (!(gauss > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    const double lambda = model.serving.density_per_m2;
    const double r_cut = std::min(radius_m, std::sqrt(745.0 / gauss));
    const auto body = [&](double r) {
        return 2.0 * kPi * r * lambda * ppp_link_coverage(model, r) * tail_exponent(r);
    };
    const QuadratureResult inner = integrate_adaptive(body, 0.0, r_cut, 1e-300, 1e-6, 500);
    const double outside = lambda * kPi * std::exp(-gauss * radius_m * radius_m) / gauss;
    return inner.value + inner.abs_error + outside;
}

double radius_for_tail(const CoverageModel& model, const McOptions& options, double target, double start_m)
{
    if (!(target > 0.0) || !(start_m > 0.0)) {
        throw DomainError("tail target and start radius must be positive");
    }
    auto ok = [&](double r) { return truncation_tail_estimate(model, options, r) <= target; };
    if (ok(start_m)) {
        return start_m;
    }
    double lo = start_m;
    double hi = start_m * 2.0;
    for (int i = 0; !ok(hi); ++i, lo = hi, hi *= 2.0) {
        if (i == 64) {
            throw NumericalError("no truncation radius meets the tail target", target);
        }
    }
    while (hi - lo > 1e-3 * hi) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::vector<McEstimate> empirical_coverage_sweep(const CoverageModel& model_template,
                                                 std::span<const double> thresholds, const McOptions& options)
{
    validate_for_oracle(model_template);
    if (options.trials == 0) {
        throw DomainError("Monte Carlo needs at least one trial");
    }
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
        if (!(thresholds[k] >= 0.0) || std::isnan(thresholds[k])) {
            throw DomainError("thresholds must be non-negative");
        }
        if (k > 0 && thresholds[k] < thresholds[k - 1]) {
            throw DomainError("thresholds must be non-decreasing");
        }
    }
    if (options.placement == ServingPlacement::fixed_distance && !(options.serving_distance_m > 0.0)) {
        throw DomainError("serving distance must be positive");
    }
    for (const auto& f : options.fixed_interferers) {
        if (!(f.distance_m > 0.0) || !(f.power_w >= 0.0)) {
            throw DomainError("fixed interferers need positive distance and non-negative power");
        }
    }

    const bool unbounded_ok = model_template.alpha > 2.0;
    if (!unbounded_ok && !options.radius_m) {
        throw ValidationError("radius", "alpha <= 2: interference from an unbounded Poisson field diverges, "
                                        "so an explicit truncation radius is required and results depend on it");
    }
    const double radius = options.radius_m.value_or(kDefaultOracleRadius);
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("truncation radius must be positive and finite");
    }

    double tail = unbounded_ok ? 0.0 : std::numeric_limits<double>::infinity();
    if (unbounded_ok) {
        for (double thr : thresholds) {
            CoverageModel m = model_template;
            m.threshold = thr;
            if (thr > 0.0) {
                tail = std::max(tail, truncation_tail_estimate(m, options, radius));
            }
        }
        const double budget = 0.1 * kZ99 * 0.5 / std::sqrt(static_cast<double>(options.trials));
        if (options.enforce_tail_bound && tail > budget) {
            throw ValidationError("radius", "truncation radius " + format_double(radius) +
                                                " m leaves an estimated bias of " + format_double(tail) +
                                                ", above the budget " + format_double(budget));
        }
    }

    TrialPlan plan;
    plan.model = &model_template;
    plan.options = &options;
    plan.thresholds = thresholds;
    plan.radius_sq = radius * radius;
    double expected_points = 0.0;
    for (const auto& tier : model_template.interferers) {
        const double mean = options.ppp_interference ? tier.density_per_m2 * kPi * plan.radius_sq : 0.0;
        plan.interferer_means.push_back(mean);
        expected_points += mean;
    }
    if (options.placement == ServingPlacement::random_ppp) {
        plan.serving_mean = model_template.serving.density_per_m2 * kPi * plan.radius_sq;
        expected_points += plan.serving_mean;
    }
    if (expected_points > options.max_expected_points) {
        throw ResourceError("expected " + format_double(expected_points) + " points per trial exceeds the cap of " +
                            format_double(options.max_expected_points));
    }

    const unsigned workers =
        static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads == 0 ? 1 : options.threads, 1, options.trials));
    std::vector<Accumulator> partial(workers, Accumulator(thresholds.size()));
    if (workers == 1) {
        run_trials(plan, 0, options.trials, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = options.trials / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = w * chunk;
            const std::uint64_t last = w + 1 == workers ? options.trials : first + chunk;
            pool.emplace_back([&, w, first, last] { run_trials(plan, first, last, partial[w]); });
        }
    }
    Accumulator total(thresholds.size());
    for (const auto& p : partial) {
        total.merge(p);
    }

    const double n = static_cast<double>(options.trials);
    std::vector<McEstimate> out;
    out.reserve(thresholds.size());
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
        McEstimate e;
        e.trials = options.trials;
        e.seed = options.seed;
        e.radius_m = radius;
        e.radius_dependent = !unbounded_ok;
        e.tail_estimate = tail;
        e.p_cov = static_cast<double>(total.covered[k]) / n;
        e.half_width_99 = kZ99 * std::sqrt(e.p_cov * (1.0 - e.p_cov) / n);
        const double mean = static_cast<double>(total.exceed[k]) / n;
        const double sum_sq = static_cast<double>(total.exceed_sq[k]);
        const double var = options.trials > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
        e.complement_union = 1.0 - mean;
        e.complement_union_half_width_99 = kZ99 * std::sqrt(var / n);
        out.push_back(e);
    }
    return out;
}

McEstimate empirical_coverage(const CoverageModel& model, const McOptions& options)
{
    const double thr = model.threshold;
    return empirical_coverage_sweep(model, std::span<const double>(&thr, 1), options).front();
}

}  // namespace uavcov
