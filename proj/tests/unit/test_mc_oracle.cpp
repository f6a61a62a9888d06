#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "uavcov/errors.hpp"
#include "uavcov/mc_oracle.hpp"
#include "uavcov/units.hpp"

using namespace uavcov;
using Catch::Matchers::WithinAbs;

namespace {

CoverageModel toy_alpha4()
{
    CoverageModel m;
    m.serving = {1e-3, 1.0};
    m.interferers = {{1e-2, 1.0}};
    m.threshold = 1.0;
    m.alpha = 4.0;
    return m;
}

}  // namespace

TEST_CASE("rng streams are reproducible and distinct")
{
    RngStream a = rng_stream(42, 7);
    RngStream b = rng_stream(42, 7);
    RngStream c = rng_stream(42, 8);
    RngStream d = rng_stream(43, 7);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
}

TEST_CASE("sample_ppp counts and support")
{
    RngStream rng = rng_stream(1, 0);
    CHECK(sample_ppp(5.0, 0.0, rng).points.empty());
    CHECK_THROWS_AS(sample_ppp(-1.0, 1.0, rng), DomainError);
    CHECK_THROWS_AS(sample_ppp(1.0, -1.0, rng), DomainError);
    CHECK_THROWS_AS(sample_ppp(1.0, 1e4, rng), ResourceError);

    const double radius = 10.0;
    const double area = kPi * radius * radius;
    const int draws = 100'000;

    int empty = 0;
    for (int i = 0; i < draws; ++i) {
        empty += sample_ppp(1e-4 / area, radius, rng).points.empty() ? 1 : 0;
    }
    // P(N = 0) = exp(-1e-4); the expected number of non-empty fields is 10.
    CHECK(draws - empty <= 30);

    double total = 0.0;
    bool inside = true;
    for (int i = 0; i < draws; ++i) {
        const PppField f = sample_ppp(50.0 / area, radius, rng);
        total += static_cast<double>(f.points.size());
        for (const auto& p : f.points) {
            inside = inside && std::hypot(p.x, p.y) <= radius && p.z == 0.0;
        }
    }
    CHECK(inside);
    CHECK_THAT(total / draws, WithinAbs(50.0, 3.0 * std::sqrt(50.0) / std::sqrt(draws)));
}

TEST_CASE("thinning a PPP matches sampling at the thinned density")
{
    const double radius = 5.0;
    const double density = 2.0;
    const double keep = 0.3;
    const int n = 10'000;
    std::vector<std::size_t> thinned, direct;
    RngStream rng = rng_stream(5, 0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        const PppField f = sample_ppp(density, radius, rng);
        thinned.push_back(std::count_if(f.points.begin(), f.points.end(), [&](const Point3D&) { return u(rng) < keep; }));
        direct.push_back(sample_ppp(keep * density, radius, rng).points.size());
    }
    std::map<std::size_t, double> cdf_a, cdf_b;
    for (auto v : thinned) {
        cdf_a[v] += 1.0 / n;
    }
    for (auto v : direct) {
        cdf_b[v] += 1.0 / n;
    }
    const std::size_t top = std::max(*std::max_element(thinned.begin(), thinned.end()),
                                     *std::max_element(direct.begin(), direct.end()));
    double fa = 0.0, fb = 0.0, ks = 0.0;
    for (std::size_t k = 0; k <= top; ++k) {
        fa += cdf_a[k];
        fb += cdf_b[k];
        ks = std::max(ks, std::abs(fa - fb));
    }
    // Two-sample KS critical value at the 1% level.
    CHECK(ks < 1.628 * std::sqrt(2.0 / n));
}

TEST_CASE("fading marks have unit mean")
{
    RngStream rng = rng_stream(9, 0);
    std::exponential_distribution<double> expo(1.0);
    const int n = 200'000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += expo(rng);
    }
    CHECK_THAT(sum / n, WithinAbs(1.0, 4.0 / std::sqrt(n)));
}

TEST_CASE("trivial coverage cases")
{
    McOptions opt;
    opt.trials = 2000;
    opt.radius_m = 200.0;

    CoverageModel m = toy_alpha4();
    const std::vector<double> zero{0.0};
    CHECK(empirical_coverage_sweep(m, zero, opt).front().p_cov == 1.0);

    CoverageModel quiet = toy_alpha4();
    quiet.interferers = {{0.0, 1.0}};
    quiet.threshold = 1e6;
    McOptions no_field = opt;
    no_field.ppp_interference = false;
    CHECK(empirical_coverage(quiet, no_field).p_cov == 1.0);

    McOptions none = opt;
    none.trials = 0;
    CHECK_THROWS_AS(empirical_coverage(m, none), DomainError);
}

TEST_CASE("deterministic fixed interferer reduces to an indicator")
{
    CoverageModel m = toy_alpha4();
    McOptions opt;
    opt.trials = 100;
    opt.radius_m = 100.0;
    opt.rayleigh_fading = false;
    opt.ppp_interference = false;
    opt.serving_distance_m = 10.0;
    opt.fixed_interferers = {{20.0, 4.0}};
    // SINR = 10^-4 / (4 * 20^-4) = 4.
    m.threshold = 3.9;
    CHECK(empirical_coverage(m, opt).p_cov == 1.0);
    m.threshold = 4.1;
    CHECK(empirical_coverage(m, opt).p_cov == 0.0);
}

TEST_CASE("same seed gives identical estimates regardless of threads")
{
    const CoverageModel m = toy_alpha4();
    McOptions opt;
    opt.trials = 20'000;
    opt.seed = 77;
    opt.radius_m = 150.0;
    opt.enforce_tail_bound = false;
    opt.placement = ServingPlacement::random_ppp;
    const McEstimate a = empirical_coverage(m, opt);
    const McEstimate b = empirical_coverage(m, opt);
    opt.threads = 3;
    const McEstimate c = empirical_coverage(m, opt);
    CHECK(a.p_cov == b.p_cov);
    CHECK(a.complement_union == b.complement_union);
    CHECK(a.p_cov == c.p_cov);
    CHECK(a.complement_union == c.complement_union);
    CHECK(a.complement_union_half_width_99 == c.complement_union_half_width_99);
    CHECK(a.half_width_99 == Catch::Approx(kZ99 * std::sqrt(a.p_cov * (1 - a.p_cov) / opt.trials)));
}

TEST_CASE("neighbouring seeds agree within their intervals")
{
    CoverageModel m = toy_alpha4();
    McOptions opt;
    opt.trials = 200'000;
    opt.serving_distance_m = 5.0;
    opt.radius_m = radius_for_tail(m, opt, 0.1 * kZ99 * 0.5 / std::sqrt(200'000.0));
    opt.seed = 100;
    const McEstimate a = empirical_coverage(m, opt);
    opt.seed = 101;
    const McEstimate b = empirical_coverage(m, opt);
    CHECK(a.p_cov != b.p_cov);
    CHECK(std::abs(a.p_cov - b.p_cov) <= a.half_width_99 + b.half_width_99);
}

TEST_CASE("common random numbers make sweeps monotone")
{
    const CoverageModel m = toy_alpha4();
    McOptions opt;
    opt.trials = 5000;
    opt.radius_m = 150.0;
    opt.enforce_tail_bound = false;
    opt.placement = ServingPlacement::random_ppp;
    const std::vector<double> thresholds{0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0};
    const auto est = empirical_coverage_sweep(m, thresholds, opt);
    for (std::size_t k = 1; k < est.size(); ++k) {
        CHECK(est[k].p_cov <= est[k - 1].p_cov);
        CHECK(est[k].complement_union >= est[k - 1].complement_union);
    }
}

TEST_CASE("fixed-distance estimate matches the unbounded-field link probability")
{
    CoverageModel m = toy_alpha4();
    McOptions opt;
    opt.trials = 200'000;
    opt.seed = 3;
    for (double r0 : {2.0, 6.0, 12.0}) {
        opt.serving_distance_m = r0;
        opt.radius_m = radius_for_tail(m, opt, 0.1 * kZ99 * 0.5 / std::sqrt(200'000.0));
        const McEstimate e = empirical_coverage(m, opt);
        CHECK_THAT(e.p_cov, WithinAbs(ppp_link_coverage(m, r0), e.half_width_99 + e.tail_estimate));
    }
}

TEST_CASE("random placement complement-union matches the PPP mean-count formula")
{
    // 1 - lambda_j * int 2 pi r exp(-C(4) sqrt(T/P) lambda_i sqrt(P_i) r^2) dr with C(4) = pi^2 / 2.
    CoverageModel m = toy_alpha4();
    m.serving.density_per_m2 = 2e-4;
    McOptions opt;
    opt.trials = 200'000;
    opt.seed = 11;
    opt.placement = ServingPlacement::random_ppp;
    opt.radius_m = radius_for_tail(m, opt, 0.1 * kZ99 * 0.5 / std::sqrt(200'000.0));
    const McEstimate e = empirical_coverage(m, opt);
    const double a = kPi * kPi / 2.0 * m.interferers[0].density_per_m2;
    const double expected = 1.0 - m.serving.density_per_m2 * kPi / a;
    CHECK_THAT(e.complement_union, WithinAbs(expected, e.complement_union_half_width_99 + e.tail_estimate));
}

TEST_CASE("truncation radius guards")
{
    CoverageModel m = toy_alpha4();
    McOptions opt;
    opt.trials = 1000;
    opt.radius_m = 1.0;
    opt.serving_distance_m = 5.0;
    CHECK_THROWS_AS(empirical_coverage(m, opt), ValidationError);

    m.alpha = 2.0;
    McOptions unset;
    unset.trials = 10;
    CHECK_THROWS_AS(empirical_coverage(m, unset), ValidationError);
    unset.radius_m = 50.0;
    const McEstimate e = empirical_coverage(m, unset);
    CHECK(e.radius_dependent);
    CHECK(std::isinf(e.tail_estimate));

    CHECK(std::isinf(truncation_tail_estimate(m, unset, 1e6)));
    CHECK_THROWS_AS(ppp_link_coverage(m, 1.0), DomainError);
}

TEST_CASE("tail estimate shrinks with radius")
{
    const CoverageModel m = toy_alpha4();
    McOptions opt;
    opt.serving_distance_m = 5.0;
    double prev = truncation_tail_estimate(m, opt, 10.0);
    for (double r : {20.0, 40.0, 80.0, 160.0}) {
        const double t = truncation_tail_estimate(m, opt, r);
        CHECK(t < prev);
        prev = t;
    }
    const double target = 1e-5;
    const double r = radius_for_tail(m, opt, target);
    CHECK(truncation_tail_estimate(m, opt, r) <= target);
    CHECK(truncation_tail_estimate(m, opt, r * 0.99) > target);
}
