#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "uavcov/errors.hpp"
#include "uavcov/link_budget.hpp"
#include "uavcov/units.hpp"

using namespace uavcov;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const Frequency k2GHz = Frequency::from_ghz(2.0);
const double kMu = db_to_linear(Decibel{3.0});

IrsLink reference_irs()
{
    const double lambda = wavelength(k2GHz);
    IrsLink l;
    l.feed_power_w = 0.1;
    l.carrier = k2GHz;
    l.element_len_x_m = lambda / 2;
    l.element_len_y_m = lambda / 2;
    l.elements_m = 32;
    l.elements_n = 32;
    l.tx_gain_linear = 100.0;
    l.rx_gain_linear = 100.0;
    l.incidence_rad = kPi / 4;
    l.departure_rad = kPi / 4;
    l.reflection_amplitude_sq = 0.81;
    l.d1_m = 100.0;
    l.d2_m = 223.66;
    return l;
}

}  // namespace

TEST_CASE("conventional link at 200 m")
{
    const ConventionalLink link{0.5, k2GHz, 1.0, kMu, 200.0};
    const double rx = conventional_rx_power(link);
    CHECK_THAT(rx, WithinRel(8.913980906240236e-10, 1e-12));
    CHECK_THAT(watts_to_dbm(rx), WithinAbs(-60.50, 0.01));

    ConventionalLink doubled = link;
    doubled.tx_power_w = 1.0;
    CHECK_THAT(conventional_rx_power(doubled), WithinRel(2.0 * rx, 1e-15));

    const ConventionalLink unit{free_space_constant(k2GHz, 1.0), k2GHz, 1.0, 1.0, 1.0};
    CHECK_THAT(conventional_rx_power(unit), WithinRel(1.0, 1e-15));
}

TEST_CASE("conventional link rejects distances inside the reference distance")
{
    CHECK_THROWS_AS(conventional_rx_power({1.0, k2GHz, 1.0, kMu, 0.5}), DomainError);
    CHECK_THROWS_AS(conventional_rx_power({-1.0, k2GHz, 1.0, kMu, 10.0}), DomainError);
}

TEST_CASE("conventional link power laws")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> p(0.01, 50.0);
    std::uniform_real_distribution<double> d(1.0, 5000.0);
    std::uniform_real_distribution<double> k(0.2, 5.0);
    for (int i = 0; i < 500; ++i) {
        ConventionalLink a{p(rng), k2GHz, 1.0, kMu, d(rng)};
        const double base = conventional_rx_power(a);
        const double s = k(rng);
        ConventionalLink b = a;
        b.tx_power_w *= s;
        CHECK_THAT(conventional_rx_power(b), WithinRel(s * base, 1e-12));
        ConventionalLink c = a;
        c.distance_m *= s;
        if (c.distance_m >= 1.0) {
            CHECK_THAT(conventional_rx_power(c), WithinRel(base / (s * s), 1e-12));
        }
    }
}

TEST_CASE("scattering gain")
{
    CHECK_THAT(scattering_gain(0.5, 0.5, 1.0), WithinRel(kPi, 1e-12));
    CHECK_THAT(scattering_gain(1.0, 1.0, 1.0), WithinRel(4.0 * kPi, 1e-12));
    CHECK_THAT(scattering_gain(0.075, 0.075, 0.15), WithinRel(kPi, 1e-12));
    CHECK_THROWS_AS(scattering_gain(0.1, 0.1, 0.0), DomainError);
}

TEST_CASE("IRS cascade reference value")
{
    // Straight-line evaluation of the cascade formula, see tests/oracles.
    CHECK_THAT(irs_rx_power(reference_irs()), WithinRel(1.696295124068626e-07, 1e-12));
    CHECK_THAT(std::cos(kPi / 4) * std::cos(kPi / 4), WithinRel(0.5, 1e-15));
}

TEST_CASE("IRS power scales with M^2 N^2")
{
    IrsLink one = reference_irs();
    one.elements_m = 1;
    one.elements_n = 1;
    const double base = irs_rx_power(one);
    for (std::uint32_t m : {2u, 7u, 32u, 64u, 256u}) {
        for (std::uint32_t n : {1u, 3u, 32u}) {
            IrsLink l = one;
            l.elements_m = m;
            l.elements_n = n;
            const double expected = static_cast<double>(m) * m * n * n;
            CHECK_THAT(irs_rx_power(l) / base, WithinRel(expected, 1e-12));
        }
    }
    IrsLink big = reference_irs();
    big.elements_m = big.elements_n = 64;
    CHECK_THAT(linear_to_db(irs_rx_power(big) / irs_rx_power(reference_irs())), WithinAbs(12.04, 0.01));
}

TEST_CASE("IRS formula with G_sct substituted equals the general path")
{
    const IrsLink l = reference_irs();
    const double lambda = wavelength(l.carrier);
    const double m2n2 = std::pow(32.0, 4);
    const double by_hand = l.element_len_x_m * l.element_len_y_m * lambda * lambda * m2n2 * 100.0 * 100.0 * kPi *
                           0.5 * 0.81 / (std::pow(l.d1_m * l.d2_m, 2) * 64.0 * std::pow(kPi, 3)) * l.feed_power_w;
    CHECK_THAT(irs_rx_power(l), WithinRel(by_hand, 1e-12));
}

TEST_CASE("IRS link domain checks")
{
    IrsLink grazing = reference_irs();
    grazing.incidence_rad = kPi / 2;
    CHECK_THROWS_AS(irs_rx_power(grazing), DomainError);
    IrsLink touching = reference_irs();
    touching.d1_m = 0.0;
    CHECK_THROWS_AS(irs_rx_power(touching), GeometryError);
}

TEST_CASE("sinr")
{
    CHECK_THAT(sinr(1e-9, {0.0}, 1e-12), WithinRel(1000.0, 1e-12));
    CHECK_THAT(sinr(1e-12, {0.0}, 1e-12), WithinRel(1.0, 1e-12));
    CHECK_THAT(sinr(8.921e-10, {9e-10}, 1e-12), WithinRel(0.9901220865704772, 1e-12));
    CHECK_THROWS_AS(sinr(1e-9, {0.0}, 0.0), DomainError);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(1e-13, 1e-8);
    for (int i = 0; i < 500; ++i) {
        const double rx = u(rng), i1 = u(rng), n = u(rng);
        CHECK(sinr(rx * 1.5, {i1}, n) > sinr(rx, {i1}, n));
        CHECK(sinr(rx, {i1 * 1.5}, n) < sinr(rx, {i1}, n));
    }
}

TEST_CASE("aggregate interference")
{
    CHECK(aggregate_interference({}).total_w == 0.0);
    const std::vector<double> two{1e-10, 2e-10};
    CHECK_THAT(aggregate_interference(two).total_w, WithinRel(3e-10, 1e-15));
    const std::vector<double> bad{1e-10, -1e-12};
    CHECK_THROWS_AS(aggregate_interference(bad), DomainError);

    const double macro = conventional_rx_power({30.0, k2GHz, 1.0, kMu, 400.0});
    CHECK_THAT(macro, WithinRel(1.3370971359360355e-08, 1e-12));
}
