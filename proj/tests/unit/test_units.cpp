#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "uavcov/errors.hpp"
#include "uavcov/units.hpp"

using namespace uavcov;
using Catch::Matchers::WithinRel;

TEST_CASE("db_to_linear reference values")
{
    CHECK(db_to_linear(Decibel{0.0}) == 1.0);
    CHECK_THAT(db_to_linear(Decibel{3.0}), WithinRel(1.9952623149688795, 1e-15));
    CHECK_THAT(db_to_linear(Decibel{10.0}), WithinRel(10.0, 1e-15));
    CHECK_THROWS_AS(db_to_linear(Decibel{NAN}), DomainError);
}

TEST_CASE("db_to_linear turns sums into products")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-60.0, 60.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = u(rng);
        const double b = u(rng);
        CHECK_THAT(db_to_linear(Decibel{a + b}), WithinRel(db_to_linear(Decibel{a}) * db_to_linear(Decibel{b}), 1e-10));
    }
}

TEST_CASE("linear_to_db inverts db_to_linear")
{
    CHECK_THAT(linear_to_db(db_to_linear(Decibel{-17.25})), WithinRel(-17.25, 1e-12));
    CHECK_THROWS_AS(linear_to_db(0.0), DomainError);
    CHECK_THROWS_AS(linear_to_db(-1.0), DomainError);
}

TEST_CASE("dBm conversions")
{
    CHECK_THAT(dbm_to_watts(DbmPower{30.0}), WithinRel(1.0, 1e-15));
    CHECK_THAT(dbm_to_watts(DbmPower{0.0}), WithinRel(1e-3, 1e-15));
    CHECK_THAT(dbm_to_watts(DbmPower{-90.0}), WithinRel(1e-12, 1e-14));
    CHECK_THAT(watts_to_dbm(1e-12), WithinRel(-90.0, 1e-14));
    CHECK_THROWS_AS(watts_to_dbm(0.0), DomainError);
}

TEST_CASE("wavelength")
{
    CHECK_THAT(wavelength(Frequency::from_ghz(2.0)), WithinRel(0.149896229, 1e-15));
    CHECK_THAT(wavelength(Frequency::from_ghz(30.0)), WithinRel(0.009993081933333333, 1e-15));
    CHECK(wavelength(Frequency{kSpeedOfLight}) == 1.0);
    for (double f : {1e6, 2.4e9, 7.3e10, 1e11}) {
        CHECK_THAT(wavelength(Frequency{f}) * f, WithinRel(kSpeedOfLight, 1e-15));
    }
    CHECK_THROWS_AS(wavelength(Frequency{0.0}), DomainError);
    CHECK_THROWS_AS(wavelength(Frequency{-1.0}), DomainError);
}

TEST_CASE("free_space_constant")
{
    // (4 pi * 2e9 / 299792458)^2, evaluated independently.
    CHECK_THAT(free_space_constant(Frequency::from_ghz(2.0), 1.0), WithinRel(7028.1061696634315, 1e-12));
    CHECK_THAT(free_space_constant(Frequency{kSpeedOfLight / (4.0 * kPi)}, 1.0), WithinRel(1.0, 1e-12));
    CHECK_THAT(free_space_constant(Frequency::from_ghz(30.0), 1.0),
               WithinRel(225.0 * free_space_constant(Frequency::from_ghz(2.0), 1.0), 1e-12));
    CHECK_THROWS_AS(free_space_constant(Frequency::from_ghz(2.0), 0.0), DomainError);
}

TEST_CASE("free_space_constant scales with frequency squared")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> f(1e8, 1e11);
    std::uniform_real_distribution<double> k(0.1, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double base = f(rng);
        const double scale = k(rng);
        CHECK_THAT(free_space_constant(Frequency{scale * base}, 1.0),
                   WithinRel(scale * scale * free_space_constant(Frequency{base}, 1.0), 1e-12));
    }
}
