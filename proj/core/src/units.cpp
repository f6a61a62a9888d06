// SPDX-License-Identifier: Apache-2.0
#include "uavcov/units.hpp"

#include <cmath>
#include <string>

#include "uavcov/errors.hpp"

namespace uavcov {

namespace {

void require_finite(double v, const char* what)
{
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

}  // namespace

double db_to_linear(Decibel x)
{
    require_finite(x.value, "dB value");
    return std::pow(10.0, x.value / 10.0);
}

double linear_to_db(double ratio)
{
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw DomainError("power ratio must be positive and finite");
    }
    return 10.0 * std::log10(ratio);
}

double dbm_to_watts(DbmPower x)
{
    require_finite(x.value, "dBm value");
    return std::pow(10.0, (x.value - 30.0) / 10.0);
}

double watts_to_dbm(double watts)
{
    if (!(watts > 0.0) || !std::isfinite(watts)) {
        throw DomainError("power must be positive and finite");
    }
    return 10.0 * std::log10(watts) + 30.0;
}

double wavelength(Frequency f)
{
    if (!(f.hertz > 0.0) || !std::isfinite(f.hertz)) {
        throw DomainError("frequency must be positive and finite");
    }
    return kSpeedOfLight / f.hertz;
}

double free_space_constant(Frequency f, double ref_distance_m)
{
    if (!(f.hertz > 0.0) || !std::isfinite(f.hertz)) {
        throw DomainError("frequency must be positive and finite");
    }
    if (!(ref_distance_m > 0.0) || !std::isfinite(ref_distance_m)) {
        throw DomainError("reference distance must be positive and finite");
    }
    const double a = 4.0 * kPi * f.hertz * ref_distance_m / kSpeedOfLight;
    return a * a;
}

}  // namespace uavcov
