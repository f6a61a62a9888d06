// SPDX-License-Identifier: Apache-2.0
#pragma once

// Unit conversions and physical constants. Everything inside the library is
// linear SI (watts, meters, hertz); decibels appear only at the boundaries.

namespace uavcov {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact SI value
inline constexpr double kPi = 3.14159265358979323846;

// Power ratio in dB.
struct Decibel
{
    double value = 0.0;
};

// Absolute power in dBm.
struct DbmPower
{
    double value = 0.0;
};

struct Frequency
{
    double hertz = 0.0;

    static constexpr Frequency from_ghz(double ghz) { return Frequency{ghz * 1e9}; }
};

double db_to_linear(Decibel x);
double linear_to_db(double ratio);

double dbm_to_watts(DbmPower x);
double watts_to_dbm(double watts);

// c / f.
double wavelength(Frequency f);

// Free-space reference constant K0 = (4*pi*f*d0/c)^2.
double free_space_constant(Frequency f, double ref_distance_m);

}  // namespace uavcov
