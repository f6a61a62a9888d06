// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace uavcov {

// Position in meters; z is the height above the ground plane.
struct Point3D
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Point3D&, const Point3D&) = default;

    friend Point3D operator+(const Point3D& a, const Point3D& b)
    {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
};

// Throws GeometryError unless every coordinate is finite and z >= 0.
void validate_position(const Point3D& p);

// Euclidean separation. Throws DomainError on non-finite coordinates.
double distance(const Point3D& a, const Point3D& b);

struct NodeLayout
{
    Point3D macro_bs;
    Point3D micro_bs;
    Point3D uav_or_irs;  // UAV base station, or the IRS carried by the UAV
    Point3D user;

    friend bool operator==(const NodeLayout&, const NodeLayout&) = default;
};

inline constexpr double kMacroBsHeight = 20.0;
inline constexpr double kMicroBsHeight = 10.0;
inline constexpr double kUserHeight = 1.5;
inline constexpr double kMicroCellHalfWidth = 100.0;  // 200 m x 200 m micro cell
inline constexpr double kMacroCellWidth = 1000.0;     // 1000 m x 1000 m macro cell

// Reference placement: micro BS at the micro-cell center, UAV/IRS straight
// above it at the given altitude, user at the horizontal cell edge, and the
// nearest macro site one macro-cell width beyond the user.
NodeLayout default_layout(double uav_altitude_m);

// Two hops of the reflected path.
struct CascadeDistances
{
    double bs_to_irs = 0.0;
    double irs_to_user = 0.0;
};

// Throws GeometryError when either hop has zero length.
CascadeDistances cascade_distances(const NodeLayout& layout);

}  // namespace uavcov
