// SPDX-License-Identifier: Apache-2.0
#include "uavcov/geometry.hpp"

#include <cmath>

#include "uavcov/errors.hpp"

namespace uavcov {

void validate_position(const Point3D& p)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
        throw GeometryError("node coordinates must be finite");
    }
    if (p.z < 0.0) {
        throw GeometryError("node height must be non-negative");
    }
}

double distance(const Point3D& a, const Point3D& b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    if (!std::isfinite(dx) || !std::isfinite(dy) || !std::isfinite(dz)) {
        throw DomainError("distance between non-finite points");
    }
    return std::hypot(dx, dy, dz);
}

NodeLayout default_layout(double uav_altitude_m)
{
    NodeLayout l;
    l.micro_bs = {0.0, 0.0, kMicroBsHeight};
    l.uav_or_irs = {0.0, 0.0, uav_altitude_m};
    l.user = {kMicroCellHalfWidth, 0.0, kUserHeight};
    l.macro_bs = {kMicroCellHalfWidth + kMacroCellWidth, 0.0, kMacroBsHeight};
    return l;
}

CascadeDistances cascade_distances(const NodeLayout& layout)
{
    const double d1 = distance(layout.micro_bs, layout.uav_or_irs);
    const double d2 = distance(layout.uav_or_irs, layout.user);
    if (d1 == 0.0) {
        throw GeometryError("micro BS and IRS are coincident");
    }
    if (d2 == 0.0) {
        throw GeometryError("IRS and user are coincident");
    }
    return {d1, d2};
}

}  // namespace uavcov
