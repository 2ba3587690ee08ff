// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graspkit/common/rotation.hpp"

namespace grasp {

// Closest point on triangle abc to p. Fills bary with the barycentric
// coordinates of the result (non-negative, summing to 1).
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b,
                               const Vec3& c, Vec3* bary = nullptr);

struct TriTriResult {
    bool intersects = false;
    bool coplanar = false;  // coplanar overlap; segment is degenerate
    Vec3 p0 = Vec3::Zero();
    Vec3 p1 = Vec3::Zero();
};

// Transversal triangle-triangle intersection with the crossing segment.
// Touching contacts (shared edges/vertices without a strict crossing) do not
// count as intersections; coplanar overlapping pairs are reported with the
// coplanar flag and a degenerate segment.
TriTriResult tri_tri_intersect(const Vec3& a0, const Vec3& a1, const Vec3& a2,
                               const Vec3& b0, const Vec3& b1, const Vec3& b2);

}  // namespace grasp
