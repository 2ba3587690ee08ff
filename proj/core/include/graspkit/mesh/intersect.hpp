// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "graspkit/mesh/bvh.hpp"
#include "graspkit/mesh/geometry.hpp"

namespace grasp {

struct FaceIntersection {
    int face_a;
    int face_b;
    Vec3 p0, p1;     // crossing segment endpoints
    bool coplanar;   // degenerate segment, excluded from ring building
    double length() const { return (p1 - p0).norm(); }
};

// All geometrically intersecting face pairs between two meshes, sorted by
// (face_a, face_b). Identical to the brute-force all-pairs test.
std::vector<FaceIntersection> mesh_intersections(const TriMesh& mesh_a,
                                                 const Bvh& bvh_a,
                                                 const TriMesh& mesh_b,
                                                 const Bvh& bvh_b);

}  // namespace grasp
