// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "graspkit/mesh/intersect.hpp"

#include <algorithm>

#include "graspkit/common/error.hpp"

namespace grasp {

std::vector<FaceIntersection> mesh_intersections(const TriMesh& mesh_a,
                                                 const Bvh& bvh_a,
                                                 const TriMesh& mesh_b,
                                                 const Bvh& bvh_b) {
    if (mesh_a.face_count() == 0 || mesh_b.face_count() == 0)
        throw DataError("mesh_intersections requires non-empty meshes");

    std::vector<FaceIntersection> out;
    for (const auto& [fa, fb] : bvh_a.overlap_candidates(bvh_b)) {
        const auto& ta = mesh_a.faces[fa];
        const auto& tb = mesh_b.faces[fb];
        const TriTriResult r = tri_tri_intersect(
            mesh_a.vertices[ta[0]], mesh_a.vertices[ta[1]],
            mesh_a.vertices[ta[2]], mesh_b.vertices[tb[0]],
            mesh_b.vertices[tb[1]], mesh_b.vertices[tb[2]]);
        if (r.intersects)
            out.push_back({fa, fb, r.p0, r.p1, r.coplanar});
    }
    // overlap_candidates is already sorted; keep the guarantee explicit.
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::pair(x.face_a, x.face_b) < std::pair(y.face_a, y.face_b);
    });
    return out;
}

}  // namespace grasp
