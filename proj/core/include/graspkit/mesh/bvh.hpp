// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "graspkit/mesh/trimesh.hpp"

namespace grasp {

// Point on a mesh surface: face index plus barycentric coordinates.
struct SurfacePoint {
    int face = -1;
    Vec3 bary = Vec3::Zero();
    Vec3 position = Vec3::Zero();
};

// Axis-aligned bounding-box tree over the faces of one mesh. Immutable after
// construction except for refit(); all queries are const and thread-safe.
// Queries return results identical to brute force over all faces, with ties
// broken toward the lowest face index.
class Bvh {
   public:
    Bvh() = default;
    static Bvh build(const TriMesh& mesh);

    bool empty() const { return nodes_.empty(); }
    const TriMesh& mesh() const { return *mesh_; }

    std::pair<SurfacePoint, double> closest_point(const Vec3& query) const;

    // Nearest surface point within max_dist; face = -1 when none qualifies.
    std::pair<SurfacePoint, double> closest_point_within(
        const Vec3& query, double max_dist) const;

    // Face pairs (this mesh, other mesh) whose bounding boxes overlap,
    // sorted ascending. Exact tests are the caller's job.
    std::vector<std::pair<int, int>> overlap_candidates(const Bvh& other) const;

    // Recomputes boxes for new vertex positions of a topologically identical
    // mesh, and repoints queries at it.
    void refit(const TriMesh& moved);

    // Leaf-face traversal used by tests to confirm every face is reachable
    // exactly once.
    void collect_faces(std::vector<int>& out) const;

   private:
    struct Node {
        Vec3 lo, hi;
        int left = -1, right = -1;  // internal
        int start = 0, count = 0;   // leaf: range in face_order_
        bool leaf() const { return left < 0; }
    };

    int build_range(std::vector<int>& order, std::vector<Vec3>& centroids,
                    int start, int count);
    double box_distance2(const Node& n, const Vec3& q) const;
    void closest_recurse(int node, const Vec3& q, SurfacePoint& best,
                         double& best_d2) const;
    void overlap_recurse(const Bvh& other, int na, int nb,
                         std::vector<std::pair<int, int>>& out) const;
    void refit_recurse(int node);

    const TriMesh* mesh_ = nullptr;
    std::vector<Node> nodes_;
    std::vector<int> face_order_;

    static constexpr int kLeafSize = 4;
};

}  // namespace grasp
