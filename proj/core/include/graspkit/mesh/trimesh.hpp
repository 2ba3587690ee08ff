// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "graspkit/common/rotation.hpp"

namespace grasp {

// Indexed triangle surface. Units are meters everywhere; loaders apply a
// unit-scale factor at the boundary so no other code deals with unit mixes.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    // Optional per-vertex body-part ids; empty when the mesh is unlabeled.
    std::vector<int> part_labels;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    bool has_parts() const { return !part_labels.empty(); }

    // Throws DataError on out-of-range indices, repeated indices within a
    // face, or fewer than 3 vertices.
    void validate() const;

    Vec3 centroid() const;  // vertex mean

    void transform(const Mat3& R, const Vec3& t);
    TriMesh transformed(const Mat3& R, const Vec3& t) const;

    std::pair<Vec3, Vec3> bounds() const;

    // vertex -> vertices sharing an edge, CSR layout
    struct Adjacency {
        std::vector<int> offsets;
        std::vector<int> neighbors;
    };
    Adjacency vertex_adjacency() const;

    int euler_characteristic() const;  // V - E + F
};

// Unique undirected edges with rest lengths, derived from the face list.
struct MeshEdge {
    int a, b;
    double length;
};
std::vector<MeshEdge> mesh_edges(const TriMesh& mesh);

// Extracts the submesh of vertices whose part label is in `parts`, keeping
// faces whose three vertices all qualify. Returns the submesh and the map
// from submesh vertex index to original index.
std::pair<TriMesh, std::vector<int>> submesh_by_parts(
    const TriMesh& mesh, const std::vector<int>& parts);

}  // namespace grasp
