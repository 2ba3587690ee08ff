// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "graspkit/mesh/trimesh.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "graspkit/common/error.hpp"

namespace grasp {

void TriMesh::validate() const {
    if (vertex_count() < 3) throw DataError("mesh has fewer than 3 vertices");
    const int n = vertex_count();
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        for (int k = 0; k < 3; ++k) {
            if (face[k] < 0 || face[k] >= n)
                throw DataError("face " + std::to_string(f) +
                                " references out-of-range vertex " +
                                std::to_string(face[k]));
        }
        if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2])
            throw DataError("face " + std::to_string(f) +
                            " has repeated vertex indices");
    }
    if (!part_labels.empty() &&
        part_labels.size() != vertices.size())
        throw DataError("part label count does not match vertex count");
}

Vec3 TriMesh::centroid() const {
    Vec3 c = Vec3::Zero();
    for (const auto& v : vertices) c += v;
    return vertices.empty() ? c : Vec3(c / static_cast<double>(vertices.size()));
}

void TriMesh::transform(const Mat3& R, const Vec3& t) {
    for (auto& v : vertices) v = R * v + t;
}

TriMesh TriMesh::transformed(const Mat3& R, const Vec3& t) const {
    TriMesh out = *this;
    out.transform(R, t);
    return out;
}

std::pair<Vec3, Vec3> TriMesh::bounds() const {
    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::max());
    Vec3 hi = Vec3::Constant(std::numeric_limits<double>::lowest());
    for (const auto& v : vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    return {lo, hi};
}

TriMesh::Adjacency TriMesh::vertex_adjacency() const {
    const int n = vertex_count();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(faces.size() * 6);
    for (const auto& f : faces) {
        for (int k = 0; k < 3; ++k) {
            const int a = f[k];
            const int b = f[(k + 1) % 3];
            pairs.emplace_back(a, b);
            pairs.emplace_back(b, a);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    Adjacency adj;
    adj.offsets.assign(n + 1, 0);
    for (const auto& p : pairs) adj.offsets[p.first + 1]++;
    for (int i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
    adj.neighbors.resize(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        adj.neighbors[i] = pairs[i].second;
    return adj;
}

int TriMesh::euler_characteristic() const {
    std::set<std::pair<int, int>> edges;
    for (const auto& f : faces) {
        for (int k = 0; k < 3; ++k) {
            int a = f[k], b = f[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            edges.insert({a, b});
        }
    }
    return vertex_count() - static_cast<int>(edges.size()) + face_count();
}

std::vector<MeshEdge> mesh_edges(const TriMesh& mesh) {
    std::set<std::pair<int, int>> unique;
    for (const auto& f : mesh.faces) {
        for (int k = 0; k < 3; ++k) {
            int a = f[k], b = f[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            unique.insert({a, b});
        }
    }
    std::vector<MeshEdge> edges;
    edges.reserve(unique.size());
    for (const auto& [a, b] : unique)
        edges.push_back(
            {a, b, (mesh.vertices[a] - mesh.vertices[b]).norm()});
    return edges;
}

std::pair<TriMesh, std::vector<int>> submesh_by_parts(
    const TriMesh& mesh, const std::vector<int>& parts) {
    if (!mesh.has_parts()) throw DataError("mesh has no part labels");
    const std::set<int> wanted(parts.begin(), parts.end());
    std::vector<int> to_sub(mesh.vertex_count(), -1);
    std::vector<int> to_full;
    for (int v = 0; v < mesh.vertex_count(); ++v) {
        if (wanted.count(mesh.part_labels[v])) {
            to_sub[v] = static_cast<int>(to_full.size());
            to_full.push_back(v);
        }
    }
    if (to_full.empty())
        throw DataError("no vertices carry the requested part labels");

    TriMesh sub;
    sub.vertices.reserve(to_full.size());
    sub.part_labels.reserve(to_full.size());
    for (int v : to_full) {
        sub.vertices.push_back(mesh.vertices[v]);
        sub.part_labels.push_back(mesh.part_labels[v]);
    }
    for (const auto& f : mesh.faces) {
        const int a = to_sub[f[0]], b = to_sub[f[1]], c = to_sub[f[2]];
        if (a >= 0 && b >= 0 && c >= 0) sub.faces.push_back({a, b, c});
    }
    return {std::move(sub), std::move(to_full)};
}

}  // namespace grasp
