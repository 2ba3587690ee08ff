// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "graspkit/mesh/bvh.hpp"

#include <algorithm>
#include <limits>

#include "graspkit/common/error.hpp"
#include "graspkit/mesh/geometry.hpp"

namespace grasp {

Bvh Bvh::build(const TriMesh& mesh) {
    if (mesh.face_count() == 0) throw DataError("cannot build BVH on empty mesh");
    Bvh bvh;
    bvh.mesh_ = &mesh;
    const int nf = mesh.face_count();
    bvh.face_order_.resize(nf);
    std::vector<Vec3> centroids(nf);
    for (int f = 0; f < nf; ++f) {
        bvh.face_order_[f] = f;
        const auto& face = mesh.faces[f];
        centroids[f] = (mesh.vertices[face[0]] + mesh.vertices[face[1]] +
                        mesh.vertices[face[2]]) /
                       3.0;
    }
    bvh.nodes_.reserve(2 * nf);
    bvh.build_range(bvh.face_order_, centroids, 0, nf);
    return bvh;
}

int Bvh::build_range(std::vector<int>& order, std::vector<Vec3>& centroids,
                     int start, int count) {
    const int index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::max());
    Vec3 hi = Vec3::Constant(std::numeric_limits<double>::lowest());
    for (int i = start; i < start + count; ++i) {
        const auto& f = mesh_->faces[order[i]];
        for (int k = 0; k < 3; ++k) {
            lo = lo.cwiseMin(mesh_->vertices[f[k]]);
            hi = hi.cwiseMax(mesh_->vertices[f[k]]);
        }
    }
    nodes_[index].lo = lo;
    nodes_[index].hi = hi;

    if (count <= kLeafSize) {
        nodes_[index].start = start;
        nodes_[index].count = count;
        // Ascending face order inside leaves keeps traversal deterministic.
        std::sort(order.begin() + start, order.begin() + start + count);
        return index;
    }

    int axis = 0;
    (hi - lo).maxCoeff(&axis);
    // Full sort with index tie-break: nth_element is not deterministic
    // across implementations.
    std::sort(order.begin() + start, order.begin() + start + count,
              [&](int a, int b) {
                  if (centroids[a][axis] != centroids[b][axis])
                      return centroids[a][axis] < centroids[b][axis];
                  return a < b;
              });
    const int half = count / 2;
    const int left = build_range(order, centroids, start, half);
    const int right = build_range(order, centroids, start + half, count - half);
    nodes_[index].left = left;
    nodes_[index].right = right;
    return index;
}

double Bvh::box_distance2(const Node& n, const Vec3& q) const {
    double d2 = 0;
    for (int k = 0; k < 3; ++k) {
        const double lo = n.lo[k] - q[k];
        const double hi = q[k] - n.hi[k];
        const double d = std::max({lo, hi, 0.0});
        d2 += d * d;
    }
    return d2;
}

void Bvh::closest_recurse(int node, const Vec3& q, SurfacePoint& best,
                          double& best_d2) const {
    const Node& n = nodes_[node];
    if (n.leaf()) {
        for (int i = n.start; i < n.start + n.count; ++i) {
            const int f = face_order_[i];
            const auto& face = mesh_->faces[f];
            Vec3 bary;
            const Vec3 p = closest_point_on_triangle(
                q, mesh_->vertices[face[0]], mesh_->vertices[face[1]],
                mesh_->vertices[face[2]], &bary);
            const double d2 = (p - q).squaredNorm();
            if (d2 < best_d2 || (d2 == best_d2 && f < best.face)) {
                best_d2 = d2;
                best.face = f;
                best.bary = bary;
                best.position = p;
            }
        }
        return;
    }
    const double dl = box_distance2(nodes_[n.left], q);
    const double dr = box_distance2(nodes_[n.right], q);
    // Visit the nearer child first; never prune on equality so equal-distance
    // lower-index faces are still found.
    const int first = (dl <= dr) ? n.left : n.right;
    const int second = (dl <= dr) ? n.right : n.left;
    const double dfirst = std::min(dl, dr);
    const double dsecond = std::max(dl, dr);
    if (dfirst <= best_d2) closest_recurse(first, q, best, best_d2);
    if (dsecond <= best_d2) closest_recurse(second, q, best, best_d2);
}

std::pair<SurfacePoint, double> Bvh::closest_point(const Vec3& query) const {
    SurfacePoint best;
    double best_d2 = std::numeric_limits<double>::max();
    closest_recurse(0, query, best, best_d2);
    return {best, std::sqrt(best_d2)};
}

std::pair<SurfacePoint, double> Bvh::closest_point_within(
    const Vec3& query, double max_dist) const {
    SurfacePoint best;
    // nextafter keeps the bound inclusive: a face at exactly max_dist counts.
    double best_d2 = std::nextafter(max_dist * max_dist,
                                    std::numeric_limits<double>::max());
    closest_recurse(0, query, best, best_d2);
    if (best.face < 0) return {best, std::numeric_limits<double>::infinity()};
    return {best, (best.position - query).norm()};
}

void Bvh::overlap_recurse(const Bvh& other, int na, int nb,
                          std::vector<std::pair<int, int>>& out) const {
    const Node& a = nodes_[na];
    const Node& b = other.nodes_[nb];
    for (int k = 0; k < 3; ++k) {
        if (a.lo[k] > b.hi[k] || b.lo[k] > a.hi[k]) return;
    }
    if (a.leaf() && b.leaf()) {
        for (int i = a.start; i < a.start + a.count; ++i)
            for (int j = b.start; j < b.start + b.count; ++j)
                out.emplace_back(face_order_[i], other.face_order_[j]);
        return;
    }
    if (b.leaf() || (!a.leaf() && (a.hi - a.lo).squaredNorm() >=
                                      (b.hi - b.lo).squaredNorm())) {
        overlap_recurse(other, a.left, nb, out);
        overlap_recurse(other, a.right, nb, out);
    } else {
        overlap_recurse(other, na, b.left, out);
        overlap_recurse(other, na, b.right, out);
    }
}

std::vector<std::pair<int, int>> Bvh::overlap_candidates(
    const Bvh& other) const {
    std::vector<std::pair<int, int>> out;
    overlap_recurse(other, 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

void Bvh::refit_recurse(int node) {
    Node& n = nodes_[node];
    if (n.leaf()) {
        Vec3 lo = Vec3::Constant(std::numeric_limits<double>::max());
        Vec3 hi = Vec3::Constant(std::numeric_limits<double>::lowest());
        for (int i = n.start; i < n.start + n.count; ++i) {
            const auto& f = mesh_->faces[face_order_[i]];
            for (int k = 0; k < 3; ++k) {
                lo = lo.cwiseMin(mesh_->vertices[f[k]]);
                hi = hi.cwiseMax(mesh_->vertices[f[k]]);
            }
        }
        n.lo = lo;
        n.hi = hi;
        return;
    }
    refit_recurse(n.left);
    refit_recurse(n.right);
    n.lo = nodes_[n.left].lo.cwiseMin(nodes_[n.right].lo);
    n.hi = nodes_[n.left].hi.cwiseMax(nodes_[n.right].hi);
}

void Bvh::refit(const TriMesh& moved) {
    if (moved.face_count() != static_cast<int>(face_order_.size()))
        throw DataError("refit: face count changed");
    mesh_ = &moved;
    refit_recurse(0);
}

void Bvh::collect_faces(std::vector<int>& out) const {
    for (const auto& n : nodes_) {
        if (n.leaf()) {
            for (int i = n.start; i < n.start + n.count; ++i)
                out.push_back(face_order_[i]);
        }
    }
}

}  // namespace grasp
