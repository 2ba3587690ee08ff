// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "graspkit/mesh/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace grasp {

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b,
                               const Vec3& c, Vec3* bary) {
    // Ericson, Real-Time Collision Detection, 5.1.5.
    const Vec3 ab = b - a;
    const Vec3 ac = c - a;
    const Vec3 ap = p - a;
    const double d1 = ab.dot(ap);
    const double d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) {
        if (bary) *bary = {1, 0, 0};
        return a;
    }

    const Vec3 bp = p - b;
    const double d3 = ab.dot(bp);
    const double d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) {
        if (bary) *bary = {0, 1, 0};
        return b;
    }

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        if (bary) *bary = {1 - v, v, 0};
        return a + v * ab;
    }

    const Vec3 cp = p - c;
    const double d5 = ab.dot(cp);
    const double d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) {
        if (bary) *bary = {0, 0, 1};
        return c;
    }

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        if (bary) *bary = {1 - w, 0, w};
        return a + w * ac;
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        if (bary) *bary = {0, 1 - w, w};
        return b + w * (c - b);
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom;
    const double w = vc * denom;
    if (bary) *bary = {1 - v - w, v, w};
    return a + ab * v + ac * w;
}

namespace {

constexpr double kPlaneEps = 1e-12;

struct PlaneCut {
    bool straddles = false;
    Vec3 q0, q1;  // crossing points
};

// Points where triangle (v, dist-to-plane) crosses the plane. Requires a
// strict straddle: at least one vertex on each open side.
PlaneCut cut_by_plane(const Vec3 v[3], const double d[3]) {
    PlaneCut cut;
    int pos = -1, neg = -1, zero = -1;
    int npos = 0, nneg = 0;
    for (int i = 0; i < 3; ++i) {
        if (d[i] > kPlaneEps) {
            pos = i;
            ++npos;
        } else if (d[i] < -kPlaneEps) {
            neg = i;
            ++nneg;
        } else {
            zero = i;
        }
    }
    if (npos == 0 || nneg == 0) return cut;
    cut.straddles = true;

    Vec3 pts[2];
    int count = 0;
    if (zero >= 0) {
        pts[count++] = v[zero];
        const double t = d[pos] / (d[pos] - d[neg]);
        pts[count++] = v[pos] + t * (v[neg] - v[pos]);
    } else {
        // One vertex alone on its side; the two edges from it cross.
        const int lone = (npos == 1) ? pos : neg;
        for (int i = 0; i < 3; ++i) {
            if (i == lone) continue;
            const double t = d[lone] / (d[lone] - d[i]);
            pts[count++] = v[lone] + t * (v[i] - v[lone]);
        }
    }
    cut.q0 = pts[0];
    cut.q1 = pts[1];
    return cut;
}

// 2D overlap test for coplanar triangles, projected on the dominant axis of
// the shared normal. Separating-axis test over both triangles' edge normals.
bool coplanar_overlap(const Vec3 a[3], const Vec3 b[3], const Vec3& n) {
    int drop = 0;
    n.cwiseAbs().maxCoeff(&drop);
    const int u = (drop + 1) % 3, v = (drop + 2) % 3;
    double A[3][2], B[3][2];
    for (int i = 0; i < 3; ++i) {
        A[i][0] = a[i][u];
        A[i][1] = a[i][v];
        B[i][0] = b[i][u];
        B[i][1] = b[i][v];
    }
    auto separated_by_edges = [](double P[3][2], double Q[3][2]) {
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3;
            const double ex = P[j][0] - P[i][0];
            const double ey = P[j][1] - P[i][1];
            // outward or inward normal; compare both ranges
            const double nx = -ey, ny = ex;
            double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
            for (int k = 0; k < 3; ++k) {
                const double dp = nx * P[k][0] + ny * P[k][1];
                const double dq = nx * Q[k][0] + ny * Q[k][1];
                pmin = std::min(pmin, dp);
                pmax = std::max(pmax, dp);
                qmin = std::min(qmin, dq);
                qmax = std::max(qmax, dq);
            }
            if (pmax < qmin - kPlaneEps || qmax < pmin - kPlaneEps)
                return true;
        }
        return false;
    };
    return !separated_by_edges(A, B) && !separated_by_edges(B, A);
}

}  // namespace

TriTriResult tri_tri_intersect(const Vec3& a0, const Vec3& a1, const Vec3& a2,
                               const Vec3& b0, const Vec3& b1,
                               const Vec3& b2) {
    TriTriResult res;
    const Vec3 A[3] = {a0, a1, a2};
    const Vec3 B[3] = {b0, b1, b2};

    const Vec3 nb = (B[1] - B[0]).cross(B[2] - B[0]);
    double da[3];
    for (int i = 0; i < 3; ++i) da[i] = nb.dot(A[i] - B[0]);

    const Vec3 na = (A[1] - A[0]).cross(A[2] - A[0]);
    double db[3];
    for (int i = 0; i < 3; ++i) db[i] = na.dot(B[i] - A[0]);

    const bool a_coplanar = std::abs(da[0]) <= kPlaneEps &&
                            std::abs(da[1]) <= kPlaneEps &&
                            std::abs(da[2]) <= kPlaneEps;
    if (a_coplanar) {
        if (coplanar_overlap(A, B, nb)) {
            res.intersects = true;
            res.coplanar = true;
            res.p0 = res.p1 = (A[0] + A[1] + A[2]) / 3.0;
        }
        return res;
    }

    const PlaneCut cut_a = cut_by_plane(A, da);
    if (!cut_a.straddles) return res;
    const PlaneCut cut_b = cut_by_plane(B, db);
    if (!cut_b.straddles) return res;

    // Both segments lie on the plane-intersection line; overlap in 1D.
    const Vec3 dir = na.cross(nb);
    double amin = dir.dot(cut_a.q0), amax = dir.dot(cut_a.q1);
    Vec3 apmin = cut_a.q0, apmax = cut_a.q1;
    if (amin > amax) {
        std::swap(amin, amax);
        std::swap(apmin, apmax);
    }
    double bmin = dir.dot(cut_b.q0), bmax = dir.dot(cut_b.q1);
    Vec3 bpmin = cut_b.q0, bpmax = cut_b.q1;
    if (bmin > bmax) {
        std::swap(bmin, bmax);
        std::swap(bpmin, bpmax);
    }

    const double lo = std::max(amin, bmin);
    const double hi = std::min(amax, bmax);
    const double scale = std::max({std::abs(amin), std::abs(amax),
                                   std::abs(bmin), std::abs(bmax), 1e-30});
    if (hi - lo <= 1e-12 * scale) return res;

    res.intersects = true;
    res.p0 = (amin >= bmin) ? apmin : bpmin;
    res.p1 = (amax <= bmax) ? apmax : bpmax;
    return res;
}

}  // namespace grasp
