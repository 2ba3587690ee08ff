// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "graspkit/common/rotation.hpp"

namespace grasp {

// Uniform hash grid over points, for radius queries with radius <= cell.
// Exact: candidates from the 27 surrounding cells are distance-filtered, so
// results equal a brute-force scan.
class VertexGrid {
   public:
    VertexGrid() = default;
    VertexGrid(const std::vector<Vec3>& points, double cell);

    // Calls fn(index, distance) for every point with |p - q| <= radius,
    // in ascending index order. radius must be <= cell size. Queries are
    // const and safe from multiple threads.
    template <typename F>
    void for_neighbors(const Vec3& q, double radius, F&& fn) const {
        const double r2 = radius * radius;
        std::int64_t base[3];
        cell_of(q, base);
        std::vector<int> candidates;
        candidates.reserve(64);
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy)
                for (std::int64_t dz = -1; dz <= 1; ++dz) {
                    const auto it = cells_.find(
                        pack(base[0] + dx, base[1] + dy, base[2] + dz));
                    if (it == cells_.end()) continue;
                    for (int idx : it->second) candidates.push_back(idx);
                }
        std::sort(candidates.begin(), candidates.end());
        for (int idx : candidates) {
            const double d2 = ((*points_)[idx] - q).squaredNorm();
            if (d2 <= r2) fn(idx, std::sqrt(d2));
        }
    }

    double cell() const { return cell_; }

   private:
    void cell_of(const Vec3& p, std::int64_t out[3]) const;
    static std::uint64_t pack(std::int64_t x, std::int64_t y, std::int64_t z);

    const std::vector<Vec3>* points_ = nullptr;
    double cell_ = 0;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

}  // namespace grasp
