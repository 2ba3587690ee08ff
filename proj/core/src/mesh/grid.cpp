// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "graspkit/mesh/grid.hpp"

#include <algorithm>
#include <cmath>

#include "graspkit/common/error.hpp"

namespace grasp {

VertexGrid::VertexGrid(const std::vector<Vec3>& points, double cell)
    : points_(&points), cell_(cell) {
    if (cell <= 0) throw DataError("grid cell size must be positive");
    cells_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::int64_t c[3];
        cell_of(points[i], c);
        cells_[pack(c[0], c[1], c[2])].push_back(static_cast<int>(i));
    }
}

void VertexGrid::cell_of(const Vec3& p, std::int64_t out[3]) const {
    for (int k = 0; k < 3; ++k)
        out[k] = static_cast<std::int64_t>(std::floor(p[k] / cell_));
}

std::uint64_t VertexGrid::pack(std::int64_t x, std::int64_t y,
                               std::int64_t z) {
    constexpr std::int64_t offset = 1ll << 20;
    const auto ux = static_cast<std::uint64_t>(x + offset) & 0x1fffffull;
    const auto uy = static_cast<std::uint64_t>(y + offset) & 0x1fffffull;
    const auto uz = static_cast<std::uint64_t>(z + offset) & 0x1fffffull;
    return (ux << 42) | (uy << 21) | uz;
}

}  // namespace grasp
