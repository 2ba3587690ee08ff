// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "graspkit/mesh/trimesh.hpp"

namespace grasp {

enum class MeshFormat { Obj, Ply };

// Format inferred from the extension (.obj / .ply) unless forced.
// unit_scale multiplies vertex coordinates on load (e.g. 0.001 for
// millimeter files); meshes are meters in memory.
TriMesh load_mesh(const std::filesystem::path& path, double unit_scale = 1.0);
TriMesh load_mesh(const std::filesystem::path& path, MeshFormat format,
                  double unit_scale);

void save_obj(const std::filesystem::path& path, const TriMesh& mesh);

// binary = little-endian; ascii otherwise. colors, when given, must have one
// RGB triple per vertex.
void save_ply(const std::filesystem::path& path, const TriMesh& mesh,
              bool binary = true,
              const std::vector<std::array<std::uint8_t, 3>>* colors = nullptr);

// Reads back per-vertex colors from a PLY written with save_ply; empty if
// the file has none.
std::vector<std::array<std::uint8_t, 3>> load_ply_colors(
    const std::filesystem::path& path);

}  // namespace grasp
