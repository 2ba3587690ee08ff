// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace grasp {

// Array store used for model files, checkpoints and encодings: a JSON
// manifest next to one little-endian float32 blob. The manifest carries the
// array names, shapes and byte offsets; values are converted from the
// double-precision working representation on save.
struct NamedArray {
    std::vector<int> shape;
    std::vector<double> data;

    std::int64_t size() const {
        std::int64_t n = 1;
        for (int s : shape) n *= s;
        return n;
    }
};

class BlobWriter {
   public:
    void add(const std::string& name, std::vector<int> shape,
             const std::vector<double>& data);
    void add_matrix(const std::string& name, const double* data, int rows,
                    int cols);  // column-major input, stored row-major
    // Writes <stem>.json and <stem>.bin. extra_manifest, when non-empty, is a
    // serialized JSON object merged into the manifest root.
    void write(const std::filesystem::path& stem,
               const std::string& extra_manifest = "") const;

   private:
    std::vector<std::pair<std::string, NamedArray>> arrays_;
};

class BlobReader {
   public:
    explicit BlobReader(const std::filesystem::path& stem);
    bool has(const std::string& name) const;
    const NamedArray& get(const std::string& name) const;
    // Raw manifest JSON text for module-specific fields.
    const std::string& manifest_text() const { return manifest_text_; }

   private:
    std::map<std::string, NamedArray> arrays_;
    std::string manifest_text_;
};

void write_f32_file(const std::filesystem::path& path,
                    const std::vector<double>& values);
std::vector<double> read_f32_file(const std::filesystem::path& path);

}  // namespace grasp
