// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "graspkit/common/binio.hpp"

#include <bit>
#include <fstream>

#include "graspkit/common/error.hpp"
#include "json.hpp"

static_assert(std::endian::native == std::endian::little,
              "file formats assume a little-endian host");

namespace grasp {

namespace {

void write_floats(std::ofstream& out, const std::vector<double>& values) {
    std::vector<float> f(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        f[i] = static_cast<float>(values[i]);
    out.write(reinterpret_cast<const char*>(f.data()),
              static_cast<std::streamsize>(f.size() * sizeof(float)));
}

}  // namespace

void BlobWriter::add(const std::string& name, std::vector<int> shape,
                     const std::vector<double>& data) {
    NamedArray a;
    a.shape = std::move(shape);
    a.data = data;
    if (a.size() != static_cast<std::int64_t>(a.data.size()))
        throw DataError("BlobWriter: shape does not match data size for '" +
                        name + "'");
    arrays_.emplace_back(name, std::move(a));
}

void BlobWriter::add_matrix(const std::string& name, const double* data,
                            int rows, int cols) {
    NamedArray a;
    a.shape = {rows, cols};
    a.data.resize(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            a.data[static_cast<std::size_t>(r) * cols + c] =
                data[static_cast<std::size_t>(c) * rows + r];
    arrays_.emplace_back(name, std::move(a));
}

void BlobWriter::write(const std::filesystem::path& stem,
                       const std::string& extra_manifest) const {
    nlohmann::ordered_json manifest;
    if (!extra_manifest.empty()) {
        manifest = nlohmann::ordered_json::parse(extra_manifest);
    }
    nlohmann::ordered_json arrays = nlohmann::ordered_json::array();
    std::int64_t offset = 0;
    for (const auto& [name, arr] : arrays_) {
        nlohmann::ordered_json entry;
        entry["name"] = name;
        entry["shape"] = arr.shape;
        entry["offset"] = offset;
        entry["count"] = arr.size();
        arrays.push_back(entry);
        offset += arr.size() * static_cast<std::int64_t>(sizeof(float));
    }
    manifest["dtype"] = "f32le";
    manifest["arrays"] = arrays;

    auto json_path = stem;
    json_path += ".json";
    auto bin_path = stem;
    bin_path += ".bin";

    std::ofstream jout(json_path);
    if (!jout) throw DataError("cannot write " + json_path.string());
    jout << manifest.dump(2) << "\n";

    std::ofstream bout(bin_path, std::ios::binary);
    if (!bout) throw DataError("cannot write " + bin_path.string());
    for (const auto& [name, arr] : arrays_) write_floats(bout, arr.data);
}

BlobReader::BlobReader(const std::filesystem::path& stem) {
    auto json_path = stem;
    json_path += ".json";
    auto bin_path = stem;
    bin_path += ".bin";

    std::ifstream jin(json_path);
    if (!jin) throw DataError("cannot open " + json_path.string());
    manifest_text_.assign(std::istreambuf_iterator<char>(jin),
                          std::istreambuf_iterator<char>());
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(manifest_text_);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(json_path.string() + ": " + e.what());
    }

    std::ifstream bin(bin_path, std::ios::binary);
    if (!bin) throw DataError("cannot open " + bin_path.string());

    for (const auto& entry : manifest.at("arrays")) {
        NamedArray a;
        a.shape = entry.at("shape").get<std::vector<int>>();
        const auto count = entry.at("count").get<std::int64_t>();
        const auto offset = entry.at("offset").get<std::int64_t>();
        std::vector<float> f(static_cast<std::size_t>(count));
        bin.seekg(offset);
        bin.read(reinterpret_cast<char*>(f.data()),
                 static_cast<std::streamsize>(f.size() * sizeof(float)));
        if (!bin)
            throw DataError("truncated blob " + bin_path.string());
        a.data.assign(f.begin(), f.end());
        arrays_[entry.at("name").get<std::string>()] = std::move(a);
    }
}

bool BlobReader::has(const std::string& name) const {
    return arrays_.count(name) > 0;
}

const NamedArray& BlobReader::get(const std::string& name) const {
    auto it = arrays_.find(name);
    if (it == arrays_.end())
        throw DataError("missing array '" + name + "' in blob");
    return it->second;
}

void write_f32_file(const std::filesystem::path& path,
                    const std::vector<double>& values) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    write_floats(out, values);
}

std::vector<double> read_f32_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw DataError("cannot open " + path.string());
    const auto bytes = static_cast<std::size_t>(in.tellg());
    if (bytes % sizeof(float) != 0)
        throw DataError(path.string() + ": size is not a multiple of 4");
    std::vector<float> f(bytes / sizeof(float));
    in.seekg(0);
    in.read(reinterpret_cast<char*>(f.data()),
            static_cast<std::streamsize>(bytes));
    return {f.begin(), f.end()};
}

}  // namespace grasp
