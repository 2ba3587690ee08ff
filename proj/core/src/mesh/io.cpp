// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "graspkit/mesh/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "graspkit/common/error.hpp"

namespace grasp {

namespace {

MeshFormat format_from_extension(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(c));
    if (ext == ".obj") return MeshFormat::Obj;
    if (ext == ".ply") return MeshFormat::Ply;
    throw DataError("unknown mesh extension: " + path.string());
}

TriMesh load_obj(const std::filesystem::path& path, double unit_scale) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    TriMesh mesh;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x() >> v.y() >> v.z()))
                throw DataError(path.string() + ":" + std::to_string(lineno) +
                                ": malformed vertex");
            mesh.vertices.push_back(v * unit_scale);
        } else if (tag == "f") {
            std::vector<int> idx;
            std::string tok;
            while (ls >> tok) {
                // accept v, v/vt, v//vn, v/vt/vn
                const auto slash = tok.find('/');
                const std::string head =
                    slash == std::string::npos ? tok : tok.substr(0, slash);
                int i = 0;
                try {
                    i = std::stoi(head);
                } catch (const std::exception&) {
                    throw DataError(path.string() + ":" +
                                    std::to_string(lineno) +
                                    ": malformed face index '" + tok + "'");
                }
                // OBJ is 1-based; negative indices count from the end.
                if (i < 0) i = static_cast<int>(mesh.vertices.size()) + i + 1;
                idx.push_back(i - 1);
            }
            if (idx.size() < 3)
                throw DataError(path.string() + ":" + std::to_string(lineno) +
                                ": face with fewer than 3 vertices");
            for (std::size_t k = 1; k + 1 < idx.size(); ++k)
                mesh.faces.push_back({idx[0], idx[k], idx[k + 1]});
        }
    }
    if (mesh.vertices.empty()) throw DataError(path.string() + ": empty mesh");
    mesh.validate();
    return mesh;
}

struct PlyProperty {
    std::string type;
    std::string name;
};

struct PlyElement {
    std::string name;
    std::size_t count = 0;
    std::vector<PlyProperty> properties;
    bool list = false;
    std::string list_count_type, list_item_type;
};

std::size_t scalar_size(const std::string& t) {
    if (t == "char" || t == "uchar" || t == "int8" || t == "uint8") return 1;
    if (t == "short" || t == "ushort" || t == "int16" || t == "uint16")
        return 2;
    if (t == "int" || t == "uint" || t == "int32" || t == "uint32" ||
        t == "float" || t == "float32")
        return 4;
    if (t == "double" || t == "float64") return 8;
    throw DataError("unsupported PLY type: " + t);
}

double read_binary_scalar(std::istream& in, const std::string& t) {
    auto read_as = [&](auto value) -> double {
        in.read(reinterpret_cast<char*>(&value), sizeof(value));
        return static_cast<double>(value);
    };
    if (t == "char" || t == "int8") return read_as(std::int8_t{});
    if (t == "uchar" || t == "uint8") return read_as(std::uint8_t{});
    if (t == "short" || t == "int16") return read_as(std::int16_t{});
    if (t == "ushort" || t == "uint16") return read_as(std::uint16_t{});
    if (t == "int" || t == "int32") return read_as(std::int32_t{});
    if (t == "uint" || t == "uint32") return read_as(std::uint32_t{});
    if (t == "float" || t == "float32") return read_as(float{});
    return read_as(double{});
}

struct PlyData {
    TriMesh mesh;
    std::vector<std::array<std::uint8_t, 3>> colors;
};

PlyData load_ply_impl(const std::filesystem::path& path, double unit_scale) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line) || line.rfind("ply", 0) != 0)
        throw DataError(path.string() + ": not a PLY file");

    bool binary = false;
    std::vector<PlyElement> elements;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "comment" || tag == "obj_info") continue;
        if (tag == "format") {
            std::string fmt;
            ls >> fmt;
            if (fmt == "binary_little_endian")
                binary = true;
            else if (fmt == "ascii")
                binary = false;
            else
                throw DataError(path.string() + ": unsupported format " + fmt);
        } else if (tag == "element") {
            PlyElement e;
            ls >> e.name >> e.count;
            elements.push_back(e);
        } else if (tag == "property") {
            if (elements.empty())
                throw DataError(path.string() + ": property before element");
            std::string t;
            ls >> t;
            auto& e = elements.back();
            if (t == "list") {
                e.list = true;
                ls >> e.list_count_type >> e.list_item_type;
                std::string name;
                ls >> name;
            } else {
                PlyProperty p;
                p.type = t;
                ls >> p.name;
                e.properties.push_back(p);
            }
        } else if (tag == "end_header") {
            break;
        }
    }

    PlyData out;
    for (const auto& e : elements) {
        if (e.name == "vertex") {
            int ix = -1, iy = -1, iz = -1, ir = -1, ig = -1, ib = -1;
            for (std::size_t p = 0; p < e.properties.size(); ++p) {
                const auto& name = e.properties[p].name;
                if (name == "x") ix = static_cast<int>(p);
                if (name == "y") iy = static_cast<int>(p);
                if (name == "z") iz = static_cast<int>(p);
                if (name == "red") ir = static_cast<int>(p);
                if (name == "green") ig = static_cast<int>(p);
                if (name == "blue") ib = static_cast<int>(p);
            }
            if (ix < 0 || iy < 0 || iz < 0)
                throw DataError(path.string() + ": vertex element lacks xyz");
            const bool has_color = ir >= 0 && ig >= 0 && ib >= 0;
            out.mesh.vertices.reserve(e.count);
            std::vector<double> vals(e.properties.size());
            for (std::size_t i = 0; i < e.count; ++i) {
                if (binary) {
                    for (std::size_t p = 0; p < e.properties.size(); ++p)
                        vals[p] = read_binary_scalar(in, e.properties[p].type);
                } else {
                    for (std::size_t p = 0; p < e.properties.size(); ++p)
                        if (!(in >> vals[p]))
                            throw DataError(path.string() +
                                            ": truncated vertex data");
                }
                out.mesh.vertices.emplace_back(vals[ix] * unit_scale,
                                               vals[iy] * unit_scale,
                                               vals[iz] * unit_scale);
                if (has_color)
                    out.colors.push_back(
                        {static_cast<std::uint8_t>(vals[ir]),
                         static_cast<std::uint8_t>(vals[ig]),
                         static_cast<std::uint8_t>(vals[ib])});
            }
        } else if (e.name == "face") {
            out.mesh.faces.reserve(e.count);
            for (std::size_t i = 0; i < e.count; ++i) {
                std::size_t n = 0;
                std::vector<int> idx;
                if (binary) {
                    n = static_cast<std::size_t>(
                        read_binary_scalar(in, e.list_count_type));
                    for (std::size_t k = 0; k < n; ++k)
                        idx.push_back(static_cast<int>(
                            read_binary_scalar(in, e.list_item_type)));
                } else {
                    if (!(in >> n))
                        throw DataError(path.string() + ": truncated face");
                    idx.resize(n);
                    for (auto& v : idx)
                        if (!(in >> v))
                            throw DataError(path.string() +
                                            ": truncated face data");
                }
                if (n < 3)
                    throw DataError(path.string() + ": degenerate face");
                for (std::size_t k = 1; k + 1 < n; ++k)
                    out.mesh.faces.push_back({idx[0], idx[k], idx[k + 1]});
            }
        } else {
            // skip unknown elements
            if (binary) {
                std::size_t stride = 0;
                for (const auto& p : e.properties)
                    stride += scalar_size(p.type);
                if (e.list)
                    throw DataError(path.string() +
                                    ": cannot skip binary list element " +
                                    e.name);
                in.seekg(static_cast<std::streamoff>(stride * e.count),
                         std::ios::cur);
            } else {
                for (std::size_t i = 0; i < e.count; ++i)
                    std::getline(in, line);
            }
        }
    }
    if (out.mesh.vertices.empty())
        throw DataError(path.string() + ": empty mesh");
    out.mesh.validate();
    return out;
}

}  // namespace

TriMesh load_mesh(const std::filesystem::path& path, double unit_scale) {
    return load_mesh(path, format_from_extension(path), unit_scale);
}

TriMesh load_mesh(const std::filesystem::path& path, MeshFormat format,
                  double unit_scale) {
    if (format == MeshFormat::Obj) return load_obj(path, unit_scale);
    return load_ply_impl(path, unit_scale).mesh;
}

void save_obj(const std::filesystem::path& path, const TriMesh& mesh) {
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    if (!f) throw DataError("cannot write " + path.string());
    for (const auto& v : mesh.vertices)
        std::fprintf(f, "v %.9g %.9g %.9g\n", v.x(), v.y(), v.z());
    for (const auto& face : mesh.faces)
        std::fprintf(f, "f %d %d %d\n", face[0] + 1, face[1] + 1, face[2] + 1);
    std::fclose(f);
}

void save_ply(const std::filesystem::path& path, const TriMesh& mesh,
              bool binary,
              const std::vector<std::array<std::uint8_t, 3>>* colors) {
    if (colors && colors->size() != mesh.vertices.size())
        throw DataError("color count does not match vertex count");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());

    out << "ply\nformat "
        << (binary ? "binary_little_endian" : "ascii") << " 1.0\n";
    out << "element vertex " << mesh.vertices.size() << "\n";
    out << "property float x\nproperty float y\nproperty float z\n";
    if (colors)
        out << "property uchar red\nproperty uchar green\nproperty uchar "
               "blue\n";
    out << "element face " << mesh.faces.size() << "\n";
    out << "property list uchar int vertex_indices\n";
    out << "end_header\n";

    if (binary) {
        for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
            const float xyz[3] = {static_cast<float>(mesh.vertices[i].x()),
                                  static_cast<float>(mesh.vertices[i].y()),
                                  static_cast<float>(mesh.vertices[i].z())};
            out.write(reinterpret_cast<const char*>(xyz), sizeof(xyz));
            if (colors)
                out.write(reinterpret_cast<const char*>((*colors)[i].data()),
                          3);
        }
        for (const auto& face : mesh.faces) {
            const std::uint8_t n = 3;
            out.write(reinterpret_cast<const char*>(&n), 1);
            const std::int32_t idx[3] = {face[0], face[1], face[2]};
            out.write(reinterpret_cast<const char*>(idx), sizeof(idx));
        }
    } else {
        char buf[160];
        for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
            const auto& v = mesh.vertices[i];
            int len = std::snprintf(buf, sizeof(buf), "%.9g %.9g %.9g", v.x(),
                                    v.y(), v.z());
            out.write(buf, len);
            if (colors) {
                len = std::snprintf(buf, sizeof(buf), " %d %d %d",
                                    (*colors)[i][0], (*colors)[i][1],
                                    (*colors)[i][2]);
                out.write(buf, len);
            }
            out << "\n";
        }
        for (const auto& face : mesh.faces)
            out << "3 " << face[0] << " " << face[1] << " " << face[2] << "\n";
    }
}

std::vector<std::array<std::uint8_t, 3>> load_ply_colors(
    const std::filesystem::path& path) {
    return load_ply_impl(path, 1.0).colors;
}

}  // namespace grasp
