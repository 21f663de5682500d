#include "ftir/cube_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "FTC1 serialization assumes a little-endian host");

namespace ftir {

namespace {

constexpr char kMagic[4] = {'F', 'T', 'C', '1'};

void check_dims(std::uint32_t h, std::uint32_t w, std::uint32_t b) {
    if (h == 0 || w == 0 || b == 0)
        throw Error(ErrorKind::Dimension, "cube dimensions must be positive, got " +
                                              std::to_string(h) + "x" + std::to_string(w) + "x" +
                                              std::to_string(b));
    const std::uint64_t n = std::uint64_t(h) * w * b;
    if (n > (std::uint64_t(1) << 40))
        throw Error(ErrorKind::Dimension, "cube too large: " + std::to_string(n) + " values");
}

template <typename T>
void write_raw(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_raw(std::ifstream& in, const char* what) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in)
        throw Error(ErrorKind::Length, std::string("truncated file while reading ") + what);
    return v;
}

}  // namespace

void HyperCube::validate() const {
    check_dims(height, width, bands);
    if (data.size() != value_count())
        throw Error(ErrorKind::Length,
                    "cube data length " + std::to_string(data.size()) + " does not match " +
                        std::to_string(value_count()));
    for (std::size_t i = 0; i < data.size(); ++i)
        if (!std::isfinite(data[i]))
            throw Error(ErrorKind::Data, "non-finite cube value at flat index " + std::to_string(i));
    if (wavenumbers && wavenumbers->values.size() != bands)
        throw Error(ErrorKind::Dimension, "wavenumber axis length " +
                                              std::to_string(wavenumbers->values.size()) +
                                              " does not match band count " + std::to_string(bands));
}

HyperCube read_cube(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());

    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw Error(ErrorKind::Format, "bad magic in " + path.string() + " (expected FTC1)");

    HyperCube cube;
    cube.height = read_raw<std::uint32_t>(in, "height");
    cube.width = read_raw<std::uint32_t>(in, "width");
    cube.bands = read_raw<std::uint32_t>(in, "bands");
    check_dims(cube.height, cube.width, cube.bands);

    const auto flag = read_raw<std::uint8_t>(in, "axis flag");
    if (flag > 1)
        throw Error(ErrorKind::Format, "invalid wavenumber flag " + std::to_string(int(flag)));
    if (flag == 1) {
        std::vector<double> wn(cube.bands);
        in.read(reinterpret_cast<char*>(wn.data()), std::streamsize(wn.size() * sizeof(double)));
        if (!in) throw Error(ErrorKind::Length, "truncated wavenumber axis");
        cube.wavenumbers = WavenumberAxis::from_values(std::move(wn));
    }

    const std::size_t n = cube.value_count();
    std::vector<float> payload(n);
    in.read(reinterpret_cast<char*>(payload.data()), std::streamsize(n * sizeof(float)));
    if (static_cast<std::size_t>(in.gcount()) != n * sizeof(float))
        throw Error(ErrorKind::Length, "truncated payload: expected " +
                                           std::to_string(n * sizeof(float)) + " bytes, got " +
                                           std::to_string(in.gcount()));
    // trailing garbage is also a malformed file
    char extra;
    if (in.read(&extra, 1))
        throw Error(ErrorKind::Length, "trailing bytes after payload in " + path.string());

    cube.data.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(payload[i]))
            throw Error(ErrorKind::Data,
                        "non-finite value at flat index " + std::to_string(i) + " in " + path.string());
        cube.data[i] = static_cast<double>(payload[i]);
    }
    return cube;
}

void write_cube(const HyperCube& cube, const std::filesystem::path& path) {
    cube.validate();

    std::vector<float> payload(cube.data.size());
    for (std::size_t i = 0; i < cube.data.size(); ++i) {
        const float f = static_cast<float>(cube.data[i]);
        if (!std::isfinite(f))
            throw Error(ErrorKind::Data, "value at flat index " + std::to_string(i) +
                                             " not representable in single precision");
        payload[i] = f;
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    out.write(kMagic, 4);
    write_raw(out, cube.height);
    write_raw(out, cube.width);
    write_raw(out, cube.bands);
    const std::uint8_t flag = cube.wavenumbers ? 1 : 0;
    write_raw(out, flag);
    if (cube.wavenumbers)
        out.write(reinterpret_cast<const char*>(cube.wavenumbers->values.data()),
                  std::streamsize(cube.bands * sizeof(double)));
    out.write(reinterpret_cast<const char*>(payload.data()),
              std::streamsize(payload.size() * sizeof(float)));
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

void export_endmembers_csv(const EndmemberMatrix& endmembers,
                           const std::optional<WavenumberAxis>& axis,
                           const std::filesystem::path& path) {
    const auto bands = endmembers.rows();
    const auto k = endmembers.cols();
    if (bands == 0 || k == 0)
        throw Error(ErrorKind::Dimension, "empty endmember matrix");
    if (axis && static_cast<Eigen::Index>(axis->values.size()) != bands)
        throw Error(ErrorKind::Dimension, "axis length " + std::to_string(axis->values.size()) +
                                              " does not match band count " + std::to_string(bands));

    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");

    out << (axis ? "wavenumber" : "band");
    for (Eigen::Index j = 0; j < k; ++j) out << ",em" << j;
    out << "\n";

    char buf[64];
    for (Eigen::Index b = 0; b < bands; ++b) {
        if (axis) {
            std::snprintf(buf, sizeof(buf), "%.12g", axis->values[std::size_t(b)]);
            out << buf;
        } else {
            out << b;
        }
        for (Eigen::Index j = 0; j < k; ++j) {
            std::snprintf(buf, sizeof(buf), "%.12g", endmembers(b, j));
            out << ',' << buf;
        }
        out << "\n";
    }
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

EndmemberMatrix read_endmembers_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorKind::Format, "empty endmember CSV " + path.string());

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() < 2)
            throw Error(ErrorKind::Format, "endmember CSV row with fewer than 2 columns");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error(ErrorKind::Format, "endmember CSV has no data rows");

    const std::size_t k = rows[0].size() - 1;
    EndmemberMatrix em(rows.size(), k);
    for (std::size_t b = 0; b < rows.size(); ++b) {
        if (rows[b].size() != k + 1)
            throw Error(ErrorKind::Format, "ragged endmember CSV at row " + std::to_string(b));
        for (std::size_t j = 0; j < k; ++j) em(Eigen::Index(b), Eigen::Index(j)) = rows[b][j + 1];
    }
    return em;
}

std::vector<std::filesystem::path> export_abundance_maps(const AbundanceMap& map,
                                                         const std::string& path_prefix) {
    if (map.count == 0 || map.height == 0 || map.width == 0)
        throw Error(ErrorKind::Dimension, "empty abundance map");

    std::vector<std::filesystem::path> paths;
    for (std::uint32_t k = 0; k < map.count; ++k) {
        char suffix[24];
        std::snprintf(suffix, sizeof(suffix), "_k%02u.pgm", k);
        std::filesystem::path p = path_prefix + suffix;

        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Io, "cannot open " + p.string() + " for writing");
        out << "P5\n" << map.width << " " << map.height << "\n255\n";
        std::vector<unsigned char> row(map.width);
        for (std::uint32_t h = 0; h < map.height; ++h) {
            for (std::uint32_t w = 0; w < map.width; ++w) {
                const double v = std::lround(255.0 * map.at(k, h, w));
                row[w] = static_cast<unsigned char>(std::min(255.0, std::max(0.0, v)));
            }
            out.write(reinterpret_cast<const char*>(row.data()), row.size());
        }
        out.flush();
        if (!out) throw Error(ErrorKind::Io, "write failed for " + p.string());
        paths.push_back(std::move(p));
    }

    std::ofstream sidecar(path_prefix + "_maps.txt", std::ios::trunc);
    if (!sidecar) throw Error(ErrorKind::Io, "cannot open sidecar for " + path_prefix);
    for (const auto& p : paths) sidecar << p.filename().string() << "\n";
    sidecar.flush();
    if (!sidecar) throw Error(ErrorKind::Io, "sidecar write failed for " + path_prefix);
    return paths;
}

void write_abundance_cube(const AbundanceMap& map, const std::filesystem::path& path) {
    HyperCube cube(map.height, map.width, map.count);
    for (std::uint32_t h = 0; h < map.height; ++h)
        for (std::uint32_t w = 0; w < map.width; ++w)
            for (std::uint32_t k = 0; k < map.count; ++k)
                cube.at(h, w, k) = map.at(k, h, w);
    write_cube(cube, path);
}

AbundanceMap read_abundance_cube(const std::filesystem::path& path) {
    const HyperCube cube = read_cube(path);
    AbundanceMap map(cube.bands, cube.height, cube.width);
    for (std::uint32_t h = 0; h < cube.height; ++h)
        for (std::uint32_t w = 0; w < cube.width; ++w)
            for (std::uint32_t k = 0; k < cube.bands; ++k)
                map.at(k, h, w) = cube.at(h, w, k);
    return map;
}

}  // namespace ftir
