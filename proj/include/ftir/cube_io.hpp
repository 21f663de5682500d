#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ftir/cube.hpp"
#include "ftir/linalg.hpp"

namespace ftir {

// FTC1 cube container.
//
// Layout (all little-endian):
//   bytes 0..3   magic "FTC1"
//   u32          H, W, B
//   u8           wavenumber flag (1 = axis present)
//   f64 * B      wavenumbers, only when the flag is set
//   f32 * H*W*B  values, pixel-interleaved: index = ((h*W)+w)*B + b
HyperCube read_cube(const std::filesystem::path& path);
void write_cube(const HyperCube& cube, const std::filesystem::path& path);

// CSV with a header row; one row per band: wavenumber (or band index when no
// axis is given), then K endmember values.
void export_endmembers_csv(const EndmemberMatrix& endmembers,
                           const std::optional<WavenumberAxis>& axis,
                           const std::filesystem::path& path);
EndmemberMatrix read_endmembers_csv(const std::filesystem::path& path);

// One 8-bit PGM (P5, maxval 255) per endmember, pixel = round(255 * a), plus
// a sidecar <prefix>_maps.txt listing the written file names.
// Returns the image paths in endmember order.
std::vector<std::filesystem::path> export_abundance_maps(const AbundanceMap& map,
                                                         const std::string& path_prefix);

// Abundance maps stored as an FTC1 cube with K "bands".
void write_abundance_cube(const AbundanceMap& map, const std::filesystem::path& path);
AbundanceMap read_abundance_cube(const std::filesystem::path& path);

}  // namespace ftir
