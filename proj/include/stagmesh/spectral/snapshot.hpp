#pragma once

#include "stagmesh/spectral/field.hpp"

#include <filesystem>

namespace stagmesh::spectral {

// Binary little-endian layout:
//   "SMF1" | u32 nx | u32 ny | f64 lx | f64 ly | nx*ny f64 samples, x-major.
void write_snapshot(const std::filesystem::path& path, const RealField& f);
[[nodiscard]] RealField read_snapshot(const std::filesystem::path& path);

}  // namespace stagmesh::spectral
