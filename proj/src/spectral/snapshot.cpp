#include "stagmesh/spectral/snapshot.hpp"

#include "stagmesh/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace stagmesh::spectral {
namespace {

template <typename T>
void put(std::ostream& os, T value)
{
    std::array<char, sizeof(T)> bytes{};
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    os.write(bytes.data(), bytes.size());
}

template <typename T>
T get(std::istream& is)
{
    std::array<char, sizeof(T)> bytes{};
    if (!is.read(bytes.data(), bytes.size())) {
        throw Error("snapshot: truncated file");
    }
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const RealField& f)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw Error("snapshot: cannot open " + path.string() + " for writing");
    }
    os.write("SMF1", 4);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid().nx()));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid().ny()));
    put<double>(os, f.grid().lx());
    put<double>(os, f.grid().ly());
    for (double v : f.values()) {
        put<double>(os, v);
    }
    if (!os) {
        throw Error("snapshot: write failed for " + path.string());
    }
}

RealField read_snapshot(const std::filesystem::path& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw Error("snapshot: cannot open " + path.string());
    }
    std::array<char, 4> magic{};
    if (!is.read(magic.data(), 4) || std::memcmp(magic.data(), "SMF1", 4) != 0) {
        throw Error("snapshot: bad magic in " + path.string());
    }
    const auto nx = get<std::uint32_t>(is);
    const auto ny = get<std::uint32_t>(is);
    const auto lx = get<double>(is);
    const auto ly = get<double>(is);
    Grid2D grid(static_cast<int>(nx), static_cast<int>(ny), lx, ly);
    RealField f(grid);
    for (auto& v : f.values()) {
        v = get<double>(is);
    }
    return f;
}

}  // namespace stagmesh::spectral
