#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "driftcast/field.hpp"
#include "driftcast/grid.hpp"

namespace driftcast {

/// Model state psi = [eta, hu, hv] on the model grid, plus simulation time.
/// Fields are single precision; all scalar filter arithmetic stays in double.
struct OceanState {
    FieldF eta; // surface deviation, m
    FieldF hu;  // volume transport along x, m^2/s
    FieldF hv;  // volume transport along y, m^2/s
    double t = 0.0;

    OceanState() = default;
    explicit OceanState(const ModelGrid& grid, double t0 = 0.0)
        : eta(grid.nx, grid.ny, 0.0f), hu(grid.nx, grid.ny, 0.0f), hv(grid.nx, grid.ny, 0.0f),
          t(t0) {}

    int nx() const { return eta.nx(); }
    int ny() const { return eta.ny(); }
};

/// Positive water column everywhere, all values finite.
inline bool state_valid(const OceanState& s, const PhysParams& phys) {
    for (std::size_t i = 0; i < s.eta.size(); ++i) {
        float e = s.eta.data()[i];
        if (!std::isfinite(e) || !(phys.h_eq + static_cast<double>(e) > 0.0)) return false;
        if (!std::isfinite(s.hu.data()[i]) || !std::isfinite(s.hv.data()[i])) return false;
    }
    return true;
}

// ---- snapshot format ------------------------------------------------------
//
// Bit-exact layout (little endian):
//   "DCST" | u32 version | u32 nx | u32 ny | f64 t | eta f32[nx*ny] | hu ... | hv ...
// Field arrays are row-major with j fastest, matching Field2D storage.

inline constexpr std::uint32_t kSnapshotVersion = 1;

namespace detail {

static_assert(std::endian::native == std::endian::little,
              "snapshot writer assumes a little-endian host");

template <typename T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::runtime_error("snapshot: truncated stream");
    return v;
}

} // namespace detail

inline void save_snapshot(std::ostream& os, const OceanState& s) {
    os.write("DCST", 4);
    detail::put(os, kSnapshotVersion);
    detail::put(os, static_cast<std::uint32_t>(s.nx()));
    detail::put(os, static_cast<std::uint32_t>(s.ny()));
    detail::put(os, s.t);
    for (const FieldF* f : {&s.eta, &s.hu, &s.hv})
        os.write(reinterpret_cast<const char*>(f->data()),
                 static_cast<std::streamsize>(f->size() * sizeof(float)));
    if (!os) throw std::runtime_error("snapshot: write failed");
}

inline void save_snapshot(const std::string& path, const OceanState& s) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("snapshot: cannot open " + path);
    save_snapshot(os, s);
}

inline OceanState load_snapshot(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "DCST", 4) != 0)
        throw std::runtime_error("snapshot: bad magic");
    auto version = detail::get<std::uint32_t>(is);
    if (version != kSnapshotVersion)
        throw std::runtime_error("snapshot: unsupported version " + std::to_string(version));
    auto nx = detail::get<std::uint32_t>(is);
    auto ny = detail::get<std::uint32_t>(is);
    if (nx == 0 || ny == 0 || nx > (1u << 20) || ny > (1u << 20))
        throw std::runtime_error("snapshot: implausible extents");
    OceanState s;
    s.t = detail::get<double>(is);
    for (FieldF* f : {&s.eta, &s.hu, &s.hv}) {
        *f = FieldF(static_cast<int>(nx), static_cast<int>(ny));
        is.read(reinterpret_cast<char*>(f->data()),
                static_cast<std::streamsize>(f->size() * sizeof(float)));
        if (!is) throw std::runtime_error("snapshot: truncated field data");
    }
    return s;
}

inline OceanState load_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("snapshot: cannot open " + path);
    return load_snapshot(is);
}

} // namespace driftcast
