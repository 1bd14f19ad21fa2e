#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace driftcast {

/// Cartesian model grid. Doubly periodic; cell (j,k) is centered at
/// ((j+1/2)dx, (k+1/2)dy), j = 0..nx-1, k = 0..ny-1.
struct ModelGrid {
    int nx = 0;
    int ny = 0;
    double dx = 0.0; // meters
    double dy = 0.0;

    ModelGrid() = default;
    ModelGrid(int nx_, int ny_, double dx_, double dy_) : nx(nx_), ny(ny_), dx(dx_), dy(dy_) {
        if (nx < 8 || ny < 8) throw std::invalid_argument("ModelGrid: need nx,ny >= 8");
        if (!(dx > 0.0) || !(dy > 0.0)) throw std::invalid_argument("ModelGrid: need dx,dy > 0");
    }

    double lx() const { return nx * dx; }
    double ly() const { return ny * dy; }

    std::pair<double, double> cell_center(int j, int k) const {
        return {(j + 0.5) * dx, (k + 0.5) * dy};
    }
};

struct PhysParams {
    double g = 9.806;     // m/s^2
    double f = 1.405e-4;  // 1/s
    double h_eq = 230.0;  // equilibrium depth, m

    PhysParams() = default;
    PhysParams(double g_, double f_, double h_eq_) : g(g_), f(f_), h_eq(h_eq_) {
        if (!(g > 0.0)) throw std::invalid_argument("PhysParams: g must be > 0");
        if (!(h_eq > 0.0)) throw std::invalid_argument("PhysParams: h_eq must be > 0");
        if (f == 0.0) throw std::invalid_argument("PhysParams: f must be nonzero");
    }
};

inline int wrap_mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

/// Reduce cell indices modulo the periodic extents.
inline std::pair<int, int> wrap_index(int j, int k, const ModelGrid& grid) {
    return {wrap_mod(j, grid.nx), wrap_mod(k, grid.ny)};
}

/// Cell containing physical position (x,y); positions wrap periodically.
inline std::pair<int, int> locate_cell(double x, double y, const ModelGrid& grid) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("locate_cell: non-finite position");
    double lx = grid.lx(), ly = grid.ly();
    double xm = std::fmod(x, lx);
    if (xm < 0.0) xm += lx;
    double ym = std::fmod(y, ly);
    if (ym < 0.0) ym += ly;
    int j = static_cast<int>(std::floor(xm / grid.dx));
    int k = static_cast<int>(std::floor(ym / grid.dy));
    // fmod rounding can land exactly on the upper edge
    if (j >= grid.nx) j = 0;
    if (k >= grid.ny) k = 0;
    return {j, k};
}

/// Coarse random-number grid, nested in a ModelGrid. The coarsening factor is odd so
/// that coarse points sit on fine cell centers: point (a,b) is co-located with fine
/// cell (offset_j + c_omega*a, offset_k + c_omega*b).
struct CoarseGrid {
    int c_omega = 1;
    int offset_j = 0;
    int offset_k = 0;
    int nxc = 0; // point counts
    int nyc = 0;
    double dxc = 0.0; // spacing, meters
    double dyc = 0.0;

    CoarseGrid() = default;
    CoarseGrid(const ModelGrid& grid, int c_omega_, int offset_j_ = 0, int offset_k_ = 0)
        : c_omega(c_omega_), offset_j(offset_j_), offset_k(offset_k_) {
        if (c_omega <= 0 || c_omega % 2 == 0)
            throw std::invalid_argument("CoarseGrid: coarsening factor must be odd and positive");
        if (grid.nx % c_omega != 0 || grid.ny % c_omega != 0)
            throw std::invalid_argument("CoarseGrid: c_omega must divide nx and ny");
        if (offset_j < 0 || offset_j >= c_omega || offset_k < 0 || offset_k >= c_omega)
            throw std::invalid_argument("CoarseGrid: offsets must lie in [0, c_omega)");
        nxc = grid.nx / c_omega;
        nyc = grid.ny / c_omega;
        dxc = c_omega * grid.dx;
        dyc = c_omega * grid.dy;
    }

    std::size_t points() const { return static_cast<std::size_t>(nxc) * nyc; }

    /// Fine cell co-located with coarse point (a,b); indices wrap.
    std::pair<int, int> fine_cell(int a, int b, const ModelGrid& grid) const {
        return wrap_index(offset_j + c_omega * a, offset_k + c_omega * b, grid);
    }

    /// Coarse point co-located with fine cell (j,k), or nullopt-like {-1,-1} if none.
    std::pair<int, int> coarse_point_of(int j, int k) const {
        if ((j - offset_j) % c_omega != 0 || (k - offset_k) % c_omega != 0) return {-1, -1};
        return {wrap_mod((j - offset_j) / c_omega, nxc), wrap_mod((k - offset_k) / c_omega, nyc)};
    }
};

/// Offset configuration that puts one coarse point exactly on the center of obs_cell.
inline CoarseGrid align_coarse_offset(std::pair<int, int> obs_cell, const CoarseGrid& coarse,
                                      const ModelGrid& grid) {
    auto [j, k] = wrap_index(obs_cell.first, obs_cell.second, grid);
    return CoarseGrid(grid, coarse.c_omega, j % coarse.c_omega, k % coarse.c_omega);
}

} // namespace driftcast
