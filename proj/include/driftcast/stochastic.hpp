#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "driftcast/field.hpp"
#include "driftcast/grid.hpp"
#include "driftcast/rng.hpp"
#include "driftcast/state.hpp"
#include "driftcast/swe.hpp"

namespace driftcast {

/// Model-error covariance parameters. The SOAR cut-off is fixed at 2 coarse points,
/// which the coarsening factor is chosen to support.
struct ErrorParams {
    double q0 = 2.5e-4; // SOAR amplitude, m
    double l0 = 0.0;    // correlation length, m; default set from the coarse spacing
    int c_soar = 2;

    ErrorParams() = default;
    ErrorParams(double q0_, double l0_) : q0(q0_), l0(l0_) {
        if (q0 < 0.0) throw std::invalid_argument("ErrorParams: q0 must be >= 0");
        if (!(l0 > 0.0)) throw std::invalid_argument("ErrorParams: l0 must be > 0");
    }

    /// Paper default: L0 = (3/4) of the coarse spacing.
    static ErrorParams defaults_for(const CoarseGrid& coarse, double q0 = 2.5e-4) {
        return ErrorParams(q0, 0.75 * coarse.dxc);
    }
};

/// Scalar field on the coarse random-number grid, tied to one offset configuration.
struct CoarseField {
    CoarseGrid grid;
    FieldD values;

    CoarseField() = default;
    explicit CoarseField(const CoarseGrid& g) : grid(g), values(g.nxc, g.nyc, 0.0) {}
};

inline double soar_kernel(double dist, const ErrorParams& p) {
    return p.q0 * (1.0 + dist / p.l0) * std::exp(-dist / p.l0);
}

/// SOAR correlation operator on the coarse grid: 5x5 stencil (cut-off 2), periodic.
/// Symmetric since the kernel depends only on point distance.
inline CoarseField apply_soar(const CoarseField& in, const ErrorParams& p) {
    const int nxc = in.grid.nxc, nyc = in.grid.nyc;
    const int c = p.c_soar;
    CoarseField out(in.grid);
    // kernel weights are shared by every point
    double w[5][5];
    for (int da = -c; da <= c; ++da)
        for (int db = -c; db <= c; ++db)
            w[da + 2][db + 2] = soar_kernel(std::hypot(da * in.grid.dxc, db * in.grid.dyc), p);
    for (int b = 0; b < nyc; ++b)
        for (int a = 0; a < nxc; ++a) {
            double s = 0.0;
            for (int db = -c; db <= c; ++db) {
                int bb = Field2D<double>::mod(b + db, nyc);
                for (int da = -c; da <= c; ++da)
                    s += w[da + 2][db + 2] * in.values(Field2D<double>::mod(a + da, nxc), bb);
            }
            out.values(a, b) = s;
        }
    return out;
}

/// One standard normal draw per coarse point, consumed from the given stream.
inline CoarseField sample_xi(NoiseStream& rng, const CoarseGrid& grid) {
    CoarseField f(grid);
    for (int b = 0; b < grid.nyc; ++b)
        for (int a = 0; a < grid.nxc; ++a) f.values(a, b) = rng.normal();
    return f;
}

namespace stoch_detail {

inline double catmull(double fm1, double f0, double f1, double f2, double t) {
    double a = 2.0 * f0;
    double b = f1 - fm1;
    double c = 2.0 * fm1 - 5.0 * f0 + 4.0 * f1 - f2;
    double d = -fm1 + 3.0 * f0 - 3.0 * f1 + f2;
    return 0.5 * (a + t * (b + t * (c + t * d)));
}

} // namespace stoch_detail

/// Bicubic (Catmull-Rom) interpolation of a coarse field onto fine cell centers.
/// Reproduces coarse values exactly at co-located cells and linear ramps everywhere.
inline FieldD interpolate_bicubic(const CoarseField& cf, const ModelGrid& grid) {
    const CoarseGrid& cg = cf.grid;
    FieldD out(grid.nx, grid.ny);
    const double inv_c = 1.0 / cg.c_omega;
    for (int k = 0; k < grid.ny; ++k) {
        double yc = (k - cg.offset_k) * inv_c;
        int b0 = static_cast<int>(std::floor(yc));
        double ty = yc - b0;
        int bs[4];
        for (int m = 0; m < 4; ++m) bs[m] = Field2D<double>::mod(b0 - 1 + m, cg.nyc);
        for (int j = 0; j < grid.nx; ++j) {
            double xc = (j - cg.offset_j) * inv_c;
            int a0 = static_cast<int>(std::floor(xc));
            double tx = xc - a0;
            int as[4];
            for (int m = 0; m < 4; ++m) as[m] = Field2D<double>::mod(a0 - 1 + m, cg.nxc);
            double col[4];
            for (int m = 0; m < 4; ++m)
                col[m] = stoch_detail::catmull(cf.values(as[0], bs[m]), cf.values(as[1], bs[m]),
                                               cf.values(as[2], bs[m]), cf.values(as[3], bs[m]),
                                               tx);
            out(j, k) = stoch_detail::catmull(col[0], col[1], col[2], col[3], ty);
        }
    }
    return out;
}

/// Transports in discrete geostrophic balance with a surface perturbation:
/// dhu = -(g H/f) * d(eta)/dy, dhv = +(g H/f) * d(eta)/dx, central differences.
inline void geostrophic_balance(const FieldD& delta_eta, const PhysParams& phys,
                                const ModelGrid& grid, FieldD& dhu, FieldD& dhv) {
    const int nx = grid.nx, ny = grid.ny;
    if (!dhu.same_shape(delta_eta)) dhu = FieldD(nx, ny);
    if (!dhv.same_shape(delta_eta)) dhv = FieldD(nx, ny);
    const double cy = phys.g * phys.h_eq / (phys.f * 2.0 * grid.dy);
    const double cx = phys.g * phys.h_eq / (phys.f * 2.0 * grid.dx);
    for (int k = 0; k < ny; ++k) {
        int kp = (k + 1 == ny) ? 0 : k + 1;
        int km = (k == 0) ? ny - 1 : k - 1;
        for (int j = 0; j < nx; ++j) {
            int jp = (j + 1 == nx) ? 0 : j + 1;
            int jm = (j == 0) ? nx - 1 : j - 1;
            dhu(j, k) = -cy * (delta_eta(j, kp) - delta_eta(j, km));
            dhv(j, k) = cx * (delta_eta(jp, k) - delta_eta(jm, k));
        }
    }
}

/// Q^{1/2} tail applied to a coarse field already in eta space: SOAR, interpolate,
/// geostrophic balance, then add the scaled increment to the state in place
/// ("never store the perturbation itself").
inline void add_q_half(OceanState& state, const CoarseField& coarse_eta, const ErrorParams& p,
                       const PhysParams& phys, const ModelGrid& grid, double scale = 1.0) {
    CoarseField corr = apply_soar(coarse_eta, p);
    FieldD deta = interpolate_bicubic(corr, grid);
    FieldD dhu, dhv;
    geostrophic_balance(deta, phys, grid, dhu, dhv);
    bool dry = false;
    for (int k = 0; k < grid.ny; ++k)
        for (int j = 0; j < grid.nx; ++j) {
            double e = state.eta(j, k) + scale * deta(j, k);
            if (!(phys.h_eq + e > 0.0)) dry = true;
            state.eta(j, k) = static_cast<float>(e);
            state.hu(j, k) = static_cast<float>(state.hu(j, k) + scale * dhu(j, k));
            state.hv(j, k) = static_cast<float>(state.hv(j, k) + scale * dhv(j, k));
        }
    if (dry) throw DryCellError("add_q_half: perturbation dried a cell");
}

/// Model-error draw: xi ~ N(0,I) on a freshly offset coarse grid, then Q^{1/2}.
/// The per-use offset keeps the perturbation statistics homogeneous across cells.
inline void perturb_state(OceanState& state, NoiseStream& rng, const ErrorParams& p,
                          const CoarseGrid& base, const PhysParams& phys,
                          const ModelGrid& grid) {
    if (p.q0 == 0.0) return;
    int oj = static_cast<int>(rng.uniform_below(base.c_omega));
    int ok = static_cast<int>(rng.uniform_below(base.c_omega));
    CoarseGrid cg(grid, base.c_omega, oj, ok);
    CoarseField xi = sample_xi(rng, cg);
    add_q_half(state, xi, p, phys, grid);
}

/// Adjoint geostrophic balance applied to an observation pair mapped to coarse point
/// (a,b): a four-point eta dipole. This is the exact transpose of the forward
/// operator restricted to the coarse grid (coefficient g*H_eq/f, coarse spacings).
inline CoarseField adjoint_geo_balance(double y_hu, double y_hv, int a, int b,
                                       const PhysParams& phys, const CoarseGrid& cg) {
    CoarseField out(cg);
    const double cy = phys.g * phys.h_eq / (phys.f * 2.0 * cg.dyc);
    const double cx = phys.g * phys.h_eq / (phys.f * 2.0 * cg.dxc);
    out.values.wrap(a, b + 1) += -cy * y_hu;
    out.values.wrap(a, b - 1) += cy * y_hu;
    out.values.wrap(a + 1, b) += cx * y_hv;
    out.values.wrap(a - 1, b) += -cx * y_hv;
    return out;
}

/// Q^{1/2,T} approximation: coarsen the observation-space contribution onto the
/// aligned coarse grid, adjoint-balance it into eta space, then one SOAR pass.
/// The observation cell must be co-located with a coarse point of `aligned`.
inline CoarseField apply_q_half_T(double y_hu, double y_hv, std::pair<int, int> obs_cell,
                                  const CoarseGrid& aligned, const ErrorParams& p,
                                  const PhysParams& phys) {
    auto [a, b] = aligned.coarse_point_of(obs_cell.first, obs_cell.second);
    if (a < 0)
        throw std::invalid_argument(
            "apply_q_half_T: observation cell not co-located with a coarse point; align first");
    CoarseField dip = adjoint_geo_balance(y_hu, y_hv, a, b, phys, aligned);
    return apply_soar(dip, p);
}

} // namespace driftcast
