#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "driftcast/grid.hpp"
#include "driftcast/state.hpp"

namespace driftcast {

struct SchemeParams {
    double courant = 0.8;
    double limiter_theta = 1.3;
    double model_dt = 60.0; // fixed model step, s

    SchemeParams() = default;
    SchemeParams(double courant_, double theta_, double dt_)
        : courant(courant_), limiter_theta(theta_), model_dt(dt_) {
        if (!(courant > 0.0 && courant < 1.0))
            throw std::invalid_argument("SchemeParams: courant in (0,1)");
        if (!(limiter_theta >= 1.0 && limiter_theta <= 2.0))
            throw std::invalid_argument("SchemeParams: limiter_theta in [1,2]");
        if (!(model_dt > 0.0)) throw std::invalid_argument("SchemeParams: model_dt > 0");
    }
};

struct DryCellError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace swe_detail {

// branchless generalized minmod: max(0,min) + min(0,max) is zero on sign disagreement
inline float minmod3(float a, float b, float c) {
    float lo = std::min(a, std::min(b, c));
    float hi = std::max(a, std::max(b, c));
    return std::max(0.0f, lo) + std::min(0.0f, hi);
}

// central-upwind flux for one row of faces; the tangential component is advected by
// the mass flux. eL/eR are face surface values from the two sides, nL/nR the normal
// velocities, tL/tR the tangential ones. Returns the smallest face depth seen.
inline float flux_row(int n, float H, float g, const float* __restrict eL,
                      const float* __restrict eR, const float* __restrict nL,
                      const float* __restrict nR, const float* __restrict tL,
                      const float* __restrict tR, float* __restrict f_mass,
                      float* __restrict f_norm, float* __restrict f_tan,
                      float* __restrict h_face) {
    float min_h = std::numeric_limits<float>::max();
    for (int i = 0; i < n; ++i) {
        float el = eL[i], er = eR[i];
        float hl = H + el, hr = H + er;
        min_h = std::min(min_h, std::min(hl, hr));
        float ul = nL[i], ur = nR[i];
        float cls = std::sqrt(g * std::max(hl, 0.0f));
        float crs = std::sqrt(g * std::max(hr, 0.0f));
        float ap = std::max(0.0f, std::max(ul + cls, ur + crs));
        float am = std::min(0.0f, std::min(ul - cls, ur - crs));
        float inv = 1.0f / (ap - am);
        float hnl = hl * ul, hnr = hr * ur;
        float pl = 0.5f * g * el * (2.0f * H + el); // pressure deviation form
        float pr = 0.5f * g * er * (2.0f * H + er);
        float fm = inv * (ap * hnl - am * hnr + ap * am * (er - el));
        f_mass[i] = fm;
        f_norm[i] = inv * (ap * (hnl * ul + pl) - am * (hnr * ur + pr) + ap * am * (hnr - hnl));
        float tl = tL[i], tr = tR[i];
        f_tan[i] = fm * (fm >= 0.0f ? tl : tr);
        h_face[i] = 0.5f * (hl + hr);
    }
    return min_h;
}

inline void axpy_state_row(int n, float dt, const float* __restrict re,
                           const float* __restrict ru, const float* __restrict rv,
                           const float* __restrict se, const float* __restrict su,
                           const float* __restrict sv, float* __restrict te,
                           float* __restrict tu, float* __restrict tv) {
    for (int j = 0; j < n; ++j) {
        te[j] = se[j] + dt * re[j];
        tu[j] = su[j] + dt * ru[j];
        tv[j] = sv[j] + dt * rv[j];
    }
}

inline float heun_combine_row(int n, float dt, const float* __restrict re,
                              const float* __restrict ru, const float* __restrict rv,
                              const float* __restrict te, const float* __restrict tu,
                              const float* __restrict tv, float* __restrict se,
                              float* __restrict su, float* __restrict sv) {
    float bad = 0.0f;
    for (int j = 0; j < n; ++j) {
        float e = 0.5f * (se[j] + te[j] + dt * re[j]);
        float u = 0.5f * (su[j] + tu[j] + dt * ru[j]);
        float v = 0.5f * (sv[j] + tv[j] + dt * rv[j]);
        bad += (e - e) + (u - u) + (v - v); // NaN/Inf sticks
        se[j] = e;
        su[j] = u;
        sv[j] = v;
    }
    return bad;
}

inline void tendency_row(int n, float idx, float idy, float fH, const float* __restrict x1,
                         const float* __restrict x2, const float* __restrict x3,
                         const float* __restrict hx, const float* __restrict y1s,
                         const float* __restrict y1n, const float* __restrict y2s,
                         const float* __restrict y2n, const float* __restrict y3s,
                         const float* __restrict y3n, const float* __restrict hys,
                         const float* __restrict hyn, const float* __restrict hu,
                         const float* __restrict hv, float* __restrict re,
                         float* __restrict ru, float* __restrict rv) {
    for (int j = 0; j < n; ++j) {
        float hbar_x = 0.5f * (hx[j] + hx[j + 1]);
        float hbar_y = 0.5f * (hys[j] + hyn[j]);
        re[j] = -(x1[j + 1] - x1[j]) * idx - (y1n[j] - y1s[j]) * idy;
        ru[j] = -(x2[j + 1] - x2[j]) * idx - (y2n[j] - y2s[j]) * idy + fH * hv[j] * hbar_x;
        rv[j] = -(x3[j + 1] - x3[j]) * idx - (y3n[j] - y3s[j]) * idy - fH * hu[j] * hbar_y;
    }
}

// limited face reconstruction for one padded row: equilibrium-variable slopes for eta,
// plain slopes for velocities. P (x) and L (y) are built from locally integrated
// Coriolis transport potentials; constants cf_x = f*dx/(2H), cf_y = f*dy/(2H).
inline void reconstruct_row(int n, std::ptrdiff_t P, float theta, float g, float inv_g,
                            float cf_x, float cf_y, const float* __restrict et,
                            const float* __restrict hu, const float* __restrict hv,
                            const float* __restrict uu, const float* __restrict vv,
                            float* __restrict eE, float* __restrict eW, float* __restrict eN,
                            float* __restrict eS, float* __restrict puE, float* __restrict puW,
                            float* __restrict puN, float* __restrict puS, float* __restrict pvE,
                            float* __restrict pvW, float* __restrict pvN,
                            float* __restrict pvS) {
    for (int i = 0; i < n; ++i) {
        float ec = et[i];
        float uc = uu[i];
        float vc = vv[i];

        float pW = g * et[i - 1] + cf_x * (hv[i - 1] + hv[i]);
        float pE = g * et[i + 1] - cf_x * (hv[i] + hv[i + 1]);
        float pC = g * ec;
        float sp = 0.5f * minmod3(theta * (pC - pW), 0.5f * (pE - pW), theta * (pE - pC));
        eE[i] = ec + (sp + cf_x * hv[i]) * inv_g;
        eW[i] = ec + (-sp - cf_x * hv[i]) * inv_g;

        float lS = g * et[i - P] - cf_y * (hu[i - P] + hu[i]);
        float lN = g * et[i + P] + cf_y * (hu[i] + hu[i + P]);
        float lC = g * ec;
        float sl = 0.5f * minmod3(theta * (lC - lS), 0.5f * (lN - lS), theta * (lN - lC));
        eN[i] = ec + (sl - cf_y * hu[i]) * inv_g;
        eS[i] = ec + (-sl + cf_y * hu[i]) * inv_g;

        float su_x = 0.5f * minmod3(theta * (uc - uu[i - 1]), 0.5f * (uu[i + 1] - uu[i - 1]),
                                    theta * (uu[i + 1] - uc));
        float su_y = 0.5f * minmod3(theta * (uc - uu[i - P]), 0.5f * (uu[i + P] - uu[i - P]),
                                    theta * (uu[i + P] - uc));
        puE[i] = uc + su_x;
        puW[i] = uc - su_x;
        puN[i] = uc + su_y;
        puS[i] = uc - su_y;

        float sv_x = 0.5f * minmod3(theta * (vc - vv[i - 1]), 0.5f * (vv[i + 1] - vv[i - 1]),
                                    theta * (vv[i + 1] - vc));
        float sv_y = 0.5f * minmod3(theta * (vc - vv[i - P]), 0.5f * (vv[i + P] - vv[i - P]),
                                    theta * (vv[i + P] - vc));
        pvE[i] = vc + sv_x;
        pvW[i] = vc - sv_x;
        pvN[i] = vc + sv_y;
        pvS[i] = vc - sv_y;
    }
}

} // namespace swe_detail

/// Finite-volume solver for the rotating shallow-water equations.
///
/// Central-upwind fluxes act on the face-normal (eta, normal transport) pair; the
/// tangential transport is advected by the face mass flux (contact upwinding). Face
/// values of eta come from limited reconstruction of equilibrium variables
///   P = g*eta - (f/H_eq) * Vpot   (x),   L = g*eta + (f/H_eq) * Upot   (y),
/// where Upot/Vpot are transport potentials integrated with the trapezoid rule across
/// cells. States whose discrete geostrophic balance matches that quadrature, and any
/// lake-at-rest state, are exact fixed points; the Coriolis source uses the
/// face-averaged water column so the cancellation is identity-level, not O(dx^2).
///
/// Pressure is carried as the deviation 0.5*g*(h^2 - H_eq^2) so single precision does
/// not lose the eta-scale signal under the large constant background.
class Stepper {
public:
    Stepper(const ModelGrid& grid, const PhysParams& phys, const SchemeParams& scheme)
        : grid_(grid), phys_(phys), scheme_(scheme), pnx_(grid.nx + 4), pny_(grid.ny + 4) {
        std::size_t n = static_cast<std::size_t>(pnx_) * pny_;
        for (auto* a : {&eta_, &hu_, &hv_, &u_, &v_, &etaE_, &etaW_, &etaN_, &etaS_, &uE_,
                        &uW_, &uN_, &uS_, &vE_, &vW_, &vN_, &vS_})
            a->resize(n);
        std::size_t nfx = static_cast<std::size_t>(grid.nx + 1) * grid.ny;
        std::size_t nfy = static_cast<std::size_t>(grid.nx) * (grid.ny + 1);
        for (auto* a : {&fx1_, &fx2_, &fx3_, &hfx_}) a->resize(nfx);
        for (auto* a : {&fy1_, &fy2_, &fy3_, &hfy_}) a->resize(nfy);
        for (auto* a : {&r_eta_, &r_hu_, &r_hv_})
            a->resize(static_cast<std::size_t>(grid.nx) * grid.ny);
        stage_ = OceanState(grid);
    }

    const ModelGrid& grid() const { return grid_; }

    /// Largest stable scheme step for this state: courant * (1/4) * min direction bound.
    double cfl_dt(const OceanState& s) const {
        double gx = 0.0, gy = 0.0; // max |u| + c per direction
        for (int k = 0; k < grid_.ny; ++k) {
            for (int j = 0; j < grid_.nx; ++j) {
                double h = phys_.h_eq + s.eta(j, k);
                if (!(h > 0.0))
                    throw DryCellError("cfl_dt: dry cell at (" + std::to_string(j) + "," +
                                       std::to_string(k) + ")");
                double c = std::sqrt(phys_.g * h);
                gx = std::max(gx, std::abs(s.hu(j, k) / h) + c);
                gy = std::max(gy, std::abs(s.hv(j, k) / h) + c);
            }
        }
        return scheme_.courant * 0.25 * std::min(grid_.dx / gx, grid_.dy / gy);
    }

    /// Semi-discrete tendencies (d eta/dt, d hu/dt, d hv/dt) for the given state.
    void flux_rhs(const OceanState& s, FieldF& d_eta, FieldF& d_hu, FieldF& d_hv) {
        load(s);
        rhs_from_loaded();
        const int nx = grid_.nx, ny = grid_.ny;
        if (!d_eta.same_shape(s.eta)) d_eta = FieldF(nx, ny);
        if (!d_hu.same_shape(s.eta)) d_hu = FieldF(nx, ny);
        if (!d_hv.same_shape(s.eta)) d_hv = FieldF(nx, ny);
        std::copy(r_eta_.begin(), r_eta_.end(), d_eta.data());
        std::copy(r_hu_.begin(), r_hu_.end(), d_hu.data());
        std::copy(r_hv_.begin(), r_hv_.end(), d_hv.data());
    }

    /// Advance exactly model_dt seconds with SSP-RK2 substeps. Each substep obeys the
    /// CFL bound recomputed from its input state; the final substep is truncated to
    /// land on t + model_dt.
    void model_step(OceanState& s) {
        double remaining = scheme_.model_dt;
        const double t_end = s.t + scheme_.model_dt;
        int substep = 0;
        while (remaining > 0.0) {
            load(s); // also collects the wave-speed maxima the CFL bound needs
            double dt = cfl_from_loaded();
            if (dt >= remaining) dt = remaining; // truncate the final substep
            rk2_loaded(s, dt, substep);
            remaining -= dt;
            ++substep;
            if (substep > 100000)
                throw std::runtime_error("model_step: substep count exploded");
        }
        s.t = t_end;
    }

private:
    std::size_t pidx(int j, int k) const {
        return static_cast<std::size_t>(k + 2) * pnx_ + (j + 2);
    }
    std::size_t xf(int j, int k) const { // x-face j+1/2, j in [-1, nx-1]
        return static_cast<std::size_t>(k) * (grid_.nx + 1) + (j + 1);
    }
    std::size_t yf(int j, int k) const { // y-face k+1/2, k in [-1, ny-1]
        return static_cast<std::size_t>(k + 1) * grid_.nx + j;
    }
    std::size_t cidx(int j, int k) const {
        return static_cast<std::size_t>(k) * grid_.nx + j;
    }

    void load(const OceanState& s) {
        const int nx = grid_.nx, ny = grid_.ny;
        const float H = static_cast<float>(phys_.h_eq);
        const float g = static_cast<float>(phys_.g);
        float min_h = std::numeric_limits<float>::max();
        float max_uc = 0.0f, max_vc = 0.0f;
        for (int k = -2; k < ny + 2; ++k) {
            int kk = Field2D<float>::mod(k, ny);
            const float* se = &s.eta(0, kk);
            const float* su = &s.hu(0, kk);
            const float* sv = &s.hv(0, kk);
            std::size_t row = pidx(0, k);
            std::copy(se, se + nx, &eta_[row]);
            std::copy(su, su + nx, &hu_[row]);
            std::copy(sv, sv + nx, &hv_[row]);
            for (int j = -2; j < 0; ++j) { // periodic x halos
                eta_[pidx(j, k)] = se[j + nx];
                hu_[pidx(j, k)] = su[j + nx];
                hv_[pidx(j, k)] = sv[j + nx];
            }
            for (int j = nx; j < nx + 2; ++j) {
                eta_[pidx(j, k)] = se[j - nx];
                hu_[pidx(j, k)] = su[j - nx];
                hv_[pidx(j, k)] = sv[j - nx];
            }
            const std::size_t base = pidx(-2, k);
            const float* __restrict ee = &eta_[base];
            const float* __restrict hue = &hu_[base];
            const float* __restrict hve = &hv_[base];
            float* __restrict ue = &u_[base];
            float* __restrict ve = &v_[base];
            for (int j = 0; j < nx + 4; ++j) {
                float h = H + ee[j];
                min_h = std::min(min_h, h);
                float inv = 1.0f / h;
                float uu = hue[j] * inv;
                float vv = hve[j] * inv;
                ue[j] = uu;
                ve[j] = vv;
                float c = std::sqrt(g * std::max(h, 0.0f));
                max_uc = std::max(max_uc, std::abs(uu) + c);
                max_vc = std::max(max_vc, std::abs(vv) + c);
            }
        }
        if (!(min_h > 0.0f)) report_dry(s);
        loaded_max_uc_ = max_uc;
        loaded_max_vc_ = max_vc;
    }

    [[noreturn]] void report_dry(const OceanState& s) const {
        for (int k = 0; k < grid_.ny; ++k)
            for (int j = 0; j < grid_.nx; ++j)
                if (!(phys_.h_eq + s.eta(j, k) > 0.0))
                    throw DryCellError("flux_rhs: dry cell at (" + std::to_string(j) + "," +
                                       std::to_string(k) + ")");
        throw DryCellError("flux_rhs: dry cell (non-finite eta)");
    }

    double cfl_from_loaded() const {
        double bound = std::min(grid_.dx / loaded_max_uc_, grid_.dy / loaded_max_vc_);
        return scheme_.courant * 0.25 * bound;
    }

    void reconstruct() {
        const int nx = grid_.nx, ny = grid_.ny;
        const float theta = static_cast<float>(scheme_.limiter_theta);
        const float g = static_cast<float>(phys_.g);
        const float cf_x = static_cast<float>(phys_.f * grid_.dx / (2.0 * phys_.h_eq));
        const float cf_y = static_cast<float>(phys_.f * grid_.dy / (2.0 * phys_.h_eq));
        const float inv_g = 1.0f / g;
        for (int k = -1; k < ny + 1; ++k) {
            const std::size_t b = pidx(-1, k);
            swe_detail::reconstruct_row(nx + 2, pnx_, theta, g, inv_g, cf_x, cf_y, &eta_[b],
                                        &hu_[b], &hv_[b], &u_[b], &v_[b], &etaE_[b], &etaW_[b],
                                        &etaN_[b], &etaS_[b], &uE_[b], &uW_[b], &uN_[b],
                                        &uS_[b], &vE_[b], &vW_[b], &vN_[b], &vS_[b]);
        }
    }

    void fluxes() {
        const int nx = grid_.nx, ny = grid_.ny;
        const float H = static_cast<float>(phys_.h_eq);
        const float g = static_cast<float>(phys_.g);
        float min_h = std::numeric_limits<float>::max();
        for (int k = 0; k < ny; ++k) { // x faces
            min_h = std::min(
                min_h, swe_detail::flux_row(nx + 1, H, g, &etaE_[pidx(-1, k)], &etaW_[pidx(0, k)],
                                            &uE_[pidx(-1, k)], &uW_[pidx(0, k)],
                                            &vE_[pidx(-1, k)], &vW_[pidx(0, k)], &fx1_[xf(-1, k)],
                                            &fx2_[xf(-1, k)], &fx3_[xf(-1, k)], &hfx_[xf(-1, k)]));
        }
        for (int k = -1; k < ny; ++k) { // y faces: normal = v, tangential = u
            min_h = std::min(
                min_h, swe_detail::flux_row(nx, H, g, &etaN_[pidx(0, k)], &etaS_[pidx(0, k + 1)],
                                            &vN_[pidx(0, k)], &vS_[pidx(0, k + 1)],
                                            &uN_[pidx(0, k)], &uS_[pidx(0, k + 1)],
                                            &fy1_[yf(0, k)], &fy3_[yf(0, k)], &fy2_[yf(0, k)],
                                            &hfy_[yf(0, k)]));
        }
        if (!(min_h > 0.0f))
            throw DryCellError("flux_rhs: dry reconstructed face value");
    }

    void tendencies() {
        const int nx = grid_.nx, ny = grid_.ny;
        const float idx = static_cast<float>(1.0 / grid_.dx);
        const float idy = static_cast<float>(1.0 / grid_.dy);
        const float fH = static_cast<float>(phys_.f / phys_.h_eq);
        for (int k = 0; k < ny; ++k)
            swe_detail::tendency_row(nx, idx, idy, fH, &fx1_[xf(-1, k)], &fx2_[xf(-1, k)],
                                     &fx3_[xf(-1, k)], &hfx_[xf(-1, k)], &fy1_[yf(0, k - 1)],
                                     &fy1_[yf(0, k)], &fy2_[yf(0, k - 1)], &fy2_[yf(0, k)],
                                     &fy3_[yf(0, k - 1)], &fy3_[yf(0, k)], &hfy_[yf(0, k - 1)],
                                     &hfy_[yf(0, k)], &hu_[pidx(0, k)], &hv_[pidx(0, k)],
                                     &r_eta_[cidx(0, k)], &r_hu_[cidx(0, k)], &r_hv_[cidx(0, k)]);
    }

    void rhs_from_loaded() {
        reconstruct();
        fluxes();
        tendencies();
    }

    // one SSP-RK2 substep; load(s) must have run already (its CFL stats chose dt)
    void rk2_loaded(OceanState& s, double dt, int substep) {
        const int nx = grid_.nx, ny = grid_.ny;
        const float fdt = static_cast<float>(dt);
        rhs_from_loaded();
        for (int k = 0; k < ny; ++k)
            swe_detail::axpy_state_row(nx, fdt, &r_eta_[cidx(0, k)], &r_hu_[cidx(0, k)],
                                       &r_hv_[cidx(0, k)], &s.eta(0, k), &s.hu(0, k),
                                       &s.hv(0, k), &stage_.eta(0, k), &stage_.hu(0, k),
                                       &stage_.hv(0, k));
        load(stage_);
        rhs_from_loaded();
        float bad = 0.0f;
        for (int k = 0; k < ny; ++k)
            bad += swe_detail::heun_combine_row(nx, fdt, &r_eta_[cidx(0, k)], &r_hu_[cidx(0, k)],
                                                &r_hv_[cidx(0, k)], &stage_.eta(0, k),
                                                &stage_.hu(0, k), &stage_.hv(0, k), &s.eta(0, k),
                                                &s.hu(0, k), &s.hv(0, k));
        if (!std::isfinite(bad))
            throw std::runtime_error("model_step: non-finite value after substep " +
                                     std::to_string(substep));
    }

    ModelGrid grid_;
    PhysParams phys_;
    SchemeParams scheme_;
    int pnx_, pny_;
    std::vector<float> eta_, hu_, hv_, u_, v_;
    std::vector<float> etaE_, etaW_, etaN_, etaS_;
    std::vector<float> uE_, uW_, uN_, uS_, vE_, vW_, vN_, vS_;
    std::vector<float> fx1_, fx2_, fx3_, hfx_;
    std::vector<float> fy1_, fy2_, fy3_, hfy_;
    std::vector<float> r_eta_, r_hu_, r_hv_;
    float loaded_max_uc_ = 0.0f, loaded_max_vc_ = 0.0f;
    OceanState stage_;
};

/// Free-function conveniences mirroring the operation contracts. Each call builds a
/// Stepper; hot loops should hold one and reuse it.
inline double cfl_dt(const OceanState& s, const ModelGrid& grid, const PhysParams& phys,
                     const SchemeParams& scheme) {
    return Stepper(grid, phys, scheme).cfl_dt(s);
}

inline void model_step(OceanState& s, const ModelGrid& grid, const PhysParams& phys,
                       const SchemeParams& scheme) {
    Stepper(grid, phys, scheme).model_step(s);
}

struct JetParams {
    double peak_velocity = 0.5;        // m/s at the jet core
    double width_fraction = 1.0 / 6.0; // jet width as a fraction of ny
    double center1_fraction = 0.25;    // first (eastward) jet center, fraction of ly
    double center2_fraction = 0.75;    // second (westward) jet center
};

/// Steady double-jet initial state: two opposite-signed Galewsky-style compact bumps
/// in hu(y), hv = 0, and eta integrated from the linearized geostrophic relation
/// d(eta)/dy = -(f/(g*H_eq)) * hu with the same trapezoid quadrature the scheme's
/// equilibrium reconstruction uses, so the state is an exact discrete fixed point.
/// eta is normalized to zero mean; the opposite jets close the periodic profile.
inline OceanState init_double_jet(const ModelGrid& grid, const PhysParams& phys,
                                  const JetParams& jet = {}) {
    const int ny = grid.ny;
    const double ly = grid.ly();
    const double width = jet.width_fraction * ly;
    const double y1 = jet.center1_fraction * ly;
    const double y2 = jet.center2_fraction * ly;
    const double peak_hu = jet.peak_velocity * phys.h_eq;

    auto bump = [&](double y, double yc) {
        // exp(1/((s-1)s)) style compact profile on (yc - w/2, yc + w/2), peak 1 at yc
        double s = (y - (yc - 0.5 * width)) / width;
        if (s <= 0.0 || s >= 1.0) return 0.0;
        return std::exp(4.0) * std::exp(1.0 / ((s - 1.0) * s));
    };

    std::vector<double> hu_prof(ny);
    for (int k = 0; k < ny; ++k) {
        double y = (k + 0.5) * grid.dy;
        hu_prof[k] = peak_hu * (bump(y, y1) - bump(y, y2));
    }

    // trapezoid integration of d(eta)/dy = -(f/(g H)) hu; opposite jets close the loop
    std::vector<double> eta_prof(ny, 0.0);
    const double cf = phys.f / (phys.g * phys.h_eq);
    for (int k = 1; k < ny; ++k)
        eta_prof[k] = eta_prof[k - 1] - 0.5 * grid.dy * cf * (hu_prof[k - 1] + hu_prof[k]);
    double mean = 0.0;
    for (double e : eta_prof) mean += e;
    mean /= ny;
    for (double& e : eta_prof) e -= mean;

    OceanState s(grid);
    for (int k = 0; k < ny; ++k) {
        for (int j = 0; j < grid.nx; ++j) {
            s.eta(j, k) = static_cast<float>(eta_prof[k]);
            s.hu(j, k) = static_cast<float>(hu_prof[k]);
            s.hv(j, k) = 0.0f;
        }
    }
    return s;
}

} // namespace driftcast
