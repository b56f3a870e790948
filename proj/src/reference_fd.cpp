#include "spectherm/reference_fd.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include <Eigen/Sparse>

namespace spectherm {

namespace {

// Conduction/convection operator per unit azimuthal angle:
//   cap dT/dt = K T + b + q src
// with cap the control-volume heat capacity, src its volume, K the flux
// exchange matrix, and b the ambient convective forcing.
struct FdSystem {
    Eigen::VectorXd r, z;
    Eigen::SparseMatrix<double> K;
    Eigen::VectorXd b, cap, src;
    int n_r = 0, n_z = 0;
    int idx(int i, int j) const { return i + j * n_r; }
};

FdSystem build_system(const CellGeometry& g, const ThermalProps& p, const FaceSet& faces,
                      int n_r, int n_z) {
    if (n_r < 3 || n_z < 3) throw std::domain_error("FD grid needs at least 3 nodes per axis");
    g.validate();
    p.validate();
    faces.validate();

    FdSystem s;
    s.n_r = n_r;
    s.n_z = n_z;
    s.r = Eigen::VectorXd::LinSpaced(n_r, g.r_in, g.r_out);
    s.z = Eigen::VectorXd::LinSpaced(n_z, 0.0, g.height);
    const double dr = s.r[1] - s.r[0];
    const double dz = s.z[1] - s.z[0];
    const int n = n_r * n_z;

    Eigen::VectorXd vol_r(n_r); // integral of r dr over the radial CV extent
    for (int i = 0; i < n_r; ++i) {
        const double rw = std::max(s.r[i] - 0.5 * dr, g.r_in);
        const double re = std::min(s.r[i] + 0.5 * dr, g.r_out);
        vol_r[i] = 0.5 * (re * re - rw * rw);
    }
    Eigen::VectorXd dz_cv = Eigen::VectorXd::Constant(n_z, dz);
    dz_cv[0] = dz_cv[n_z - 1] = 0.5 * dz;

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(n) * 5);
    s.b = Eigen::VectorXd::Zero(n);
    s.cap.resize(n);
    s.src.resize(n);

    for (int j = 0; j < n_z; ++j) {
        for (int i = 0; i < n_r; ++i) {
            const int c = s.idx(i, j);
            s.src[c] = vol_r[i] * dz_cv[j];
            s.cap[c] = p.rho * p.cp * s.src[c];
            if (i + 1 < n_r) {
                const double gcon = p.k_r * (s.r[i] + 0.5 * dr) * dz_cv[j] / dr;
                trip.emplace_back(c, s.idx(i + 1, j), gcon);
                trip.emplace_back(c, c, -gcon);
            } else {
                const double gcv = faces.radial_outer.h * g.r_out * dz_cv[j];
                trip.emplace_back(c, c, -gcv);
                s.b[c] += gcv * faces.radial_outer.T_inf;
            }
            if (i > 0) {
                const double gcon = p.k_r * (s.r[i] - 0.5 * dr) * dz_cv[j] / dr;
                trip.emplace_back(c, s.idx(i - 1, j), gcon);
                trip.emplace_back(c, c, -gcon);
            } else {
                const double gcv = faces.radial_inner.h * g.r_in * dz_cv[j];
                trip.emplace_back(c, c, -gcv);
                s.b[c] += gcv * faces.radial_inner.T_inf;
            }
            if (j + 1 < n_z) {
                const double gcon = p.k_z * vol_r[i] / dz;
                trip.emplace_back(c, s.idx(i, j + 1), gcon);
                trip.emplace_back(c, c, -gcon);
            } else {
                const double gcv = faces.axial_high.h * vol_r[i];
                trip.emplace_back(c, c, -gcv);
                s.b[c] += gcv * faces.axial_high.T_inf;
            }
            if (j > 0) {
                const double gcon = p.k_z * vol_r[i] / dz;
                trip.emplace_back(c, s.idx(i, j - 1), gcon);
                trip.emplace_back(c, c, -gcon);
            } else {
                const double gcv = faces.axial_low.h * vol_r[i];
                trip.emplace_back(c, c, -gcv);
                s.b[c] += gcv * faces.axial_low.T_inf;
            }
        }
    }
    s.K.resize(n, n);
    s.K.setFromTriplets(trip.begin(), trip.end());
    return s;
}

FdGrid to_grid(const FdSystem& s, const Eigen::VectorXd& field) {
    FdGrid grid;
    grid.n_r = s.n_r;
    grid.n_z = s.n_z;
    grid.r = s.r;
    grid.z = s.z;
    grid.T.resize(s.n_r, s.n_z);
    for (int j = 0; j < s.n_z; ++j)
        for (int i = 0; i < s.n_r; ++i) grid.T(i, j) = field[s.idx(i, j)];
    return grid;
}

Eigen::VectorXd probe_outputs(const FdSystem& s, const FdGrid& grid,
                              const Eigen::VectorXd& field) {
    const double r_in = s.r[0], r_out = s.r[s.n_r - 1], height = s.z[s.n_z - 1];
    const double r_mid = 0.5 * (r_in + r_out);
    Eigen::VectorXd y(5);
    y[0] = fd_interpolate(grid, r_in, 0.5 * height);
    y[1] = fd_interpolate(grid, r_mid, 0.0);
    y[2] = fd_interpolate(grid, r_out, 0.5 * height);
    y[3] = fd_interpolate(grid, r_mid, height);
    y[4] = field.dot(s.src) / s.src.sum();
    return y;
}

} // namespace

FdGrid fd_solve_steady(const CellGeometry& geometry, const ThermalProps& props,
                       const FaceSet& faces, double q, int n_r, int n_z) {
    if (!faces.any_convective())
        throw NumericError("steady FD solve requires at least one convective face");
    const FdSystem s = build_system(geometry, props, faces, n_r, n_z);
    Eigen::SparseMatrix<double> lhs = -s.K;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(lhs);
    if (lu.info() != Eigen::Success) throw NumericError("FD steady factorization failed");
    const Eigen::VectorXd rhs = s.b + q * s.src;
    const Eigen::VectorXd field = lu.solve(rhs);
    if (lu.info() != Eigen::Success || !field.allFinite())
        throw NumericError("FD steady solve failed");
    return to_grid(s, field);
}

SimulationResult fd_solve_transient(const CellGeometry& geometry, const ThermalProps& props,
                                    const FaceSet& faces, const LoadProfile& profile,
                                    int n_r, int n_z, double dt,
                                    double T_init, FdGrid* final_field) {
    if (!(dt > 0.0)) throw std::domain_error("FD transient requires dt > 0");
    profile.validate();
    const FdSystem s = build_system(geometry, props, faces, n_r, n_z);
    const int n = n_r * n_z;

    Eigen::SparseMatrix<double> lhs = -s.K;
    for (int c = 0; c < n; ++c) lhs.coeffRef(c, c) += s.cap[c] / dt;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(lhs);
    if (lu.info() != Eigen::Success) throw NumericError("FD transient factorization failed");

    const double t_end = profile.duration();
    const size_t whole = static_cast<size_t>(std::floor(t_end / dt + 1e-9));
    const double tail = t_end - static_cast<double>(whole) * dt;
    const bool has_tail = tail > 1e-9;
    const size_t steps = whole + (has_tail ? 1 : 0);

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_tail;
    if (has_tail) {
        Eigen::SparseMatrix<double> lhs_tail = -s.K;
        for (int c = 0; c < n; ++c) lhs_tail.coeffRef(c, c) += s.cap[c] / tail;
        lu_tail.compute(lhs_tail);
        if (lu_tail.info() != Eigen::Success)
            throw NumericError("FD transient factorization failed");
    }

    SimulationResult res;
    res.times.resize(steps + 1);
    res.outputs.resize(5, steps + 1);

    Eigen::VectorXd field = Eigen::VectorXd::Constant(n, T_init);
    FdGrid grid = to_grid(s, field);
    double t = 0.0;
    for (size_t k = 0;; ++k) {
        res.times[k] = t;
        res.outputs.col(k) = probe_outputs(s, grid, field);
        if (k == steps) break;
        const bool last_partial = has_tail && k == whole;
        const double h = last_partial ? tail : dt;
        const double q = profile.value_at(t);
        const Eigen::VectorXd rhs = s.cap.cwiseProduct(field) / h + s.b + q * s.src;
        field = last_partial ? lu_tail.solve(rhs) : lu.solve(rhs);
        if (!field.allFinite()) throw NumericError("FD transient solve diverged");
        grid = to_grid(s, field);
        t = last_partial ? t_end : static_cast<double>(k + 1) * dt;
    }
    res.final_state = field;
    if (final_field) *final_field = grid;
    return res;
}

double fd_interpolate(const FdGrid& grid, double r, double z) {
    constexpr double tol = 1e-9;
    const double r_lo = grid.r[0], r_hi = grid.r[grid.n_r - 1];
    const double z_lo = grid.z[0], z_hi = grid.z[grid.n_z - 1];
    if (r < r_lo - tol || r > r_hi + tol || z < z_lo - tol || z > z_hi + tol) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "point (r=%.9g, z=%.9g) outside the FD grid", r, z);
        throw std::domain_error(buf);
    }
    const double dr = grid.r[1] - grid.r[0];
    const double dz = grid.z[1] - grid.z[0];
    const double fi = std::clamp((r - r_lo) / dr, 0.0, static_cast<double>(grid.n_r - 1));
    const double fj = std::clamp((z - z_lo) / dz, 0.0, static_cast<double>(grid.n_z - 1));
    const int i0 = std::min(static_cast<int>(fi), grid.n_r - 2);
    const int j0 = std::min(static_cast<int>(fj), grid.n_z - 2);
    const double ai = fi - i0, aj = fj - j0;
    return (1 - ai) * (1 - aj) * grid.T(i0, j0) + ai * (1 - aj) * grid.T(i0 + 1, j0) +
           (1 - ai) * aj * grid.T(i0, j0 + 1) + ai * aj * grid.T(i0 + 1, j0 + 1);
}

double fd_energy_balance(const CellGeometry& geometry, const ThermalProps& props,
                         const FaceSet& faces, const FdGrid& grid, double q) {
    const FdSystem s = build_system(geometry, props, faces, grid.n_r, grid.n_z);
    const double dr = grid.r[1] - grid.r[0];
    const double dz = grid.z[1] - grid.z[0];
    double loss = 0.0;
    for (int j = 0; j < grid.n_z; ++j) {
        const double a = (j == 0 || j == grid.n_z - 1) ? 0.5 * dz : dz;
        loss += faces.radial_outer.h * geometry.r_out * a *
                (grid.T(grid.n_r - 1, j) - faces.radial_outer.T_inf);
        loss += faces.radial_inner.h * geometry.r_in * a *
                (grid.T(0, j) - faces.radial_inner.T_inf);
    }
    for (int i = 0; i < grid.n_r; ++i) {
        const double rw = std::max(grid.r[i] - 0.5 * dr, geometry.r_in);
        const double re = std::min(grid.r[i] + 0.5 * dr, geometry.r_out);
        const double a = 0.5 * (re * re - rw * rw);
        loss += faces.axial_high.h * a * (grid.T(i, grid.n_z - 1) - faces.axial_high.T_inf);
        loss += faces.axial_low.h * a * (grid.T(i, 0) - faces.axial_low.T_inf);
    }
    const double gen = q * s.src.sum();
    if (gen == 0.0) throw std::domain_error("energy balance undefined for q = 0");
    return std::abs(gen - loss) / std::abs(gen);
}

} // namespace spectherm
