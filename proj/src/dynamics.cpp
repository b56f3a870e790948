#include "spectherm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace spectherm {

namespace {

constexpr double kTimeEps = 1e-9;

struct StepOperator {
    Eigen::MatrixXd phi;   // ns x ns
    Eigen::MatrixXd gamma; // ns x 2
};

StepOperator zoh_step(const Eigen::MatrixXd& a_bar, const Eigen::MatrixXd& b_bar, double dt) {
    const int ns = static_cast<int>(a_bar.rows());
    Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(ns + 2, ns + 2);
    aug.topLeftCorner(ns, ns) = a_bar * dt;
    aug.topRightCorner(ns, 2) = b_bar * dt;
    const Eigen::MatrixXd expm = aug.exp();
    if (!expm.allFinite()) throw NumericError("non-finite matrix exponential in ZOH step");
    return {expm.topLeftCorner(ns, ns), expm.topRightCorner(ns, 2)};
}

Eigen::VectorXd solve_gram(const Eigen::MatrixXd& gram, const Eigen::VectorXd& rhs) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(gram);
    if (!(lu.rcond() > 1e-15))
        throw NumericError("singular basis Gram matrix in initial-condition projection");
    return lu.solve(rhs);
}

} // namespace

double LoadProfile::value_at(double t) const {
    size_t i = 0;
    while (i + 1 < times.size() && times[i + 1] <= t + kTimeEps) ++i;
    return q[i];
}

void LoadProfile::validate() const {
    if (times.empty() || times.size() != q.size())
        throw SchemaError("profile: need equal, non-empty time and load columns");
    if (times.front() != 0.0) throw SchemaError("profile: first breakpoint must be t = 0");
    for (size_t i = 0; i + 1 < times.size(); ++i)
        if (!(times[i + 1] > times[i]))
            throw SchemaError("profile: breakpoint times must increase strictly");
    for (double v : q)
        if (!std::isfinite(v)) throw SchemaError("profile: loads must be finite");
    if (times.size() < 2) throw SchemaError("profile: need a final breakpoint setting duration");
}

LoadProfile LoadProfile::constant(double q, double duration_s) {
    if (!(duration_s > 0.0)) throw SchemaError("profile duration must be > 0");
    LoadProfile p;
    p.times = {0.0, duration_s};
    p.q = {q, q};
    return p;
}

SimulationResult simulate(const StateSpaceModel& model, const LoadProfile& profile,
                          double dt, double T_init, bool keep_states) {
    if (!(dt > 0.0)) throw std::domain_error("simulate requires dt > 0");
    profile.validate();

    Eigen::PartialPivLU<Eigen::MatrixXd> mass(model.E);
    if (!(mass.rcond() > 1e-15)) throw NumericError("singular mass matrix E");
    const Eigen::MatrixXd a_bar = mass.solve(model.A);
    const Eigen::MatrixXd b_bar = mass.solve(model.B);
    const StepOperator full = zoh_step(a_bar, b_bar, dt);

    const double t_end = profile.duration();
    const size_t whole = static_cast<size_t>(std::floor(t_end / dt + kTimeEps));
    const double tail = t_end - static_cast<double>(whole) * dt;
    const bool has_tail = tail > kTimeEps;
    const size_t steps = whole + (has_tail ? 1 : 0);

    SimulationResult res;
    res.times.resize(steps + 1);
    res.outputs.resize(model.output_count(), steps + 1);
    if (keep_states) res.states.emplace(model.state_count(), steps + 1);

    Eigen::VectorXd x = project_initial_condition(model, T_init);
    Eigen::Vector2d u;
    double t = 0.0;
    for (size_t k = 0;; ++k) {
        u << profile.value_at(t), model.second_input;
        res.times[k] = t;
        res.outputs.col(k) = model.C * x + model.D * u + model.Te_out;
        if (k == steps) break;
        if (keep_states) res.states->col(k) = x;
        const bool last_partial = has_tail && k == whole;
        if (last_partial) {
            const StepOperator part = zoh_step(a_bar, b_bar, tail);
            x = part.phi * x + part.gamma * u;
            t = t_end;
        } else {
            x = full.phi * x + full.gamma * u;
            t = static_cast<double>(k + 1) * dt;
        }
        if (!x.allFinite()) throw NumericError("non-finite state during simulation");
    }
    if (keep_states) res.states->col(steps) = x;
    res.final_state = x;
    return res;
}

Eigen::VectorXd project_initial_condition(const StateSpaceModel& model, double T_init) {
    if (!std::isfinite(T_init)) throw std::domain_error("T_init must be finite");
    return project_initial_condition(model, [T_init](double, double) { return T_init; });
}

Eigen::VectorXd project_initial_condition(
    const StateSpaceModel& model, const std::function<double(double, double)>& T_init) {
    const Eigen::MatrixXd gram = model.E / (model.props.rho * model.props.cp);

    if (model.lifting) {
        const Scaling& sc = model.scaling;
        const RobinBasis& radial = model.lifting->radial_basis();
        const RobinBasis& axial = model.lifting->axial_basis();
        const RadialWeight w = sc.weight();
        const QuadratureRule rule_r = clenshaw_curtis(quadrature_order(radial.count()));
        const QuadratureRule rule_z = clenshaw_curtis(quadrature_order(axial.count()));
        const Eigen::MatrixXd vr = radial.vandermonde(rule_r.nodes, 0);
        const Eigen::MatrixXd vz = axial.vandermonde(rule_z.nodes, 0);
        Eigen::MatrixXd f(rule_r.order, rule_z.order);
        for (int a = 0; a < rule_r.order; ++a) {
            const double rh = rule_r.nodes[a];
            for (int b = 0; b < rule_z.order; ++b) {
                const double zh = rule_z.nodes[b];
                const double target = T_init(sc.r(rh), sc.z(zh)) - model.lifting->eval(rh, zh);
                if (!std::isfinite(target))
                    throw std::domain_error("non-finite initial temperature");
                f(a, b) = rule_r.weights[a] * w(rh) * rule_z.weights[b] * target;
            }
        }
        const Eigen::MatrixXd proj = vr.transpose() * f * vz; // (k, j)
        return solve_gram(gram, Eigen::Map<const Eigen::VectorXd>(proj.data(),
                                                                  model.state_count()));
    }

    if (!model.slab_basis) throw std::logic_error("model carries neither lifting nor slab basis");
    const RobinBasis& basis = *model.slab_basis;
    const QuadratureRule rule = clenshaw_curtis(quadrature_order(basis.count()));
    const Eigen::MatrixXd v = basis.vandermonde(rule.nodes, 0);
    Eigen::VectorXd f(rule.order);
    for (int i = 0; i < rule.order; ++i) {
        const double target = T_init(rule.nodes[i], 0.0) - model.second_input;
        if (!std::isfinite(target)) throw std::domain_error("non-finite initial temperature");
        f[i] = rule.weights[i] * target;
    }
    return solve_gram(gram, v.transpose() * f);
}

std::vector<double> reconstruct_field(const StateSpaceModel& model,
                                      const Eigen::VectorXd& state,
                                      const std::vector<std::pair<double, double>>& points_rz) {
    if (!model.lifting) throw std::domain_error("field reconstruction requires the 2-D model");
    if (state.size() != model.state_count())
        throw std::invalid_argument("state size does not match model");
    const Scaling& sc = model.scaling;
    const CellGeometry& g = model.geometry;
    const RobinBasis& radial = model.lifting->radial_basis();
    const RobinBasis& axial = model.lifting->axial_basis();
    constexpr double tol = 1e-9;

    std::vector<double> out;
    out.reserve(points_rz.size());
    for (const auto& [r, z] : points_rz) {
        if (r < g.r_in - tol || r > g.r_out + tol || z < -tol || z > g.height + tol) {
            char buf[128];
            std::snprintf(buf, sizeof buf,
                          "point (r=%.9g, z=%.9g) outside the annulus cross-section", r, z);
            throw std::domain_error(buf);
        }
        const double rhat = std::clamp(sc.rhat(r), -1.0, 1.0);
        const double zhat = std::clamp(sc.zhat(z), -1.0, 1.0);
        double acc = model.lifting->eval(rhat, zhat);
        for (int j = 0; j < model.n_z; ++j)
            for (int k = 0; k < model.n_r; ++k)
                acc += state[state_index(k, j, model.n_r)] *
                       radial.eval(k, rhat) * axial.eval(j, zhat);
        out.push_back(acc);
    }
    return out;
}

std::vector<std::complex<double>> frequency_response(const StateSpaceModel& model,
                                                     const std::vector<double>& f_hz,
                                                     int output_index) {
    if (output_index < 1 || output_index > model.output_count())
        throw std::out_of_range("output index out of range");
    std::vector<std::complex<double>> gains;
    gains.reserve(f_hz.size());
    const Eigen::MatrixXcd a = model.A.cast<std::complex<double>>();
    const Eigen::MatrixXcd e = model.E.cast<std::complex<double>>();
    const Eigen::VectorXcd b = model.B.col(0).cast<std::complex<double>>();
    for (double f : f_hz) {
        if (!std::isfinite(f) || f < 0.0)
            throw std::domain_error("frequencies must be finite and >= 0");
        if (f == 0.0 && model.all_adiabatic)
            throw NumericError("H(0) undefined: (sE - A) singular with all faces adiabatic");
        const std::complex<double> s(0.0, 2.0 * M_PI * f);
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(s * e - a);
        const Eigen::VectorXcd x = lu.solve(b);
        if (!x.allFinite()) throw NumericError("singular (sE - A) in frequency response");
        gains.push_back(model.C.row(output_index - 1).cast<std::complex<double>>().dot(x));
    }
    return gains;
}

double biot_number(const ThermalProps& props, const CellGeometry& geometry, double h) {
    if (!std::isfinite(h) || h < 0.0) throw std::domain_error("biot_number requires h >= 0");
    props.validate();
    geometry.validate();
    return h * (geometry.r_out - geometry.r_in) / props.k_r;
}

} // namespace spectherm
