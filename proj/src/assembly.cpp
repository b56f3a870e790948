#include "spectherm/assembly.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace spectherm {

namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

void CellGeometry::validate() const {
    if (!finite_positive(r_in))
        throw SchemaError("geometry: r_in must be > 0 (hollow core required)");
    if (!finite_positive(r_out) || r_out <= r_in)
        throw SchemaError("geometry: require 0 < r_in < r_out");
    if (!finite_positive(height)) throw SchemaError("geometry: height must be > 0");
}

double CellGeometry::cell_volume() const {
    return std::numbers::pi * (r_out * r_out - r_in * r_in) * height;
}

void ThermalProps::validate() const {
    if (!finite_positive(rho) || !finite_positive(cp) ||
        !finite_positive(k_r) || !finite_positive(k_z))
        throw SchemaError("props: rho, cp, k_r, k_z must all be > 0");
}

void FaceSet::validate() const {
    for (const FaceCondition* f : {&radial_inner, &radial_outer, &axial_low, &axial_high}) {
        if (!std::isfinite(f->h) || f->h < 0.0)
            throw SchemaError("faces: h must be finite and >= 0");
        if (!std::isfinite(f->T_inf))
            throw SchemaError("faces: T_inf must be finite");
    }
}

bool FaceSet::any_convective() const {
    return radial_inner.h > 0.0 || radial_outer.h > 0.0 ||
           axial_low.h > 0.0 || axial_high.h > 0.0;
}

Scaling scale_problem(const CellGeometry& geometry) {
    geometry.validate();
    Scaling s;
    s.alpha = 2.0 / (geometry.r_out - geometry.r_in);
    s.beta = 2.0 / geometry.height;
    s.r_in = geometry.r_in;
    return s;
}

BcConstants bc_constants(const ThermalProps& props, const FaceSet& faces,
                         double alpha, double beta) {
    BcConstants bc;
    bc.a_plus = faces.radial_outer.h / props.k_r;
    bc.a_minus = -faces.radial_inner.h / props.k_r;
    bc.b_plus = alpha;
    bc.b_minus = alpha;
    bc.c_plus = faces.axial_high.h / props.k_z;
    bc.c_minus = -faces.axial_low.h / props.k_z;
    bc.d_plus = beta;
    bc.d_minus = beta;
    bc.e_top = bc.a_plus * faces.radial_outer.T_inf;
    bc.e_bottom = bc.a_minus * faces.radial_inner.T_inf;
    bc.e_right = bc.c_plus * faces.axial_high.T_inf;
    bc.e_left = bc.c_minus * faces.axial_low.T_inf;
    return bc;
}

StateSpaceModel assemble_2d(const CellGeometry& geometry, const ThermalProps& props,
                            const FaceSet& faces, int n_r, int n_z) {
    if (n_r < 1 || n_z < 1) throw std::domain_error("basis counts must be >= 1");
    geometry.validate();
    props.validate();
    faces.validate();

    StateSpaceModel m;
    m.geometry = geometry;
    m.props = props;
    m.faces = faces;
    m.n_r = n_r;
    m.n_z = n_z;
    m.scaling = scale_problem(geometry);
    m.all_adiabatic = !faces.any_convective();
    m.second_input = 1.0;
    if (n_r > 15 || n_z > 15) {
        m.warnings.push_back("basis count > 15 per direction; Gram conditioning degrades");
        std::fprintf(stderr, "warning: %s\n", m.warnings.back().c_str());
    }

    const double alpha = m.scaling.alpha, beta = m.scaling.beta;
    const RadialWeight w = m.scaling.weight();
    const BcConstants bc = bc_constants(props, faces, alpha, beta);

    const RobinBasis radial(n_r, RobinBC{bc.a_plus, bc.b_plus, bc.a_minus, bc.b_minus});
    const RobinBasis axial(n_z, RobinBC{bc.c_plus, bc.d_plus, bc.c_minus, bc.d_minus});
    m.lifting = solve_lifting_systems(radial, axial, bc, w);
    const LiftingField& te = *m.lifting;

    const QuadratureRule rule_r = clenshaw_curtis(quadrature_order(n_r));
    const QuadratureRule rule_z = clenshaw_curtis(quadrature_order(n_z));

    const Eigen::MatrixXd vr0 = radial.vandermonde(rule_r.nodes, 0);
    const Eigen::MatrixXd vr1 = radial.vandermonde(rule_r.nodes, 1);
    const Eigen::MatrixXd vr2 = radial.vandermonde(rule_r.nodes, 2);
    const Eigen::MatrixXd vz0 = axial.vandermonde(rule_z.nodes, 0);
    const Eigen::MatrixXd vz2 = axial.vandermonde(rule_z.nodes, 2);

    Eigen::VectorXd wq_rad(rule_r.order); // quadrature x volume weight
    for (int i = 0; i < rule_r.order; ++i) wq_rad[i] = rule_r.weights[i] * w(rule_r.nodes[i]);
    const Eigen::VectorXd& wq_unit = rule_r.weights;

    // Radial blocks: weighted Gram, weighted second derivative, unweighted
    // first derivative (the 1/r factor of the cylindrical operator cancels
    // the volume weight, leaving alpha k_r (phi_j', phi_i) with unit weight).
    const Eigen::MatrixXd gram_r = vr0.transpose() * wq_rad.asDiagonal() * vr0;
    const Eigen::MatrixXd diff2_r = vr0.transpose() * wq_rad.asDiagonal() * vr2;
    const Eigen::MatrixXd diff1_r = vr0.transpose() * wq_unit.asDiagonal() * vr1;
    const Eigen::VectorXd source_r = vr0.transpose() * wq_rad;

    const Eigen::MatrixXd gram_z = vz0.transpose() * rule_z.weights.asDiagonal() * vz0;
    const Eigen::MatrixXd diff2_z = vz0.transpose() * rule_z.weights.asDiagonal() * vz2;
    const Eigen::VectorXd source_z = vz0.transpose() * rule_z.weights;

    const double krr = alpha * alpha * props.k_r;
    const double kzz = beta * beta * props.k_z;

    m.E = props.rho * props.cp * Eigen::kroneckerProduct(gram_z, gram_r).eval();
    m.A = Eigen::kroneckerProduct(gram_z, (krr * diff2_r + alpha * props.k_r * diff1_r).eval()).eval()
        + Eigen::kroneckerProduct((kzz * diff2_z).eval(), gram_r).eval();

    const int ns = n_r * n_z;
    m.B.resize(ns, 2);
    m.B.col(0) = Eigen::kroneckerProduct(source_z, source_r).eval();

    // Lifting forcing, projected with the volume weight; the first-derivative
    // term carries the same weight cancellation as diff1_r above.
    Eigen::MatrixXd forcing(rule_r.order, rule_z.order);
    for (int a = 0; a < rule_r.order; ++a) {
        const double rh = rule_r.nodes[a];
        for (int b = 0; b < rule_z.order; ++b) {
            const double zh = rule_z.nodes[b];
            const double te_rr = te.eval(rh, zh, LiftingDeriv::DRR);
            const double te_zz = te.eval(rh, zh, LiftingDeriv::DZZ);
            const double te_r = te.eval(rh, zh, LiftingDeriv::DR);
            forcing(a, b) = rule_r.weights[a] * rule_z.weights[b] *
                            (w(rh) * (krr * te_rr + kzz * te_zz) + alpha * props.k_r * te_r);
        }
    }
    const Eigen::MatrixXd b2 = vr0.transpose() * forcing * vz0; // (k, j)
    m.B.col(1) = Eigen::Map<const Eigen::VectorXd>(b2.data(), ns); // k + j n_r

    m.C.resize(5, ns);
    const double probe[4][2] = {{-1.0, 0.0}, {0.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}};
    for (int row = 0; row < 4; ++row)
        for (int j = 0; j < n_z; ++j)
            for (int k = 0; k < n_r; ++k)
                m.C(row, state_index(k, j, n_r)) =
                    radial.eval(k, probe[row][0]) * axial.eval(j, probe[row][1]);
    m.C.row(4) = m.B.col(0).transpose() / scaled_volume(w);

    m.D = Eigen::MatrixXd::Zero(5, 2);
    m.Te_out = lifting_outputs(te, w);
    return m;
}

StateSpaceModel build_1d_model(double k, double rho, double cp,
                               double h, double T_inf, int n) {
    if (n < 1) throw std::domain_error("basis count must be >= 1");
    if (!finite_positive(k) || !finite_positive(rho) || !finite_positive(cp))
        throw SchemaError("1-D model: k, rho, cp must be > 0");
    if (!std::isfinite(h) || h < 0.0) throw SchemaError("1-D model: h must be >= 0");

    StateSpaceModel m;
    m.n_r = n;
    m.n_z = 1;
    m.all_adiabatic = h == 0.0;
    m.second_input = T_inf;
    m.props = ThermalProps{rho, cp, k, k};

    const RobinBasis basis(n, RobinBC{h / k, 1.0, -h / k, 1.0});
    m.slab_basis = basis;
    const QuadratureRule rule = clenshaw_curtis(quadrature_order(n));
    const Eigen::MatrixXd v0 = basis.vandermonde(rule.nodes, 0);
    const Eigen::MatrixXd v2 = basis.vandermonde(rule.nodes, 2);

    m.E = rho * cp * (v0.transpose() * rule.weights.asDiagonal() * v0);
    m.A = k * (v0.transpose() * rule.weights.asDiagonal() * v2);
    m.B = Eigen::MatrixXd::Zero(n, 2);
    m.B.col(0) = v0.transpose() * rule.weights;
    m.C.resize(2, n);
    for (int i = 0; i < n; ++i) {
        m.C(0, i) = basis.eval(i, -1.0);
        m.C(1, i) = basis.eval(i, 1.0);
    }
    m.D.resize(2, 2);
    m.D << 0.0, 1.0,
           0.0, 1.0;
    m.Te_out = Eigen::VectorXd::Zero(2);
    return m;
}

double power_to_volumetric(double power_w, const CellGeometry& geometry) {
    geometry.validate();
    return power_w / geometry.cell_volume();
}

} // namespace spectherm
