#include "spectherm/lifting.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace spectherm {

namespace {

constexpr double kDomainTol = 1e-12;

void check_domain(double rhat, double zhat) {
    if (std::abs(rhat) > 1.0 + kDomainTol || std::abs(zhat) > 1.0 + kDomainTol)
        throw std::domain_error("lifting evaluation outside [-1,1]^2: (" +
                                std::to_string(rhat) + ", " + std::to_string(zhat) + ")");
}

// Gram matrix and basis integrals under a pointwise weight.
std::pair<Eigen::MatrixXd, Eigen::VectorXd>
gram_and_source(const RobinBasis& basis, const QuadratureRule& rule,
                const Eigen::VectorXd& node_weight) {
    const Eigen::MatrixXd v = basis.vandermonde(rule.nodes, 0);
    const Eigen::VectorXd wq = rule.weights.cwiseProduct(node_weight);
    Eigen::MatrixXd gram = v.transpose() * wq.asDiagonal() * v;
    Eigen::VectorXd source = v.transpose() * wq;
    return {std::move(gram), std::move(source)};
}

Eigen::VectorXd solve_gram(const Eigen::MatrixXd& gram, const Eigen::VectorXd& rhs,
                           const char* label) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(gram);
    if (!(lu.rcond() > 1e-15))
        throw NumericError(std::string("singular lifting Gram matrix (") + label + ")");
    return lu.solve(rhs);
}

} // namespace

LiftingField::LiftingField(RobinBasis radial, RobinBasis axial,
                           Eigen::VectorXd d1, Eigen::VectorXd d2,
                           Eigen::VectorXd d3, Eigen::VectorXd d4)
    : radial_(std::move(radial)), axial_(std::move(axial)),
      d1_(std::move(d1)), d2_(std::move(d2)), d3_(std::move(d3)), d4_(std::move(d4)) {
    if (d1_.size() != radial_.count() || d2_.size() != radial_.count() ||
        d3_.size() != axial_.count() || d4_.size() != axial_.count())
        throw std::invalid_argument("lifting coefficient sizes do not match bases");
}

double LiftingField::eval(double rhat, double zhat, LiftingDeriv deriv) const {
    check_domain(rhat, zhat);
    double acc = 0.0;
    switch (deriv) {
    case LiftingDeriv::Value:
        for (int k = 0; k < radial_.count(); ++k)
            acc += (d1_[k] * zhat + d2_[k] * zhat * zhat) * radial_.eval(k, rhat);
        for (int j = 0; j < axial_.count(); ++j)
            acc += (d3_[j] * rhat + d4_[j] * rhat * rhat) * axial_.eval(j, zhat);
        return acc;
    case LiftingDeriv::DR:
        for (int k = 0; k < radial_.count(); ++k)
            acc += (d1_[k] * zhat + d2_[k] * zhat * zhat) * radial_.eval(k, rhat, 1);
        for (int j = 0; j < axial_.count(); ++j)
            acc += (d3_[j] + 2.0 * d4_[j] * rhat) * axial_.eval(j, zhat);
        return acc;
    case LiftingDeriv::DRR:
        for (int k = 0; k < radial_.count(); ++k)
            acc += (d1_[k] * zhat + d2_[k] * zhat * zhat) * radial_.eval(k, rhat, 2);
        for (int j = 0; j < axial_.count(); ++j)
            acc += 2.0 * d4_[j] * axial_.eval(j, zhat);
        return acc;
    case LiftingDeriv::DZ:
        for (int k = 0; k < radial_.count(); ++k)
            acc += (d1_[k] + 2.0 * d2_[k] * zhat) * radial_.eval(k, rhat);
        for (int j = 0; j < axial_.count(); ++j)
            acc += (d3_[j] * rhat + d4_[j] * rhat * rhat) * axial_.eval(j, zhat, 1);
        return acc;
    case LiftingDeriv::DZZ:
        for (int k = 0; k < radial_.count(); ++k)
            acc += 2.0 * d2_[k] * radial_.eval(k, rhat);
        for (int j = 0; j < axial_.count(); ++j)
            acc += (d3_[j] * rhat + d4_[j] * rhat * rhat) * axial_.eval(j, zhat, 2);
        return acc;
    }
    throw std::domain_error("invalid lifting derivative selector");
}

LiftingField solve_lifting_systems(const RobinBasis& radial, const RobinBasis& axial,
                                   const BcConstants& bc, const RadialWeight& weight) {
    const double k1 = bc.c_plus + bc.d_plus;
    const double k2 = bc.c_plus + 2.0 * bc.d_plus;
    const double k3 = bc.d_minus - bc.c_minus;
    const double k4 = bc.c_minus - 2.0 * bc.d_minus;
    const double j1 = bc.a_plus + bc.b_plus;
    const double j2 = bc.a_plus + 2.0 * bc.b_plus;
    const double j3 = bc.b_minus - bc.a_minus;
    const double j4 = bc.a_minus - 2.0 * bc.b_minus;

    const double det_k = k1 * k4 - k2 * k3;
    const double det_j = j1 * j4 - j2 * j3;
    const double scale_k = std::abs(k1 * k4) + std::abs(k2 * k3);
    const double scale_j = std::abs(j1 * j4) + std::abs(j2 * j3);
    if (scale_k == 0.0 || std::abs(det_k) < 1e-14 * scale_k)
        throw DegenerateLiftingError("singular axial lifting prefactor system (k1 k4 = k2 k3)");
    if (scale_j == 0.0 || std::abs(det_j) < 1e-14 * scale_j)
        throw DegenerateLiftingError("singular radial lifting prefactor system (j1 j4 = j2 j3)");

    const QuadratureRule rule_r = clenshaw_curtis(quadrature_order(radial.count()));
    const QuadratureRule rule_z = clenshaw_curtis(quadrature_order(axial.count()));
    Eigen::VectorXd wr(rule_r.order);
    for (int i = 0; i < rule_r.order; ++i) wr[i] = weight(rule_r.nodes[i]);
    const auto [gram_rl, source_rl] = gram_and_source(radial, rule_r, wr);
    const auto [gram_tb, source_tb] =
        gram_and_source(axial, rule_z, Eigen::VectorXd::Ones(rule_z.order));

    const Eigen::VectorXd base_rl = solve_gram(gram_rl, source_rl, "radial");
    const Eigen::VectorXd base_tb = solve_gram(gram_tb, source_tb, "axial");

    Eigen::VectorXd d1 = (k4 * bc.e_right - k2 * bc.e_left) / det_k * base_rl;
    Eigen::VectorXd d2 = (k1 * bc.e_left - k3 * bc.e_right) / det_k * base_rl;
    Eigen::VectorXd d3 = (j4 * bc.e_top - j2 * bc.e_bottom) / det_j * base_tb;
    Eigen::VectorXd d4 = (j1 * bc.e_bottom - j3 * bc.e_top) / det_j * base_tb;

    return LiftingField(radial, axial, std::move(d1), std::move(d2),
                        std::move(d3), std::move(d4));
}

Eigen::VectorXd lifting_outputs(const LiftingField& lifting, const RadialWeight& weight) {
    Eigen::VectorXd out(5);
    out[0] = lifting.eval(-1.0, 0.0);
    out[1] = lifting.eval(0.0, -1.0);
    out[2] = lifting.eval(1.0, 0.0);
    out[3] = lifting.eval(0.0, 1.0);
    const QuadratureRule rule_r =
        clenshaw_curtis(quadrature_order(lifting.radial_basis().count()));
    const QuadratureRule rule_z =
        clenshaw_curtis(quadrature_order(lifting.axial_basis().count()));
    const double num = integrate2d_radial(rule_r, rule_z, weight,
        [&](double r, double z) { return lifting.eval(r, z); });
    out[4] = num / scaled_volume(weight);
    return out;
}

} // namespace spectherm
