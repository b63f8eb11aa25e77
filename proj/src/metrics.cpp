#include "wecp/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace wecp {

double concurrence(const DensityMatrix& rho) {
    if (rho.matrix.rows() != 4 || rho.matrix.cols() != 4) {
        throw DimensionError("concurrence is defined for two-qubit density matrices");
    }
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();  // sigma_y (x) sigma_y
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    // The Wootters lambdas are the square roots of the eigenvalues of
    // rho * rho_tilde, which equal the singular values of
    // A = sqrt(rho) * (sigma_y x sigma_y) * sqrt(rho)^T
    // (A A^dagger = sqrt(rho) * rho_tilde * sqrt(rho)). Computing them as
    // singular values avoids taking square roots of near-zero eigenvalues,
    // which would amplify rounding noise to ~1e-8.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> rho_solver(rho.matrix);
    if (rho_solver.eigenvalues().minCoeff() < -kEigenvalueTol) {
        throw InvalidStateError("density matrix has a significantly negative eigenvalue");
    }
    const Eigen::Vector4d roots = rho_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4cd sqrt_rho = rho_solver.eigenvectors() * roots.asDiagonal() *
                                      rho_solver.eigenvectors().adjoint();
    const Eigen::Matrix4cd a = sqrt_rho * yy * sqrt_rho.transpose();

    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(a);
    std::array<double, 4> lambdas{};
    for (int i = 0; i < 4; ++i) lambdas[i] = svd.singularValues()(i);  // sorted descending
    return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

ConcurrenceReport analytic_concurrences(const WCoefficients& w) {
    if (!w.is_normalized()) {
        throw InvalidStateError("W coefficients are not normalized");
    }
    const double a = std::abs(w.a), b = std::abs(w.b), c = std::abs(w.c);
    return ConcurrenceReport{2.0 * a * b, 2.0 * a * c, 2.0 * a * std::sqrt(b * b + c * c), 0.0};
}

double three_tangle(const PureState& s) {
    if (s.num_qubits() != 3) {
        throw DimensionError("three-tangle is defined for three-qubit pure states");
    }
    if (std::abs(s.norm() - 1.0) > kPatternTol) {
        throw InvalidStateError("three-tangle requires a normalized state");
    }
    const auto& l = s.labels();
    const DensityMatrix rho_a = reduce(s, {l[0]});
    const double det_a = std::max(0.0, rho_a.matrix.determinant().real());
    const double c_a_bc = 2.0 * std::sqrt(det_a);
    const double c_ab = concurrence(reduce(s, {l[0], l[1]}));
    const double c_ac = concurrence(reduce(s, {l[0], l[2]}));
    double tau = c_a_bc * c_a_bc - c_ab * c_ab - c_ac * c_ac;
    if (tau < 0.0 && tau > -kPatternTol) tau = 0.0;
    return tau;
}

PostEcpConcurrences post_ecp_concurrences(const WCoefficients& w) {
    const RoundReport round = run_round_one(w);
    const double p0 = round.branches[0].probability;
    const double p1 = round.branches[1].probability;
    const double p2 = round.branches[2].probability;
    const double p3 = round.branches[3].probability;

    const double a2 = w.a * w.a, b2 = w.b * w.b, g2 = w.c * w.c;
    const double n1 = g2 * g2 + 2.0 * b2 * b2;  // phi1-branch norm^2
    const double n2 = a2 * a2 + 2.0 * b2 * b2;  // phi2-branch norm^2
    const double n3 = a2 * a2 + b2 * b2 + g2 * g2;

    PostEcpConcurrences out;
    out.c_ab = (2.0 / 3.0) * p0 + (2.0 * b2 * b2 / n1) * p1 + (2.0 * a2 * b2 / n2) * p2 +
               (2.0 * a2 * b2 / n3) * p3;
    out.c_ac = (2.0 / 3.0) * p0 + (2.0 * b2 * g2 / n1) * p1 + (2.0 * a2 * b2 / n2) * p2 +
               (2.0 * a2 * g2 / n3) * p3;
    // A|BC terms are 2|a'| sqrt(b'^2 + c'^2) of each branch posterior.
    out.c_a_bc = (2.0 * std::sqrt(2.0) / 3.0) * p0 +
                 (2.0 * b2 / std::sqrt(n1)) * std::sqrt((b2 * b2 + g2 * g2) / n1) * p1 +
                 (2.0 * a2 / std::sqrt(n2)) * std::sqrt(2.0 * b2 * b2 / n2) * p2 +
                 (2.0 * a2 / std::sqrt(n3)) * std::sqrt((b2 * b2 + g2 * g2) / n3) * p3;
    return out;
}

EfficiencyReport efficiencies(const WCoefficients& w) {
    const ConcurrenceReport before = analytic_concurrences(w);
    if (before.c_ab <= 0.0 || before.c_ac <= 0.0 || before.c_a_bc <= 0.0) {
        throw DegenerateCoefficientsError(
            "transformation efficiency undefined: an initial concurrence vanishes");
    }
    const PostEcpConcurrences after = post_ecp_concurrences(w);
    return EfficiencyReport{after.c_ab / before.c_ab, after.c_ac / before.c_ac,
                            after.c_a_bc / before.c_a_bc, before, after};
}

}  // namespace wecp
