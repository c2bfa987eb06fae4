#include "seoc/csd.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace seoc {

ComplexMatrix d_matrix_from_angles(const std::vector<double>& phi) {
    const Eigen::Index p = static_cast<Eigen::Index>(phi.size());
    ComplexMatrix d = ComplexMatrix::Zero(2 * p, 2 * p);
    for (Eigen::Index i = 0; i < p; ++i) {
        const double c = std::cos(phi[i]), s = std::sin(phi[i]);
        d(i, i) = c;
        d(p + i, p + i) = c;
        d(i, p + i) = s;
        d(p + i, i) = -s;
    }
    return d;
}

ComplexMatrix CsdFactors::d_matrix() const {
    return d_matrix_from_angles(phi);
}

ComplexMatrix CsdFactors::reconstruct() const {
    return direct_sum({l0, l1}) * d_matrix() * direct_sum({r0, r1});
}

namespace {

// Phase of z as a unit-modulus complex number; 1 for z == 0.
Complex unit_phase(Complex z) {
    const double a = std::abs(z);
    return a == 0.0 ? Complex(1, 0) : z / a;
}

}  // namespace

CsdFactors cs_decompose(const ComplexMatrix& u, double tol) {
    const Eigen::Index n = u.rows();
    if (n % 2 != 0 || n < 2) {
        throw std::invalid_argument("cs_decompose: dimension must be even, got " +
                                    std::to_string(n));
    }
    require_unitary(u, tol, "cs_decompose");
    const Eigen::Index p = n / 2;

    const ComplexMatrix u00 = u.topLeftCorner(p, p);
    const ComplexMatrix u01 = u.topRightCorner(p, p);
    const ComplexMatrix u10 = u.bottomLeftCorner(p, p);
    const ComplexMatrix u11 = u.bottomRightCorner(p, p);

    // U00 = L0 C V1†, with cosines sorted ascending so the QR below meets the
    // well-conditioned (large-sine) columns first. The sort is stable so that
    // clusters of equal singular values keep the basis the SVD chose; in
    // particular block-diagonal and identity inputs stay canonical.
    Eigen::JacobiSVD<ComplexMatrix> svd(u00, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd sigma = svd.singularValues();
    std::vector<Eigen::Index> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index lhs, Eigen::Index rhs) { return sigma[lhs] < sigma[rhs]; });
    ComplexMatrix l0(p, p), v1(p, p);
    Eigen::VectorXd cosines(p);
    for (Eigen::Index i = 0; i < p; ++i) {
        l0.col(i) = svd.matrixU().col(order[i]);
        v1.col(i) = svd.matrixV().col(order[i]);
        cosines[i] = sigma[order[i]];
    }
    ComplexMatrix cmat = cosines.cast<Complex>().asDiagonal();

    // X = L1 S with S descending: columns are exactly orthogonal with norms
    // sin(phi_i), so a plain Householder QR both extracts the determined
    // columns and completes the near-zero ones deterministically.
    ComplexMatrix x = -u10 * v1;
    Eigen::HouseholderQR<ComplexMatrix> qr(x);
    ComplexMatrix l1 = qr.householderQ();
    ComplexMatrix smat = l1.adjoint() * x;

    // Where the cosine dominates, the QR above divided by small sines; redo
    // that block with an SVD of the sine block and push the right-side
    // rotation into V1, then restore the cosine block by QR.
    Eigen::Index k = 0;
    while (k < p && cmat(k, k).real() <= 1.0 / std::sqrt(2.0)) ++k;
    if (k < p) {
        const Eigen::Index m = p - k;
        Eigen::JacobiSVD<ComplexMatrix> svd2(smat.block(k, k, m, m),
                                             Eigen::ComputeFullU | Eigen::ComputeFullV);
        smat.block(k, k, m, m) =
            ComplexMatrix(svd2.singularValues().cast<Complex>().asDiagonal());
        smat.block(0, k, k, m).setZero();
        smat.block(k, 0, m, k).setZero();
        l1.rightCols(m) = l1.rightCols(m) * svd2.matrixU();
        const ComplexMatrix cblock = cmat.block(k, k, m, m) * svd2.matrixV();
        v1.rightCols(m) = v1.rightCols(m) * svd2.matrixV();
        Eigen::HouseholderQR<ComplexMatrix> qr2(cblock);
        cmat.block(k, k, m, m) =
            ComplexMatrix(qr2.matrixQR().triangularView<Eigen::Upper>());
        l0.rightCols(m) = l0.rightCols(m) * qr2.householderQ();
    }

    // Absorb the diagonal phases left by the QR steps into L0/L1 columns and
    // read off the canonical angles.
    std::vector<double> phi(p);
    for (Eigen::Index i = 0; i < p; ++i) {
        const Complex zc = cmat(i, i), zs = smat(i, i);
        l0.col(i) *= unit_phase(zc);
        l1.col(i) *= unit_phase(zs);
        phi[i] = std::atan2(std::abs(zs), std::abs(zc));
    }

    ComplexMatrix r0 = v1.adjoint();

    // R1 rows from whichever of U01 = L0 S R1, U11 = L1 C R1 is better
    // conditioned per index.
    const ComplexMatrix a = l0.adjoint() * u01;
    const ComplexMatrix b = l1.adjoint() * u11;
    ComplexMatrix r1(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        const double c = std::cos(phi[i]), s = std::sin(phi[i]);
        r1.row(i) = (c >= s) ? b.row(i) / c : a.row(i) / s;
    }

    // Canonical order: cos(phi) non-increasing.
    std::vector<Eigen::Index> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](Eigen::Index lhs, Eigen::Index rhs) { return phi[lhs] < phi[rhs]; });

    CsdFactors out;
    out.phi.resize(p);
    out.l0.resize(p, p);
    out.l1.resize(p, p);
    out.r0.resize(p, p);
    out.r1.resize(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        out.phi[i] = phi[perm[i]];
        out.l0.col(i) = l0.col(perm[i]);
        out.l1.col(i) = l1.col(perm[i]);
        out.r0.row(i) = r0.row(perm[i]);
        out.r1.row(i) = r1.row(perm[i]);
    }

    const double residual = frobenius_distance(out.reconstruct(), u);
    if (residual > tol * static_cast<double>(n)) {
        std::ostringstream msg;
        msg << "cs_decompose: reconstruction residual " << residual << " exceeds "
            << tol * static_cast<double>(n) << " for dimension " << n;
        throw ResidualError(msg.str());
    }
    return out;
}

}  // namespace seoc
