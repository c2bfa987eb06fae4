#pragma once

#include "seoc/numkit.hpp"

#include <Eigen/QR>

#include <complex>
#include <numbers>
#include <random>

namespace seoc::testing {

/// Haar-distributed random unitary: complex Ginibre matrix, QR, then the
/// R-diagonal phases folded into Q.
inline ComplexMatrix haar_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix z(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            z(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= (std::abs(d) == 0.0) ? Complex(1, 0) : d / std::abs(d);
    }
    return q;
}

/// Discrete Fourier transform matrix on nb bits:
/// entry (a, b) = exp(2 pi i a b / N) / sqrt(N).
inline ComplexMatrix dft_matrix(int nb) {
    const int dim = 1 << nb;
    ComplexMatrix u(dim, dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
            u(a, b) = scale * std::polar(1.0, 2.0 * std::numbers::pi * a * b / dim);
        }
    }
    return u;
}

inline ComplexMatrix random_2x2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    ComplexMatrix m(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m(i, j) = Complex(uniform(rng), uniform(rng));
        }
    }
    return m;
}

}  // namespace seoc::testing
