#pragma once

#include "seoc/numkit.hpp"

#include <vector>

namespace seoc {

/// The five-factor output of one cosine-sine decomposition of an
/// even-dimensional unitary U:
///
///   U = (L0 ⊕ L1) · D(phi) · (R0 ⊕ R1),
///
/// where D(phi) = [[C, S], [-S, C]], C = diag(cos phi_i), S = diag(sin phi_i).
/// Angles are in [0, pi/2] with cos(phi) non-increasing; all sign freedom is
/// pushed into L1 and R1.
struct CsdFactors {
    ComplexMatrix l0, l1, r0, r1;
    std::vector<double> phi;

    int half() const { return static_cast<int>(phi.size()); }

    /// D assembled from phi.
    ComplexMatrix d_matrix() const;

    /// (L0 ⊕ L1) · D · (R0 ⊕ R1).
    ComplexMatrix reconstruct() const;
};

/// [[C, S], [-S, C]] with C_i = cos(phi_i), S_i = sin(phi_i).
ComplexMatrix d_matrix_from_angles(const std::vector<double>& phi);

/// Cosine-sine decomposition. Requires U unitary within tolerance and of
/// even dimension. Throws ResidualError if the factors fail to reproduce U
/// to tol * dim in Frobenius norm.
CsdFactors cs_decompose(const ComplexMatrix& u, double tol = kDefaultTol);

}  // namespace seoc
