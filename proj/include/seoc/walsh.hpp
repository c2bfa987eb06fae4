#pragma once

#include "seoc/numkit.hpp"

#include <vector>

namespace seoc {

/// 2^order real angles (radians), indexed by the decimal value of an
/// order-bit string.
struct AngleVector {
    int order = 0;
    std::vector<double> values;

    AngleVector() = default;
    AngleVector(int order, std::vector<double> values);

    static AngleVector zeros(int order);

    size_t size() const { return values.size(); }
    double operator[](size_t i) const { return values[i]; }
    double& operator[](size_t i) { return values[i]; }
};

/// Sylvester-Hadamard matrix H_r with entry (va, vb) = (-1)^{va.vb}.
/// H_1 = [[1, 1], [1, -1]] and H_{r+1} = H_1 ⊗ H_r. Requires r >= 1.
ComplexMatrix hadamard_matrix(int r);

/// H_r · v via an in-place butterfly, O(r 2^r) operations.
AngleVector fast_transform(AngleVector v);

/// theta = H_r · phi / 2^r.
AngleVector phi_to_theta(const AngleVector& phi);

/// phi = H_r · theta.
AngleVector theta_to_phi(const AngleVector& theta);

}  // namespace seoc
