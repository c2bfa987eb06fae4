#include "seoc/walsh.hpp"

#include <stdexcept>
#include <string>

namespace seoc {

AngleVector::AngleVector(int order, std::vector<double> values)
    : order(order), values(std::move(values)) {
    if (order < 0 || order > 30) {
        throw std::invalid_argument("AngleVector: order out of range");
    }
    if (this->values.size() != size_t{1} << order) {
        throw std::invalid_argument("AngleVector: expected " +
                                    std::to_string(size_t{1} << order) + " values, got " +
                                    std::to_string(this->values.size()));
    }
}

AngleVector AngleVector::zeros(int order) {
    return AngleVector(order, std::vector<double>(size_t{1} << order, 0.0));
}

ComplexMatrix hadamard_matrix(int r) {
    if (r < 1) {
        throw std::invalid_argument("hadamard_matrix: order must be >= 1");
    }
    const Eigen::Index dim = Eigen::Index{1} << r;
    ComplexMatrix h(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            h(a, b) = parity_dot(a, b) ? -1.0 : 1.0;
        }
    }
    return h;
}

AngleVector fast_transform(AngleVector v) {
    const size_t n = v.values.size();
    // Sylvester ordering: strides 1, 2, ..., 2^{r-1}.
    for (size_t stride = 1; stride < n; stride *= 2) {
        for (size_t block = 0; block < n; block += 2 * stride) {
            for (size_t i = block; i < block + stride; ++i) {
                const double a = v.values[i];
                const double b = v.values[i + stride];
                v.values[i] = a + b;
                v.values[i + stride] = a - b;
            }
        }
    }
    return v;
}

AngleVector phi_to_theta(const AngleVector& phi) {
    AngleVector theta = fast_transform(phi);
    const double scale = 1.0 / static_cast<double>(size_t{1} << theta.order);
    for (double& x : theta.values) x *= scale;
    return theta;
}

AngleVector theta_to_phi(const AngleVector& theta) {
    return fast_transform(theta);
}

}  // namespace seoc
