#include "seoc/numkit.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace seoc {

BitString::BitString(int nbits, std::uint64_t bits) : nbits_(nbits), bits_(bits) {
    if (nbits < 1 || nbits > 63) {
        throw std::invalid_argument("BitString: nbits must be in [1, 63], got " +
                                    std::to_string(nbits));
    }
    if (bits >> nbits != 0) {
        throw std::invalid_argument("BitString: value " + std::to_string(bits) +
                                    " does not fit in " + std::to_string(nbits) + " bits");
    }
}

BitString BitString::unit(int nbits, int beta) {
    if (beta < 0 || beta >= nbits) {
        throw std::invalid_argument("BitString::unit: position out of range");
    }
    return BitString(nbits, std::uint64_t{1} << beta);
}

int BitString::bit(int pos) const {
    if (pos < 0 || pos >= nbits_) {
        throw std::invalid_argument("BitString::bit: position out of range");
    }
    return static_cast<int>((bits_ >> pos) & 1u);
}

int BitString::popcount() const {
    return std::popcount(bits_);
}

std::vector<int> BitString::one_positions() const {
    std::vector<int> pos;
    for (int b = 0; b < nbits_; ++b) {
        if ((bits_ >> b) & 1u) pos.push_back(b);
    }
    return pos;
}

int parity_dot(std::uint64_t a, std::uint64_t b) {
    return std::popcount(a & b) & 1;
}

ComplexMatrix identity(int dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix number_op() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 1) = 1;
    return m;
}

ComplexMatrix anti_number_op() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1;
    return m;
}

ComplexMatrix rot_y(double angle) {
    ComplexMatrix m(2, 2);
    const double c = std::cos(angle), s = std::sin(angle);
    m << c, s, -s, c;
    return m;
}

ComplexMatrix rot_z(double angle) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, angle);
    m(1, 1) = std::polar(1.0, -angle);
    return m;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    ComplexMatrix out(ar * br, ac * bc);
    for (Eigen::Index i = 0; i < ar; ++i) {
        for (Eigen::Index j = 0; j < ac; ++j) {
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix embed(const ComplexMatrix& m, int beta, int nb) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw std::invalid_argument("embed: matrix must be 2x2");
    }
    if (beta < 0 || beta > nb - 1) {
        throw std::invalid_argument("embed: bit position " + std::to_string(beta) +
                                    " out of range for " + std::to_string(nb) + " bits");
    }
    ComplexMatrix out = identity(1 << (nb - 1 - beta));
    out = tensor(out, m);
    if (beta > 0) out = tensor(out, identity(1 << beta));
    return out;
}

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
    if (blocks.empty()) {
        throw std::invalid_argument("direct_sum: empty block list");
    }
    Eigen::Index dim = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) {
            throw std::invalid_argument("direct_sum: blocks must be square");
        }
        dim += b.rows();
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.block(at, at, b.rows(), b.rows()) = b;
        at += b.rows();
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw std::invalid_argument("conjugate: dimension mismatch");
    }
    return a * b * a.adjoint();
}

ComplexMatrix build_projector(const BitString& va) {
    const Eigen::Index dim = Eigen::Index{1} << va.nbits();
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    out(va.value(), va.value()) = 1;
    return out;
}

ComplexMatrix exp_projector_sum(const std::vector<ComplexMatrix>& projectors,
                                const std::vector<Complex>& alphas,
                                double tol) {
    if (projectors.size() != alphas.size()) {
        throw std::invalid_argument("exp_projector_sum: got " + std::to_string(projectors.size()) +
                                    " projectors but " + std::to_string(alphas.size()) + " exponents");
    }
    if (projectors.empty()) {
        throw std::invalid_argument("exp_projector_sum: empty projector list");
    }
    const Eigen::Index dim = projectors.front().rows();
    for (size_t i = 0; i < projectors.size(); ++i) {
        for (size_t j = 0; j < projectors.size(); ++j) {
            const ComplexMatrix expected = (i == j) ? projectors[j] : ComplexMatrix::Zero(dim, dim);
            const double residual = (projectors[i] * projectors[j] - expected).norm();
            if (residual > tol * static_cast<double>(dim)) {
                throw std::invalid_argument(
                    "exp_projector_sum: projectors " + std::to_string(i) + " and " +
                    std::to_string(j) + " are not orthogonal (residual " +
                    std::to_string(residual) + ")");
            }
        }
    }
    ComplexMatrix out = identity(static_cast<int>(dim));
    for (size_t i = 0; i < projectors.size(); ++i) {
        out += (std::exp(alphas[i]) - 1.0) * projectors[i];
    }
    return out;
}

PaddedMatrix pad_to_power_of_two(const ComplexMatrix& u, double tol) {
    require_unitary(u, tol, "pad_to_power_of_two");
    const int dim = static_cast<int>(u.rows());
    int target = 2;
    while (target < dim) target *= 2;
    PaddedMatrix padded{ComplexMatrix::Identity(target, target), dim};
    padded.matrix.topLeftCorner(dim, dim) = u;
    return padded;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("frobenius_distance: dimension mismatch");
    }
    return (a - b).norm();
}

double unitarity_error(const ComplexMatrix& u) {
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (u.rows() != u.cols() || u.rows() < 1) return false;
    return unitarity_error(u) <= tol * static_cast<double>(u.rows());
}

void require_unitary(const ComplexMatrix& u, double tol, const std::string& what) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw NotUnitaryError(what + ": matrix is not square");
    }
    const double err = unitarity_error(u);
    if (err > tol * static_cast<double>(u.rows())) {
        std::ostringstream msg;
        msg << what << ": input is not unitary, ||U†U - I||_F = " << err
            << " exceeds " << tol * static_cast<double>(u.rows());
        throw NotUnitaryError(msg.str());
    }
}

ComplexMatrix read_matrix(std::istream& in) {
    long long dim = 0;
    if (!(in >> dim)) {
        throw ParseError("matrix file: missing dimension on line 1");
    }
    if (dim < 1 || dim > 1 << 20) {
        throw ParseError("matrix file: bad dimension " + std::to_string(dim));
    }
    ComplexMatrix m(dim, dim);
    for (long long i = 0; i < dim; ++i) {
        for (long long j = 0; j < dim; ++j) {
            double re = 0, im = 0;
            if (!(in >> re >> im)) {
                throw ParseError("matrix file: truncated at row " + std::to_string(i + 1) +
                                 ", column " + std::to_string(j + 1));
            }
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open matrix file: " + path);
    }
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << m.rows() << "\n";
    out << std::setprecision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << m(i, j).real() << ' ' << m(i, j).imag();
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    write_matrix(out, m);
}

}  // namespace seoc
