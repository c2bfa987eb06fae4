#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace seoc {

using Complex = std::complex<double>;

/// Dense square complex matrix; the carrier for unitaries, blocks and gates.
using ComplexMatrix = Eigen::MatrixXcd;

/// Default tolerance scale: a matrix U of dimension N passes the unitarity
/// check when ||U†U - I||_F <= tol * N, and decompositions must reproduce
/// their input to the same scale.
inline constexpr double kDefaultTol = 1e-10;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotUnitaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResidualError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A string of bit values. Position 0 is the least significant bit, so the
/// decimal value of the string doubles as the row/column index of dense
/// matrices throughout the library.
class BitString {
public:
    BitString(int nbits, std::uint64_t bits);

    /// The string of nbits bits with a single 1 at position beta.
    static BitString unit(int nbits, int beta);

    int nbits() const { return nbits_; }
    std::uint64_t value() const { return bits_; }
    int bit(int pos) const;
    int popcount() const;

    /// Bit positions holding a 1, in increasing order.
    std::vector<int> one_positions() const;

    bool operator==(const BitString&) const = default;

private:
    int nbits_;
    std::uint64_t bits_;
};

/// va . vb mod 2 (the exponent in Hadamard matrix entries).
int parity_dot(std::uint64_t a, std::uint64_t b);

ComplexMatrix identity(int dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Number operator n = (1 - sigma_z)/2 = diag(0, 1).
ComplexMatrix number_op();
/// Complement nbar = 1 - n = diag(1, 0).
ComplexMatrix anti_number_op();

/// exp(i sigma_y angle) = [[cos, sin], [-sin, cos]], angle in radians.
ComplexMatrix rot_y(double angle);
/// exp(i sigma_z angle) = diag(e^{i angle}, e^{-i angle}), angle in radians.
ComplexMatrix rot_z(double angle);

/// Kronecker product; the left factor carries the more significant bits.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// The 2x2 matrix m placed at bit position beta in a chain of nb factors,
/// counted from the right (position 0 = least significant).
ComplexMatrix embed(const ComplexMatrix& m, int beta, int nb);

/// Block-diagonal matrix from the given square blocks, in order.
ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks);

/// A B A†. A must be unitary within tolerance.
ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& b);

/// P_va: the tensor product of single-bit projectors selected by va.
/// Diagonal 0/1 matrix with a single 1 at index d(va).
ComplexMatrix build_projector(const BitString& va);

/// exp(sum_i alpha_i P_i) for mutually orthogonal projectors, evaluated by
/// pulling the sum out of the exponential:
///   sum_i exp(alpha_i) P_i + (1 - sum_i P_i).
/// Throws std::invalid_argument when the projectors are not orthogonal
/// within tolerance.
ComplexMatrix exp_projector_sum(const std::vector<ComplexMatrix>& projectors,
                                const std::vector<Complex>& alphas,
                                double tol = kDefaultTol);

struct PaddedMatrix {
    ComplexMatrix matrix;
    int original_dim = 0;
    int padding() const { return static_cast<int>(matrix.rows()) - original_dim; }
};

/// U ⊕ I_r with r chosen so the result has the smallest power-of-two
/// dimension >= dim(U) (at least 2). Requires U unitary.
PaddedMatrix pad_to_power_of_two(const ComplexMatrix& u, double tol = kDefaultTol);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||U†U - I||_F.
double unitarity_error(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTol);
void require_unitary(const ComplexMatrix& u, double tol, const std::string& what);

// Matrix text file format: line 1 holds the dimension N; the next N lines
// hold 2N whitespace-separated floats, real and imaginary parts interleaved,
// row-major. Writers emit 17 significant digits.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

}  // namespace seoc
