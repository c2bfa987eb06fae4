#include "seoc/treedec.hpp"

#include "seoc/bits.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace seoc {

CentralMatrix CentralMatrix::d_type(int nbits, int level, AngleVector phi) {
    if (nbits < 1) throw std::invalid_argument("CentralMatrix: nbits must be >= 1");
    if (level < 0 || level > nbits - 1) {
        throw std::invalid_argument("CentralMatrix: level out of range");
    }
    if (phi.order != nbits - 1) {
        throw std::invalid_argument("CentralMatrix: D-type angle vector must have order nbits-1");
    }
    return CentralMatrix{CentralKind::DType, nbits, level, std::move(phi)};
}

CentralMatrix CentralMatrix::diagonal(int nbits, AngleVector phases) {
    if (nbits < 1) throw std::invalid_argument("CentralMatrix: nbits must be >= 1");
    if (phases.order != nbits) {
        throw std::invalid_argument("CentralMatrix: diagonal phase vector must have order nbits");
    }
    return CentralMatrix{CentralKind::Diagonal, nbits, 0, std::move(phases)};
}

ComplexMatrix CentralSequence::product() const {
    ComplexMatrix out = identity(1 << nbits);
    for (const auto& item : items) {
        out = out * expand_central(item);
    }
    return out;
}

ComplexMatrix expand_central(const CentralMatrix& c) {
    const int nb = c.nbits;
    const Eigen::Index dim = Eigen::Index{1} << nb;
    if (c.kind == CentralKind::Diagonal) {
        ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            out(i, i) = std::polar(1.0, c.angles[static_cast<size_t>(i)]);
        }
        return out;
    }
    // Sum of R(phi_va) ⊗ P_va with the rotation at bit nb-1, then conjugated
    // into place by the alias exchangers.
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    const Eigen::Index half = dim / 2;
    for (Eigen::Index va = 0; va < half; ++va) {
        const double phi = c.angles[static_cast<size_t>(va)];
        const double cosv = std::cos(phi), sinv = std::sin(phi);
        out(va, va) = cosv;
        out(half + va, half + va) = cosv;
        out(va, half + va) = sinv;
        out(half + va, va) = -sinv;
    }
    if (c.level == 0 || nb == 1) return out;
    const ComplexMatrix e = alias_permutation(c.level, nb).state_matrix();
    return conjugate(e, out);
}

namespace {

// Reduce an angle to (-pi, pi].
double wrap_angle(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::remainder(a, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    return a;
}

// In-order expansion: node k holds blocks, its left subtree the L factors,
// its right subtree the R factors.
void expand_node(const ComplexMatrix& blockdiag, int nb, int k, double tol,
                 std::vector<CentralMatrix>& out) {
    const Eigen::Index dim = blockdiag.rows();
    if (k == nb) {
        AngleVector phases = AngleVector::zeros(nb);
        for (Eigen::Index i = 0; i < dim; ++i) {
            phases[static_cast<size_t>(i)] = wrap_angle(std::arg(blockdiag(i, i)));
        }
        out.push_back(CentralMatrix::diagonal(nb, std::move(phases)));
        return;
    }

    const Eigen::Index block_dim = dim >> k;
    const Eigen::Index blocks = Eigen::Index{1} << k;
    ComplexMatrix left = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix right = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix central = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < blocks; ++j) {
        const Eigen::Index at = j * block_dim;
        const CsdFactors f = cs_decompose(blockdiag.block(at, at, block_dim, block_dim), tol);
        const Eigen::Index h = block_dim / 2;
        left.block(at, at, h, h) = f.l0;
        left.block(at + h, at + h, h, h) = f.l1;
        right.block(at, at, h, h) = f.r0;
        right.block(at + h, at + h, h, h) = f.r1;
        central.block(at, at, block_dim, block_dim) = f.d_matrix();
    }

    // Read the level-k angles off the assembled direct sum of D matrices:
    // phi_va lives at rows j*2m + w with va = j*m + w, m = 2^{nb-1-k}.
    const Eigen::Index m = Eigen::Index{1} << (nb - 1 - k);
    AngleVector phi = AngleVector::zeros(nb - 1);
    for (Eigen::Index j = 0; j < blocks; ++j) {
        for (Eigen::Index w = 0; w < m; ++w) {
            const Eigen::Index row = j * 2 * m + w;
            phi[static_cast<size_t>(j * m + w)] =
                std::atan2(central(row, row + m).real(), central(row, row).real());
        }
    }

    expand_node(left, nb, k + 1, tol, out);
    out.push_back(CentralMatrix::d_type(nb, k, std::move(phi)));
    expand_node(right, nb, k + 1, tol, out);
}

}  // namespace

CentralSequence decompose(const ComplexMatrix& u, int nb, double tol) {
    if (nb < 1) throw std::invalid_argument("decompose: bit count must be >= 1");
    if (u.rows() != u.cols() || u.rows() != Eigen::Index{1} << nb) {
        std::ostringstream msg;
        msg << "decompose: expected a " << (Eigen::Index{1} << nb) << "x"
            << (Eigen::Index{1} << nb) << " matrix for " << nb << " bits, got " << u.rows()
            << "x" << u.cols();
        throw std::invalid_argument(msg.str());
    }
    require_unitary(u, tol, "decompose");

    CentralSequence seq;
    seq.nbits = nb;
    expand_node(u, nb, 0, tol, seq.items);

    const double residual = frobenius_distance(seq.product(), u);
    if (residual > tol * static_cast<double>(u.rows())) {
        std::ostringstream msg;
        msg << "decompose: central sequence residual " << residual << " exceeds "
            << tol * static_cast<double>(u.rows());
        throw ResidualError(msg.str());
    }
    return seq;
}

}  // namespace seoc
