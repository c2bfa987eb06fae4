#pragma once

#include "seoc/csd.hpp"
#include "seoc/numkit.hpp"
#include "seoc/walsh.hpp"

#include <vector>

namespace seoc {

enum class CentralKind { DType, Diagonal };

/// One factor of the decomposition tree: either a direct sum of 2^level
/// D matrices (angles indexed by the nbits-1 bit string whose top `level`
/// bits select the summand) or a diagonal unitary diag(e^{i phase_va}).
struct CentralMatrix {
    CentralKind kind = CentralKind::Diagonal;
    int nbits = 1;
    int level = 0;        // DType only: the direct sum has 2^level summands
    AngleVector angles;   // DType: order nbits-1; Diagonal: order nbits

    static CentralMatrix d_type(int nbits, int level, AngleVector phi);
    static CentralMatrix diagonal(int nbits, AngleVector phases);
};

/// Ordered central-matrix factorization: the matrix product of the items,
/// leftmost factor first, equals the decomposed unitary.
struct CentralSequence {
    int nbits = 1;
    std::vector<CentralMatrix> items;

    /// Product of expand_central over the items (left to right).
    ComplexMatrix product() const;
};

/// Recursive cosine-sine expansion of a 2^nb-dimensional unitary into
/// 2^{nb+1} - 1 central matrices. Each tree node applies cs_decompose to
/// every block of the current block-diagonal matrix; the L factors seed the
/// subtree emitted to the left of the node, the R factors the one to its
/// right, and the 1x1 blocks at the bottom become diagonal unitaries.
CentralSequence decompose(const ComplexMatrix& u, int nb, double tol = kDefaultTol);

/// The explicit 2^nbits matrix of one central matrix.
ComplexMatrix expand_central(const CentralMatrix& c);

}  // namespace seoc
