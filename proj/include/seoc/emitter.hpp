#pragma once

#include "seoc/numkit.hpp"
#include "seoc/seo.hpp"
#include "seoc/treedec.hpp"

#include <vector>

namespace seoc {

struct CompileOptions {
    /// Drop factors whose emission angle vanishes and merge the global phase.
    bool optimize = true;
    /// Angles (radians) below this are treated as zero.
    double zero_angle_threshold = 1e-10;
    /// Unitarity / reconstruction tolerance scale.
    double tol = kDefaultTol;
};

/// One commuting factor of a central matrix: a rotation (or pure phase)
/// conjugated by a chain of c-nots that all target the rotation bit.
struct FactorPlan {
    enum class Axis { Y, Z, Phase };

    BitString vb{1, 0};              ///< selects the factor's signature
    double theta = 0.0;              ///< emission angle, radians
    std::vector<int> cnot_controls;  ///< strictly decreasing
    int rotation_bit = -1;           ///< -1 for Axis::Phase
    Axis axis = Axis::Phase;
};

/// Factor plans for a D-type central matrix, one per vb in increasing d(vb),
/// before alias renaming: controls at the 1-bits of vb, rotation at nbits-1.
std::vector<FactorPlan> d_type_factor_plans(const CentralMatrix& c);

/// Factor plans for a diagonal unitary: vb = 0 contributes a pure phase,
/// one-bit vb a plain Z rotation, larger vb a c-not conjugated Z rotation
/// at the lowest 1-bit.
std::vector<FactorPlan> diagonal_factor_plans(const CentralMatrix& c);

/// Instructions realizing one plan: c-nots with ascending controls, the
/// rotation, then the c-nots mirrored. Empty for Axis::Phase.
std::vector<SeoInstruction> factor_instructions(const FactorPlan& plan);

/// A SEO fragment plus the phase (radians) it defers to the caller.
struct Emission {
    std::vector<SeoInstruction> instructions;
    double deferred_phase = 0.0;
};

/// Emit a D-type central matrix: Walsh-transform the angles, lay out each
/// nonzero factor (every factor when optimization is off), then rename all
/// bit indices through the level's alias permutation.
Emission emit_d_type(const CentralMatrix& c, const CompileOptions& options = {});

/// Emit a diagonal unitary; the vb = 0 angle is returned as deferred phase.
Emission emit_diagonal(const CentralMatrix& c, const CompileOptions& options = {});

struct CompileResult {
    SeoProgram program;
    int original_dim = 0;
    int padded_dim = 0;
    double residual = 0.0;

    int padding() const { return padded_dim - original_dim; }
};

/// Full pipeline: pad to a power of two, decompose into central matrices,
/// emit each one, and lay the fragments out so the first-applied factor
/// comes first in the program; a single trailing PHAS carries the merged
/// global phase. The program is verified against the padded input before
/// being returned.
CompileResult compile_unitary(const ComplexMatrix& u, const CompileOptions& options = {});

}  // namespace seoc
