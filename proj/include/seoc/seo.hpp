#pragma once

#include "seoc/numkit.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace seoc {

/// One line of a SEO file. Angles are stored in degrees, the file unit;
/// they are converted to radians only when a matrix is built.
struct SeoInstruction {
    enum class Kind { Phase, Cnot, RotY, RotZ };

    Kind kind = Kind::Phase;
    int control = -1;           // Cnot only
    bool control_value = true;  // Cnot only: T flips when the control bit is 1
    int target = -1;            // Cnot target, or the rotation bit
    double angle_deg = 0.0;     // Phase and rotations

    static SeoInstruction phase(double angle_deg);
    static SeoInstruction cnot(int control, bool value, int target);
    static SeoInstruction rot_y(int bit, double angle_deg);
    static SeoInstruction rot_z(int bit, double angle_deg);

    /// Largest bit index used, or -1 for Phase.
    int max_bit() const;

    bool operator==(const SeoInstruction&) const = default;
};

struct SeoProgram {
    int nbits = 1;
    std::vector<SeoInstruction> instructions;

    bool operator==(const SeoProgram&) const = default;
};

/// The 2^nb matrix of a single instruction:
///   PHAS ang    -> exp(i ang pi/180) I
///   CNOT a c b  -> flip bit b when bit a matches c
///   ROTY a ang  -> exp(i sigma_y(a) ang pi/180)
///   ROTZ a ang  -> exp(i sigma_z(a) ang pi/180)
ComplexMatrix instruction_matrix(const SeoInstruction& ins, int nb);

/// Left-multiply m by the instruction matrix in place (O(dim^2)).
void apply_instruction(const SeoInstruction& ins, ComplexMatrix& m);

/// Product of the instruction matrices with the first instruction applied
/// first to a ket: the last instruction is the leftmost factor.
ComplexMatrix program_matrix(const SeoProgram& p);

/// Parse SEO text. Blank lines are ignored and '#' starts a comment running
/// to the end of the line. When nbits_override is 0 the bit count is
/// inferred as (largest bit index + 1), with a minimum of 1.
/// Throws ParseError with a line number on malformed input.
SeoProgram parse_seo(std::istream& in, int nbits_override = 0);
SeoProgram parse_seo(const std::string& text, int nbits_override = 0);
SeoProgram parse_seo_file(const std::string& path, int nbits_override = 0);

/// Canonical text: uppercase keywords, single spaces, angles printed as
/// fixed-point with 6 decimals.
std::string write_seo(const SeoProgram& p);
void write_seo_file(const std::string& path, const SeoProgram& p);

/// Drop rotations and phases with |angle| below the threshold (degrees),
/// then cancel immediately adjacent identical c-not pairs until none remain.
SeoProgram peephole_zero(const SeoProgram& p, double threshold_deg);

}  // namespace seoc
