#pragma once

#include "seoc/numkit.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace seoc {

/// A bijection on bit positions 0..nbits-1; image(beta) is the new position
/// of bit beta.
class BitPermutation {
public:
    explicit BitPermutation(std::vector<int> image);
    static BitPermutation identity(int nbits);

    int nbits() const { return static_cast<int>(image_.size()); }
    int image(int beta) const { return image_[beta]; }
    const std::vector<int>& images() const { return image_; }

    BitPermutation inverse() const;

    /// Composition: apply this first, then `later` (right-to-left when the
    /// two are written later * this).
    BitPermutation then(const BitPermutation& later) const;

    /// The induced permutation of states: bit beta of the input becomes bit
    /// image(beta) of the output.
    std::uint64_t apply_to_state(std::uint64_t state) const;

    /// The 2^nbits permutation matrix of apply_to_state.
    ComplexMatrix state_matrix() const;

    bool operator==(const BitPermutation&) const = default;

private:
    std::vector<int> image_;
};

enum class Parity { Even, Odd };

/// A cycle (a_1, a_2, ..., a_r): a_1 -> a_2, ..., a_r -> a_1.
struct Cycle {
    std::vector<int> elements;

    explicit Cycle(std::vector<int> elements);
    size_t length() const { return elements.size(); }
};

enum class TranspositionOrder {
    Left,   // (a1,...,an) = (a1,a2)(a2,a3)...(a_{n-1},a_n)
    Right,  // (a1,...,an) = (a1,an)...(a1,a3)(a1,a2)
};

/// Decompose a cycle of length >= 2 into transpositions; the product of the
/// returned pairs, applied right-to-left, reproduces the cycle.
std::vector<std::pair<int, int>> cycle_to_transpositions(const Cycle& c, TranspositionOrder order);

Parity permutation_parity(const BitPermutation& p);

/// The controlled-not gate on 2^nb states: flips bit `target` on states
/// whose bit `control` equals `control_value`.
ComplexMatrix cnot_matrix(int control, int control_value, int target, int nb);

/// The state transposition (a1 b1, a2 b2)_{alpha, beta}: swaps every pair of
/// states whose bits at positions alpha, beta read (a1, b1) and (a2, b2) and
/// agree elsewhere.
ComplexMatrix state_transposition(int a1, int b1, int a2, int b2, int alpha, int beta, int nb);

/// The Exchanger E(alpha, beta) = (01, 10)_{alpha, beta}; conjugation by it
/// swaps the roles of the two bit positions.
ComplexMatrix exchanger_matrix(int alpha, int beta, int nb);

struct CnotSpec {
    int control;
    bool value;
    int target;
    bool operator==(const CnotSpec&) const = default;
};

/// E(alpha, beta) as a product of three c-nots, all with control value true:
/// the matrices of the returned descriptors, multiplied in order, equal
/// exchanger_matrix(alpha, beta).
std::vector<CnotSpec> exchanger_as_cnots(int alpha, int beta);

/// The alias renaming for a level-k direct sum of D matrices: identity when
/// k = 0 or nb = 1, otherwise the composition
///   E(nb-k-1, nb-k) ... E(nb-2, nb-1)
/// applied right-to-left. Bit nb-1 is renamed to nb-k-1 and the positions in
/// between shift up by one.
BitPermutation alias_permutation(int k, int nb);

}  // namespace seoc
