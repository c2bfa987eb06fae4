#include "seoc/bits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace seoc {

BitPermutation::BitPermutation(std::vector<int> image) : image_(std::move(image)) {
    if (image_.empty()) {
        throw std::invalid_argument("BitPermutation: empty image");
    }
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v]) {
            throw std::invalid_argument("BitPermutation: image is not a bijection");
        }
        seen[v] = true;
    }
}

BitPermutation BitPermutation::identity(int nbits) {
    std::vector<int> image(nbits);
    for (int i = 0; i < nbits; ++i) image[i] = i;
    return BitPermutation(std::move(image));
}

BitPermutation BitPermutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<int>(i);
    return BitPermutation(std::move(inv));
}

BitPermutation BitPermutation::then(const BitPermutation& later) const {
    if (later.nbits() != nbits()) {
        throw std::invalid_argument("BitPermutation::then: size mismatch");
    }
    std::vector<int> image(image_.size());
    for (size_t i = 0; i < image_.size(); ++i) image[i] = later.image_[image_[i]];
    return BitPermutation(std::move(image));
}

std::uint64_t BitPermutation::apply_to_state(std::uint64_t state) const {
    std::uint64_t out = 0;
    for (size_t b = 0; b < image_.size(); ++b) {
        if ((state >> b) & 1u) out |= std::uint64_t{1} << image_[b];
    }
    return out;
}

ComplexMatrix BitPermutation::state_matrix() const {
    const Eigen::Index dim = Eigen::Index{1} << nbits();
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        m(apply_to_state(x), x) = 1;
    }
    return m;
}

Cycle::Cycle(std::vector<int> elements) : elements(std::move(elements)) {
    if (this->elements.empty()) {
        throw std::invalid_argument("Cycle: must have at least one element");
    }
    std::vector<int> sorted = this->elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("Cycle: repeated element");
    }
}

std::vector<std::pair<int, int>> cycle_to_transpositions(const Cycle& c, TranspositionOrder order) {
    const auto& a = c.elements;
    if (a.size() < 2) {
        throw std::invalid_argument("cycle_to_transpositions: cycle length must be >= 2");
    }
    std::vector<std::pair<int, int>> out;
    out.reserve(a.size() - 1);
    if (order == TranspositionOrder::Left) {
        for (size_t i = 0; i + 1 < a.size(); ++i) out.emplace_back(a[i], a[i + 1]);
    } else {
        for (size_t i = a.size() - 1; i >= 1; --i) out.emplace_back(a[0], a[i]);
    }
    return out;
}

Parity permutation_parity(const BitPermutation& p) {
    std::vector<bool> visited(p.nbits(), false);
    int transpositions = 0;
    for (int start = 0; start < p.nbits(); ++start) {
        if (visited[start]) continue;
        int length = 0;
        for (int at = start; !visited[at]; at = p.image(at)) {
            visited[at] = true;
            ++length;
        }
        transpositions += length - 1;
    }
    return (transpositions % 2 == 0) ? Parity::Even : Parity::Odd;
}

namespace {

void check_bit_pair(int alpha, int beta, int nb, const char* what) {
    if (alpha == beta) {
        throw std::invalid_argument(std::string(what) + ": bit positions must differ");
    }
    if (alpha < 0 || alpha >= nb || beta < 0 || beta >= nb) {
        throw std::invalid_argument(std::string(what) + ": bit position out of range for " +
                                    std::to_string(nb) + " bits");
    }
}

}  // namespace

ComplexMatrix cnot_matrix(int control, int control_value, int target, int nb) {
    check_bit_pair(control, target, nb, "cnot_matrix");
    if (control_value != 0 && control_value != 1) {
        throw std::invalid_argument("cnot_matrix: control value must be 0 or 1");
    }
    const Eigen::Index dim = Eigen::Index{1} << nb;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        const bool fires = ((x >> control) & 1) == control_value;
        const Eigen::Index y = fires ? (x ^ (Eigen::Index{1} << target)) : x;
        m(y, x) = 1;
    }
    return m;
}

ComplexMatrix state_transposition(int a1, int b1, int a2, int b2, int alpha, int beta, int nb) {
    check_bit_pair(alpha, beta, nb, "state_transposition");
    if (a1 == a2 && b1 == b2) {
        throw std::invalid_argument("state_transposition: the two bit patterns must differ");
    }
    const Eigen::Index dim = Eigen::Index{1} << nb;
    const std::uint64_t mask = (std::uint64_t{1} << alpha) | (std::uint64_t{1} << beta);
    const std::uint64_t first = (std::uint64_t(a1) << alpha) | (std::uint64_t(b1) << beta);
    const std::uint64_t second = (std::uint64_t(a2) << alpha) | (std::uint64_t(b2) << beta);
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        const std::uint64_t at = std::uint64_t(x) & mask;
        Eigen::Index y = x;
        if (at == first) {
            y = static_cast<Eigen::Index>((std::uint64_t(x) & ~mask) | second);
        } else if (at == second) {
            y = static_cast<Eigen::Index>((std::uint64_t(x) & ~mask) | first);
        }
        m(y, x) = 1;
    }
    return m;
}

ComplexMatrix exchanger_matrix(int alpha, int beta, int nb) {
    return state_transposition(0, 1, 1, 0, alpha, beta, nb);
}

std::vector<CnotSpec> exchanger_as_cnots(int alpha, int beta) {
    if (alpha == beta) {
        throw std::invalid_argument("exchanger_as_cnots: bit positions must differ");
    }
    return {{beta, true, alpha}, {alpha, true, beta}, {beta, true, alpha}};
}

BitPermutation alias_permutation(int k, int nb) {
    if (k < 0 || k > nb - 1) {
        throw std::invalid_argument("alias_permutation: level " + std::to_string(k) +
                                    " out of range for " + std::to_string(nb) + " bits");
    }
    BitPermutation p = BitPermutation::identity(nb);
    if (k == 0 || nb == 1) return p;
    // E(nb-k-1, nb-k) ... E(nb-2, nb-1), applied right-to-left.
    for (int low = nb - 2; low >= nb - k - 1; --low) {
        std::vector<int> swap_image(nb);
        for (int i = 0; i < nb; ++i) swap_image[i] = i;
        std::swap(swap_image[low], swap_image[low + 1]);
        p = p.then(BitPermutation(std::move(swap_image)));
    }
    return p;
}

}  // namespace seoc
