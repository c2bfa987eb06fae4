#include "seoc/numkit.hpp"

#include "seoc/bits.hpp"
#include "support.hpp"

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <numbers>
#include <sstream>

using namespace seoc;

namespace {

ComplexMatrix from_rows(int dim, std::initializer_list<Complex> entries) {
    ComplexMatrix m(dim, dim);
    int at = 0;
    for (const Complex& z : entries) {
        m(at / dim, at % dim) = z;
        ++at;
    }
    return m;
}

}  // namespace

TEST_CASE("bit strings index states") {
    const BitString va(4, 0b1010);
    CHECK(va.value() == 10);
    CHECK(va.bit(1) == 1);
    CHECK(va.bit(0) == 0);
    CHECK(va.popcount() == 2);
    CHECK(va.one_positions() == std::vector<int>{1, 3});
    CHECK(BitString::unit(3, 2).value() == 4);
    CHECK(BitString::unit(3, 2).popcount() == 1);
    CHECK_THROWS_AS(BitString(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(BitString(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BitString::unit(3, 3), std::invalid_argument);
}

TEST_CASE("tensor products follow the binary labeling") {
    CHECK(frobenius_distance(tensor(identity(2), identity(2)), identity(4)) == 0.0);

    // P_0 ⊗ P_1 = diag(0, 1, 0, 0)
    const ComplexMatrix p01 = tensor(anti_number_op(), number_op());
    CHECK(frobenius_distance(p01, from_rows(4, {0, 0, 0, 0,
                                                0, 1, 0, 0,
                                                0, 0, 0, 0,
                                                0, 0, 0, 0})) == 0.0);

    // sigma_x ⊗ P_0, expanded by hand
    const ComplexMatrix expected = from_rows(4, {0, 0, 1, 0,
                                                 0, 0, 0, 0,
                                                 1, 0, 0, 0,
                                                 0, 0, 0, 0});
    CHECK(frobenius_distance(tensor(pauli_x(), anti_number_op()), expected) == 0.0);
}

TEST_CASE("embed places a 2x2 factor at a bit position") {
    CHECK(frobenius_distance(embed(pauli_z(), 0, 1), pauli_z()) == 0.0);
    CHECK(frobenius_distance(embed(pauli_x(), 1, 2), tensor(pauli_x(), identity(2))) == 0.0);

    ComplexMatrix diag0101 = ComplexMatrix::Zero(4, 4);
    diag0101(1, 1) = 1;
    diag0101(3, 3) = 1;
    CHECK(frobenius_distance(embed(number_op(), 0, 2), diag0101) == 0.0);

    CHECK_THROWS_AS(embed(pauli_x(), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(embed(identity(4), 0, 3), std::invalid_argument);
}

TEST_CASE("direct sums stack blocks") {
    CHECK(frobenius_distance(direct_sum({identity(2), identity(2)}), identity(4)) == 0.0);

    // sigma_x ⊕ I_2 is the (00, 01) transposition
    const ComplexMatrix expected = from_rows(4, {0, 1, 0, 0,
                                                 1, 0, 0, 0,
                                                 0, 0, 1, 0,
                                                 0, 0, 0, 1});
    CHECK(frobenius_distance(direct_sum({pauli_x(), identity(2)}), expected) == 0.0);

    ComplexMatrix phase(1, 1);
    phase(0, 0) = std::polar(1.0, std::numbers::pi);
    ComplexMatrix one = identity(1);
    const ComplexMatrix summed = direct_sum({phase, one});
    CHECK(std::abs(summed(0, 0) - Complex(-1, 0)) < 1e-15);
    CHECK(summed(1, 1) == Complex(1, 0));

    CHECK_THROWS_AS(direct_sum({}), std::invalid_argument);
}

TEST_CASE("conjugate is A B A-dagger") {
    std::mt19937_64 rng(11);
    const ComplexMatrix b = testing::random_2x2(rng);
    CHECK(frobenius_distance(conjugate(identity(2), b), b) == 0.0);

    // The exchanger swaps tensor factors.
    const ComplexMatrix x = testing::random_2x2(rng);
    const ComplexMatrix y = testing::random_2x2(rng);
    CHECK(frobenius_distance(conjugate(exchanger_matrix(1, 0, 2), tensor(x, y)),
                             tensor(y, x)) < 1e-14);

    // Conjugating sigma_y at the target by a c-not picks up sigma_z at the
    // control.
    const ComplexMatrix lhs = conjugate(cnot_matrix(1, 1, 0, 2), embed(pauli_y(), 0, 2));
    const ComplexMatrix rhs = embed(pauli_y(), 0, 2) * embed(pauli_z(), 1, 2);
    CHECK(frobenius_distance(lhs, rhs) < 1e-14);

    CHECK_THROWS_AS(conjugate(identity(2), identity(4)), std::invalid_argument);
}

TEST_CASE("conjugation by a unitary preserves the eigenvalue multiset") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix u = testing::haar_unitary(4, rng);
        ComplexMatrix b(4, 4);
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) b(i, j) = Complex(uniform(rng), uniform(rng));
        const ComplexMatrix c = conjugate(u, b);
        // Newton power sums tr(A^k) determine the characteristic polynomial.
        ComplexMatrix bp = identity(4), cp = identity(4);
        for (int k = 1; k <= 4; ++k) {
            bp = bp * b;
            cp = cp * c;
            CHECK(std::abs(bp.trace() - cp.trace()) < 1e-10);
        }
    }
}

TEST_CASE("projectors select one basis state") {
    ComplexMatrix p00 = ComplexMatrix::Zero(4, 4);
    p00(0, 0) = 1;
    CHECK(frobenius_distance(build_projector(BitString(2, 0)), p00) == 0.0);

    ComplexMatrix p11 = ComplexMatrix::Zero(4, 4);
    p11(3, 3) = 1;
    CHECK(frobenius_distance(build_projector(BitString(2, 3)), p11) == 0.0);

    for (int nb = 1; nb <= 3; ++nb) {
        ComplexMatrix sum = ComplexMatrix::Zero(1 << nb, 1 << nb);
        for (std::uint64_t v = 0; v < (1u << nb); ++v) {
            sum += build_projector(BitString(nb, v));
        }
        CHECK(frobenius_distance(sum, identity(1 << nb)) == 0.0);

        for (std::uint64_t v = 0; v < (1u << nb); ++v) {
            const ComplexMatrix pv = build_projector(BitString(nb, v));
            CHECK(frobenius_distance(pv * pv, pv) == 0.0);
            for (std::uint64_t w = 0; w < (1u << nb); ++w) {
                if (w == v) continue;
                const ComplexMatrix pw = build_projector(BitString(nb, w));
                CHECK((pv * pw).norm() == 0.0);
            }
        }
    }
}

TEST_CASE("pauli and number operator identities") {
    CHECK(frobenius_distance(pauli_x() * pauli_x(), identity(2)) == 0.0);
    CHECK(frobenius_distance(pauli_y() * pauli_y(), identity(2)) == 0.0);
    CHECK(frobenius_distance(pauli_z() * pauli_z(), identity(2)) == 0.0);
    CHECK(frobenius_distance(number_op(), 0.5 * (identity(2) - pauli_z())) == 0.0);
    CHECK(frobenius_distance(anti_number_op(), 0.5 * (identity(2) + pauli_z())) == 0.0);
}

TEST_CASE("exponential of a projector sum pulls the sum out") {
    SUBCASE("all exponents zero gives the identity") {
        const ComplexMatrix p = build_projector(BitString(2, 1));
        CHECK(frobenius_distance(exp_projector_sum({p}, {Complex(0, 0)}), identity(4)) == 0.0);
    }

    SUBCASE("exp(i pi P_1) = sigma_z on one bit") {
        const ComplexMatrix p1 = number_op();
        const ComplexMatrix got = exp_projector_sum({p1}, {Complex(0, std::numbers::pi)});
        CHECK(frobenius_distance(got, pauli_z()) < 1e-15);
    }

    SUBCASE("a full projector family builds any diagonal unitary") {
        const std::vector<double> phases{0.3, -1.1, 2.4, 0.9};
        std::vector<ComplexMatrix> projectors;
        std::vector<Complex> alphas;
        for (std::uint64_t v = 0; v < 4; ++v) {
            projectors.push_back(build_projector(BitString(2, v)));
            alphas.push_back(Complex(0, phases[v]));
        }
        ComplexMatrix want = ComplexMatrix::Zero(4, 4);
        for (int i = 0; i < 4; ++i) want(i, i) = std::polar(1.0, phases[i]);
        CHECK(frobenius_distance(exp_projector_sum(projectors, alphas), want) < 1e-15);
    }

    SUBCASE("non-orthogonal projectors are rejected") {
        const ComplexMatrix p = build_projector(BitString(1, 0));
        CHECK_THROWS_AS(exp_projector_sum({p, p}, {Complex(1, 0), Complex(2, 0)}),
                        std::invalid_argument);
    }

    SUBCASE("agrees with a dense matrix exponential on rotated projector sets") {
        std::mt19937_64 rng(21);
        std::uniform_real_distribution<double> uniform(-2.0, 2.0);
        for (int nb = 1; nb <= 3; ++nb) {
            const int dim = 1 << nb;
            const ComplexMatrix q = testing::haar_unitary(dim, rng);
            // Projectors onto disjoint index pairs, rotated by a common basis.
            std::vector<ComplexMatrix> projectors;
            std::vector<Complex> alphas;
            ComplexMatrix arg = ComplexMatrix::Zero(dim, dim);
            for (int i = 0; i + 1 < dim; i += 2) {
                ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
                p(i, i) = 1;
                p(i + 1, i + 1) = 1;
                p = conjugate(q, p);
                const Complex alpha(uniform(rng), uniform(rng));
                arg += alpha * p;
                projectors.push_back(p);
                alphas.push_back(alpha);
            }
            const ComplexMatrix direct = arg.exp();
            CHECK(frobenius_distance(exp_projector_sum(projectors, alphas), direct) < 1e-10);
        }
    }
}

TEST_CASE("padding appends an identity block") {
    std::mt19937_64 rng(31);

    const ComplexMatrix u4 = testing::haar_unitary(4, rng);
    const PaddedMatrix same = pad_to_power_of_two(u4);
    CHECK(same.padding() == 0);
    CHECK(frobenius_distance(same.matrix, u4) == 0.0);

    const ComplexMatrix u3 = testing::haar_unitary(3, rng);
    const PaddedMatrix p3 = pad_to_power_of_two(u3);
    CHECK(p3.matrix.rows() == 4);
    CHECK(p3.padding() == 1);
    CHECK(p3.matrix(3, 3) == Complex(1, 0));
    CHECK(frobenius_distance(p3.matrix.topLeftCorner(3, 3), u3) == 0.0);
    CHECK(p3.matrix.topRightCorner(3, 1).norm() == 0.0);

    const ComplexMatrix u5 = testing::haar_unitary(5, rng);
    const PaddedMatrix p5 = pad_to_power_of_two(u5);
    CHECK(p5.matrix.rows() == 8);
    CHECK(p5.padding() == 3);
    CHECK(frobenius_distance(p5.matrix.bottomRightCorner(3, 3), identity(3)) == 0.0);

    // 1x1 inputs still land on a valid bit count.
    ComplexMatrix u1(1, 1);
    u1(0, 0) = std::polar(1.0, 0.7);
    CHECK(pad_to_power_of_two(u1).matrix.rows() == 2);

    ComplexMatrix bad = u4;
    bad(0, 0) += 5.0;
    CHECK_THROWS_AS(pad_to_power_of_two(bad), NotUnitaryError);
}

TEST_CASE("frobenius distance basics") {
    std::mt19937_64 rng(41);
    const ComplexMatrix a = testing::haar_unitary(4, rng);
    CHECK(frobenius_distance(a, a) == 0.0);
    CHECK(frobenius_distance(identity(2), pauli_x()) == doctest::Approx(2.0));
    ComplexMatrix d(2, 2);
    d << 1, 0, 0, std::polar(1.0, std::numbers::pi);
    CHECK(frobenius_distance(identity(2), d) == doctest::Approx(2.0));
    CHECK_THROWS_AS(frobenius_distance(identity(2), identity(4)), std::invalid_argument);
}

TEST_CASE("matrix files round-trip bit-exactly") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> uniform(-10.0, 10.0);
    for (int dim : {1, 3, 4, 7}) {
        ComplexMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                m(i, j) = Complex(uniform(rng) * std::pow(10.0, (i - j) * 3), uniform(rng));
            }
        }
        std::ostringstream out;
        write_matrix(out, m);
        std::istringstream in(out.str());
        const ComplexMatrix back = read_matrix(in);
        REQUIRE(back.rows() == dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                CHECK(back(i, j).real() == m(i, j).real());
                CHECK(back(i, j).imag() == m(i, j).imag());
            }
        }
    }
}

TEST_CASE("matrix parser accepts messy whitespace and rejects junk") {
    std::istringstream ok("2\n1 0\t\t0 0\n  0 0   1 0\n");
    const ComplexMatrix m = read_matrix(ok);
    CHECK(frobenius_distance(m, identity(2)) == 0.0);

    std::istringstream truncated("2\n1 0 0 0\n0 0\n");
    CHECK_THROWS_AS(read_matrix(truncated), ParseError);

    std::istringstream bad_dim("zero\n");
    CHECK_THROWS_AS(read_matrix(bad_dim), ParseError);

    std::istringstream negative("-3\n");
    CHECK_THROWS_AS(read_matrix(negative), ParseError);
}

TEST_CASE("unitarity checks scale with dimension") {
    std::mt19937_64 rng(61);
    const ComplexMatrix u = testing::haar_unitary(8, rng);
    CHECK(is_unitary(u));
    CHECK(unitarity_error(u) < 1e-13);
    ComplexMatrix bad = u;
    bad(0, 0) += 1e-6;
    CHECK(!is_unitary(bad));
    CHECK_THROWS_AS(require_unitary(bad, 1e-10, "test"), NotUnitaryError);
}
