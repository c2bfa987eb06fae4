#include "seoc/csd.hpp"
#include "seoc/emitter.hpp"
#include "seoc/numkit.hpp"
#include "seoc/seo.hpp"
#include "seoc/treedec.hpp"
#include "seoc/walsh.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

seoc::CompileOptions make_options(bool opt, double zero_angle_threshold, double tol) {
    seoc::CompileOptions options;
    options.optimize = opt;
    options.zero_angle_threshold = zero_angle_threshold;
    options.tol = tol;
    return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "unitary matrix <-> SEO (sequence of elementary operations) compiler";

    py::register_exception<seoc::ParseError>(m, "SeoParseError", PyExc_ValueError);
    py::register_exception<seoc::NotUnitaryError>(m, "NotUnitaryError", PyExc_ValueError);
    py::register_exception<seoc::ResidualError>(m, "ResidualError", PyExc_RuntimeError);

    m.def(
        "compile_unitary",
        [](const seoc::ComplexMatrix& u, bool opt, double zero_angle_threshold, double tol) {
            const seoc::CompileResult result =
                seoc::compile_unitary(u, make_options(opt, zero_angle_threshold, tol));
            return py::make_tuple(seoc::write_seo(result.program), result.residual,
                                  result.padding());
        },
        py::arg("matrix"), py::arg("opt") = true, py::arg("zero_angle_threshold") = 1e-10,
        py::arg("tol") = seoc::kDefaultTol,
        "Compile a unitary matrix into SEO text. Returns (text, residual, padding).");

    m.def(
        "decompile_seo",
        [](const std::string& text, int nbits) {
            return seoc::program_matrix(seoc::parse_seo(text, nbits));
        },
        py::arg("text"), py::arg("nbits") = 0,
        "Rebuild the matrix of a SEO program (first line applied first).");

    m.def(
        "verify_seo",
        [](const seoc::ComplexMatrix& u, const std::string& text, double tol) {
            const seoc::PaddedMatrix padded = seoc::pad_to_power_of_two(u, tol);
            int nb = 0;
            while ((1 << nb) < padded.matrix.rows()) ++nb;
            nb = std::max(nb, 1);
            const seoc::SeoProgram program = seoc::parse_seo(text, nb);
            return seoc::frobenius_distance(seoc::program_matrix(program), padded.matrix);
        },
        py::arg("matrix"), py::arg("text"), py::arg("tol") = seoc::kDefaultTol,
        "Frobenius distance between a (padded) matrix and a SEO program.");

    m.def(
        "cs_decompose",
        [](const seoc::ComplexMatrix& u, double tol) {
            const seoc::CsdFactors f = seoc::cs_decompose(u, tol);
            return py::make_tuple(f.l0, f.l1, f.phi, f.r0, f.r1);
        },
        py::arg("matrix"), py::arg("tol") = seoc::kDefaultTol,
        "Cosine-sine decomposition: returns (L0, L1, phi, R0, R1) with\n"
        "U = (L0 (+) L1) D(phi) (R0 (+) R1).");

    m.def(
        "peephole_zero",
        [](const std::string& text, double threshold_deg, int nbits) {
            return seoc::write_seo(seoc::peephole_zero(seoc::parse_seo(text, nbits), threshold_deg));
        },
        py::arg("text"), py::arg("threshold_deg") = 1e-8, py::arg("nbits") = 0,
        "Drop near-zero rotations/phases and cancel adjacent identical c-nots.");

    m.def(
        "hadamard_transform",
        [](const std::vector<double>& values) {
            int order = 0;
            while ((size_t{1} << order) < values.size()) ++order;
            return seoc::fast_transform(seoc::AngleVector(order, values)).values;
        },
        py::arg("values"), "Sylvester-Hadamard transform of a length 2^r vector.");

    m.attr("__version__") = "0.1.0";
}
