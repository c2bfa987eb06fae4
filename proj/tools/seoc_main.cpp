// seoc: compiles a unitary matrix into a SEO file (c-nots, single-qubit
// rotations, phases), decompiles a SEO file back into a matrix, and verifies
// a matrix/SEO pair. Reports go to stderr; file payloads to the paths given.

#include "seoc/emitter.hpp"
#include "seoc/numkit.hpp"
#include "seoc/seo.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <numbers>
#include <string>

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitNotUnitary = 3;
constexpr int kExitResidual = 4;

struct Options {
    std::string in_path;
    std::string out_path;
    std::string seo_path;
    double tol = seoc::kDefaultTol;
    double zero_angle_threshold = 1e-10;
    int nbits = 0;
    bool no_opt = false;
};

int run_compile(const Options& opt) {
    const seoc::ComplexMatrix u = seoc::read_matrix_file(opt.in_path);
    seoc::CompileOptions copt;
    copt.optimize = !opt.no_opt;
    copt.zero_angle_threshold = opt.zero_angle_threshold;
    copt.tol = opt.tol;
    const seoc::CompileResult result = seoc::compile_unitary(u, copt);
    seoc::write_seo_file(opt.out_path, result.program);
    std::cerr << "compiled " << result.original_dim << "x" << result.original_dim
              << " matrix (padded by " << result.padding() << ") into "
              << result.program.instructions.size() << " instructions, residual "
              << result.residual << "\n";
    return 0;
}

int run_decompile(const Options& opt) {
    const seoc::SeoProgram program = seoc::parse_seo_file(opt.in_path, opt.nbits);
    const seoc::ComplexMatrix m = seoc::program_matrix(program);
    seoc::write_matrix_file(opt.out_path, m);
    std::cerr << "decompiled " << program.instructions.size() << " instructions into a "
              << m.rows() << "x" << m.rows() << " matrix\n";
    return 0;
}

int run_verify(const Options& opt) {
    const seoc::ComplexMatrix u = seoc::read_matrix_file(opt.in_path);
    const seoc::PaddedMatrix padded = seoc::pad_to_power_of_two(u, opt.tol);
    int nb = 0;
    while ((1 << nb) < padded.matrix.rows()) ++nb;
    nb = std::max(nb, 1);
    const seoc::SeoProgram program = seoc::parse_seo_file(opt.seo_path, nb);
    const double residual = seoc::frobenius_distance(seoc::program_matrix(program), padded.matrix);
    std::cerr << "residual " << residual << "\n";
    if (residual > opt.tol * static_cast<double>(padded.matrix.rows())) {
        std::cerr << "verify: residual exceeds " << opt.tol * padded.matrix.rows() << "\n";
        return kExitResidual;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unitary matrix <-> SEO file compiler"};
    app.require_subcommand(1);
    Options opt;

    auto* compile = app.add_subcommand("compile", "matrix file -> SEO file");
    compile->add_option("--in", opt.in_path, "input matrix file")->required();
    compile->add_option("--out", opt.out_path, "output SEO file")->required();
    compile->add_option("--tol", opt.tol, "unitarity/residual tolerance scale");
    compile->add_option("--zero-angle-threshold", opt.zero_angle_threshold,
                        "angles (radians) below this are dropped");
    compile->add_flag("--no-opt", opt.no_opt, "emit every factor, even zero-angle ones");

    auto* decompile = app.add_subcommand("decompile", "SEO file -> matrix file");
    decompile->add_option("--in", opt.in_path, "input SEO file")->required();
    decompile->add_option("--out", opt.out_path, "output matrix file")->required();
    decompile->add_option("--nbits", opt.nbits, "bit count (default: inferred)");

    auto* verify = app.add_subcommand("verify", "check a matrix/SEO pair");
    verify->add_option("--in", opt.in_path, "matrix file")->required();
    verify->add_option("--seo", opt.seo_path, "SEO file")->required();
    verify->add_option("--tol", opt.tol, "residual tolerance scale");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compile->parsed()) return run_compile(opt);
        if (decompile->parsed()) return run_decompile(opt);
        return run_verify(opt);
    } catch (const seoc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const seoc::NotUnitaryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotUnitary;
    } catch (const seoc::ResidualError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResidual;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
