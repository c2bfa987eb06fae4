#include "seoc/emitter.hpp"

#include "seoc/bits.hpp"
#include "seoc/walsh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace seoc {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::vector<int> decreasing_one_positions(const BitString& vb) {
    std::vector<int> pos = vb.one_positions();
    std::reverse(pos.begin(), pos.end());
    return pos;
}

void rename_bits(std::vector<SeoInstruction>& instructions, const BitPermutation& alias) {
    for (auto& ins : instructions) {
        if (ins.control >= 0) ins.control = alias.image(ins.control);
        if (ins.target >= 0) ins.target = alias.image(ins.target);
    }
}

}  // namespace

std::vector<FactorPlan> d_type_factor_plans(const CentralMatrix& c) {
    if (c.kind != CentralKind::DType) {
        throw std::invalid_argument("d_type_factor_plans: central matrix is not D-type");
    }
    const AngleVector theta = phi_to_theta(c.angles);
    std::vector<FactorPlan> plans;
    plans.reserve(theta.size());
    for (size_t i = 0; i < theta.size(); ++i) {
        FactorPlan plan;
        plan.vb = (c.nbits > 1) ? BitString(c.nbits - 1, i) : BitString(1, 0);
        plan.theta = theta[i];
        plan.axis = FactorPlan::Axis::Y;
        plan.rotation_bit = c.nbits - 1;
        if (c.nbits > 1) {
            plan.cnot_controls = decreasing_one_positions(plan.vb);
        }
        plans.push_back(std::move(plan));
    }
    return plans;
}

std::vector<FactorPlan> diagonal_factor_plans(const CentralMatrix& c) {
    if (c.kind != CentralKind::Diagonal) {
        throw std::invalid_argument("diagonal_factor_plans: central matrix is not diagonal");
    }
    const AngleVector theta = phi_to_theta(c.angles);
    std::vector<FactorPlan> plans;
    plans.reserve(theta.size());
    for (size_t i = 0; i < theta.size(); ++i) {
        FactorPlan plan;
        plan.theta = theta[i];
        if (i == 0) {
            plan.vb = BitString(c.nbits, 0);
            plan.axis = FactorPlan::Axis::Phase;
            plans.push_back(std::move(plan));
            continue;
        }
        plan.vb = BitString(c.nbits, i);
        plan.axis = FactorPlan::Axis::Z;
        std::vector<int> ones = decreasing_one_positions(plan.vb);
        plan.rotation_bit = ones.back();
        ones.pop_back();
        plan.cnot_controls = std::move(ones);
        plans.push_back(std::move(plan));
    }
    return plans;
}

std::vector<SeoInstruction> factor_instructions(const FactorPlan& plan) {
    std::vector<SeoInstruction> out;
    if (plan.axis == FactorPlan::Axis::Phase) return out;
    out.reserve(2 * plan.cnot_controls.size() + 1);
    for (auto it = plan.cnot_controls.rbegin(); it != plan.cnot_controls.rend(); ++it) {
        out.push_back(SeoInstruction::cnot(*it, true, plan.rotation_bit));
    }
    const double deg = plan.theta * kRadToDeg;
    out.push_back(plan.axis == FactorPlan::Axis::Y
                      ? SeoInstruction::rot_y(plan.rotation_bit, deg)
                      : SeoInstruction::rot_z(plan.rotation_bit, deg));
    for (int control : plan.cnot_controls) {
        out.push_back(SeoInstruction::cnot(control, true, plan.rotation_bit));
    }
    return out;
}

Emission emit_d_type(const CentralMatrix& c, const CompileOptions& options) {
    Emission emission;
    for (const FactorPlan& plan : d_type_factor_plans(c)) {
        if (options.optimize && std::abs(plan.theta) < options.zero_angle_threshold) {
            continue;
        }
        const auto instructions = factor_instructions(plan);
        emission.instructions.insert(emission.instructions.end(), instructions.begin(),
                                     instructions.end());
    }
    rename_bits(emission.instructions, alias_permutation(c.level, c.nbits));
    return emission;
}

Emission emit_diagonal(const CentralMatrix& c, const CompileOptions& options) {
    Emission emission;
    for (const FactorPlan& plan : diagonal_factor_plans(c)) {
        if (plan.axis == FactorPlan::Axis::Phase) {
            emission.deferred_phase += plan.theta;
            continue;
        }
        if (options.optimize && std::abs(plan.theta) < options.zero_angle_threshold) {
            continue;
        }
        const auto instructions = factor_instructions(plan);
        emission.instructions.insert(emission.instructions.end(), instructions.begin(),
                                     instructions.end());
    }
    return emission;
}

CompileResult compile_unitary(const ComplexMatrix& u, const CompileOptions& options) {
    const PaddedMatrix padded = pad_to_power_of_two(u, options.tol);
    const int dim = static_cast<int>(padded.matrix.rows());
    int nb = 0;
    while ((1 << nb) < dim) ++nb;

    const CentralSequence seq = decompose(padded.matrix, nb, options.tol);

    CompileResult result;
    result.original_dim = padded.original_dim;
    result.padded_dim = dim;
    result.program.nbits = nb;

    // The rightmost central factor acts first on a ket, so its fragment
    // leads the program.
    double global_phase = 0.0;
    for (auto it = seq.items.rbegin(); it != seq.items.rend(); ++it) {
        Emission emission = (it->kind == CentralKind::DType) ? emit_d_type(*it, options)
                                                             : emit_diagonal(*it, options);
        result.program.instructions.insert(result.program.instructions.end(),
                                           emission.instructions.begin(),
                                           emission.instructions.end());
        global_phase += emission.deferred_phase;
    }

    global_phase = std::remainder(global_phase, 2.0 * std::numbers::pi);
    if (!options.optimize || std::abs(global_phase) >= options.zero_angle_threshold) {
        result.program.instructions.push_back(SeoInstruction::phase(global_phase * kRadToDeg));
    }

    result.residual = frobenius_distance(program_matrix(result.program), padded.matrix);
    if (result.residual > options.tol * dim) {
        std::ostringstream msg;
        msg << "compile: program reproduces the input to " << result.residual
            << ", which exceeds " << options.tol * dim;
        throw ResidualError(msg.str());
    }
    return result;
}

}  // namespace seoc
