#include "seoc/seo.hpp"

#include "seoc/bits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace seoc {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

void check_bit(int bit, const char* what) {
    if (bit < 0) {
        throw std::invalid_argument(std::string(what) + ": negative bit index");
    }
}

}  // namespace

SeoInstruction SeoInstruction::phase(double angle_deg) {
    SeoInstruction ins;
    ins.kind = Kind::Phase;
    ins.angle_deg = angle_deg;
    return ins;
}

SeoInstruction SeoInstruction::cnot(int control, bool value, int target) {
    check_bit(control, "cnot");
    check_bit(target, "cnot");
    if (control == target) {
        throw std::invalid_argument("cnot: control and target must differ");
    }
    SeoInstruction ins;
    ins.kind = Kind::Cnot;
    ins.control = control;
    ins.control_value = value;
    ins.target = target;
    return ins;
}

SeoInstruction SeoInstruction::rot_y(int bit, double angle_deg) {
    check_bit(bit, "rot_y");
    SeoInstruction ins;
    ins.kind = Kind::RotY;
    ins.target = bit;
    ins.angle_deg = angle_deg;
    return ins;
}

SeoInstruction SeoInstruction::rot_z(int bit, double angle_deg) {
    check_bit(bit, "rot_z");
    SeoInstruction ins;
    ins.kind = Kind::RotZ;
    ins.target = bit;
    ins.angle_deg = angle_deg;
    return ins;
}

int SeoInstruction::max_bit() const {
    return std::max(control, target);
}

ComplexMatrix instruction_matrix(const SeoInstruction& ins, int nb) {
    if (ins.max_bit() >= nb) {
        throw std::invalid_argument("instruction_matrix: bit index " +
                                    std::to_string(ins.max_bit()) + " out of range for " +
                                    std::to_string(nb) + " bits");
    }
    const double rad = ins.angle_deg * kDegToRad;
    switch (ins.kind) {
        case SeoInstruction::Kind::Phase:
            return std::polar(1.0, rad) * identity(1 << nb);
        case SeoInstruction::Kind::Cnot:
            return cnot_matrix(ins.control, ins.control_value ? 1 : 0, ins.target, nb);
        case SeoInstruction::Kind::RotY:
            return embed(rot_y(rad), ins.target, nb);
        case SeoInstruction::Kind::RotZ:
            return embed(rot_z(rad), ins.target, nb);
    }
    throw std::logic_error("instruction_matrix: bad kind");
}

void apply_instruction(const SeoInstruction& ins, ComplexMatrix& m) {
    const Eigen::Index dim = m.rows();
    if (ins.max_bit() >= 0 && (Eigen::Index{1} << (ins.max_bit() + 1)) > dim) {
        throw std::invalid_argument("apply_instruction: bit index out of range");
    }
    const double rad = ins.angle_deg * kDegToRad;
    switch (ins.kind) {
        case SeoInstruction::Kind::Phase:
            m *= std::polar(1.0, rad);
            return;
        case SeoInstruction::Kind::Cnot: {
            const Eigen::Index cbit = Eigen::Index{1} << ins.control;
            const Eigen::Index tbit = Eigen::Index{1} << ins.target;
            const Eigen::Index want = ins.control_value ? cbit : 0;
            for (Eigen::Index x = 0; x < dim; ++x) {
                if ((x & cbit) == want && (x & tbit) == 0) {
                    m.row(x).swap(m.row(x | tbit));
                }
            }
            return;
        }
        case SeoInstruction::Kind::RotY: {
            const double c = std::cos(rad), s = std::sin(rad);
            const Eigen::Index tbit = Eigen::Index{1} << ins.target;
            for (Eigen::Index x = 0; x < dim; ++x) {
                if ((x & tbit) != 0) continue;
                const auto lo = m.row(x).eval();
                const auto hi = m.row(x | tbit).eval();
                m.row(x) = c * lo + s * hi;
                m.row(x | tbit) = -s * lo + c * hi;
            }
            return;
        }
        case SeoInstruction::Kind::RotZ: {
            const Complex up = std::polar(1.0, rad), down = std::polar(1.0, -rad);
            const Eigen::Index tbit = Eigen::Index{1} << ins.target;
            for (Eigen::Index x = 0; x < dim; ++x) {
                m.row(x) *= ((x & tbit) == 0) ? up : down;
            }
            return;
        }
    }
    throw std::logic_error("apply_instruction: bad kind");
}

ComplexMatrix program_matrix(const SeoProgram& p) {
    ComplexMatrix m = identity(1 << p.nbits);
    for (const auto& ins : p.instructions) {
        apply_instruction(ins, m);
    }
    return m;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& message) {
    throw ParseError("SEO line " + std::to_string(line_no) + ": " + message);
}

int parse_bit(const std::string& token, int line_no) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        parse_fail(line_no, "bad bit index '" + token + "'");
    }
    if (used != token.size() || value < 0) {
        parse_fail(line_no, "bad bit index '" + token + "'");
    }
    return value;
}

double parse_angle(const std::string& token, int line_no) {
    size_t used = 0;
    double value = 0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        parse_fail(line_no, "bad angle '" + token + "'");
    }
    if (used != token.size() || !std::isfinite(value)) {
        parse_fail(line_no, "bad angle '" + token + "'");
    }
    return value;
}

}  // namespace

SeoProgram parse_seo(std::istream& in, int nbits_override) {
    SeoProgram p;
    p.nbits = 1;
    std::string line;
    int line_no = 0;
    int max_bit = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;

        const std::string& keyword = tokens[0];
        SeoInstruction ins;
        if (keyword == "PHAS") {
            if (tokens.size() != 2) parse_fail(line_no, "PHAS expects 1 field");
            ins = SeoInstruction::phase(parse_angle(tokens[1], line_no));
        } else if (keyword == "CNOT") {
            if (tokens.size() != 4) parse_fail(line_no, "CNOT expects 3 fields");
            const int control = parse_bit(tokens[1], line_no);
            if (tokens[2] != "T" && tokens[2] != "F") {
                parse_fail(line_no, "CNOT control value must be T or F, got '" + tokens[2] + "'");
            }
            const int target = parse_bit(tokens[3], line_no);
            if (control == target) parse_fail(line_no, "CNOT control equals target");
            ins = SeoInstruction::cnot(control, tokens[2] == "T", target);
        } else if (keyword == "ROTY" || keyword == "ROTZ") {
            if (tokens.size() != 3) parse_fail(line_no, keyword + " expects 2 fields");
            const int bit = parse_bit(tokens[1], line_no);
            const double ang = parse_angle(tokens[2], line_no);
            ins = (keyword == "ROTY") ? SeoInstruction::rot_y(bit, ang)
                                      : SeoInstruction::rot_z(bit, ang);
        } else {
            parse_fail(line_no, "unknown keyword '" + keyword + "'");
        }
        max_bit = std::max(max_bit, ins.max_bit());
        p.instructions.push_back(ins);
    }
    p.nbits = (nbits_override > 0) ? nbits_override : std::max(max_bit + 1, 1);
    if (max_bit >= p.nbits) {
        throw ParseError("SEO program uses bit " + std::to_string(max_bit) +
                         " but only " + std::to_string(p.nbits) + " bits were requested");
    }
    return p;
}

SeoProgram parse_seo(const std::string& text, int nbits_override) {
    std::istringstream in(text);
    return parse_seo(in, nbits_override);
}

SeoProgram parse_seo_file(const std::string& path, int nbits_override) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open SEO file: " + path);
    }
    return parse_seo(in, nbits_override);
}

std::string write_seo(const SeoProgram& p) {
    std::string out;
    char buf[96];
    for (const auto& ins : p.instructions) {
        switch (ins.kind) {
            case SeoInstruction::Kind::Phase:
                std::snprintf(buf, sizeof buf, "PHAS %.6f\n", ins.angle_deg);
                break;
            case SeoInstruction::Kind::Cnot:
                std::snprintf(buf, sizeof buf, "CNOT %d %c %d\n", ins.control,
                              ins.control_value ? 'T' : 'F', ins.target);
                break;
            case SeoInstruction::Kind::RotY:
                std::snprintf(buf, sizeof buf, "ROTY %d %.6f\n", ins.target, ins.angle_deg);
                break;
            case SeoInstruction::Kind::RotZ:
                std::snprintf(buf, sizeof buf, "ROTZ %d %.6f\n", ins.target, ins.angle_deg);
                break;
        }
        out += buf;
    }
    return out;
}

void write_seo_file(const std::string& path, const SeoProgram& p) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << write_seo(p);
}

SeoProgram peephole_zero(const SeoProgram& p, double threshold_deg) {
    SeoProgram out;
    out.nbits = p.nbits;
    for (const auto& ins : p.instructions) {
        if (ins.kind != SeoInstruction::Kind::Cnot &&
            std::abs(ins.angle_deg) < threshold_deg) {
            continue;
        }
        if (ins.kind == SeoInstruction::Kind::Cnot && !out.instructions.empty() &&
            out.instructions.back() == ins) {
            out.instructions.pop_back();
            continue;
        }
        out.instructions.push_back(ins);
    }
    return out;
}

}  // namespace seoc
