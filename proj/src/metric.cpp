#include "origami/metric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace origami {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sizes(const Dessin& d, const MetricData& m) {
    if (m.lengths.size() != d.n_darts() || m.angles.size() != d.n_darts()) {
        throw MalformedInput("metric arrays must have n_darts = " + std::to_string(d.n_darts()) + " entries");
    }
}

MetricData uniform_structure(const Dessin& d, std::size_t face_size, double angle) {
    CellStructure cs(d);
    for (std::size_t f = 0; f < cs.count(CellKind::face); ++f) {
        const auto& orbit = cs.orbits(CellKind::face)[f];
        if (orbit.size() != face_size) {
            throw FaceDegreeMismatch("face " + std::to_string(f) + " has degree " + std::to_string(orbit.size()) +
                                     ", expected " + std::to_string(face_size));
        }
    }
    return {std::vector<double>(d.n_darts(), 1.0), std::vector<double>(d.n_darts(), angle)};
}

double reduce_angle(double x) {
    double r = std::remainder(x, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

}  // namespace

std::vector<std::string> validate_metric(const Dessin& d, const MetricData& m) {
    check_sizes(d, m);
    std::vector<std::string> out;
    for (Dart e = 0; e < d.n_darts(); ++e) {
        const double len = m.lengths[e];
        const double ang = m.angles[e];
        if (!(len > 0.0) || !std::isfinite(len)) out.push_back("length of dart " + std::to_string(e) + " not positive");
        if (!(ang > 0.0 && ang < 2.0 * kPi)) out.push_back("angle of dart " + std::to_string(e) + " outside (0, 2pi)");
        const Dart r = d.rho1()[e];
        if (e < r && m.lengths[r] != len) {
            std::ostringstream msg;
            msg << "darts " << e << " and " << r << " of one edge have lengths " << len << " and " << m.lengths[r];
            out.push_back(msg.str());
        }
    }
    return out;
}

MetricData equilateral_structure(const Dessin& d) { return uniform_structure(d, 3, kPi / 3.0); }

MetricData square_structure(const Dessin& d) { return uniform_structure(d, 4, kPi / 2.0); }

Word parse_word(std::string_view text) {
    Word out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "r0" || tok == "rho0") out.push_back(Generator::rho0);
        else if (tok == "r1" || tok == "rho1") out.push_back(Generator::rho1);
        else if (tok == "r0^-1" || tok == "rho0^-1") out.push_back(Generator::rho0_inv);
        else throw InvalidWord("unknown generator '" + tok + "'");
    }
    return out;
}

Dart apply_word(const Dessin& d, Dart dart, const Word& word) {
    if (dart >= d.n_darts()) throw InvalidArgument("dart " + std::to_string(dart) + " out of range");
    require_valid(d);
    const Permutation rho0_inv = inverse(d.rho0());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (*it) {
            case Generator::rho0: dart = d.rho0()[dart]; break;
            case Generator::rho1: dart = d.rho1()[dart]; break;
            case Generator::rho0_inv: dart = rho0_inv[dart]; break;
        }
    }
    return dart;
}

AffineChart chart_transition(const Dessin& d, const MetricData& m, Dart dart, const Word& word) {
    if (dart >= d.n_darts()) throw InvalidArgument("dart " + std::to_string(dart) + " out of range");
    require_valid(d);
    check_sizes(d, m);
    const Permutation rho0_inv = inverse(d.rho0());
    AffineChart chart;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (*it) {
            case Generator::rho0:
                chart = AffineChart{std::polar(1.0, m.angles[dart]), 0.0}.after(chart);
                dart = d.rho0()[dart];
                break;
            case Generator::rho1:
                chart = AffineChart{-1.0, m.lengths[dart]}.after(chart);
                dart = d.rho1()[dart];
                break;
            case Generator::rho0_inv:
                dart = rho0_inv[dart];
                chart = AffineChart{std::polar(1.0, -m.angles[dart]), 0.0}.after(chart);
                break;
        }
    }
    return chart;
}

ClosureResidual face_closure_residual(const Dessin& d, const MetricData& m, CellIndex face) {
    check_sizes(d, m);
    CellStructure cs(d);
    if (face.kind != CellKind::face || face.id >= cs.count(CellKind::face)) {
        throw InvalidArgument("face index " + std::to_string(face.id) + " out of range");
    }
    const auto& boundary = cs.orbits(CellKind::face)[face.id];
    Complex position{0.0, 0.0};
    double heading = 0.0;
    double turning = 0.0;
    for (Dart e : boundary) {
        position += m.lengths[e] * std::polar(1.0, heading);
        const double exterior = kPi - m.angles[cs.rho2()[e]];
        heading += exterior;
        turning += exterior;
    }
    return {position, reduce_angle(turning - 2.0 * kPi)};
}

double cone_angle(const Dessin& d, const MetricData& m, CellIndex vertex) {
    check_sizes(d, m);
    CellStructure cs(d);
    if (vertex.kind != CellKind::vertex || vertex.id >= cs.count(CellKind::vertex)) {
        throw InvalidArgument("vertex index " + std::to_string(vertex.id) + " out of range");
    }
    double total = 0.0;
    for (Dart e : cs.orbits(CellKind::vertex)[vertex.id]) total += m.angles[e];
    return total;
}

}  // namespace origami
