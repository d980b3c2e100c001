#pragma once

/**
 * @file metric.hpp
 * @brief Piecewise-euclidean structures on a dessin.
 *
 * Each dart carries a length and a corner angle. The angle of a dart is the
 * corner swept counterclockwise from the dart to rho0 of the dart at its
 * origin vertex. Normalized per-dart coordinates are related by
 *
 *     z_{rho0 e} = exp(i angle(e)) z_e,     z_{rho1 e} = length(e) - z_e.
 */

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "origami/cartography.hpp"

namespace origami {

using Complex = std::complex<double>;

struct MetricData {
    std::vector<double> lengths;
    std::vector<double> angles;
};

/// Reports darts whose length or angle is out of range and edges whose two
/// darts disagree on the length. Empty means consistent.
std::vector<std::string> validate_metric(const Dessin& d, const MetricData& m);

/// Unit lengths, angle pi/3. Throws FaceDegreeMismatch unless every face is a triangle.
MetricData equilateral_structure(const Dessin& d);
/// Unit lengths, angle pi/2. Throws FaceDegreeMismatch unless every face is a quadrilateral.
MetricData square_structure(const Dessin& d);

/// z -> a z + b
struct AffineChart {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    Complex operator()(Complex z) const { return a * z + b; }
    /// (this after other)(z) = this(other(z))
    AffineChart after(const AffineChart& other) const { return {a * other.a, a * other.b + b}; }
};

enum class Generator { rho0, rho1, rho0_inv };

/// Written left to right, applied right to left.
using Word = std::vector<Generator>;

/// Parses whitespace separated tokens `r0`, `r1`, `r0^-1` (also `rho0`,
/// `rho1`, `rho0^-1`). Throws InvalidWord on anything else.
Word parse_word(std::string_view text);

/// Affine map taking the normalized coordinate of `dart` to that of the dart
/// reached by applying `word`.
AffineChart chart_transition(const Dessin& d, const MetricData& m, Dart dart, const Word& word);
Dart apply_word(const Dessin& d, Dart dart, const Word& word);

struct ClosureResidual {
    Complex position;
    double heading;  // reduced to (-pi, pi]
};

/// Walks the boundary of a face counterclockwise and reports how far the
/// polygon fails to close.
ClosureResidual face_closure_residual(const Dessin& d, const MetricData& m, CellIndex face);

/// Total angle around a vertex.
double cone_angle(const Dessin& d, const MetricData& m, CellIndex vertex);

}  // namespace origami
