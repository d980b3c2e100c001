#pragma once

/**
 * @file csmap.hpp
 * @brief Schwarz-Christoffel maps of the half-plane onto triangles.
 *
 * The basic object is the incomplete integral
 *
 *     I(a, b; t) = int_0^t w^(a-1) (1-w)^(b-1) dw
 *
 * along the straight segment from 0 to t. The argument of w is constant
 * along the segment and equals arg t taken in [-pi, pi), so the negative
 * real axis is reached from the lower half-plane. The argument of 1 - w is
 * principal. With these branches the normalized map
 *
 *     F(t) = prefactor * I(a, b; t) / I(a, b; 1)
 *
 * sends the closed lower half-plane onto a triangle with angles a*pi at
 * F(0) = 0, b*pi at F(1) = prefactor and (1 - a - b)*pi at F(infinity).
 */

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "origami/errors.hpp"

namespace origami {

using Complex = std::complex<double>;

enum class CsMapName { square_cell, triangle_coord, square_coord, custom };

struct CsMapSpec {
    double a;
    double b;
    Complex prefactor;
    CsMapName name = CsMapName::custom;

    /// Quarter of a unit square: A = 0, D = i, center (1 + i) / 2.
    static CsMapSpec square_cell() { return {0.25, 0.25, {0.0, 1.0}, CsMapName::square_cell}; }
    /// Flag triangle of the barycentric subdivision of an equilateral triangle.
    static CsMapSpec triangle_coord() { return {1.0 / 6.0, 0.5, {1.0, 0.0}, CsMapName::triangle_coord}; }
    static CsMapSpec square_coord() { return {0.25, 0.5, {1.0, 0.0}, CsMapName::square_coord}; }
};

std::string_view to_string(CsMapName name);
std::optional<CsMapSpec> spec_by_name(std::string_view name);

struct QuadratureConfig {
    std::size_t node_count = 32;
    double target_rel_error = 1e-12;
    std::size_t max_path_splits = 400;

    /// Throws InvalidArgument unless node_count >= 2, target_rel_error >= 1e-13
    /// and max_path_splits >= 1.
    void validate() const;
};

struct IntegralResult {
    Complex value;
    double error_estimate;  // absolute
    std::size_t panels;
};

/// Requires 0 < a <= 1, 0 < b <= 1. Throws CutCrossing for real t > 1 and
/// NonConvergence when the split budget runs out.
IntegralResult incomplete_cs_integral_detailed(double a, double b, Complex t, const QuadratureConfig& cfg = {});
Complex incomplete_cs_integral(double a, double b, Complex t, const QuadratureConfig& cfg = {});

/// I(a, b; 1), cached per (a, b).
double complete_beta(double a, double b);

Complex cs_map(const CsMapSpec& spec, Complex t, const QuadratureConfig& cfg = {});

/// prefactor * t^(a-1) (1-t)^(b-1) / I(a, b; 1). Throws SingularPoint at 0
/// and 1.
Complex cs_map_derivative(const CsMapSpec& spec, Complex t);

/// Images of 0, 1 and infinity. Requires a + b < 1.
std::array<Complex, 3> image_triangle(const CsMapSpec& spec);

bool in_image_triangle(const CsMapSpec& spec, Complex z, double tolerance = 1e-12);

/// Preimage in the closed lower half-plane with |F(t) - z| <= 1e-10.
/// Throws OutsideImage, or NonConvergence when z is the image of infinity
/// or Newton fails from every seed.
Complex invert_cs_map(const CsMapSpec& spec, Complex z, const QuadratureConfig& cfg = {});

/// Equilateral-flag coordinate to square coordinate; fixes 0 and 1.
Complex triangle_to_square(Complex z, const QuadratureConfig& cfg = {});

}  // namespace origami
