#pragma once

/**
 * @file tiling.hpp
 * @brief Square-tiled surfaces and their tricolored diagonal subdivision.
 *
 * Faces of a square tiling are traversed counterclockwise by rho2. The
 * diagonal subdivision adds a center vertex (label infinity) to every
 * square and cuts it into four triangles. Canonical colors: square sides
 * are blue (zero-one), half-diagonals at zero corners red (infinity-zero),
 * half-diagonals at one corners green (one-infinity). A triangle is white
 * when its boundary reads zero, one, infinity counterclockwise.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "origami/cartography.hpp"

namespace origami {

enum class EdgeColor { blue, green, red };
enum class FaceShade { white, black };
enum class VertexLabel { zero, one, infinity };

const char* to_string(EdgeColor c);
const char* to_string(FaceShade s);
const char* to_string(VertexLabel l);

/// Maps are indexed by the dense orbit ids of `base` (see CellStructure).
struct TricoloredDessin {
    Dessin base;
    std::vector<EdgeColor> edge_color;
    std::vector<FaceShade> face_shade;
    std::vector<VertexLabel> vertex_label;
};

/// Origami from the right-neighbour and top-neighbour permutations of the
/// squares. Square i owns darts 4i (bottom), 4i+1 (right), 4i+2 (top),
/// 4i+3 (left).
Dessin origami(const Permutation& right, const Permutation& up);

bool is_square_tiling(const Dessin& d);

/// Per-vertex labels, zero or one, adjacent corners differ. Vertex 0 gets zero.
std::vector<VertexLabel> corner_bipartition(const Dessin& d);

/// Every square becomes a 2x2 block of squares.
Dessin refine_2x2(const Dessin& d);

TricoloredDessin diagonal_subdivision(const Dessin& d, const std::vector<VertexLabel>& corner_labels);

enum class TricolorRule {
    malformed,
    two_colors_at_vertex,      // (0)
    distinct_edge_endpoints,   // (1)
    three_colors_per_face,     // (2)
    checkerboard,
    label_compatibility,
};

const char* to_string(TricolorRule rule);

struct TricolorViolation {
    TricolorRule rule;
    CellIndex cell;
    std::string message;
};

std::vector<TricolorViolation> validate_tricoloring(const TricoloredDessin& t);

/// Throws InvalidTricoloring carrying the first violation.
void require_valid_tricoloring(const TricoloredDessin& t);

}  // namespace origami
