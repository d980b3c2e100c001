#pragma once

/**
 * @file document.hpp
 * @brief Versioned text form of a dessin with optional metric and colors.
 *
 *     {
 *       "format_version": "dessin/1",
 *       "n_darts": 4,
 *       "rho0": [1,2,3,0],
 *       "rho1": [2,3,0,1],
 *       "metric": {"lengths": [...], "angles": [...]},
 *       "colors": {"edge_color": [...], "face_shade": [...], "vertex_label": [...]}
 *     }
 *
 * Parsing is strict: unknown keys, wrong types and out-of-range entries are
 * rejected with the JSON pointer of the offending value. Color maps are
 * indexed by orbit id (orbits ordered by their smallest dart).
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "origami/cartography.hpp"
#include "origami/metric.hpp"
#include "origami/tiling.hpp"

namespace origami {

inline constexpr std::string_view kFormatVersion = "dessin/1";

struct ColorBlock {
    std::vector<EdgeColor> edge_color;
    std::vector<FaceShade> face_shade;
    std::vector<VertexLabel> vertex_label;
};

struct DessinDocument {
    Dessin dessin;
    std::optional<MetricData> metric;
    std::optional<ColorBlock> colors;
};

/// Throws ParseError.
DessinDocument parse_document(std::string_view text);
std::string serialize_document(const DessinDocument& doc);

DessinDocument make_document(const Dessin& d);
DessinDocument make_document(const TricoloredDessin& t);

/// Throws ParseError when the document has no colors block.
TricoloredDessin tricolored_from(const DessinDocument& doc);

}  // namespace origami
