#include "origami/tiling.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace origami {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct FacePosition {
    std::size_t face;
    std::size_t slot;
};

// Position of every dart inside its face cycle, counted from the face's smallest dart.
std::vector<FacePosition> face_positions(const CellStructure& cs, std::size_t n_darts) {
    std::vector<FacePosition> pos(n_darts);
    const auto& faces = cs.orbits(CellKind::face);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        for (std::size_t k = 0; k < faces[f].size(); ++k) pos[faces[f][k]] = {f, k};
    }
    return pos;
}

void require_square_tiling(const CellStructure& cs) {
    const auto& faces = cs.orbits(CellKind::face);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (faces[f].size() != 4) {
            throw NotSquareTiling("face " + std::to_string(f) + " has degree " + std::to_string(faces[f].size()));
        }
    }
}

std::string cell_name(CellKind kind, std::size_t id) { return std::string(to_string(kind)) + " " + std::to_string(id); }

}  // namespace

const char* to_string(EdgeColor c) {
    switch (c) {
        case EdgeColor::blue: return "blue";
        case EdgeColor::green: return "green";
        case EdgeColor::red: return "red";
    }
    return "?";
}

const char* to_string(FaceShade s) { return s == FaceShade::white ? "white" : "black"; }

const char* to_string(VertexLabel l) {
    switch (l) {
        case VertexLabel::zero: return "zero";
        case VertexLabel::one: return "one";
        case VertexLabel::infinity: return "infinity";
    }
    return "?";
}

const char* to_string(TricolorRule rule) {
    switch (rule) {
        case TricolorRule::malformed: return "malformed";
        case TricolorRule::two_colors_at_vertex: return "(0) vertex not incident to exactly two colors";
        case TricolorRule::distinct_edge_endpoints: return "(1) edge without two distinct vertices";
        case TricolorRule::three_colors_per_face: return "(2) face edges not pairwise differently colored";
        case TricolorRule::checkerboard: return "checkerboard";
        case TricolorRule::label_compatibility: return "label compatibility";
    }
    return "?";
}

Dessin origami(const Permutation& right, const Permutation& up) {
    if (right.size() != up.size() || right.empty()) throw MalformedInput("origami: permutations must have equal positive size");
    if (!is_bijection(right) || !is_bijection(up)) throw MalformedInput("origami: gluings must be permutations");
    const std::size_t n = right.size();
    const Permutation down = inverse(up);
    Permutation rho1(4 * n), rho2(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < 4; ++k) rho2[4 * i + k] = 4 * i + (k + 1) % 4;
        rho1[4 * i] = 4 * down[i] + 2;
        rho1[4 * down[i] + 2] = 4 * i;
        rho1[4 * i + 1] = 4 * right[i] + 3;
        rho1[4 * right[i] + 3] = 4 * i + 1;
    }
    return Dessin::from_faces(std::move(rho1), rho2);
}

bool is_square_tiling(const Dessin& d) {
    CellStructure cs(d);
    const auto& faces = cs.orbits(CellKind::face);
    return std::all_of(faces.begin(), faces.end(), [](const auto& f) { return f.size() == 4; });
}

std::vector<VertexLabel> corner_bipartition(const Dessin& d) {
    CellStructure cs(d);
    require_square_tiling(cs);
    const std::size_t nv = cs.count(CellKind::vertex);
    std::vector<int> color(nv, -1);
    std::vector<std::size_t> parent(nv, kNone), depth(nv, 0);
    std::deque<std::size_t> queue;
    for (std::size_t root = 0; root < nv; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (Dart e : cs.orbits(CellKind::vertex)[u]) {
                const std::size_t v = cs.cell_of(d.rho1()[e], CellKind::vertex);
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // root .. u, v .. root has odd length
                    std::vector<std::size_t> up_u, up_v;
                    for (std::size_t x = u; x != kNone; x = parent[x]) up_u.push_back(x);
                    for (std::size_t x = v; x != kNone; x = parent[x]) up_v.push_back(x);
                    std::vector<std::size_t> walk(up_u.rbegin(), up_u.rend());
                    walk.insert(walk.end(), up_v.begin(), up_v.end());
                    throw NonBipartite("corner graph is not bipartite: vertices " + std::to_string(u) + " and " +
                                           std::to_string(v) + " are adjacent with equal parity",
                                       std::move(walk));
                }
            }
        }
    }
    std::vector<VertexLabel> out(nv);
    for (std::size_t v = 0; v < nv; ++v) out[v] = color[v] == 0 ? VertexLabel::zero : VertexLabel::one;
    return out;
}

Dessin refine_2x2(const Dessin& d) {
    CellStructure cs(d);
    require_square_tiling(cs);
    const auto pos = face_positions(cs, d.n_darts());
    const std::size_t nf = cs.count(CellKind::face);

    // sub-square q = 2y + x; sides 0 bottom, 1 right, 2 top, 3 left
    auto dart_of = [](std::size_t f, std::size_t q, std::size_t side) { return 16 * f + 4 * q + side; };
    // halves of old side k, in traversal order: {sub-square, side}
    static constexpr std::array<std::array<std::pair<std::size_t, std::size_t>, 2>, 4> halves{{
        {{{0, 0}, {1, 0}}},
        {{{1, 1}, {3, 1}}},
        {{{3, 2}, {2, 2}}},
        {{{2, 3}, {0, 3}}},
    }};

    Permutation rho1(16 * nf), rho2(16 * nf);
    auto pair_up = [&](Dart a, Dart b) {
        rho1[a] = b;
        rho1[b] = a;
    };
    for (std::size_t f = 0; f < nf; ++f) {
        for (std::size_t q = 0; q < 4; ++q) {
            for (std::size_t s = 0; s < 4; ++s) rho2[dart_of(f, q, s)] = dart_of(f, q, (s + 1) % 4);
        }
        pair_up(dart_of(f, 0, 1), dart_of(f, 1, 3));
        pair_up(dart_of(f, 2, 1), dart_of(f, 3, 3));
        pair_up(dart_of(f, 0, 2), dart_of(f, 2, 0));
        pair_up(dart_of(f, 1, 2), dart_of(f, 3, 0));
    }
    for (Dart e = 0; e < d.n_darts(); ++e) {
        const Dart r = d.rho1()[e];
        const auto [f, k] = pos[e];
        const auto [g, m] = pos[r];
        const auto [q0, s0] = halves[k][0];
        const auto [q1, s1] = halves[m][1];
        pair_up(dart_of(f, q0, s0), dart_of(g, q1, s1));
    }
    return Dessin::from_faces(std::move(rho1), rho2);
}

TricoloredDessin diagonal_subdivision(const Dessin& d, const std::vector<VertexLabel>& corner_labels) {
    CellStructure cs(d);
    require_square_tiling(cs);
    const std::size_t nv = cs.count(CellKind::vertex);
    if (corner_labels.size() != nv) {
        throw InconsistentLabels("expected " + std::to_string(nv) + " corner labels, got " +
                                 std::to_string(corner_labels.size()));
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (corner_labels[v] == VertexLabel::infinity) {
            throw InconsistentLabels("corner " + std::to_string(v) + " labeled infinity");
        }
    }
    for (Dart e = 0; e < d.n_darts(); ++e) {
        const std::size_t u = cs.cell_of(e, CellKind::vertex);
        const std::size_t v = cs.cell_of(d.rho1()[e], CellKind::vertex);
        if (corner_labels[u] == corner_labels[v]) {
            throw InconsistentLabels("adjacent corners " + std::to_string(u) + " and " + std::to_string(v) +
                                     " share label " + to_string(corner_labels[u]));
        }
    }

    const auto pos = face_positions(cs, d.n_darts());
    const std::size_t nf = cs.count(CellKind::face);
    const auto& faces = cs.orbits(CellKind::face);
    // triangle k of face f spans side k and the center: darts side (P_k -> P_k+1),
    // up (P_k+1 -> O), down (O -> P_k)
    auto dart_of = [](std::size_t f, std::size_t k, std::size_t j) { return 12 * f + 3 * k + j; };

    const std::size_t n = 12 * nf;
    Permutation rho1(n), rho2(n);
    std::vector<VertexLabel> dart_origin_label(n);
    std::vector<EdgeColor> dart_color(n);
    std::vector<FaceShade> dart_shade(n);
    auto diagonal_color = [](VertexLabel corner) { return corner == VertexLabel::zero ? EdgeColor::red : EdgeColor::green; };

    for (std::size_t f = 0; f < nf; ++f) {
        for (std::size_t k = 0; k < 4; ++k) {
            const Dart side = faces[f][k];
            const VertexLabel here = corner_labels[cs.cell_of(side, CellKind::vertex)];
            const VertexLabel next = corner_labels[cs.cell_of(faces[f][(k + 1) % 4], CellKind::vertex)];
            const Dart s = dart_of(f, k, 0), u = dart_of(f, k, 1), w = dart_of(f, k, 2);
            rho2[s] = u;
            rho2[u] = w;
            rho2[w] = s;
            const auto [g, m] = pos[d.rho1()[side]];
            rho1[s] = dart_of(g, m, 0);
            rho1[u] = dart_of(f, (k + 1) % 4, 2);
            rho1[w] = dart_of(f, (k + 3) % 4, 1);

            dart_origin_label[s] = here;
            dart_origin_label[u] = next;
            dart_origin_label[w] = VertexLabel::infinity;
            dart_color[s] = EdgeColor::blue;
            dart_color[u] = diagonal_color(next);
            dart_color[w] = diagonal_color(here);
            const FaceShade shade = here == VertexLabel::zero ? FaceShade::white : FaceShade::black;
            dart_shade[s] = dart_shade[u] = dart_shade[w] = shade;
        }
    }

    Dessin base = Dessin::from_faces(std::move(rho1), rho2);
    CellStructure out_cs(base);
    TricoloredDessin out{base, std::vector<EdgeColor>(out_cs.count(CellKind::edge)),
                         std::vector<FaceShade>(out_cs.count(CellKind::face)),
                         std::vector<VertexLabel>(out_cs.count(CellKind::vertex))};
    for (Dart e = 0; e < n; ++e) {
        out.edge_color[out_cs.cell_of(e, CellKind::edge)] = dart_color[e];
        out.face_shade[out_cs.cell_of(e, CellKind::face)] = dart_shade[e];
        out.vertex_label[out_cs.cell_of(e, CellKind::vertex)] = dart_origin_label[e];
    }
    return out;
}

std::vector<TricolorViolation> validate_tricoloring(const TricoloredDessin& t) {
    std::vector<TricolorViolation> out;
    if (!is_valid(t.base)) {
        out.push_back({TricolorRule::malformed, {CellKind::vertex, 0}, "base dessin is invalid"});
        return out;
    }
    CellStructure cs(t.base);
    const std::size_t nv = cs.count(CellKind::vertex), ne = cs.count(CellKind::edge), nf = cs.count(CellKind::face);
    if (t.vertex_label.size() != nv || t.edge_color.size() != ne || t.face_shade.size() != nf) {
        out.push_back({TricolorRule::malformed, {CellKind::vertex, 0},
                       "color maps must have sizes V=" + std::to_string(nv) + " E=" + std::to_string(ne) +
                           " F=" + std::to_string(nf)});
        return out;
    }
    const auto& rho1 = t.base.rho1();
    auto edge_color = [&](Dart e) { return t.edge_color[cs.cell_of(e, CellKind::edge)]; };

    for (std::size_t v = 0; v < nv; ++v) {
        std::set<EdgeColor> seen;
        for (Dart e : cs.orbits(CellKind::vertex)[v]) seen.insert(edge_color(e));
        if (seen.size() != 2) {
            out.push_back({TricolorRule::two_colors_at_vertex, {CellKind::vertex, v},
                           cell_name(CellKind::vertex, v) + " sees " + std::to_string(seen.size()) + " colors"});
        }
    }
    for (std::size_t ed = 0; ed < ne; ++ed) {
        const Dart e = cs.orbits(CellKind::edge)[ed][0];
        if (cs.cell_of(e, CellKind::vertex) == cs.cell_of(rho1[e], CellKind::vertex)) {
            out.push_back({TricolorRule::distinct_edge_endpoints, {CellKind::edge, ed},
                           cell_name(CellKind::edge, ed) + " is a loop"});
        }
    }
    for (std::size_t f = 0; f < nf; ++f) {
        const auto& boundary = cs.orbits(CellKind::face)[f];
        std::set<EdgeColor> colors;
        std::set<std::size_t> edges;
        for (Dart e : boundary) {
            colors.insert(edge_color(e));
            edges.insert(cs.cell_of(e, CellKind::edge));
        }
        if (boundary.size() != 3 || edges.size() != 3 || colors.size() != 3) {
            out.push_back({TricolorRule::three_colors_per_face, {CellKind::face, f},
                           cell_name(CellKind::face, f) + " has " + std::to_string(edges.size()) + " edges in " +
                               std::to_string(colors.size()) + " colors"});
        }
    }
    for (std::size_t ed = 0; ed < ne; ++ed) {
        const Dart e = cs.orbits(CellKind::edge)[ed][0];
        if (t.face_shade[cs.cell_of(e, CellKind::face)] == t.face_shade[cs.cell_of(rho1[e], CellKind::face)]) {
            out.push_back({TricolorRule::checkerboard, {CellKind::edge, ed},
                           "faces on both sides of " + cell_name(CellKind::edge, ed) + " share a shade"});
        }
    }

    // Each color must join one fixed unordered pair of distinct labels; the
    // expected pair of a color is the one most of its edges use.
    using LabelPair = std::pair<VertexLabel, VertexLabel>;
    std::vector<LabelPair> edge_pair(ne);
    std::map<EdgeColor, std::map<LabelPair, std::size_t>> votes;
    for (std::size_t ed = 0; ed < ne; ++ed) {
        const Dart e = cs.orbits(CellKind::edge)[ed][0];
        VertexLabel a = t.vertex_label[cs.cell_of(e, CellKind::vertex)];
        VertexLabel b = t.vertex_label[cs.cell_of(rho1[e], CellKind::vertex)];
        if (b < a) std::swap(a, b);
        edge_pair[ed] = {a, b};
        ++votes[t.edge_color[ed]][edge_pair[ed]];
    }
    std::map<EdgeColor, LabelPair> expected;
    std::set<LabelPair> used;
    for (const auto& [color, tally] : votes) {
        auto best = std::max_element(tally.begin(), tally.end(),
                                     [](const auto& x, const auto& y) { return x.second < y.second; });
        expected[color] = best->first;
        if (!used.insert(best->first).second) {
            out.push_back({TricolorRule::label_compatibility, {CellKind::edge, 0},
                           std::string("two colors join the same label pair (") + to_string(color) + ")"});
        }
    }
    for (std::size_t ed = 0; ed < ne; ++ed) {
        const auto& pr = edge_pair[ed];
        if (pr.first == pr.second || pr != expected[t.edge_color[ed]]) {
            out.push_back({TricolorRule::label_compatibility, {CellKind::edge, ed},
                           cell_name(CellKind::edge, ed) + " (" + to_string(t.edge_color[ed]) + ") joins " +
                               to_string(pr.first) + "-" + to_string(pr.second)});
        }
    }
    return out;
}

void require_valid_tricoloring(const TricoloredDessin& t) {
    auto v = validate_tricoloring(t);
    if (!v.empty()) throw InvalidTricoloring(std::string(to_string(v.front().rule)) + ": " + v.front().message);
}

}  // namespace origami
