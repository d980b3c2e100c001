#pragma once
// Shared test fixtures and independent oracles.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "origami/cartography.hpp"
#include "origami/tiling.hpp"

namespace fixtures {

using origami::Dart;
using origami::Dessin;
using origami::Permutation;

struct PolygonSurface {
    Dessin dessin;
    std::vector<int> origin;  // polygon vertex each dart starts at
};

// Closed oriented surface from polygons listed by vertex. Every directed
// side (u, v) must occur once and be matched by (v, u) in some other face.
inline PolygonSurface from_polygons(const std::vector<std::vector<int>>& faces) {
    std::map<std::pair<int, int>, Dart> dart_of;
    std::vector<int> origin;
    Permutation rho2;
    for (const auto& f : faces) {
        const Dart base = origin.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            dart_of[{f[i], f[(i + 1) % f.size()]}] = base + i;
            origin.push_back(f[i]);
            rho2.push_back(base + (i + 1) % f.size());
        }
    }
    Permutation rho1(origin.size());
    for (const auto& [uv, d] : dart_of) rho1[d] = dart_of.at({uv.second, uv.first});
    return {Dessin::from_faces(rho1, rho2), origin};
}

inline PolygonSurface tetrahedron_surface() {
    return from_polygons({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

inline Dessin tetrahedron() { return tetrahedron_surface().dessin; }

// Vertices 2k, 2k+1 are +e_k, -e_k. One face per octant.
inline std::pair<PolygonSurface, std::vector<int>> octahedron_with_signs() {
    std::vector<std::vector<int>> faces;
    std::vector<int> sign;
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            for (int sz : {1, -1}) {
                const int x = sx > 0 ? 0 : 1, y = sy > 0 ? 2 : 3, z = sz > 0 ? 4 : 5;
                const int s = sx * sy * sz;
                faces.push_back(s > 0 ? std::vector<int>{x, y, z} : std::vector<int>{x, z, y});
                sign.push_back(s);
            }
        }
    }
    return {from_polygons(faces), sign};
}

inline Dessin octahedron() { return octahedron_with_signs().first.dessin; }

// The octahedron with axis labels x -> zero, y -> one, z -> infinity and
// faces shaded by octant parity.
inline origami::TricoloredDessin tricolored_octahedron() {
    using namespace origami;
    auto [surface, sign] = octahedron_with_signs();
    const Dessin& d = surface.dessin;
    CellStructure cs(d);
    auto label_of = [&](Dart e) { return static_cast<VertexLabel>(surface.origin[e] / 2); };
    TricoloredDessin t{d, {}, {}, {}};
    t.vertex_label.resize(cs.count(CellKind::vertex));
    t.edge_color.resize(cs.count(CellKind::edge));
    t.face_shade.resize(cs.count(CellKind::face));
    for (Dart e = 0; e < d.n_darts(); ++e) {
        t.vertex_label[cs.cell_of(e, CellKind::vertex)] = label_of(e);
        const auto a = label_of(e), b = label_of(d.rho1()[e]);
        const bool has0 = a == VertexLabel::zero || b == VertexLabel::zero;
        const bool has1 = a == VertexLabel::one || b == VertexLabel::one;
        t.edge_color[cs.cell_of(e, CellKind::edge)] =
            has0 && has1 ? EdgeColor::blue : (has0 ? EdgeColor::red : EdgeColor::green);
        t.face_shade[cs.cell_of(e, CellKind::face)] = sign[e / 3] > 0 ? FaceShade::white : FaceShade::black;
    }
    return t;
}

// One edge with two distinct endpoints on the sphere.
inline Dessin single_edge() { return Dessin({0, 1}, {1, 0}); }

// rho0 = rho1 = the swap: one vertex, one loop edge, two faces.
inline Dessin loop_on_sphere() { return Dessin({1, 0}, {1, 0}); }

inline Dessin one_square_torus() { return origami::origami({0}, {0}); }

// n x m grid on the torus, square index i = x + n*y.
inline Dessin grid_torus(std::size_t n, std::size_t m) {
    Permutation right(n * m), up(n * m);
    for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
            right[x + n * y] = (x + 1) % n + n * y;
            up[x + n * y] = x + n * ((y + 1) % m);
        }
    }
    return origami::origami(right, up);
}

// Two squares glued along their whole boundary: a sphere.
inline Dessin pillow() { return from_polygons({{0, 1, 2, 3}, {0, 3, 2, 1}}).dessin; }

// Horizontal 2-cylinder and the L-shaped gluing.
inline Dessin two_square_cylinder() { return origami::origami({1, 0}, {0, 1}); }
inline Dessin two_square_l() { return origami::origami({1, 0}, {1, 0}); }

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), Dart{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Random fixed-point-free involution on 2k darts.
inline Permutation random_matching(std::size_t k, std::mt19937_64& rng) {
    const Permutation order = random_permutation(2 * k, rng);
    Permutation r(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        r[order[2 * i]] = order[2 * i + 1];
        r[order[2 * i + 1]] = order[2 * i];
    }
    return r;
}

// Rejection sampling of transitive pairs with 2 to 2*max_edges darts.
inline Dessin random_dessin(std::size_t max_edges, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> edges(1, max_edges);
    for (;;) {
        const std::size_t k = edges(rng);
        Dessin d(random_permutation(2 * k, rng), random_matching(k, rng));
        if (origami::is_valid(d)) return d;
    }
}

inline Dessin random_origami(std::size_t max_squares, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> squares(1, max_squares);
    for (;;) {
        const std::size_t n = squares(rng);
        Dessin d = origami::origami(random_permutation(n, rng), random_permutation(n, rng));
        if (origami::is_valid(d)) return d;
    }
}

// Lanczos approximation, g = 7, nine coefficients; about 15 digits for x > 0.
inline double lanczos_gamma(double x) {
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double pi = 3.14159265358979323846;
    if (x < 0.5) return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
    x -= 1.0;
    double a = c[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
    return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

inline double beta_oracle(double a, double b) {
    return lanczos_gamma(a) * lanczos_gamma(b) / lanczos_gamma(a + b);
}

}  // namespace fixtures
