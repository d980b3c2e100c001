#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "origami/cartography.hpp"
#include "origami/errors.hpp"
#include "support/fixtures.hpp"

using namespace origami;

namespace {

// Independent orbit counter: repeated application from every unseen dart.
std::size_t cycle_count(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::size_t n = 0;
    for (Dart s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        ++n;
        for (Dart x = s; !seen[x]; x = p[x]) seen[x] = true;
    }
    return n;
}

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == k; });
}

// Brute force isomorphism by trying every relabeling.
bool brute_isomorphic(const Dessin& a, const Dessin& b) {
    if (a.n_darts() != b.n_darts()) return false;
    Permutation p(a.n_darts());
    std::iota(p.begin(), p.end(), Dart{0});
    do {
        if (relabel(a, p) == b) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST_CASE("permutation helpers") {
    const Permutation p = {1, 2, 0};
    const Permutation q = {0, 2, 1};
    const Permutation pq = compose(p, q);
    for (Dart x = 0; x < 3; ++x) CHECK(pq[x] == p[q[x]]);
    CHECK(compose(p, inverse(p)) == identity_permutation(3));
    CHECK(is_bijection(p));
    CHECK_FALSE(is_bijection(Permutation{0, 0, 1}));
}

TEST_CASE("construction rejects malformed arrays") {
    CHECK_THROWS_AS(Dessin({}, {}), MalformedInput);
    CHECK_THROWS_AS(Dessin({0, 1}, {1}), MalformedInput);
    CHECK_THROWS_AS(Dessin({0, 2}, {1, 0}), MalformedInput);
}

TEST_CASE("validate") {
    SUBCASE("one-square torus is valid") { CHECK(validate(fixtures::one_square_torus()).empty()); }
    SUBCASE("identity rho1 has fixed points") {
        const auto vs = validate(Dessin({1, 0}, {0, 1}));
        REQUIRE_FALSE(vs.empty());
        CHECK(has_kind(vs, ViolationKind::rho1_fixed_point));
        CHECK(std::string(to_string(ViolationKind::rho1_fixed_point)) == "rho1 has fixed points");
    }
    SUBCASE("disjoint union is not transitive") {
        const auto vs = validate(Dessin({1, 0, 3, 2}, {1, 0, 3, 2}));
        REQUIRE(vs.size() == 1);
        CHECK(vs[0].kind == ViolationKind::not_transitive);
        CHECK(vs[0].dart == 2);
        CHECK(std::string(to_string(ViolationKind::not_transitive)) == "not transitive");
    }
    SUBCASE("non-bijection and non-involution") {
        auto vs = validate(Dessin({0, 0}, {1, 0}));
        CHECK(has_kind(vs, ViolationKind::rho0_not_bijection));
        vs = validate(Dessin({0, 1, 2}, {1, 2, 0}));
        CHECK(has_kind(vs, ViolationKind::rho1_not_involution));
        CHECK_THROWS_AS(require_valid(Dessin({0, 1, 2}, {1, 2, 0})), InvalidDessin);
    }
}

TEST_CASE("cell counts of fixtures") {
    struct Case {
        Dessin d;
        CellCounts c;
        std::size_t genus;
    };
    const std::vector<Case> cases = {
        {fixtures::tetrahedron(), {4, 6, 4}, 0},
        {fixtures::one_square_torus(), {1, 2, 1}, 1},
        {fixtures::single_edge(), {2, 1, 1}, 0},
        {fixtures::loop_on_sphere(), {1, 1, 2}, 0},
        {fixtures::octahedron(), {6, 12, 8}, 0},
        {fixtures::grid_torus(2, 2), {4, 8, 4}, 1},
        {fixtures::pillow(), {4, 4, 2}, 0},
    };
    for (const auto& c : cases) {
        const auto got = cell_counts(c.d);
        CHECK(got.vertices == c.c.vertices);
        CHECK(got.edges == c.c.edges);
        CHECK(got.faces == c.c.faces);
        CHECK(euler_genus(c.d) == c.genus);
        CHECK(got.vertices == cycle_count(c.d.rho0()));
        CHECK(got.faces == cycle_count(c.d.rho2()));
    }
    CHECK(fixtures::tetrahedron().n_darts() == 12);
    CHECK(fixtures::octahedron().n_darts() == 24);
}

TEST_CASE("cells partition the darts with dense ids") {
    const Dessin d = fixtures::octahedron();
    for (CellKind k : {CellKind::vertex, CellKind::edge, CellKind::face}) {
        const auto orbits = cells(d, k);
        std::multiset<Dart> all;
        for (std::size_t id = 0; id < orbits.size(); ++id) {
            for (Dart x : orbits[id]) {
                all.insert(x);
                CHECK(dart_cell(d, x, static_cast<int>(k)).id == id);
            }
        }
        CHECK(all.size() == d.n_darts());
        CHECK(std::set<Dart>(all.begin(), all.end()).size() == d.n_darts());
    }
    for (const auto& e : cells(d, CellKind::edge)) CHECK(e.size() == 2);
    CHECK_THROWS_AS(cells(Dessin({1, 0}, {0, 1}), CellKind::vertex), InvalidDessin);
}

TEST_CASE("dart_cell") {
    const Dessin t = fixtures::one_square_torus();
    for (Dart e = 0; e < 4; ++e) CHECK(dart_cell(t, e, 2) == dart_cell(t, 0, 2));
    const Dessin d = fixtures::tetrahedron();
    for (Dart e = 0; e < d.n_darts(); ++e) {
        CHECK(dart_cell(d, e, 0) == dart_cell(d, d.rho0()[e], 0));
        CHECK(dart_cell(d, e, 1) == dart_cell(d, d.rho1()[e], 1));
        CHECK(dart_cell(d, e, 2) == dart_cell(d, d.rho2()[e], 2));
    }
    CHECK_THROWS_AS(dart_cell(d, 12, 0), InvalidArgument);
    CHECK_THROWS_AS(dart_cell(d, 0, 3), InvalidArgument);
}

TEST_CASE("relations on random dessins") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Dessin d = fixtures::random_dessin(20, rng);
        const auto& r0 = d.rho0();
        const auto& r1 = d.rho1();
        const auto r2 = d.rho2();
        for (Dart e = 0; e < d.n_darts(); ++e) {
            CHECK(r1[r1[e]] == e);
            CHECK(r1[e] != e);
            CHECK(r2[r1[r0[e]]] == e);
        }
        const auto c = cell_counts(d);
        const long chi = static_cast<long>(c.vertices) - static_cast<long>(c.edges) + static_cast<long>(c.faces);
        CHECK(chi == 2 - 2 * static_cast<long>(euler_genus(d)));
        CHECK(Dessin::from_faces(r1, r2) == d);
    }
}

TEST_CASE("canonical code is relabeling invariant") {
    std::mt19937_64 rng(5);
    const std::vector<Dessin> ds = {fixtures::tetrahedron(), fixtures::octahedron(), fixtures::one_square_torus(),
                                    fixtures::grid_torus(2, 2), fixtures::pillow(), fixtures::single_edge()};
    for (const auto& d : ds) {
        const auto code = canonical_code(d);
        for (int i = 0; i < 100; ++i) {
            const Dessin r = relabel(d, fixtures::random_permutation(d.n_darts(), rng));
            CHECK(canonical_code(r) == code);
            CHECK(is_isomorphic(d, r));
        }
    }
}

TEST_CASE("is_isomorphic distinguishes") {
    CHECK_FALSE(is_isomorphic(fixtures::one_square_torus(), fixtures::single_edge()));
    CHECK_FALSE(is_isomorphic(fixtures::tetrahedron(), fixtures::grid_torus(3, 1)));

    const Dessin cyl = fixtures::two_square_cylinder();
    const Dessin ell = fixtures::two_square_l();
    CHECK_FALSE(is_isomorphic(cyl, ell));
    CHECK_FALSE(brute_isomorphic(cyl, ell));
    CHECK(brute_isomorphic(cyl, cyl));
}

TEST_CASE("canonical code agrees with brute force on small random dessins") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        const Dessin a = fixtures::random_dessin(3, rng);
        const Dessin b = fixtures::random_dessin(3, rng);
        CHECK(is_isomorphic(a, b) == brute_isomorphic(a, b));
    }
}
