#include "origami/belyi.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace origami {

namespace {

std::vector<long long> multiply(const std::vector<long long>& p, const std::vector<long long>& q) {
    std::vector<long long> out(p.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    return out;
}

std::vector<long long> scale(std::vector<long long> p, long long c) {
    for (auto& x : p) x *= c;
    return p;
}

std::string format_parts(const std::vector<std::size_t>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + "]";
}

}  // namespace

QuadraticRational QuadraticRational::primitive_sixth_root() { return {Rational(1, 2), Rational(1, 2)}; }

Complex QuadraticRational::to_complex() const {
    return {a_.convert_to<double>(), b_.convert_to<double>() * std::sqrt(3.0)};
}

QuadraticRational operator+(const QuadraticRational& x, const QuadraticRational& y) {
    return {Rational(x.a_ + y.a_), Rational(x.b_ + y.b_)};
}

QuadraticRational operator-(const QuadraticRational& x, const QuadraticRational& y) {
    return {Rational(x.a_ - y.a_), Rational(x.b_ - y.b_)};
}

QuadraticRational operator*(const QuadraticRational& x, const QuadraticRational& y) {
    return {Rational(x.a_ * y.a_ - 3 * x.b_ * y.b_), Rational(x.a_ * y.b_ + x.b_ * y.a_)};
}

QuadraticRational operator/(const QuadraticRational& x, const QuadraticRational& y) {
    // norm of c + d sqrt(-3) is c^2 + 3 d^2, zero only for y == 0
    const Rational norm = y.a_ * y.a_ + 3 * y.b_ * y.b_;
    if (norm == 0) throw InvalidArgument("division by zero in Q(sqrt(-3))");
    const QuadraticRational conj{y.a_, Rational(-y.b_)};
    const QuadraticRational top = x * conj;
    return {Rational(top.a_ / norm), Rational(top.b_ / norm)};
}

std::ostream& operator<<(std::ostream& os, const QuadraticRational& x) {
    return os << x.a_ << " + " << x.b_ << "*sqrt(-3)";
}

namespace detail {

std::vector<long long> barycentric_numerator() {
    const std::vector<long long> quad{1, -1, 1};  // x^2 - x + 1
    return scale(multiply(multiply(quad, quad), quad), 4);
}

std::vector<long long> barycentric_denominator() {
    const std::vector<long long> x2{0, 0, 1};
    const std::vector<long long> one_minus_x{1, -1};
    return scale(multiply(x2, multiply(one_minus_x, one_minus_x)), 27);
}

std::vector<long long> derivative(const std::vector<long long>& p) {
    if (p.size() <= 1) return {0};
    std::vector<long long> out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = static_cast<long long>(i) * p[i];
    return out;
}

}  // namespace detail

std::string to_string(const Passport& p) {
    return "degree=" + std::to_string(p.degree) + " zero=" + format_parts(p.over_zero) +
           " one=" + format_parts(p.over_one) + " infinity=" + format_parts(p.over_infinity);
}

Passport passport(const TricoloredDessin& t) {
    require_valid_tricoloring(t);
    CellStructure cs(t.base);
    const auto whites = static_cast<std::size_t>(std::count(t.face_shade.begin(), t.face_shade.end(), FaceShade::white));
    const std::size_t blacks = t.face_shade.size() - whites;
    if (whites != blacks) {
        throw InconsistentPassport("unequal shade counts: " + std::to_string(whites) + " white, " +
                                   std::to_string(blacks) + " black");
    }
    Passport p;
    p.degree = whites;
    for (std::size_t v = 0; v < cs.count(CellKind::vertex); ++v) {
        const std::size_t corners = cs.orbits(CellKind::vertex)[v].size();
        if (corners % 2 != 0) throw InconsistentPassport("vertex " + std::to_string(v) + " has an odd number of triangles");
        switch (t.vertex_label[v]) {
            case VertexLabel::zero: p.over_zero.push_back(corners / 2); break;
            case VertexLabel::one: p.over_one.push_back(corners / 2); break;
            case VertexLabel::infinity: p.over_infinity.push_back(corners / 2); break;
        }
    }
    for (auto* parts : {&p.over_zero, &p.over_one, &p.over_infinity}) std::sort(parts->begin(), parts->end(), std::greater<>());
    return p;
}

std::size_t riemann_hurwitz_genus(const Passport& p) {
    if (p.degree == 0) throw InconsistentPassport("degree must be positive");
    long long ramification = 0;
    const std::pair<const char*, const std::vector<std::size_t>*> fibers[] = {
        {"zero", &p.over_zero}, {"one", &p.over_one}, {"infinity", &p.over_infinity}};
    for (const auto& [name, parts] : fibers) {
        std::size_t sum = 0;
        for (std::size_t part : *parts) {
            if (part == 0) throw InconsistentPassport(std::string("zero part over ") + name);
            sum += part;
            ramification += static_cast<long long>(part) - 1;
        }
        if (sum != p.degree) {
            throw InconsistentPassport(std::string("parts over ") + name + " sum to " + std::to_string(sum) +
                                       ", degree is " + std::to_string(p.degree));
        }
    }
    // 2 - 2g = 2 deg - ramification
    const long long twice_g = 2 - 2 * static_cast<long long>(p.degree) + ramification;
    if (twice_g < 0 || twice_g % 2 != 0) {
        throw InconsistentPassport("Riemann-Hurwitz gives 2g = " + std::to_string(twice_g));
    }
    return static_cast<std::size_t>(twice_g / 2);
}

TricoloredDessin barycentric_subdivide(const Dessin& triangulation) {
    CellStructure cs(triangulation);
    const auto& faces = cs.orbits(CellKind::face);
    const std::size_t nf = faces.size();
    std::vector<std::pair<std::size_t, std::size_t>> pos(triangulation.n_darts());
    for (std::size_t f = 0; f < nf; ++f) {
        if (faces[f].size() != 3) {
            throw FaceDegreeMismatch("face " + std::to_string(f) + " has degree " + std::to_string(faces[f].size()) +
                                     ", expected 3");
        }
        for (std::size_t k = 0; k < 3; ++k) pos[faces[f][k]] = {f, k};
    }

    // Side k of a face runs P_k -> P_k+1 with midpoint M_k; C is the barycenter.
    // Slots 0..2: triangle (P_k, M_k, C); slots 3..5: triangle (M_k, P_k+1, C).
    auto dart_of = [](std::size_t f, std::size_t k, std::size_t j) { return 18 * f + 6 * k + j; };
    static constexpr VertexLabel slot_label[6] = {VertexLabel::infinity, VertexLabel::one,      VertexLabel::zero,
                                                  VertexLabel::one,      VertexLabel::infinity, VertexLabel::zero};
    static constexpr EdgeColor slot_color[6] = {EdgeColor::green, EdgeColor::blue, EdgeColor::red,
                                                EdgeColor::green, EdgeColor::red,  EdgeColor::blue};
    // (P, M, C) reads infinity, one, zero counterclockwise; (M, P', C) reads one, infinity, zero.
    static constexpr FaceShade slot_shade[6] = {FaceShade::black, FaceShade::black, FaceShade::black,
                                                FaceShade::white, FaceShade::white, FaceShade::white};

    const std::size_t n = 18 * nf;
    Permutation rho1(n), rho2(n);
    for (std::size_t f = 0; f < nf; ++f) {
        for (std::size_t k = 0; k < 3; ++k) {
            const std::size_t prev = (k + 2) % 3;
            rho2[dart_of(f, k, 0)] = dart_of(f, k, 1);
            rho2[dart_of(f, k, 1)] = dart_of(f, k, 2);
            rho2[dart_of(f, k, 2)] = dart_of(f, k, 0);
            rho2[dart_of(f, k, 3)] = dart_of(f, k, 4);
            rho2[dart_of(f, k, 4)] = dart_of(f, k, 5);
            rho2[dart_of(f, k, 5)] = dart_of(f, k, 3);

            rho1[dart_of(f, k, 1)] = dart_of(f, k, 5);
            rho1[dart_of(f, k, 5)] = dart_of(f, k, 1);
            rho1[dart_of(f, k, 2)] = dart_of(f, prev, 4);
            rho1[dart_of(f, prev, 4)] = dart_of(f, k, 2);

            const auto [g, m] = pos[triangulation.rho1()[faces[f][k]]];
            rho1[dart_of(f, k, 0)] = dart_of(g, m, 3);
            rho1[dart_of(g, m, 3)] = dart_of(f, k, 0);
        }
    }

    Dessin base = Dessin::from_faces(std::move(rho1), rho2);
    CellStructure out_cs(base);
    TricoloredDessin out{base, std::vector<EdgeColor>(out_cs.count(CellKind::edge)),
                         std::vector<FaceShade>(out_cs.count(CellKind::face)),
                         std::vector<VertexLabel>(out_cs.count(CellKind::vertex))};
    for (Dart e = 0; e < n; ++e) {
        const std::size_t slot = e % 6;
        out.vertex_label[out_cs.cell_of(e, CellKind::vertex)] = slot_label[slot];
        out.edge_color[out_cs.cell_of(e, CellKind::edge)] = slot_color[slot];
        out.face_shade[out_cs.cell_of(e, CellKind::face)] = slot_shade[slot];
    }
    return out;
}

TricoloredDessin barycentric_subdivide(const TricoloredDessin& t) {
    require_valid_tricoloring(t);
    return barycentric_subdivide(t.base);
}

}  // namespace origami
