#include "origami/csmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <tuple>
#include <vector>

#include "origami/quadrature.hpp"

namespace origami {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Radius of the first panel, integrated with the endpoint-weighted rule.
constexpr double kStartRadius = 0.5;
constexpr double kNewtonTolerance = 1e-10;
constexpr std::size_t kNewtonIterations = 100;
constexpr std::size_t kReseeds = 5;
constexpr std::size_t kSeedGrid = 32;

// arg t in [-pi, pi): the negative real axis belongs to the lower half-plane
double path_argument(Complex t) {
    const double th = std::arg(t);
    return th >= kPi ? -kPi : th;
}

void check_exponents(double a, double b) {
    if (!(a > 0.0 && a <= 1.0) || !(b > 0.0 && b <= 1.0)) {
        throw InvalidArgument("exponents must satisfy 0 < a <= 1 and 0 < b <= 1");
    }
}

bool on_cut(Complex t) { return t.imag() == 0.0 && t.real() > 1.0; }

enum class PanelKind { start, regular, end };

// Panel of the radial path w = u * rho, rho in [lo, hi].
struct Panel {
    PanelKind kind;
    double lo;
    double hi;
};

struct PanelValue {
    Complex value;
    double error;
    double magnitude;  // sum of |weight * integrand|, for the round-off floor
};

class RadialIntegrator {
public:
    RadialIntegrator(double a, double b, double theta, const QuadratureConfig& cfg)
        : a_(a), b_(b), theta_(theta), u_(std::polar(1.0, theta)), cos_(std::cos(theta)), sin_(std::sin(theta)),
          vers_(2.0 * std::sin(0.5 * theta) * std::sin(0.5 * theta)), n_(cfg.node_count),
          m_(std::max<std::size_t>(1, cfg.node_count / 2)) {}

    // 1 - w at w = u (1 + sigma). Near w = 1 the offset sigma keeps full
    // relative precision where 1 + sigma would not.
    Complex one_minus_w(double sigma) const { return {vers_ - sigma * cos_, -(1.0 + sigma) * sin_}; }

    Complex integrand(double sigma) const {
        const double rho = 1.0 + sigma;
        return std::polar(std::pow(rho, a_ - 1.0), (a_ - 1.0) * theta_) * std::pow(one_minus_w(sigma), b_ - 1.0);
    }

    double distance_to_one(double rho) const { return std::abs(one_minus_w(rho - 1.0)); }

    PanelValue evaluate(const Panel& p) const {
        const auto [fine, fine_mag] = rule_sum(p, n_);
        const auto [coarse, coarse_mag] = rule_sum(p, m_);
        return {fine, std::abs(fine - coarse), fine_mag};
    }

private:
    std::pair<Complex, double> rule_sum(const Panel& p, std::size_t n) const {
        Complex sum{0.0, 0.0};
        double mag = 0.0;
        switch (p.kind) {
            case PanelKind::start: {
                // int_0^{u hi} = (u hi)^a int_0^1 s^(a-1) (1 - u hi s)^(b-1) ds
                const auto& rule = endpoint_rule(n, a_ - 1.0);
                const Complex w_end = u_ * p.hi;
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex term = rule.weights[i] * std::pow(Complex(1.0) - w_end * rule.nodes[i], b_ - 1.0);
                    sum += term;
                    mag += std::abs(term);
                }
                const Complex factor = std::polar(std::pow(p.hi, a_), a_ * theta_);
                return {factor * sum, std::abs(factor) * mag};
            }
            case PanelKind::end: {
                // real segment [lo, 1]: w = 1 - (1 - lo) v
                const auto& rule = endpoint_rule(n, b_ - 1.0);
                const double len = 1.0 - p.lo;
                for (std::size_t i = 0; i < n; ++i) {
                    const double term = rule.weights[i] * std::pow(1.0 - len * rule.nodes[i], a_ - 1.0);
                    sum += term;
                    mag += std::abs(term);
                }
                const double factor = std::pow(len, b_);
                return {factor * sum, factor * mag};
            }
            case PanelKind::regular: {
                const auto& rule = legendre_rule(n);
                const double mid = 0.5 * ((p.lo - 1.0) + (p.hi - 1.0));
                const double half = 0.5 * (p.hi - p.lo);
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex term = rule.weights[i] * integrand(mid + half * rule.nodes[i]);
                    sum += term;
                    mag += std::abs(term);
                }
                return {u_ * half * sum, half * mag};
            }
        }
        return {};
    }

    double a_, b_, theta_;
    Complex u_;
    double cos_, sin_, vers_;
    std::size_t n_, m_;
};

// Panels graded so that each is no longer than its distance to 0 and 1.
std::vector<Panel> initial_panels(const RadialIntegrator& f, Complex t) {
    std::vector<Panel> panels;
    const double radius = std::abs(t);
    if (t == Complex(1.0)) {
        panels.push_back({PanelKind::start, 0.0, kStartRadius});
        panels.push_back({PanelKind::end, kStartRadius, 1.0});
        return panels;
    }
    if (radius <= kStartRadius) {
        panels.push_back({PanelKind::start, 0.0, radius});
        return panels;
    }
    panels.push_back({PanelKind::start, 0.0, kStartRadius});
    double rho = kStartRadius;
    while (rho < radius) {
        const double step = 0.5 * std::min(rho, f.distance_to_one(rho));
        const double next = radius - rho <= step ? radius : rho + step;
        panels.push_back({PanelKind::regular, rho, next});
        rho = next;
    }
    return panels;
}

std::pair<Panel, Panel> split(const Panel& p) {
    const double mid = 0.5 * (p.lo + p.hi);
    switch (p.kind) {
        case PanelKind::start: return {{PanelKind::start, p.lo, mid}, {PanelKind::regular, mid, p.hi}};
        case PanelKind::end: return {{PanelKind::regular, p.lo, mid}, {PanelKind::end, mid, p.hi}};
        case PanelKind::regular: break;
    }
    return {{PanelKind::regular, p.lo, mid}, {PanelKind::regular, mid, p.hi}};
}

struct SeedGrid {
    std::vector<Complex> t;
    std::vector<Complex> image;
};

const SeedGrid& seed_grid(const CsMapSpec& spec, const QuadratureConfig& cfg) {
    using Key = std::tuple<double, double, double, double>;
    static std::map<Key, std::unique_ptr<SeedGrid>> cache;
    static std::mutex mu;
    const Key key{spec.a, spec.b, spec.prefactor.real(), spec.prefactor.imag()};
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    // polar grid over the lower half-plane, radii 1e-3 .. 1e3
    auto grid = std::make_unique<SeedGrid>();
    for (std::size_t j = 0; j < kSeedGrid; ++j) {
        const double r = std::pow(10.0, -3.0 + 6.0 * static_cast<double>(j) / (kSeedGrid - 1));
        for (std::size_t k = 0; k < kSeedGrid; ++k) {
            const double th = -kPi * (static_cast<double>(k) + 0.5) / kSeedGrid;
            const Complex t = std::polar(r, th);
            grid->t.push_back(t);
            grid->image.push_back(cs_map(spec, t, cfg));
        }
    }
    return *cache.emplace(key, std::move(grid)).first->second;
}

struct NewtonResult {
    Complex t;
    double residual;
};

NewtonResult newton(const CsMapSpec& spec, Complex z, Complex t, const QuadratureConfig& cfg) {
    Complex r = cs_map(spec, t, cfg) - z;
    double nr = std::abs(r);
    const double floor = 4.0 * kEps * std::max(1.0, std::abs(z));
    for (std::size_t it = 0; it < kNewtonIterations && nr > floor; ++it) {
        Complex slope;
        try {
            slope = cs_map_derivative(spec, t);
        } catch (const SingularPoint&) {
            break;
        }
        const Complex step = r / slope;
        bool moved = false;
        double lambda = 1.0;
        for (int halving = 0; halving < 50 && !moved; ++halving, lambda *= 0.5) {
            Complex candidate = t - lambda * step;
            if (candidate.imag() > 0.0) candidate.imag(0.0);
            if (on_cut(candidate)) continue;
            const Complex rc = cs_map(spec, candidate, cfg) - z;
            if (std::abs(rc) < nr) {
                t = candidate;
                r = rc;
                nr = std::abs(rc);
                moved = true;
            }
        }
        if (!moved) break;
    }
    return {t, nr};
}

}  // namespace

std::string_view to_string(CsMapName name) {
    switch (name) {
        case CsMapName::square_cell: return "square_cell";
        case CsMapName::triangle_coord: return "triangle_coord";
        case CsMapName::square_coord: return "square_coord";
        case CsMapName::custom: return "custom";
    }
    return "custom";
}

std::optional<CsMapSpec> spec_by_name(std::string_view name) {
    if (name == "square_cell") return CsMapSpec::square_cell();
    if (name == "triangle_coord") return CsMapSpec::triangle_coord();
    if (name == "square_coord") return CsMapSpec::square_coord();
    return std::nullopt;
}

void QuadratureConfig::validate() const {
    if (node_count < 2) throw InvalidArgument("node_count must be at least 2");
    if (!(target_rel_error >= 1e-13)) throw InvalidArgument("target_rel_error must be at least 1e-13");
    if (max_path_splits < 1) throw InvalidArgument("max_path_splits must be positive");
}

IntegralResult incomplete_cs_integral_detailed(double a, double b, Complex t, const QuadratureConfig& cfg) {
    check_exponents(a, b);
    cfg.validate();
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) throw InvalidArgument("integration endpoint must be finite");
    if (on_cut(t)) throw CutCrossing("endpoint lies on the branch cut (1, inf)");
    if (t == Complex(0.0)) return {Complex(0.0), 0.0, 0};

    const RadialIntegrator f(a, b, path_argument(t), cfg);
    std::vector<Panel> stack = initial_panels(f, t);
    std::reverse(stack.begin(), stack.end());

    Complex total{0.0, 0.0};
    double error = 0.0;
    std::size_t splits = 0, accepted = 0;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const PanelValue v = f.evaluate(p);
        const double allowed = std::max(cfg.target_rel_error * std::abs(v.value), 64.0 * kEps * v.magnitude);
        if (v.error <= allowed) {
            total += v.value;
            error += v.error;
            ++accepted;
            continue;
        }
        if (++splits > cfg.max_path_splits) {
            throw NonConvergence("quadrature split budget exhausted at |t| = " + std::to_string(std::abs(t)));
        }
        const auto [left, right] = split(p);
        stack.push_back(right);
        stack.push_back(left);
    }
    return {total, error, accepted};
}

Complex incomplete_cs_integral(double a, double b, Complex t, const QuadratureConfig& cfg) {
    return incomplete_cs_integral_detailed(a, b, t, cfg).value;
}

double complete_beta(double a, double b) {
    check_exponents(a, b);
    static std::map<std::pair<double, double>, double> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    QuadratureConfig cfg;
    cfg.node_count = 48;
    cfg.target_rel_error = 1e-13;
    const double value = incomplete_cs_integral(a, b, Complex(1.0), cfg).real();
    cache.emplace(std::make_pair(a, b), value);
    return value;
}

Complex cs_map(const CsMapSpec& spec, Complex t, const QuadratureConfig& cfg) {
    check_exponents(spec.a, spec.b);
    if (t == Complex(0.0)) return Complex(0.0);
    if (t == Complex(1.0)) return spec.prefactor;
    return spec.prefactor * incomplete_cs_integral(spec.a, spec.b, t, cfg) / complete_beta(spec.a, spec.b);
}

Complex cs_map_derivative(const CsMapSpec& spec, Complex t) {
    check_exponents(spec.a, spec.b);
    if (t == Complex(0.0) || t == Complex(1.0)) {
        if (spec.a == 1.0 && spec.b == 1.0) return spec.prefactor;
        throw SingularPoint("derivative is singular at t = 0 and t = 1");
    }
    if (on_cut(t)) throw CutCrossing("t lies on the branch cut (1, inf)");
    const double th = path_argument(t);
    const Complex tpow = std::polar(std::pow(std::abs(t), spec.a - 1.0), (spec.a - 1.0) * th);
    return spec.prefactor * tpow * std::pow(Complex(1.0) - t, spec.b - 1.0) / complete_beta(spec.a, spec.b);
}

std::array<Complex, 3> image_triangle(const CsMapSpec& spec) {
    check_exponents(spec.a, spec.b);
    const double c = 1.0 - spec.a - spec.b;
    if (!(c > 0.0)) throw InvalidArgument("the image is a triangle only when a + b < 1");
    // I(a, b; -R) -> exp(-i pi a) B(a, 1 - a - b) as R -> inf
    const Complex far =
        spec.prefactor * std::polar(1.0, -kPi * spec.a) * complete_beta(spec.a, c) / complete_beta(spec.a, spec.b);
    return {Complex(0.0), spec.prefactor, far};
}

bool in_image_triangle(const CsMapSpec& spec, Complex z, double tolerance) {
    const auto v = image_triangle(spec);
    auto cross = [](Complex p, Complex q) { return p.real() * q.imag() - p.imag() * q.real(); };
    const double orient = cross(v[1] - v[0], v[2] - v[0]) > 0.0 ? 1.0 : -1.0;
    const double size = std::max({std::abs(v[1] - v[0]), std::abs(v[2] - v[1]), std::abs(v[0] - v[2])});
    for (std::size_t i = 0; i < 3; ++i) {
        const Complex edge = v[(i + 1) % 3] - v[i];
        // signed distance of z from the edge line, positive inside
        const double dist = orient * cross(edge, z - v[i]) / std::abs(edge);
        if (dist < -tolerance * size) return false;
    }
    return true;
}

Complex invert_cs_map(const CsMapSpec& spec, Complex z, const QuadratureConfig& cfg) {
    cfg.validate();
    const auto v = image_triangle(spec);
    if (!in_image_triangle(spec, z)) throw OutsideImage("point lies outside the image triangle");
    const double size = std::max({std::abs(v[1]), std::abs(v[2]), std::abs(v[2] - v[1])});
    if (std::abs(z - v[0]) <= 1e-14 * size) return Complex(0.0);
    if (std::abs(z - v[1]) <= 1e-14 * size) return Complex(1.0);
    if (std::abs(z - v[2]) <= 1e-12 * size) throw NonConvergence("preimage is the point at infinity");

    const SeedGrid& grid = seed_grid(spec, cfg);
    std::vector<std::size_t> order(grid.t.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + kReseeds + 1, order.end(), [&](std::size_t i, std::size_t j) {
        return std::abs(grid.image[i] - z) < std::abs(grid.image[j] - z);
    });

    NewtonResult best{Complex(0.0), std::numeric_limits<double>::infinity()};
    for (std::size_t attempt = 0; attempt <= kReseeds; ++attempt) {
        const NewtonResult r = newton(spec, z, grid.t[order[attempt]], cfg);
        if (r.residual < best.residual) best = r;
        if (best.residual <= kNewtonTolerance) return best.t;
    }
    throw NonConvergence("Newton inversion failed; best residual " + std::to_string(best.residual));
}

Complex triangle_to_square(Complex z, const QuadratureConfig& cfg) {
    const Complex t = invert_cs_map(CsMapSpec::triangle_coord(), z, cfg);
    return cs_map(CsMapSpec::square_coord(), t, cfg);
}

}  // namespace origami
