#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "origami/quadrature.hpp"
#include "support/fixtures.hpp"

using namespace origami;

namespace {

double integrate(const QuadratureRule& r, double (*f)(double)) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(r.nodes[i]);
    return s;
}

}  // namespace

TEST_CASE("gauss-legendre on [-1, 1]") {
    const auto r = gauss_jacobi(10, 0.0, 0.0);
    CHECK(r.nodes.size() == 10);
    double w = 0.0;
    for (double x : r.weights) w += x;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    // exact through degree 19
    CHECK(integrate(r, [](double x) { return std::pow(x, 18); }) == doctest::Approx(2.0 / 19).epsilon(1e-13));
    CHECK(integrate(r, [](double x) { return std::pow(x, 17); }) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("gauss-jacobi moments") {
    // int_{-1}^{1} (1-x)^a (1+x)^b dx = 2^(a+b+1) B(a+1, b+1)
    for (auto [a, b] : {std::pair{-0.75, 0.0}, std::pair{-0.5, -0.5}, std::pair{0.5, -0.8333}}) {
        const auto r = gauss_jacobi(16, a, b);
        double w = 0.0;
        for (double x : r.weights) w += x;
        const double expect = std::pow(2.0, a + b + 1) * fixtures::beta_oracle(a + 1, b + 1);
        CHECK(w == doctest::Approx(expect).epsilon(1e-12));
        for (double x : r.nodes) {
            CHECK(x > -1.0);
            CHECK(x < 1.0);
        }
    }
}

TEST_CASE("endpoint rule integrates s^e p(s) on [0, 1]") {
    const auto& r = endpoint_rule(12, -0.75);
    double m0 = 0.0, m3 = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        CHECK(r.nodes[i] > 0.0);
        CHECK(r.nodes[i] < 1.0);
        m0 += r.weights[i];
        m3 += r.weights[i] * std::pow(r.nodes[i], 3);
    }
    CHECK(m0 == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(m3 == doctest::Approx(1.0 / 3.25).epsilon(1e-13));
    CHECK(&endpoint_rule(12, -0.75) == &r);
}

TEST_CASE("legendre rule on [-1, 1]") {
    const auto& r = legendre_rule(8);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::exp(r.nodes[i]);
    CHECK(s == doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-14));
}
