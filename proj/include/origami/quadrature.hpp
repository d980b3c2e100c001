#pragma once

#include <cstddef>
#include <vector>

namespace origami {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Jacobi rule for  int_{-1}^{1} (1-x)^alpha (1+x)^beta f(x) dx,
/// alpha, beta > -1, built from the eigen-decomposition of the Jacobi matrix.
QuadratureRule gauss_jacobi(std::size_t n, double alpha, double beta);

/// Rule for  int_0^1 s^exponent f(s) ds  on nodes in (0, 1). Cached; the
/// returned reference stays valid for the life of the program.
const QuadratureRule& endpoint_rule(std::size_t n, double exponent);

/// Gauss-Legendre on [-1, 1]. Cached.
const QuadratureRule& legendre_rule(std::size_t n);

}  // namespace origami
