#include "origami/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include <Eigen/Eigenvalues>

#include "origami/errors.hpp"

namespace origami {

namespace {

// Three-term recurrence of the monic Jacobi polynomials:
// diagonal alpha_k, off-diagonal sqrt(beta_k).
void jacobi_recurrence(std::size_t n, double alpha, double beta, Eigen::VectorXd& diag, Eigen::VectorXd& sub) {
    diag.resize(static_cast<Eigen::Index>(n));
    sub.resize(static_cast<Eigen::Index>(n > 0 ? n - 1 : 0));
    const double ab = alpha + beta;
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        if (k == 0) {
            diag[0] = (beta - alpha) / (ab + 2.0);
        } else {
            const double s = 2.0 * kk + ab;
            diag[static_cast<Eigen::Index>(k)] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
        }
    }
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double s = 2.0 * kk + ab;
        double ratio;
        if (k == 1) {
            // (1 + ab) cancels; the general form is 0/0 when ab = -1
            ratio = 4.0 * (1.0 + alpha) * (1.0 + beta) / (s * s * (s + 1.0));
        } else {
            ratio = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        sub[static_cast<Eigen::Index>(k - 1)] = std::sqrt(ratio);
    }
}

template <class Key, class Build>
const QuadratureRule& cached(std::map<Key, std::unique_ptr<QuadratureRule>>& cache, std::mutex& mu, const Key& key,
                             Build build) {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<QuadratureRule>(build())).first;
    return *it->second;
}

}  // namespace

QuadratureRule gauss_jacobi(std::size_t n, double alpha, double beta) {
    if (n == 0) throw InvalidArgument("quadrature needs at least one node");
    if (!(alpha > -1.0) || !(beta > -1.0)) throw InvalidArgument("Jacobi exponents must exceed -1");

    Eigen::VectorXd diag, sub;
    jacobi_recurrence(n, alpha, beta, diag, sub);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw NonConvergence("Jacobi matrix eigen-decomposition failed");

    // total mass of the weight on [-1, 1]
    const double mu0 = std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                                std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = static_cast<Eigen::Index>(i);
        const double v0 = solver.eigenvectors()(0, idx);
        rule.nodes[i] = solver.eigenvalues()[idx];
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

const QuadratureRule& endpoint_rule(std::size_t n, double exponent) {
    static std::map<std::pair<std::size_t, double>, std::unique_ptr<QuadratureRule>> cache;
    static std::mutex mu;
    return cached(cache, mu, std::make_pair(n, exponent), [&] {
        QuadratureRule rule = gauss_jacobi(n, 0.0, exponent);
        // s = (1 + x) / 2, ds = dx / 2, s^e = 2^-e (1 + x)^e
        const double scale = std::pow(2.0, -exponent - 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
            rule.weights[i] *= scale;
        }
        return rule;
    });
}

const QuadratureRule& legendre_rule(std::size_t n) {
    static std::map<std::size_t, std::unique_ptr<QuadratureRule>> cache;
    static std::mutex mu;
    return cached(cache, mu, n, [&] { return gauss_jacobi(n, 0.0, 0.0); });
}

}  // namespace origami
