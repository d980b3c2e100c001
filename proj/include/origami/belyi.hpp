#pragma once

/**
 * @file belyi.hpp
 * @brief Branching data of Belyi maps and the degree-6 barycentric map
 *
 *     beta(x) = (4/27) (x^2 - x + 1)^3 / (x^2 (1 - x)^2)
 *
 * which sends 0, 1, infinity to infinity, {-1, 1/2, 2} to 1 and the primitive
 * sixth roots of unity to 0. It is evaluated over any field type: doubles
 * for numerics, exact rationals, or the exact field Q(sqrt(-3)) which holds
 * the sixth roots of unity.
 */

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "origami/cartography.hpp"
#include "origami/metric.hpp"
#include "origami/tiling.hpp"

namespace origami {

using Rational = boost::multiprecision::cpp_rational;

/// a + b sqrt(-3), with a, b rational.
class QuadraticRational {
public:
    QuadraticRational() = default;
    QuadraticRational(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadraticRational(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadraticRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    /// exp(i pi / 3) = 1/2 + sqrt(-3)/2
    static QuadraticRational primitive_sixth_root();

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    Complex to_complex() const;

    friend QuadraticRational operator+(const QuadraticRational& x, const QuadraticRational& y);
    friend QuadraticRational operator-(const QuadraticRational& x, const QuadraticRational& y);
    friend QuadraticRational operator*(const QuadraticRational& x, const QuadraticRational& y);
    /// Throws InvalidArgument on division by zero.
    friend QuadraticRational operator/(const QuadraticRational& x, const QuadraticRational& y);
    friend bool operator==(const QuadraticRational& x, const QuadraticRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadraticRational& x);

private:
    Rational a_{0};
    Rational b_{0};
};

/// Point of the Riemann sphere: a finite value or infinity.
template <class F>
class SpherePoint {
public:
    SpherePoint(F value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    static SpherePoint infinity() { return SpherePoint(); }

    bool is_infinite() const { return !value_.has_value(); }
    const F& value() const {
        if (!value_) throw InvalidArgument("point at infinity has no finite value");
        return *value_;
    }

    bool operator==(const SpherePoint&) const = default;

private:
    SpherePoint() = default;
    std::optional<F> value_;
};

namespace detail {

// Integer coefficients, ascending powers.
std::vector<long long> barycentric_numerator();
std::vector<long long> barycentric_denominator();
std::vector<long long> derivative(const std::vector<long long>& p);

template <class F>
F evaluate(const std::vector<long long>& coeffs, const F& x) {
    F acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        F c(static_cast<int>(*it));
        acc = acc * x + c;
    }
    return acc;
}

}  // namespace detail

template <class F>
SpherePoint<F> barycentric_rational(const SpherePoint<F>& x) {
    if (x.is_infinite()) return SpherePoint<F>::infinity();
    static const auto num = detail::barycentric_numerator();
    static const auto den = detail::barycentric_denominator();
    const F q = detail::evaluate(den, x.value());
    if (q == F(0)) return SpherePoint<F>::infinity();
    const F p = detail::evaluate(num, x.value());
    return SpherePoint<F>(F(p / q));
}

/// Exact derivative (P'Q - PQ') / Q^2; infinite at the poles and at infinity.
template <class F>
SpherePoint<F> barycentric_rational_derivative(const SpherePoint<F>& x) {
    if (x.is_infinite()) return SpherePoint<F>::infinity();
    static const auto num = detail::barycentric_numerator();
    static const auto den = detail::barycentric_denominator();
    static const auto dnum = detail::derivative(num);
    static const auto dden = detail::derivative(den);
    const F& v = x.value();
    const F q = detail::evaluate(den, v);
    if (q == F(0)) return SpherePoint<F>::infinity();
    const F top = detail::evaluate(dnum, v) * q - detail::evaluate(num, v) * detail::evaluate(dden, v);
    return SpherePoint<F>(F(top / (q * q)));
}

struct Passport {
    std::size_t degree = 0;
    std::vector<std::size_t> over_zero;
    std::vector<std::size_t> over_one;
    std::vector<std::size_t> over_infinity;

    bool operator==(const Passport&) const = default;
};

/// e.g. "degree=8 zero=[4,4] one=[4,4] infinity=[2,2,2,2]"
std::string to_string(const Passport& p);

/// Cycle types are sorted in non-increasing order.
Passport passport(const TricoloredDessin& t);

/// Throws InconsistentPassport when a fiber does not sum to the degree or
/// the genus comes out non-integral or negative.
std::size_t riemann_hurwitz_genus(const Passport& p);

/// Barycentric subdivision of a triangulation; the result is tricolored with
/// original vertices over infinity, edge midpoints over one and barycenters
/// over zero.
TricoloredDessin barycentric_subdivide(const Dessin& triangulation);
TricoloredDessin barycentric_subdivide(const TricoloredDessin& t);

}  // namespace origami
