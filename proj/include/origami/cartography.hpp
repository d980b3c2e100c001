#pragma once

/**
 * @file cartography.hpp
 * @brief Dessins d'enfants as permutation actions of the oriented
 *        cartographic group on darts (directed edges).
 *
 * Composition convention: words act with the rightmost generator applied
 * first, so `(p * q)(x) = p(q(x))`. A dessin stores rho0 (counterclockwise
 * rotation about the origin vertex) and rho1 (reversal); rho2 (advance along
 * the face on the left) is derived from rho2 rho1 rho0 = 1 with rho0 applied
 * first, i.e. rho2 = rho0^-1 rho1^-1 and rho0 = rho1 rho2^-1.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "origami/errors.hpp"

namespace origami {

using Dart = std::size_t;
using Permutation = std::vector<Dart>;

enum class CellKind { vertex = 0, edge = 1, face = 2 };

const char* to_string(CellKind kind);

/// Orbit of darts under <rho_j>. Ids are dense and ordered by the smallest
/// dart of each orbit.
struct CellIndex {
    CellKind kind;
    std::size_t id;

    bool operator==(const CellIndex&) const = default;
};

// (p * q)(x) = p(q(x))
Permutation compose(std::span<const Dart> p, std::span<const Dart> q);
Permutation inverse(std::span<const Dart> p);
Permutation identity_permutation(std::size_t n);
bool is_bijection(std::span<const Dart> p);

class Dessin {
public:
    /// Throws MalformedInput when the arrays differ in length, are empty or
    /// hold an out-of-range entry. Group-theoretic validity is checked by
    /// `validate`, not here.
    Dessin(Permutation rho0, Permutation rho1);

    /// Builds the dessin from the reversal and the face permutation.
    static Dessin from_faces(Permutation rho1, const Permutation& rho2);

    std::size_t n_darts() const noexcept { return rho0_.size(); }
    const Permutation& rho0() const noexcept { return rho0_; }
    const Permutation& rho1() const noexcept { return rho1_; }

    /// Throws InvalidDessin if rho0 or rho1 is not a bijection.
    Permutation rho2() const;
    const Permutation& generator(int j) const;

    bool operator==(const Dessin&) const = default;

private:
    Permutation rho0_;
    Permutation rho1_;
};

enum class ViolationKind {
    rho0_not_bijection,
    rho1_not_bijection,
    rho1_fixed_point,
    rho1_not_involution,
    not_transitive,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    Dart dart;
    std::string message;
};

std::vector<Violation> validate(const Dessin& d);
bool is_valid(const Dessin& d);
/// Throws InvalidDessin carrying the first violation.
void require_valid(const Dessin& d);

/// Orbit id of every dart under a single permutation.
struct OrbitLabels {
    std::vector<std::size_t> id_of;
    std::size_t count = 0;
};

OrbitLabels orbit_labels(std::span<const Dart> perm);

/// Cell structure of a valid dessin, computed once.
class CellStructure {
public:
    explicit CellStructure(const Dessin& d);

    std::size_t count(CellKind kind) const { return labels_[index(kind)].count; }
    std::size_t cell_of(Dart dart, CellKind kind) const { return labels_[index(kind)].id_of.at(dart); }
    /// Orbits in id order; each lists its darts in generator order starting
    /// from the smallest.
    const std::vector<std::vector<Dart>>& orbits(CellKind kind) const { return orbits_[index(kind)]; }
    const Permutation& rho2() const { return rho2_; }

private:
    static std::size_t index(CellKind kind) { return static_cast<std::size_t>(kind); }

    Permutation rho2_;
    OrbitLabels labels_[3];
    std::vector<std::vector<Dart>> orbits_[3];
};

std::vector<std::vector<Dart>> cells(const Dessin& d, CellKind kind);

/// Kontsevich bracket [dart]_j: origin vertex (j=0), edge (j=1), face on
/// the left (j=2).
CellIndex dart_cell(const Dessin& d, Dart dart, int j);

struct CellCounts {
    std::size_t vertices;
    std::size_t edges;
    std::size_t faces;
};

CellCounts cell_counts(const Dessin& d);
std::size_t euler_genus(const Dessin& d);

/// Conjugates the action by a dart relabeling: new dart `perm[x]` plays the
/// role of old dart `x`.
Dessin relabel(const Dessin& d, std::span<const Dart> perm);

/// Lexicographically minimal breadth-first code over all starting darts.
/// Two valid dessins are isomorphic iff their codes are equal.
std::vector<std::size_t> canonical_code(const Dessin& d);
bool is_isomorphic(const Dessin& a, const Dessin& b);

}  // namespace origami
