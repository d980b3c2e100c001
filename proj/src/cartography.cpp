#include "origami/cartography.hpp"

#include <algorithm>
#include <numeric>
#include <limits>

namespace origami {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<Dart>> orbits_of(std::span<const Dart> perm, const OrbitLabels& labels) {
    std::vector<std::vector<Dart>> out(labels.count);
    for (Dart start = 0; start < perm.size(); ++start) {
        auto& orbit = out[labels.id_of[start]];
        if (!orbit.empty()) continue;
        Dart x = start;
        do {
            orbit.push_back(x);
            x = perm[x];
        } while (x != start);
    }
    return out;
}

Dart find_root(std::vector<Dart>& parent, Dart x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

const char* to_string(CellKind kind) {
    switch (kind) {
        case CellKind::vertex: return "vertex";
        case CellKind::edge: return "edge";
        case CellKind::face: return "face";
    }
    return "?";
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::rho0_not_bijection: return "rho0 is not a bijection";
        case ViolationKind::rho1_not_bijection: return "rho1 is not a bijection";
        case ViolationKind::rho1_fixed_point: return "rho1 has fixed points";
        case ViolationKind::rho1_not_involution: return "rho1 is not an involution";
        case ViolationKind::not_transitive: return "not transitive";
    }
    return "?";
}

Permutation compose(std::span<const Dart> p, std::span<const Dart> q) {
    if (p.size() != q.size()) throw InvalidArgument("compose: permutations of different size");
    Permutation out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
    return out;
}

Permutation inverse(std::span<const Dart> p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
    return out;
}

Permutation identity_permutation(std::size_t n) {
    Permutation out(n);
    std::iota(out.begin(), out.end(), Dart{0});
    return out;
}

bool is_bijection(std::span<const Dart> p) {
    std::vector<bool> hit(p.size(), false);
    for (Dart x : p) {
        if (x >= p.size() || hit[x]) return false;
        hit[x] = true;
    }
    return true;
}

Dessin::Dessin(Permutation rho0, Permutation rho1) : rho0_(std::move(rho0)), rho1_(std::move(rho1)) {
    if (rho0_.empty()) throw MalformedInput("dessin must have at least one dart");
    if (rho0_.size() != rho1_.size()) {
        throw MalformedInput("rho0 has " + std::to_string(rho0_.size()) + " entries but rho1 has " +
                             std::to_string(rho1_.size()));
    }
    const std::size_t n = rho0_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rho0_[i] >= n) throw MalformedInput("rho0[" + std::to_string(i) + "] = " + std::to_string(rho0_[i]) + " out of range");
        if (rho1_[i] >= n) throw MalformedInput("rho1[" + std::to_string(i) + "] = " + std::to_string(rho1_[i]) + " out of range");
    }
}

Dessin Dessin::from_faces(Permutation rho1, const Permutation& rho2) {
    if (rho1.size() != rho2.size()) throw MalformedInput("rho1 and rho2 differ in length");
    if (!is_bijection(rho2)) throw MalformedInput("rho2 is not a bijection");
    Permutation rho0 = compose(rho1, inverse(rho2));
    return Dessin(std::move(rho0), std::move(rho1));
}

Permutation Dessin::rho2() const {
    if (!is_bijection(rho0_) || !is_bijection(rho1_)) {
        throw InvalidDessin("rho2 undefined: generators are not bijections");
    }
    return compose(inverse(rho0_), inverse(rho1_));
}

const Permutation& Dessin::generator(int j) const {
    if (j == 0) return rho0_;
    if (j == 1) return rho1_;
    throw InvalidArgument("generator index must be 0 or 1");
}

std::vector<Violation> validate(const Dessin& d) {
    std::vector<Violation> out;
    const std::size_t n = d.n_darts();

    auto check_bijection = [&](const Permutation& p, ViolationKind kind, const char* name) {
        std::vector<Dart> first_preimage(n, kUnset);
        for (Dart x = 0; x < n; ++x) {
            if (first_preimage[p[x]] != kUnset) {
                out.push_back({kind, x,
                               std::string(name) + " maps darts " + std::to_string(first_preimage[p[x]]) + " and " +
                                   std::to_string(x) + " to " + std::to_string(p[x])});
                return false;
            }
            first_preimage[p[x]] = x;
        }
        return true;
    };
    const bool bij0 = check_bijection(d.rho0(), ViolationKind::rho0_not_bijection, "rho0");
    const bool bij1 = check_bijection(d.rho1(), ViolationKind::rho1_not_bijection, "rho1");

    const auto& r1 = d.rho1();
    for (Dart x = 0; x < n; ++x) {
        if (r1[x] == x) {
            out.push_back({ViolationKind::rho1_fixed_point, x, "rho1 fixes dart " + std::to_string(x)});
        } else if (r1[r1[x]] != x) {
            out.push_back({ViolationKind::rho1_not_involution, x,
                           "rho1(rho1(" + std::to_string(x) + ")) = " + std::to_string(r1[r1[x]])});
        }
    }

    if (bij0 && bij1) {
        std::vector<Dart> parent = identity_permutation(n);
        for (Dart x = 0; x < n; ++x) {
            for (int j = 0; j < 2; ++j) {
                Dart a = find_root(parent, x);
                Dart b = find_root(parent, d.generator(j)[x]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        const Dart root = find_root(parent, 0);
        for (Dart x = 1; x < n; ++x) {
            if (find_root(parent, x) != root) {
                out.push_back({ViolationKind::not_transitive, x,
                               "dart " + std::to_string(x) + " is not reachable from dart 0"});
                break;
            }
        }
    }
    return out;
}

bool is_valid(const Dessin& d) { return validate(d).empty(); }

void require_valid(const Dessin& d) {
    auto violations = validate(d);
    if (!violations.empty()) {
        throw InvalidDessin(std::string(to_string(violations.front().kind)) + ": " + violations.front().message);
    }
}

OrbitLabels orbit_labels(std::span<const Dart> perm) {
    OrbitLabels out;
    out.id_of.assign(perm.size(), kUnset);
    for (Dart start = 0; start < perm.size(); ++start) {
        if (out.id_of[start] != kUnset) continue;
        Dart x = start;
        do {
            out.id_of[x] = out.count;
            x = perm[x];
        } while (x != start);
        ++out.count;
    }
    return out;
}

CellStructure::CellStructure(const Dessin& d) {
    require_valid(d);
    rho2_ = d.rho2();
    const Permutation* gens[3] = {&d.rho0(), &d.rho1(), &rho2_};
    for (std::size_t j = 0; j < 3; ++j) {
        labels_[j] = orbit_labels(*gens[j]);
        orbits_[j] = orbits_of(*gens[j], labels_[j]);
    }
}

std::vector<std::vector<Dart>> cells(const Dessin& d, CellKind kind) {
    return CellStructure(d).orbits(kind);
}

CellIndex dart_cell(const Dessin& d, Dart dart, int j) {
    if (j < 0 || j > 2) throw InvalidArgument("cell index j must be 0, 1 or 2");
    if (dart >= d.n_darts()) {
        throw InvalidArgument("dart " + std::to_string(dart) + " out of range (n_darts = " +
                              std::to_string(d.n_darts()) + ")");
    }
    require_valid(d);
    const Permutation rho2 = d.rho2();
    const Permutation& gen = j == 0 ? d.rho0() : (j == 1 ? d.rho1() : rho2);
    return {static_cast<CellKind>(j), orbit_labels(gen).id_of[dart]};
}

CellCounts cell_counts(const Dessin& d) {
    CellStructure cs(d);
    return {cs.count(CellKind::vertex), cs.count(CellKind::edge), cs.count(CellKind::face)};
}

std::size_t euler_genus(const Dessin& d) {
    const auto c = cell_counts(d);
    const long long chi = static_cast<long long>(c.vertices) - static_cast<long long>(c.edges) +
                          static_cast<long long>(c.faces);
    // chi = 2 - 2g with g >= 0 for every valid dessin
    return static_cast<std::size_t>((2 - chi) / 2);
}

Dessin relabel(const Dessin& d, std::span<const Dart> perm) {
    if (perm.size() != d.n_darts() || !is_bijection(perm)) throw InvalidArgument("relabel: not a permutation of the darts");
    const std::size_t n = d.n_darts();
    Permutation r0(n), r1(n);
    for (Dart x = 0; x < n; ++x) {
        r0[perm[x]] = perm[d.rho0()[x]];
        r1[perm[x]] = perm[d.rho1()[x]];
    }
    return Dessin(std::move(r0), std::move(r1));
}

std::vector<std::size_t> canonical_code(const Dessin& d) {
    require_valid(d);
    const std::size_t n = d.n_darts();
    std::vector<std::size_t> best;
    std::vector<std::size_t> code;
    std::vector<std::size_t> label(n);
    std::vector<Dart> order;
    order.reserve(n);
    code.reserve(2 * n + 1);

    for (Dart start = 0; start < n; ++start) {
        std::fill(label.begin(), label.end(), kUnset);
        order.clear();
        code.assign(1, n);
        label[start] = 0;
        order.push_back(start);
        bool worse = false;
        bool better = best.empty();
        for (std::size_t i = 0; i < order.size() && !worse; ++i) {
            const Dart x = order[i];
            for (int j = 0; j < 2; ++j) {
                const Dart y = d.generator(j)[x];
                if (label[y] == kUnset) {
                    label[y] = order.size();
                    order.push_back(y);
                }
                code.push_back(label[y]);
                if (!better) {
                    const std::size_t pos = code.size() - 1;
                    if (code[pos] < best[pos]) better = true;
                    else if (code[pos] > best[pos]) { worse = true; break; }
                }
            }
        }
        if (!worse && better) best = code;
    }
    return best;
}

bool is_isomorphic(const Dessin& a, const Dessin& b) {
    require_valid(a);
    require_valid(b);
    if (a.n_darts() != b.n_darts()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace origami
