#pragma once

// Shared module constructions for the test suites: the two-vertex loop
// algebra the verifier targets, its 13 indecomposables, and small random
// module generators for property tests.

#include <random>

#include "qmod/qmod.hpp"

namespace fixtures {

using namespace qmod;

inline AlgebraPtr counterexample_algebra(std::uint32_t p = 3) {
    Quiver q(2, {{"x", 1, 1}, {"y", 1, 2}, {"z", 2, 1}});
    std::vector<Path> rels = {
        path_from_labels(q, {"x", "y"}),
        path_from_labels(q, {"y", "z"}),
        path_from_labels(q, {"z", "x"}),
        path_from_labels(q, {"x", "x", "x"}),
    };
    return build_algebra(q, rels, PrimeField(p));
}

// K[a]/(a^2): one vertex, one loop.
inline AlgebraPtr loop_algebra(std::uint32_t p = 3) {
    Quiver q(1, {{"a", 1, 1}});
    return build_algebra(q, {path_from_labels(q, {"a", "a"})}, PrimeField(p));
}

inline AlgebraElement arrow_sum(const AlgebraPtr& a, const std::vector<std::string>& labels) {
    AlgebraElement e(a);
    for (const std::string& l : labels)
        e = e + AlgebraElement::from_path(a, path_from_labels(a->quiver(), {l}));
    return e;
}

inline Representation m1(const AlgebraPtr& a) {
    return quotient_by_right_ideal(a, {arrow_sum(a, {"x", "z"})});
}

inline Representation m2(const AlgebraPtr& a) {
    return cokernel(socle(projective(a, 2)).inclusion).rep;
}

inline Representation module_u(const AlgebraPtr& a) {
    return quotient_by_right_ideal(a, {arrow_sum(a, {"x", "y", "z"})});
}

inline Representation e2j(const AlgebraPtr& a) { return radical(projective(a, 2)).rep; }

// P1 modulo the simple submodule spanned by x^2 (component 1 basis: e1, x, x^2).
inline Representation p1_mod_s1(const AlgebraPtr& a) {
    Representation p1 = projective(a, 1);
    Matrix g1(a->field(), 1, p1.dim_at(1));
    g1.set(0, 2, 1);
    Matrix g2(a->field(), 0, p1.dim_at(2));
    return quotient_by_submodule(p1, submodule_generated(p1, {g1, g2})).rep;
}

inline Representation p1_mod_socle(const AlgebraPtr& a) {
    Representation p1 = projective(a, 1);
    return quotient_by_submodule(p1, socle(p1)).rep;
}

// P1 modulo the simple submodule spanned by y (component 2 basis: y).
inline Representation p1_mod_s2(const AlgebraPtr& a) {
    Representation p1 = projective(a, 1);
    Matrix g1(a->field(), 0, p1.dim_at(1));
    Matrix g2(a->field(), 1, p1.dim_at(2));
    g2.set(0, 0, 1);
    return quotient_by_submodule(p1, submodule_generated(p1, {g1, g2})).rep;
}

// The unique indecomposable with dimension vector [3,2], reached as the
// translate of P1/soc(P1).
inline Representation indec_32(const AlgebraPtr& a) { return tau(p1_mod_socle(a)); }

// All 13 isomorphism classes of indecomposables of the counterexample algebra.
inline std::vector<Representation> all_indecomposables(const AlgebraPtr& a) {
    return {
        simple(a, 1),         // [1,0]
        e2j(a),               // [1,1]
        p1_mod_s1(a),         // [2,1]
        m1(a),                // [2,2]
        module_u(a),          // [2,1]
        m2(a),                // [1,1]
        projective(a, 2),     // [1,2]
        p1_mod_socle(a),      // [2,0]
        indec_32(a),          // [3,2]
        injective(a, 1),      // [3,1]
        projective(a, 1),     // [3,1]
        p1_mod_s2(a),         // [3,0]
        simple(a, 2),         // [0,1]
    };
}

inline Matrix random_matrix(const PrimeField& f, int rows, int cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f.modulus() - 1);
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, dist(rng));
    return m;
}

// Random quotient of the regular module: every module arises this way, and
// the result is a valid representation by construction.
inline Representation random_module(const AlgebraPtr& a, std::mt19937_64& rng, int max_total = 8) {
    const Representation reg = regular_representation(a);
    std::uniform_int_distribution<int> count(0, 3);
    while (true) {
        std::vector<Matrix> gens;
        for (int v = 1; v <= a->quiver().vertex_count(); ++v)
            gens.push_back(random_matrix(a->field(), count(rng), reg.dim_at(v), rng));
        const Representation q = quotient_by_submodule(reg, submodule_generated(reg, gens)).rep;
        if (q.total_dim() <= max_total) return q;
    }
}

inline ModuleHom random_hom(const Representation& m, const Representation& n, std::mt19937_64& rng) {
    const auto basis = hom_basis(m, n);
    if (basis.empty()) return ModuleHom::zero(m, n);
    std::uniform_int_distribution<std::uint32_t> dist(0, m.field().modulus() - 1);
    std::vector<std::uint32_t> coeffs(basis.size());
    for (auto& c : coeffs) c = dist(rng);
    return hom_linear_combination(basis, coeffs);
}

}  // namespace fixtures
