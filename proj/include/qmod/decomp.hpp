#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "qmod/hom.hpp"

namespace qmod {

// The randomized fallbacks signal exhaustion instead of guessing: a "true" or
// a completed decomposition is always certified by witnesses, only
// "inconclusive" can be budget-dependent.
struct InconclusiveIsomorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconclusiveDecomposition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecompOptions {
    std::uint64_t seed = 0x51ab5eedULL;
    std::size_t exhaustive_bound = 1'000'000;  // exhaustive search while q^dim <= bound
    int random_budget = 256;
};

struct DecompPiece {
    Representation rep;
    ModuleHom include;  // rep -> m
    ModuleHom project;  // m -> rep
    int summand_index = -1;
};

struct DecompSummand {
    Representation rep;
    int multiplicity;
};

struct Decomposition {
    std::vector<DecompSummand> summands;  // indecomposables with multiplicities, canonically ordered
    std::vector<DecompPiece> pieces;      // one splitting witness per copy
};

namespace detail {

inline bool power_within(std::uint32_t p, std::size_t d, std::size_t bound) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > bound / p) return false;
        total *= p;
    }
    return total <= bound;
}

// Odometer enumeration of GF(p)^d; fn returns true to stop early.
template <typename Fn>
bool for_each_coeff_vector(std::uint32_t p, std::size_t d, Fn&& fn) {
    std::vector<std::uint32_t> c(d, 0);
    while (true) {
        if (fn(c)) return true;
        std::size_t i = 0;
        while (i < d) {
            if (++c[i] < p) break;
            c[i] = 0;
            ++i;
        }
        if (i == d) return false;
    }
}

inline bool is_invertible_endo(const ModuleHom& f) {
    const int nv = f.source().algebra_ref().quiver().vertex_count();
    for (int v = 1; v <= nv; ++v)
        if (!is_invertible(f.map_at(v))) return false;
    return true;
}

// Stable kernel/image of phi^N for N >= total dimension (Fitting's lemma).
inline std::pair<SubWithInclusion, SubWithInclusion> fitting_pair(const Representation& m,
                                                                  const ModuleHom& phi) {
    ModuleHom power = phi;
    int reach = 1;
    while (reach < m.total_dim()) {
        power = compose(power, power);
        reach *= 2;
    }
    return {kernel(power), image(power)};
}

// Witnesses for m = K + I when the two subs are complementary: per-vertex
// stacked bases are invertible, and the projections are read off the inverse.
inline std::optional<std::pair<DecompPiece, DecompPiece>> complement_witnesses(
    const Representation& m, const SubWithInclusion& k, const SubWithInclusion& i) {
    const int nv = m.algebra_ref().quiver().vertex_count();
    std::vector<Matrix> proj_k, proj_i;
    for (int v = 1; v <= nv; ++v) {
        const Matrix stacked = vstack({k.inclusion.map_at(v), i.inclusion.map_at(v)});
        auto inv = inverse(stacked);
        if (!inv) return std::nullopt;  // not complementary
        std::vector<int> first(static_cast<std::size_t>(k.rep.dim_at(v)));
        std::vector<int> second(static_cast<std::size_t>(i.rep.dim_at(v)));
        for (std::size_t j = 0; j < first.size(); ++j) first[j] = static_cast<int>(j);
        for (std::size_t j = 0; j < second.size(); ++j)
            second[j] = k.rep.dim_at(v) + static_cast<int>(j);
        proj_k.push_back(inv->selected_columns(first));
        proj_i.push_back(inv->selected_columns(second));
    }
    DecompPiece pk{k.rep, k.inclusion, ModuleHom(m, k.rep, std::move(proj_k))};
    DecompPiece pi{i.rep, i.inclusion, ModuleHom(m, i.rep, std::move(proj_i))};
    return std::make_pair(std::move(pk), std::move(pi));
}

inline std::optional<std::pair<DecompPiece, DecompPiece>> try_split(const Representation& m,
                                                                    const ModuleHom& phi) {
    if (phi.is_zero()) return std::nullopt;
    auto [k, i] = fitting_pair(m, phi);
    if (k.rep.total_dim() == 0 || i.rep.total_dim() == 0) return std::nullopt;
    return complement_witnesses(m, k, i);
}

// Deterministic split search: for each basis endomorphism h and scalar c, try
// the Fitting pair of h - c*id. Whenever End(m)/rad has two summand blocks,
// some h separates eigenvalues and this sweep finds a split.
inline std::optional<std::pair<DecompPiece, DecompPiece>> sweep_split(
    const Representation& m, const std::vector<ModuleHom>& endos) {
    const std::uint32_t p = m.field().modulus();
    const ModuleHom id = ModuleHom::identity(m);
    for (const ModuleHom& h : endos)
        for (std::uint32_t c = 0; c < p; ++c) {
            auto split = try_split(m, h - id.scaled(c));
            if (split) return split;
        }
    return std::nullopt;
}

inline std::optional<std::pair<DecompPiece, DecompPiece>> idempotent_split(
    const Representation& m, const std::vector<ModuleHom>& endos) {
    const std::uint32_t p = m.field().modulus();
    const ModuleHom id = ModuleHom::identity(m);
    std::optional<std::pair<DecompPiece, DecompPiece>> found;
    for_each_coeff_vector(p, endos.size(), [&](const std::vector<std::uint32_t>& c) {
        bool all_zero = true;
        for (std::uint32_t x : c)
            if (x) {
                all_zero = false;
                break;
            }
        if (all_zero) return false;
        const ModuleHom e = hom_linear_combination(endos, c);
        if (!(compose(e, e) == e) || e == id) return false;
        auto k = kernel(e);
        auto i = image(e);
        found = complement_witnesses(m, k, i);
        return found.has_value();
    });
    return found;
}

inline std::optional<std::pair<DecompPiece, DecompPiece>> random_split(
    const Representation& m, const std::vector<ModuleHom>& endos, std::mt19937_64& rng, int budget) {
    const std::uint32_t p = m.field().modulus();
    const ModuleHom id = ModuleHom::identity(m);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (int t = 0; t < budget; ++t) {
        std::vector<std::uint32_t> c(endos.size());
        for (auto& x : c) x = dist(rng);
        const ModuleHom phi = hom_linear_combination(endos, c);
        for (std::uint32_t lam = 0; lam < p; ++lam) {
            auto split = try_split(m, phi - id.scaled(lam));
            if (split) return split;
        }
    }
    return std::nullopt;
}

inline std::vector<DecompPiece> decompose_pieces(const Representation& m, const DecompOptions& opts,
                                                 std::mt19937_64& rng) {
    std::vector<DecompPiece> out;
    if (m.total_dim() == 0) return out;
    const auto endos = hom_basis(m, m);
    auto recurse = [&](std::pair<DecompPiece, DecompPiece> split) {
        for (DecompPiece* half : {&split.first, &split.second}) {
            for (DecompPiece& piece : decompose_pieces(half->rep, opts, rng))
                out.push_back({piece.rep, compose(piece.include, half->include),
                               compose(half->project, piece.project), -1});
        }
    };
    if (endos.size() == 1) {  // End(m) = k, hence local, hence indecomposable
        out.push_back({m, ModuleHom::identity(m), ModuleHom::identity(m), -1});
        return out;
    }
    if (auto split = sweep_split(m, endos)) {
        recurse(std::move(*split));
        return out;
    }
    if (power_within(m.field().modulus(), endos.size(), opts.exhaustive_bound)) {
        if (auto split = idempotent_split(m, endos)) {
            recurse(std::move(*split));
            return out;
        }
        out.push_back({m, ModuleHom::identity(m), ModuleHom::identity(m), -1});
        return out;
    }
    if (auto split = random_split(m, endos, rng, opts.random_budget)) {
        recurse(std::move(*split));
        return out;
    }
    throw InconclusiveDecomposition(
        "decompose: random budget exhausted without a split and End too large for exhaustive search");
}

inline bool rep_key_less(const Representation& a, const Representation& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    if (a.dims() != b.dims()) return a.dims() < b.dims();
    for (std::size_t k = 0; k < a.actions().size(); ++k)
        if (!(a.actions()[k] == b.actions()[k])) return a.actions()[k].data() < b.actions()[k].data();
    return false;
}

}  // namespace detail

// True iff an invertible module homomorphism exists. Exhaustive over the Hom
// space when q^dim fits the bound (deterministic and certain); otherwise
// seeded random search, where only "inconclusive" is budget-dependent.
inline bool is_isomorphic(const Representation& m, const Representation& n,
                          const DecompOptions& opts = {}) {
    if (m.algebra().get() != n.algebra().get())
        throw std::invalid_argument("is_isomorphic: modules over different algebras");
    if (m.dims() != n.dims()) return false;
    if (m.total_dim() == 0) return true;
    const auto homs = hom_basis(m, n);
    if (homs.empty()) return false;
    // An isomorphism forces all four Hom spaces to have equal dimension.
    if (hom_basis(n, m).size() != homs.size() || hom_basis(m, m).size() != homs.size() ||
        hom_basis(n, n).size() != homs.size())
        return false;
    const std::uint32_t p = m.field().modulus();
    auto invertible = [&](const std::vector<std::uint32_t>& c) {
        const ModuleHom f = hom_linear_combination(homs, c);
        return is_isomorphism_hom(f);
    };
    if (detail::power_within(p, homs.size(), opts.exhaustive_bound))
        return detail::for_each_coeff_vector(p, homs.size(), invertible);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (int t = 0; t < opts.random_budget; ++t) {
        std::vector<std::uint32_t> c(homs.size());
        for (auto& x : c) x = dist(rng);
        if (invertible(c)) return true;
    }
    throw InconclusiveIsomorphism(
        "is_isomorphic: equal Hom dimensions but no invertible map found within the random budget");
}

// True iff End(m) has no idempotent other than 0 and the identity.
inline bool is_indecomposable(const Representation& m, const DecompOptions& opts = {}) {
    if (m.total_dim() == 0) throw std::invalid_argument("is_indecomposable: zero module");
    const auto endos = hom_basis(m, m);
    if (endos.size() == 1) return true;
    if (detail::sweep_split(m, endos)) return false;
    if (detail::power_within(m.field().modulus(), endos.size(), opts.exhaustive_bound))
        return !detail::idempotent_split(m, endos).has_value();
    std::mt19937_64 rng(opts.seed);
    if (detail::random_split(m, endos, rng, opts.random_budget)) return false;
    throw InconclusiveDecomposition(
        "is_indecomposable: probing budget exhausted and End too large for exhaustive search");
}

// Full Krull-Schmidt decomposition: Fitting recursion with certified leaves.
// Summands are grouped up to isomorphism and ordered canonically (dimension
// vector, then matrix data), so reruns with one seed are bit-identical.
inline Decomposition decompose(const Representation& m, const DecompOptions& opts = {}) {
    std::mt19937_64 rng(opts.seed);
    Decomposition d;
    d.pieces = detail::decompose_pieces(m, opts, rng);
    for (DecompPiece& piece : d.pieces) {
        int found = -1;
        for (std::size_t g = 0; g < d.summands.size(); ++g)
            if (is_isomorphic(d.summands[g].rep, piece.rep, opts)) {
                found = static_cast<int>(g);
                break;
            }
        if (found < 0) {
            d.summands.push_back({piece.rep, 1});
            piece.summand_index = static_cast<int>(d.summands.size()) - 1;
        } else {
            ++d.summands[static_cast<std::size_t>(found)].multiplicity;
            piece.summand_index = found;
        }
    }
    std::vector<int> order(d.summands.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return detail::rep_key_less(d.summands[static_cast<std::size_t>(a)].rep,
                                    d.summands[static_cast<std::size_t>(b)].rep);
    });
    std::vector<int> rank_of(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<DecompSummand> sorted;
    for (int idx : order) sorted.push_back(d.summands[static_cast<std::size_t>(idx)]);
    d.summands = std::move(sorted);
    for (DecompPiece& piece : d.pieces)
        piece.summand_index = rank_of[static_cast<std::size_t>(piece.summand_index)];
    return d;
}

// Multiset embedding of indecomposable summands of x into those of y.
inline bool is_direct_summand(const Representation& x, const Representation& y,
                              const DecompOptions& opts = {}) {
    if (x.algebra().get() != y.algebra().get())
        throw std::invalid_argument("is_direct_summand: modules over different algebras");
    const Decomposition dx = decompose(x, opts);
    const Decomposition dy = decompose(y, opts);
    for (const DecompSummand& sx : dx.summands) {
        int available = 0;
        for (const DecompSummand& sy : dy.summands)
            if (is_isomorphic(sx.rep, sy.rep, opts)) {
                available = sy.multiplicity;
                break;
            }
        if (available < sx.multiplicity) return false;
    }
    return true;
}

}  // namespace qmod
