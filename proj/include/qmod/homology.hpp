#pragma once

#include <memory>
#include <vector>

#include "qmod/decomp.hpp"

namespace qmod {

// Minimal projective covers, syzygies, the duality D, the transpose Tr, the
// Auslander-Reiten translates, Ext^1 with explicit pushout middle terms, and
// the n-th-syzygy membership test. Composition of homs is written left to
// right throughout, matching the right-module conventions of the rest of the
// library.

struct ProjectiveCover {
    FreeModuleLayout p0;     // the covering projective with its generator layout
    ModuleHom cover;         // p0 -> m, an epimorphism with kernel inside rad(p0)
    SubWithInclusion omega;  // the kernel, i.e. the first syzygy
};

// Minimal projective cover: P0 has one generator per simple summand of
// top(m), lifted through the top projection.
inline ProjectiveCover projective_cover(const Representation& m) {
    const AlgebraPtr& a = m.algebra();
    const int nv = a->quiver().vertex_count();
    const QuotWithProjection t = top(m);
    std::vector<int> gen_vertices;
    std::vector<Matrix> images;
    for (int v = 1; v <= nv; ++v) {
        const int mult = t.rep.dim_at(v);
        if (mult == 0) continue;
        // Rows of x solve x * proj = id, so they lift the top basis at v.
        auto x = solve_left(t.projection.map_at(v), Matrix::identity(m.field(), mult));
        if (!x) throw std::logic_error("projective_cover: top projection is not surjective");
        for (int r = 0; r < mult; ++r) {
            gen_vertices.push_back(v);
            images.push_back(x->row(r));
        }
    }
    FreeModuleLayout p0(a, std::move(gen_vertices));
    ModuleHom cover = hom_from_generator_images(p0, m, images);
    SubWithInclusion omega = kernel(cover);
    if (omega.rep.total_dim() != p0.rep().total_dim() - m.total_dim())
        throw std::logic_error("projective_cover: lifted map is not surjective");
    return {std::move(p0), std::move(cover), std::move(omega)};
}

struct ProjectivePresentation {
    Representation p1;
    Representation p0;
    ModuleHom map;    // p1 -> p0, image = kernel of cover
    ModuleHom cover;  // p0 -> m
};

inline ProjectivePresentation presentation(const Representation& m) {
    ProjectiveCover c0 = projective_cover(m);
    ProjectiveCover c1 = projective_cover(c0.omega.rep);
    ModuleHom map = compose(c1.cover, c0.omega.inclusion);
    return {c1.p0.rep(), c0.p0.rep(), std::move(map), std::move(c0.cover)};
}

// n-th syzygy: iterated kernel of minimal projective covers.
inline Representation syzygy(const Representation& m, int n) {
    if (n < 1) throw std::invalid_argument("syzygy: n must be >= 1");
    Representation s = m;
    for (int i = 0; i < n; ++i) s = projective_cover(s).omega.rep;
    return s;
}

// A module is projective iff its minimal cover has zero kernel.
inline bool is_projective_module(const Representation& m) {
    return projective_cover(m).omega.rep.is_zero_module();
}

// D = Hom_K(-, K): same dimension vector over the opposite algebra, each
// arrow action transposed onto the reversed arrow.
inline Representation dual(const Representation& m) {
    const AlgebraPtr op = opposite(m.algebra());
    std::vector<Matrix> actions;
    actions.reserve(m.actions().size());
    for (const Matrix& act : m.actions()) actions.push_back(act.transposed());
    return Representation(op, m.dims(), std::move(actions));
}

inline bool is_injective_module(const Representation& m) { return is_projective_module(dual(m)); }

// Cosyzygy via duality: the n-th cokernel in a minimal injective coresolution.
inline Representation cosyzygy(const Representation& m, int n) {
    if (n < 1) throw std::invalid_argument("cosyzygy: n must be >= 1");
    return dual(syzygy(dual(m), n));
}

// Auslander-Bridger transpose: apply Hom(-, A) to a minimal presentation
// P1 -> P0 -> m -> 0 and take the cokernel of Hom(P0, A) -> Hom(P1, A) as a
// module over the opposite algebra. Projective summands of m are annihilated.
inline Representation transpose(const Representation& m) {
    const AlgebraPtr& a = m.algebra();
    ProjectiveCover c0 = projective_cover(m);
    ProjectiveCover c1 = projective_cover(c0.omega.rep);
    const ModuleHom map = compose(c1.cover, c0.omega.inclusion);  // p1 -> p0

    const AlgebraPtr op = opposite(a);
    FreeModuleLayout f0(op, c0.p0.gen_vertices());
    FreeModuleLayout f1(op, c1.p0.gen_vertices());

    // The presentation map is a matrix of paths a_{uv} in e_{i_u} A e_{j_v};
    // Hom(-, A) turns it into left multiplication, i.e. the reversed paths
    // acting between the opposite projectives.
    std::vector<Matrix> images;
    for (int u = 0; u < f0.gen_count(); ++u)
        images.emplace_back(a->field(), 1, f1.rep().dim_at(f0.gen_vertex(u)));
    for (int v = 0; v < c1.p0.gen_count(); ++v) {
        const int jv = c1.p0.gen_vertex(v);
        const int trivial_idx = *a->basis_index(Path::trivial(jv));
        const Matrix gen_row = map.map_at(jv).row(c1.p0.position(v, trivial_idx));
        const auto& layout = c0.p0.component_layout(jv);
        for (std::size_t pos = 0; pos < layout.size(); ++pos) {
            const std::uint32_t c = gen_row(0, static_cast<int>(pos));
            if (c == 0) continue;
            const auto [u, pidx] = layout[pos];
            const Path rev = reversed_path(a->basis()[static_cast<std::size_t>(pidx)]);
            const auto opidx = op->basis_index(rev);
            if (!opidx) throw std::logic_error("transpose: reversed basis path missing in opposite");
            images[static_cast<std::size_t>(u)].add_at(0, f1.position(v, *opidx), c);
        }
    }
    const ModuleHom g = hom_from_generator_images(f0, f1.rep(), images);
    return cokernel(g).rep;
}

// tau = D Tr kills projective summands; tau^{-1} = Tr D kills injectives.
inline Representation tau(const Representation& m) { return dual(transpose(m)); }
inline Representation tau_inverse(const Representation& m) { return transpose(dual(m)); }

// Higher translate tau_i = tau(Omega^{i-1}); tau_1 = tau.
inline Representation tau_n(const Representation& m, int i) {
    if (i < 1) throw std::invalid_argument("tau_n: index must be >= 1");
    return tau(i == 1 ? m : syzygy(m, i - 1));
}

// The presentation data an Ext class is expressed against.
struct ExtContext {
    Representation x;
    Representation syzygy;   // Omega^1(x)
    ModuleHom inclusion;     // Omega^1(x) -> P0
    ModuleHom cover;         // P0 -> x
};

inline std::shared_ptr<const ExtContext> ext_context(const Representation& x) {
    ProjectiveCover c = projective_cover(x);
    return std::make_shared<const ExtContext>(
        ExtContext{x, c.omega.rep, c.omega.inclusion, c.cover});
}

// An element of Ext^1(x, y) represented by a hom Omega^1(x) -> y. Two
// representatives give the same class iff their difference extends to P0,
// i.e. lies in the image of the restriction map.
struct ExtClass {
    ModuleHom rep;
    std::shared_ptr<const ExtContext> context;
};

// Basis of Ext^1(x, y) = Hom(Omega^1 x, y) / im(Hom(P0, y) -> Hom(Omega^1 x, y)).
inline std::vector<ExtClass> ext1_basis(const Representation& x, const Representation& y) {
    if (x.algebra().get() != y.algebra().get())
        throw std::invalid_argument("ext1_basis: modules over different algebras");
    auto ctx = ext_context(x);
    const auto homs = hom_basis(ctx->syzygy, y);
    std::vector<ExtClass> out;
    if (homs.empty()) return out;
    RowSpace seen(x.field(), flatten_hom(homs[0]).cols());
    for (const ModuleHom& h : hom_basis(ctx->cover.source(), y))
        seen.insert(flatten_hom(compose(ctx->inclusion, h)));
    for (const ModuleHom& h : homs)
        if (seen.insert(flatten_hom(h))) out.push_back({h, ctx});
    return out;
}

inline ExtClass zero_ext_class(const Representation& x, const Representation& y) {
    auto ctx = ext_context(x);
    return {ModuleHom::zero(ctx->syzygy, y), ctx};
}

struct ShortExactSequence {
    ModuleHom left;   // mono y -> w
    ModuleHom right;  // epi w -> x
};

// Pushout of 0 -> Omega^1 x -> P0 -> x -> 0 along the class representative,
// yielding 0 -> y -> w -> x -> 0 with dims(w) = dims(x) + dims(y).
inline ShortExactSequence extension_from_class(const ExtClass& c) {
    const Representation& y = c.rep.target();
    const ExtContext& ctx = *c.context;
    const DirectSum ds = direct_sum(y.algebra(), {y, ctx.cover.source()});
    const ModuleHom u = compose(c.rep, ds.inclusions[0]) +
                        compose(ctx.inclusion, ds.inclusions[1]).negated();
    const QuotWithProjection co = cokernel(u);
    ModuleHom left = compose(ds.inclusions[0], co.projection);
    ModuleHom right = factor_through_projection(co, compose(ds.projections[1], ctx.cover));
    return {std::move(left), std::move(right)};
}

inline bool is_exact(const ShortExactSequence& s) {
    if (!(s.left.target() == s.right.source())) return false;
    if (!is_injective_hom(s.left) || !is_surjective_hom(s.right)) return false;
    const int nv = s.left.source().algebra_ref().quiver().vertex_count();
    for (int v = 1; v <= nv; ++v) {
        // Canonical RREF bases make image = kernel a direct comparison.
        const RowSpace img(s.left.map_at(v));
        const RowSpace ker(kernel_basis(s.right.map_at(v)));
        if (!(img.basis() == ker.basis())) return false;
    }
    return true;
}

// Splitness is decided by searching for a section of the epimorphism, which
// is one linear solve over the Hom space.
inline bool is_split(const ShortExactSequence& s) {
    const Representation& x = s.right.target();
    const Representation& w = s.right.source();
    if (x.total_dim() == 0) return true;
    const auto homs = hom_basis(x, w);
    if (homs.empty()) return false;
    std::vector<Matrix> rows;
    rows.reserve(homs.size());
    for (const ModuleHom& h : homs) rows.push_back(flatten_hom(compose(h, s.right)));
    const Matrix target = flatten_hom(ModuleHom::identity(x));
    return solve_left(vstack(rows), target).has_value();
}

struct NthSyzygyReport {
    bool holds = false;
    Representation comparison;        // Omega^n(Omega^{-n}(x))
    Decomposition comparison_summands;
    Decomposition x_summands;
    std::vector<std::string> failing;  // dimension vectors of summands with no match
};

// The summand criterion for membership in Omega^n(mod-A): x is a direct
// summand of an n-th syzygy module iff every indecomposable summand of x is
// projective or occurs (with multiplicity) in Omega^n(Omega^{-n}(x)).
inline NthSyzygyReport is_nth_syzygy(const Representation& x, int n, const DecompOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("is_nth_syzygy: n must be >= 1");
    Representation t = syzygy(cosyzygy(x, n), n);
    NthSyzygyReport report{true, t, decompose(t, opts), decompose(x, opts), {}};
    for (const DecompSummand& sx : report.x_summands.summands) {
        if (is_projective_module(sx.rep)) continue;
        int available = 0;
        for (const DecompSummand& st : report.comparison_summands.summands)
            if (is_isomorphic(sx.rep, st.rep, opts)) {
                available = st.multiplicity;
                break;
            }
        if (available < sx.multiplicity) {
            report.holds = false;
            report.failing.push_back(dims_to_string(sx.rep.dims()));
        }
    }
    return report;
}

struct TauOmegaReport {
    bool holds = false;
    Decomposition x_summands;
    // One entry per summand class: "injective" or the syzygy report verdict.
    std::vector<std::pair<std::string, bool>> summand_verdicts;
};

// Membership in tau(Omega^i(mod-A)), the additive closure of the translates
// of i-th syzygy modules together with all injectives. Summand-closure is
// assumed, consistent with the summand-based syzygy criterion above.
inline TauOmegaReport in_tau_omega(const Representation& x, int i, const DecompOptions& opts = {}) {
    if (i < 1) throw std::invalid_argument("in_tau_omega: index must be >= 1");
    TauOmegaReport report{true, decompose(x, opts), {}};
    for (const DecompSummand& s : report.x_summands.summands) {
        const std::string label = dims_to_string(s.rep.dims());
        if (is_injective_module(s.rep)) {
            report.summand_verdicts.emplace_back(label + " injective", true);
            continue;
        }
        const bool ok = is_nth_syzygy(tau_inverse(s.rep), i, opts).holds;
        report.summand_verdicts.emplace_back(label + " via tau^{-1}", ok);
        if (!ok) report.holds = false;
    }
    return report;
}

}  // namespace qmod
