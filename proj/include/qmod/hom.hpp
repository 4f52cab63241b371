#pragma once

#include <vector>

#include "qmod/representation.hpp"

namespace qmod {

// A module homomorphism f: M -> N given per vertex by a dims_M[v] x dims_N[v]
// matrix. Construction checks the intertwining equations
// f_i * N_a = M_a * f_j for every arrow a: i -> j.
class ModuleHom {
public:
    ModuleHom(Representation source, Representation target, std::vector<Matrix> vertex_maps)
        : ModuleHom(std::move(source), std::move(target), std::move(vertex_maps), true) {}

    // For maps that are homomorphisms by construction (linear combinations and
    // composites of validated homs); skips the intertwining check.
    static ModuleHom trusted(Representation source, Representation target,
                             std::vector<Matrix> vertex_maps) {
        return ModuleHom(std::move(source), std::move(target), std::move(vertex_maps), false);
    }

    static ModuleHom zero(const Representation& source, const Representation& target) {
        std::vector<Matrix> maps;
        const int nv = source.algebra_ref().quiver().vertex_count();
        for (int v = 1; v <= nv; ++v)
            maps.emplace_back(source.field(), source.dim_at(v), target.dim_at(v));
        return trusted(source, target, std::move(maps));
    }

    static ModuleHom identity(const Representation& m) {
        std::vector<Matrix> maps;
        const int nv = m.algebra_ref().quiver().vertex_count();
        for (int v = 1; v <= nv; ++v) maps.push_back(Matrix::identity(m.field(), m.dim_at(v)));
        return trusted(m, m, std::move(maps));
    }

    const Representation& source() const { return source_; }
    const Representation& target() const { return target_; }
    const Matrix& map_at(int vertex) const { return maps_.at(static_cast<std::size_t>(vertex - 1)); }
    const std::vector<Matrix>& vertex_maps() const { return maps_; }

    bool is_zero() const {
        for (const Matrix& m : maps_)
            if (!m.is_zero()) return false;
        return true;
    }

    ModuleHom operator+(const ModuleHom& o) const {
        require_parallel(o);
        std::vector<Matrix> maps;
        for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] + o.maps_[v]);
        return trusted(source_, target_, std::move(maps));
    }

    ModuleHom operator-(const ModuleHom& o) const {
        require_parallel(o);
        std::vector<Matrix> maps;
        for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] - o.maps_[v]);
        return trusted(source_, target_, std::move(maps));
    }

    ModuleHom scaled(std::uint32_t c) const {
        std::vector<Matrix> maps;
        for (const Matrix& m : maps_) maps.push_back(m.scaled(c));
        return trusted(source_, target_, std::move(maps));
    }

    ModuleHom negated() const { return scaled(source_.field().neg(1 % source_.field().modulus())); }

    bool operator==(const ModuleHom& o) const {
        return source_ == o.source_ && target_ == o.target_ && maps_ == o.maps_;
    }

private:
    ModuleHom(Representation source, Representation target, std::vector<Matrix> vertex_maps, bool check)
        : source_(std::move(source)), target_(std::move(target)), maps_(std::move(vertex_maps)) {
        if (source_.algebra().get() != target_.algebra().get())
            throw std::invalid_argument("ModuleHom: source and target over different algebras");
        const Quiver& q = source_.algebra_ref().quiver();
        if (static_cast<int>(maps_.size()) != q.vertex_count())
            throw std::invalid_argument("ModuleHom: one matrix per vertex required");
        for (int v = 1; v <= q.vertex_count(); ++v) {
            const Matrix& m = maps_[static_cast<std::size_t>(v - 1)];
            if (m.rows() != source_.dim_at(v) || m.cols() != target_.dim_at(v))
                throw std::invalid_argument("ModuleHom: vertex map has wrong shape");
        }
        if (!check) return;
        for (int k = 0; k < q.arrow_count(); ++k) {
            const Arrow& a = q.arrow(k);
            const Matrix lhs = maps_[static_cast<std::size_t>(a.source - 1)] * target_.action(k);
            const Matrix rhs = source_.action(k) * maps_[static_cast<std::size_t>(a.target - 1)];
            if (!(lhs == rhs))
                throw std::invalid_argument("ModuleHom: vertex maps do not intertwine arrow '" +
                                            a.label + "'");
        }
    }

    void require_parallel(const ModuleHom& o) const {
        if (!(source_ == o.source_) || !(target_ == o.target_))
            throw std::invalid_argument("ModuleHom: arithmetic requires equal source and target");
    }

    Representation source_;
    Representation target_;
    std::vector<Matrix> maps_;
};

// Composition "f then g" (source of g must equal target of f).
inline ModuleHom compose(const ModuleHom& f, const ModuleHom& g) {
    if (!(f.target() == g.source())) throw std::invalid_argument("compose: middle modules differ");
    std::vector<Matrix> maps;
    const int nv = f.source().algebra_ref().quiver().vertex_count();
    for (int v = 1; v <= nv; ++v) maps.push_back(f.map_at(v) * g.map_at(v));
    return ModuleHom::trusted(f.source(), g.target(), std::move(maps));
}

inline bool is_injective_hom(const ModuleHom& f) {
    const int nv = f.source().algebra_ref().quiver().vertex_count();
    for (int v = 1; v <= nv; ++v)
        if (rank(f.map_at(v)) != f.source().dim_at(v)) return false;
    return true;
}

inline bool is_surjective_hom(const ModuleHom& f) {
    const int nv = f.source().algebra_ref().quiver().vertex_count();
    for (int v = 1; v <= nv; ++v)
        if (rank(f.map_at(v)) != f.target().dim_at(v)) return false;
    return true;
}

inline bool is_isomorphism_hom(const ModuleHom& f) {
    return f.source().dims() == f.target().dims() && is_injective_hom(f);
}

struct SubWithInclusion {
    Representation rep;
    ModuleHom inclusion;  // rep -> ambient
};

struct QuotWithProjection {
    Representation rep;
    ModuleHom projection;  // ambient -> rep
};

struct DirectSum {
    Representation rep;
    std::vector<ModuleHom> inclusions;
    std::vector<ModuleHom> projections;
};

// Smallest subrepresentation containing the given row vectors (one generator
// matrix per vertex, rows in the vertex component), with its inclusion.
inline SubWithInclusion submodule_generated(const Representation& m,
                                            const std::vector<Matrix>& generators) {
    const Quiver& q = m.algebra_ref().quiver();
    const int nv = q.vertex_count();
    if (static_cast<int>(generators.size()) != nv)
        throw std::invalid_argument("submodule_generated: one generator matrix per vertex required");
    std::vector<RowSpace> spaces;
    for (int v = 1; v <= nv; ++v) {
        if (generators[static_cast<std::size_t>(v - 1)].cols() != m.dim_at(v))
            throw std::invalid_argument("submodule_generated: generator width mismatch at vertex " +
                                        std::to_string(v));
        spaces.emplace_back(generators[static_cast<std::size_t>(v - 1)]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k < q.arrow_count(); ++k) {
            const Arrow& a = q.arrow(k);
            RowSpace& src = spaces[static_cast<std::size_t>(a.source - 1)];
            if (src.rank() == 0) continue;
            const Matrix img = src.basis() * m.action(k);
            RowSpace& tgt = spaces[static_cast<std::size_t>(a.target - 1)];
            for (int i = 0; i < img.rows(); ++i)
                if (tgt.insert(img.row(i))) changed = true;
        }
    }
    std::vector<int> dims;
    for (const RowSpace& s : spaces) dims.push_back(s.rank());
    std::vector<Matrix> actions;
    for (int k = 0; k < q.arrow_count(); ++k) {
        const Arrow& a = q.arrow(k);
        const RowSpace& src = spaces[static_cast<std::size_t>(a.source - 1)];
        const RowSpace& tgt = spaces[static_cast<std::size_t>(a.target - 1)];
        actions.push_back(tgt.coordinates(src.basis() * m.action(k)));
    }
    Representation sub(m.algebra(), std::move(dims), std::move(actions));
    std::vector<Matrix> incl;
    for (const RowSpace& s : spaces) incl.push_back(s.basis());
    ModuleHom inclusion(sub, m, std::move(incl));
    return {std::move(sub), std::move(inclusion)};
}

// Quotient of m by a subrepresentation, with its projection. Coset basis
// vectors are the non-pivot coordinates of the reduced sub bases.
inline QuotWithProjection quotient_by_submodule(const Representation& m, const SubWithInclusion& sub) {
    if (!(sub.inclusion.target() == m))
        throw std::invalid_argument("quotient_by_submodule: submodule of a different module");
    const Quiver& q = m.algebra_ref().quiver();
    const int nv = q.vertex_count();
    std::vector<RowSpace> spaces;
    std::vector<std::vector<int>> coset;
    std::vector<int> dims;
    for (int v = 1; v <= nv; ++v) {
        spaces.emplace_back(sub.inclusion.map_at(v));
        coset.push_back(spaces.back().complement());
        dims.push_back(static_cast<int>(coset.back().size()));
    }
    std::vector<Matrix> actions;
    for (int k = 0; k < q.arrow_count(); ++k) {
        const Arrow& a = q.arrow(k);
        const auto& src_coset = coset[static_cast<std::size_t>(a.source - 1)];
        const RowSpace& tgt = spaces[static_cast<std::size_t>(a.target - 1)];
        const auto& tgt_coset = coset[static_cast<std::size_t>(a.target - 1)];
        Matrix mat(m.field(), static_cast<int>(src_coset.size()), static_cast<int>(tgt_coset.size()));
        for (std::size_t r = 0; r < src_coset.size(); ++r) {
            Matrix e(m.field(), 1, m.dim_at(a.source));
            e.set(0, src_coset[r], 1 % m.field().modulus());
            const Matrix w = tgt.reduce(e * m.action(k));
            for (std::size_t c = 0; c < tgt_coset.size(); ++c)
                mat.set(static_cast<int>(r), static_cast<int>(c), w(0, tgt_coset[c]));
        }
        actions.push_back(std::move(mat));
    }
    Representation quot(m.algebra(), std::move(dims), std::move(actions));
    std::vector<Matrix> proj;
    for (int v = 1; v <= nv; ++v) {
        const RowSpace& s = spaces[static_cast<std::size_t>(v - 1)];
        const auto& cs = coset[static_cast<std::size_t>(v - 1)];
        Matrix p(m.field(), m.dim_at(v), static_cast<int>(cs.size()));
        for (int i = 0; i < m.dim_at(v); ++i) {
            Matrix e(m.field(), 1, m.dim_at(v));
            e.set(0, i, 1 % m.field().modulus());
            const Matrix w = s.reduce(e);
            for (std::size_t c = 0; c < cs.size(); ++c) p.set(i, static_cast<int>(c), w(0, cs[c]));
        }
        proj.push_back(std::move(p));
    }
    ModuleHom projection(m, quot, std::move(proj));
    return {std::move(quot), std::move(projection)};
}

// rad(M) = sum of the images of all arrow actions.
inline SubWithInclusion radical(const Representation& m) {
    const Quiver& q = m.algebra_ref().quiver();
    const int nv = q.vertex_count();
    std::vector<Matrix> gens;
    for (int v = 1; v <= nv; ++v) gens.emplace_back(m.field(), 0, m.dim_at(v));
    for (int k = 0; k < q.arrow_count(); ++k) {
        const int t = q.arrow(k).target;
        gens[static_cast<std::size_t>(t - 1)] = vstack({gens[static_cast<std::size_t>(t - 1)], m.action(k)});
    }
    return submodule_generated(m, gens);
}

// soc(M) = intersection of the kernels of all arrow actions.
inline SubWithInclusion socle(const Representation& m) {
    const Quiver& q = m.algebra_ref().quiver();
    const int nv = q.vertex_count();
    std::vector<Matrix> gens;
    for (int v = 1; v <= nv; ++v) {
        std::vector<Matrix> out;
        for (int k = 0; k < q.arrow_count(); ++k)
            if (q.arrow(k).source == v) out.push_back(m.action(k));
        if (out.empty())
            gens.push_back(Matrix::identity(m.field(), m.dim_at(v)));
        else
            gens.push_back(kernel_basis(hstack(out)));
    }
    return submodule_generated(m, gens);
}

inline QuotWithProjection top(const Representation& m) { return quotient_by_submodule(m, radical(m)); }

namespace detail {
inline std::vector<int> hom_offsets(const Representation& m, const Representation& n) {
    const int nv = m.algebra_ref().quiver().vertex_count();
    std::vector<int> off(static_cast<std::size_t>(nv) + 1, 0);
    for (int v = 1; v <= nv; ++v)
        off[static_cast<std::size_t>(v)] = off[static_cast<std::size_t>(v - 1)] + m.dim_at(v) * n.dim_at(v);
    return off;
}
}  // namespace detail

// Vertex maps of a hom concatenated row-major into a single row vector.
inline Matrix flatten_hom(const ModuleHom& f) {
    const auto off = detail::hom_offsets(f.source(), f.target());
    Matrix out(f.source().field(), 1, off.back());
    const int nv = f.source().algebra_ref().quiver().vertex_count();
    for (int v = 1; v <= nv; ++v) {
        const Matrix& m = f.map_at(v);
        int at = off[static_cast<std::size_t>(v - 1)];
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) out.set(0, at++, m(i, j));
    }
    return out;
}

inline ModuleHom unflatten_hom(const Representation& m, const Representation& n, const Matrix& row) {
    const auto off = detail::hom_offsets(m, n);
    const int nv = m.algebra_ref().quiver().vertex_count();
    std::vector<Matrix> maps;
    for (int v = 1; v <= nv; ++v) {
        Matrix mat(m.field(), m.dim_at(v), n.dim_at(v));
        int at = off[static_cast<std::size_t>(v - 1)];
        for (int i = 0; i < mat.rows(); ++i)
            for (int j = 0; j < mat.cols(); ++j) mat.set(i, j, row(0, at++));
        maps.push_back(std::move(mat));
    }
    return ModuleHom(m, n, std::move(maps));
}

// Basis of Hom(M, N): the solution space of the intertwining linear system.
inline std::vector<ModuleHom> hom_basis(const Representation& m, const Representation& n) {
    if (m.algebra().get() != n.algebra().get())
        throw std::invalid_argument("hom_basis: modules over different algebras");
    const Quiver& q = m.algebra_ref().quiver();
    const auto uoff = detail::hom_offsets(m, n);
    const int unknowns = uoff.back();
    std::vector<int> eoff(static_cast<std::size_t>(q.arrow_count()) + 1, 0);
    for (int k = 0; k < q.arrow_count(); ++k) {
        const Arrow& a = q.arrow(k);
        eoff[static_cast<std::size_t>(k + 1)] =
            eoff[static_cast<std::size_t>(k)] + m.dim_at(a.source) * n.dim_at(a.target);
    }
    Matrix c(m.field(), unknowns, eoff.back());
    for (int k = 0; k < q.arrow_count(); ++k) {
        const Arrow& a = q.arrow(k);
        const Matrix& ma = m.action(k);
        const Matrix& na = n.action(k);
        for (int r = 0; r < m.dim_at(a.source); ++r)
            for (int col = 0; col < n.dim_at(a.target); ++col) {
                const int e = eoff[static_cast<std::size_t>(k)] + r * n.dim_at(a.target) + col;
                // (F_src * N_a)[r][col] term:
                for (int s = 0; s < n.dim_at(a.source); ++s)
                    c.add_at(uoff[static_cast<std::size_t>(a.source - 1)] + r * n.dim_at(a.source) + s, e,
                             na(s, col));
                // -(M_a * F_tgt)[r][col] term:
                for (int s = 0; s < m.dim_at(a.target); ++s)
                    c.add_at(uoff[static_cast<std::size_t>(a.target - 1)] + s * n.dim_at(a.target) + col, e,
                             m.field().neg(ma(r, s)));
            }
    }
    const Matrix solutions = kernel_basis(c);
    std::vector<ModuleHom> out;
    out.reserve(static_cast<std::size_t>(solutions.rows()));
    for (int i = 0; i < solutions.rows(); ++i) out.push_back(unflatten_hom(m, n, solutions.row(i)));
    return out;
}

inline ModuleHom hom_linear_combination(const std::vector<ModuleHom>& basis,
                                        const std::vector<std::uint32_t>& coeffs) {
    if (basis.empty()) throw std::invalid_argument("hom_linear_combination: empty basis");
    if (basis.size() != coeffs.size())
        throw std::invalid_argument("hom_linear_combination: coefficient count mismatch");
    const Representation& m = basis[0].source();
    const Representation& n = basis[0].target();
    const int nv = m.algebra_ref().quiver().vertex_count();
    std::vector<Matrix> maps;
    for (int v = 1; v <= nv; ++v) {
        Matrix acc(m.field(), m.dim_at(v), n.dim_at(v));
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coeffs[i] != 0) acc = acc + basis[i].map_at(v).scaled(coeffs[i]);
        maps.push_back(std::move(acc));
    }
    return ModuleHom::trusted(m, n, std::move(maps));
}

// Vertex-wise kernel of f, as a subrepresentation of the source.
inline SubWithInclusion kernel(const ModuleHom& f) {
    const int nv = f.source().algebra_ref().quiver().vertex_count();
    std::vector<Matrix> gens;
    for (int v = 1; v <= nv; ++v) gens.push_back(kernel_basis(f.map_at(v)));
    return submodule_generated(f.source(), gens);
}

// Vertex-wise image of f, as a subrepresentation of the target.
inline SubWithInclusion image(const ModuleHom& f) {
    const int nv = f.source().algebra_ref().quiver().vertex_count();
    std::vector<Matrix> gens;
    for (int v = 1; v <= nv; ++v) gens.push_back(f.map_at(v));
    return submodule_generated(f.target(), gens);
}

inline QuotWithProjection cokernel(const ModuleHom& f) {
    return quotient_by_submodule(f.target(), image(f));
}

// Block-diagonal direct sum, with the canonical inclusions and projections.
inline DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts) {
    const Quiver& q = a->quiver();
    const int nv = q.vertex_count();
    for (const Representation& p : parts)
        if (p.algebra().get() != a.get())
            throw std::invalid_argument("direct_sum: part over a different algebra");
    std::vector<int> dims(static_cast<std::size_t>(nv), 0);
    for (const Representation& p : parts)
        for (int v = 1; v <= nv; ++v) dims[static_cast<std::size_t>(v - 1)] += p.dim_at(v);
    std::vector<Matrix> actions;
    for (int k = 0; k < q.arrow_count(); ++k) {
        const Arrow& ar = q.arrow(k);
        Matrix m(a->field(), dims[static_cast<std::size_t>(ar.source - 1)],
                 dims[static_cast<std::size_t>(ar.target - 1)]);
        int roff = 0;
        int coff = 0;
        for (const Representation& p : parts) {
            const Matrix& block = p.action(k);
            for (int i = 0; i < block.rows(); ++i)
                for (int j = 0; j < block.cols(); ++j) m.set(roff + i, coff + j, block(i, j));
            roff += p.dim_at(ar.source);
            coff += p.dim_at(ar.target);
        }
        actions.push_back(std::move(m));
    }
    Representation sum(a, dims, std::move(actions));
    DirectSum out{sum, {}, {}};
    std::vector<int> offset(static_cast<std::size_t>(nv), 0);
    for (const Representation& p : parts) {
        std::vector<Matrix> incl;
        std::vector<Matrix> proj;
        for (int v = 1; v <= nv; ++v) {
            Matrix in(a->field(), p.dim_at(v), sum.dim_at(v));
            for (int i = 0; i < p.dim_at(v); ++i)
                in.set(i, offset[static_cast<std::size_t>(v - 1)] + i, 1 % a->field().modulus());
            incl.push_back(in);
            proj.push_back(in.transposed());
        }
        out.inclusions.push_back(ModuleHom::trusted(p, sum, std::move(incl)));
        out.projections.push_back(ModuleHom::trusted(sum, p, std::move(proj)));
        for (int v = 1; v <= nv; ++v) offset[static_cast<std::size_t>(v - 1)] += p.dim_at(v);
    }
    return out;
}

// Given a projection pr: M -> Q and a hom v: M -> X vanishing on ker(pr),
// produces the induced hom Q -> X.
inline ModuleHom factor_through_projection(const QuotWithProjection& q, const ModuleHom& v) {
    if (!(q.projection.source() == v.source()))
        throw std::invalid_argument("factor_through_projection: sources differ");
    const int nv = v.source().algebra_ref().quiver().vertex_count();
    std::vector<Matrix> maps;
    for (int vx = 1; vx <= nv; ++vx) {
        auto wt = solve_left(q.projection.map_at(vx).transposed(), v.map_at(vx).transposed());
        if (!wt) throw std::logic_error("factor_through_projection: map does not factor");
        maps.push_back(wt->transposed());
    }
    return ModuleHom(q.rep, v.target(), std::move(maps));
}

// Hom out of a free module determined by the images of its generators
// (one row vector per generator, in the component at its vertex).
inline ModuleHom hom_from_generator_images(const FreeModuleLayout& f, const Representation& target,
                                           const std::vector<Matrix>& images) {
    if (target.algebra().get() != f.algebra().get())
        throw std::invalid_argument("hom_from_generator_images: algebra mismatch");
    if (static_cast<int>(images.size()) != f.gen_count())
        throw std::invalid_argument("hom_from_generator_images: one image per generator required");
    for (int g = 0; g < f.gen_count(); ++g)
        if (images[static_cast<std::size_t>(g)].rows() != 1 ||
            images[static_cast<std::size_t>(g)].cols() != target.dim_at(f.gen_vertex(g)))
            throw std::invalid_argument("hom_from_generator_images: image row has wrong shape");
    const MonomialAlgebra& alg = *f.algebra();
    const int nv = alg.quiver().vertex_count();
    std::vector<Matrix> maps;
    for (int v = 1; v <= nv; ++v) {
        const auto& layout = f.component_layout(v);
        Matrix m(target.field(), static_cast<int>(layout.size()), target.dim_at(v));
        for (std::size_t row = 0; row < layout.size(); ++row) {
            const auto [g, pidx] = layout[row];
            const Matrix img = images[static_cast<std::size_t>(g)] *
                               target.path_action(alg.basis()[static_cast<std::size_t>(pidx)]);
            m.set_row(static_cast<int>(row), img);
        }
        maps.push_back(std::move(m));
    }
    return ModuleHom(f.rep(), target, std::move(maps));
}

}  // namespace qmod
