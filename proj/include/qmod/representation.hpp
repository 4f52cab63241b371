#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "qmod/algebra.hpp"

namespace qmod {

// A right A-module as a quiver representation: one vector space dimension per
// vertex and, for each arrow a: i -> j, a dims[i] x dims[j] matrix acting on
// row vectors. Construction checks shapes and all relation equations.
class Representation {
public:
    Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> arrow_actions)
        : algebra_(std::move(algebra)), dims_(std::move(dims)), actions_(std::move(arrow_actions)) {
        const Quiver& q = algebra_->quiver();
        if (static_cast<int>(dims_.size()) != q.vertex_count())
            throw std::invalid_argument("Representation: dimension vector has wrong length");
        for (int d : dims_)
            if (d < 0) throw std::invalid_argument("Representation: negative dimension");
        if (static_cast<int>(actions_.size()) != q.arrow_count())
            throw std::invalid_argument("Representation: one matrix per arrow required");
        for (int k = 0; k < q.arrow_count(); ++k) {
            const Arrow& a = q.arrow(k);
            const Matrix& m = actions_[static_cast<std::size_t>(k)];
            if (m.field() != algebra_->field())
                throw std::invalid_argument("Representation: matrix field mismatch");
            if (m.rows() != dim_at(a.source) || m.cols() != dim_at(a.target))
                throw std::invalid_argument("Representation: matrix for arrow '" + a.label +
                                            "' has wrong shape");
        }
        for (const Path& rel : algebra_->relations())
            if (!path_action(rel).is_zero())
                throw std::invalid_argument("Representation: relation '" +
                                            path_to_string(q, rel) + "' does not act by zero");
    }

    static Representation zero(AlgebraPtr algebra) {
        const Quiver& q = algebra->quiver();
        std::vector<int> dims(static_cast<std::size_t>(q.vertex_count()), 0);
        std::vector<Matrix> actions;
        for (int k = 0; k < q.arrow_count(); ++k) actions.emplace_back(algebra->field(), 0, 0);
        return Representation(std::move(algebra), std::move(dims), std::move(actions));
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    const MonomialAlgebra& algebra_ref() const { return *algebra_; }
    const PrimeField& field() const { return algebra_->field(); }
    const std::vector<int>& dims() const { return dims_; }
    int dim_at(int vertex) const { return dims_.at(static_cast<std::size_t>(vertex - 1)); }
    int total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }
    bool is_zero_module() const { return total_dim() == 0; }

    const Matrix& action(int arrow_index) const {
        return actions_.at(static_cast<std::size_t>(arrow_index));
    }
    const std::vector<Matrix>& actions() const { return actions_; }

    // Matrix of the right action of a path, dims[source] x dims[target].
    Matrix path_action(const Path& p) const {
        Matrix m = Matrix::identity(field(), dim_at(p.source()));
        for (int k : p.arrows()) m = m * action(k);
        return m;
    }

    bool operator==(const Representation& o) const {
        return algebra_.get() == o.algebra_.get() && dims_ == o.dims_ && actions_ == o.actions_;
    }

private:
    AlgebraPtr algebra_;
    std::vector<int> dims_;
    std::vector<Matrix> actions_;
};

inline std::string dims_to_string(const std::vector<int>& dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s + "]";
}

// Basis bookkeeping for a direct sum of indecomposable projectives
// F = e_{v_1}A + ... + e_{v_G}A. The component at vertex t is spanned by pairs
// (g, p) with p a basis path v_g -> t, ordered by generator then by basis order.
class FreeModuleLayout {
public:
    FreeModuleLayout(AlgebraPtr algebra, std::vector<int> gen_vertices)
        : algebra_(std::move(algebra)), gen_vertices_(std::move(gen_vertices)) {
        const Quiver& q = algebra_->quiver();
        const int nv = q.vertex_count();
        layout_.assign(static_cast<std::size_t>(nv), {});
        position_.assign(gen_vertices_.size(),
                         std::vector<int>(static_cast<std::size_t>(algebra_->dimension()), -1));
        for (std::size_t g = 0; g < gen_vertices_.size(); ++g) {
            const int v = gen_vertices_[g];
            if (v < 1 || v > nv) throw std::invalid_argument("FreeModuleLayout: vertex out of range");
            for (int idx : algebra_->basis_with_source(v)) {
                const int t = algebra_->basis()[static_cast<std::size_t>(idx)].target();
                auto& comp = layout_[static_cast<std::size_t>(t - 1)];
                position_[g][static_cast<std::size_t>(idx)] = static_cast<int>(comp.size());
                comp.emplace_back(static_cast<int>(g), idx);
            }
        }
        rep_ = std::make_shared<Representation>(build_rep());
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    int gen_count() const { return static_cast<int>(gen_vertices_.size()); }
    int gen_vertex(int g) const { return gen_vertices_.at(static_cast<std::size_t>(g)); }
    const std::vector<int>& gen_vertices() const { return gen_vertices_; }
    const Representation& rep() const { return *rep_; }

    // Component position of (generator g, basis path index); the component is
    // the one at the path's target vertex.
    int position(int g, int basis_path_index) const {
        const int pos = position_.at(static_cast<std::size_t>(g))[static_cast<std::size_t>(basis_path_index)];
        if (pos < 0) throw std::logic_error("FreeModuleLayout: path does not start at generator vertex");
        return pos;
    }

    const std::vector<std::pair<int, int>>& component_layout(int vertex) const {
        return layout_.at(static_cast<std::size_t>(vertex - 1));
    }

private:
    Representation build_rep() const {
        const Quiver& q = algebra_->quiver();
        std::vector<int> dims;
        dims.reserve(layout_.size());
        for (const auto& comp : layout_) dims.push_back(static_cast<int>(comp.size()));
        std::vector<Matrix> actions;
        for (int k = 0; k < q.arrow_count(); ++k) {
            const Arrow& a = q.arrow(k);
            Matrix m(algebra_->field(), dims[static_cast<std::size_t>(a.source - 1)],
                     dims[static_cast<std::size_t>(a.target - 1)]);
            const auto& comp = layout_[static_cast<std::size_t>(a.source - 1)];
            for (std::size_t row = 0; row < comp.size(); ++row) {
                const auto [g, pidx] = comp[row];
                auto prod = algebra_->multiply(algebra_->basis()[static_cast<std::size_t>(pidx)],
                                               algebra_->arrow_path(k));
                if (!prod) continue;
                const int col = position(g, *algebra_->basis_index(*prod));
                m.set(static_cast<int>(row), col, 1 % algebra_->field().modulus());
            }
            actions.push_back(std::move(m));
        }
        return Representation(algebra_, std::move(dims), std::move(actions));
    }

    AlgebraPtr algebra_;
    std::vector<int> gen_vertices_;
    std::vector<std::vector<std::pair<int, int>>> layout_;  // per vertex: (gen, basis path idx)
    std::vector<std::vector<int>> position_;                // [gen][basis path idx] -> component pos
    std::shared_ptr<Representation> rep_;
};

inline Representation simple(const AlgebraPtr& a, int vertex) {
    const Quiver& q = a->quiver();
    if (vertex < 1 || vertex > q.vertex_count())
        throw std::invalid_argument("simple: vertex out of range");
    std::vector<int> dims(static_cast<std::size_t>(q.vertex_count()), 0);
    dims[static_cast<std::size_t>(vertex - 1)] = 1;
    std::vector<Matrix> actions;
    for (int k = 0; k < q.arrow_count(); ++k) {
        const Arrow& ar = q.arrow(k);
        actions.emplace_back(a->field(), dims[static_cast<std::size_t>(ar.source - 1)],
                             dims[static_cast<std::size_t>(ar.target - 1)]);
    }
    return Representation(a, std::move(dims), std::move(actions));
}

// P_i = e_i A, with basis paths from i acted on by right multiplication.
inline Representation projective(const AlgebraPtr& a, int vertex) {
    return FreeModuleLayout(a, {vertex}).rep();
}

// I_i = D(A e_i): the component at j is dual to the span of basis paths
// j -> i, and an arrow a: j -> l sends the dual basis vector of p to the sum
// of dual vectors of the q with a*q = p.
inline Representation injective(const AlgebraPtr& a, int vertex) {
    const Quiver& q = a->quiver();
    if (vertex < 1 || vertex > q.vertex_count())
        throw std::invalid_argument("injective: vertex out of range");
    const int nv = q.vertex_count();
    std::vector<std::vector<int>> comp(static_cast<std::size_t>(nv));
    for (int idx : a->basis_with_target(vertex))
        comp[static_cast<std::size_t>(a->basis()[static_cast<std::size_t>(idx)].source() - 1)].push_back(idx);
    std::vector<int> dims;
    for (const auto& c : comp) dims.push_back(static_cast<int>(c.size()));
    auto local = [&](int v, int basis_idx) {
        const auto& c = comp[static_cast<std::size_t>(v - 1)];
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] == basis_idx) return static_cast<int>(i);
        return -1;
    };
    std::vector<Matrix> actions;
    for (int k = 0; k < q.arrow_count(); ++k) {
        const Arrow& ar = q.arrow(k);
        Matrix m(a->field(), dims[static_cast<std::size_t>(ar.source - 1)],
                 dims[static_cast<std::size_t>(ar.target - 1)]);
        const auto& cols = comp[static_cast<std::size_t>(ar.target - 1)];
        for (std::size_t col = 0; col < cols.size(); ++col) {
            auto prod = a->multiply(a->arrow_path(k), a->basis()[static_cast<std::size_t>(cols[col])]);
            if (!prod) continue;
            const int row = local(ar.source, *a->basis_index(*prod));
            if (row >= 0) m.set(row, static_cast<int>(col), 1 % a->field().modulus());
        }
        actions.push_back(std::move(m));
    }
    return Representation(a, std::move(dims), std::move(actions));
}

// The right module A / (g_1 A + ... + g_k A). Cosets of non-pivot basis paths
// form the basis; arrows act by right multiplication followed by reduction
// against the ideal, so the output is reproducible bit for bit.
inline Representation quotient_by_right_ideal(const AlgebraPtr& a,
                                              const std::vector<AlgebraElement>& gens) {
    const Quiver& q = a->quiver();
    const int nv = q.vertex_count();
    const auto ideal = right_ideal_basis(a, gens);

    // Split the ideal by target vertex: a right ideal is graded by targets.
    std::vector<std::vector<int>> ambient(static_cast<std::size_t>(nv));
    for (int v = 1; v <= nv; ++v) ambient[static_cast<std::size_t>(v - 1)] = a->basis_with_target(v);
    std::vector<RowSpace> ideal_comp;
    for (int v = 1; v <= nv; ++v) {
        const auto& paths = ambient[static_cast<std::size_t>(v - 1)];
        RowSpace s(a->field(), static_cast<int>(paths.size()));
        for (const AlgebraElement& e : ideal) {
            Matrix restricted(a->field(), 1, static_cast<int>(paths.size()));
            for (std::size_t j = 0; j < paths.size(); ++j)
                restricted.set(0, static_cast<int>(j), e.coefficients()(0, paths[j]));
            s.insert(restricted);
        }
        ideal_comp.push_back(std::move(s));
    }

    std::vector<std::vector<int>> coset;  // per vertex: local ambient positions of coset basis paths
    std::vector<int> dims;
    for (int v = 1; v <= nv; ++v) {
        coset.push_back(ideal_comp[static_cast<std::size_t>(v - 1)].complement());
        dims.push_back(static_cast<int>(coset.back().size()));
    }

    std::vector<Matrix> actions;
    for (int k = 0; k < q.arrow_count(); ++k) {
        const Arrow& ar = q.arrow(k);
        const auto& src_paths = ambient[static_cast<std::size_t>(ar.source - 1)];
        const auto& tgt_paths = ambient[static_cast<std::size_t>(ar.target - 1)];
        const auto& src_coset = coset[static_cast<std::size_t>(ar.source - 1)];
        const auto& tgt_space = ideal_comp[static_cast<std::size_t>(ar.target - 1)];
        const auto tgt_coset = tgt_space.complement();
        Matrix m(a->field(), dims[static_cast<std::size_t>(ar.source - 1)],
                 dims[static_cast<std::size_t>(ar.target - 1)]);
        for (std::size_t row = 0; row < src_coset.size(); ++row) {
            auto prod = a->multiply(a->basis()[static_cast<std::size_t>(src_paths[static_cast<std::size_t>(src_coset[row])])],
                                    a->arrow_path(k));
            if (!prod) continue;
            Matrix vec(a->field(), 1, static_cast<int>(tgt_paths.size()));
            const int global = *a->basis_index(*prod);
            for (std::size_t j = 0; j < tgt_paths.size(); ++j)
                if (tgt_paths[j] == global) vec.set(0, static_cast<int>(j), 1 % a->field().modulus());
            const Matrix reduced = tgt_space.reduce(vec);
            for (std::size_t j = 0; j < tgt_coset.size(); ++j)
                m.set(static_cast<int>(row), static_cast<int>(j), reduced(0, tgt_coset[j]));
        }
        actions.push_back(std::move(m));
    }
    return Representation(a, std::move(dims), std::move(actions));
}

inline Representation regular_representation(const AlgebraPtr& a) {
    return quotient_by_right_ideal(a, {});
}

}  // namespace qmod
