#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmod/linalg.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

struct InfiniteDimensional : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRelation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class MonomialAlgebra;
using AlgebraPtr = std::shared_ptr<const MonomialAlgebra>;

namespace detail {
struct AlgebraTwins;
}

// A finite-dimensional monomial bound quiver algebra A = KQ/I. The basis is
// the set of paths containing no relation as a consecutive subword, ordered by
// length, then lexicographically by arrow labels (trivial paths first, by
// vertex). The opposite algebra is built alongside and shares ownership, so
// opposite(opposite(a)) is the identical object.
class MonomialAlgebra {
public:
    const Quiver& quiver() const { return quiver_; }
    const PrimeField& field() const { return field_; }
    const std::vector<Path>& relations() const { return relations_; }
    const std::vector<Path>& basis() const { return basis_; }
    int dimension() const { return static_cast<int>(basis_.size()); }

    std::optional<int> basis_index(const Path& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool is_zero_path(const Path& p) const {
        for (const Path& rel : relations_)
            if (p.contains_subpath(rel)) return true;
        return false;
    }

    // Product of two paths in the algebra; absent means zero.
    std::optional<Path> multiply(const Path& p, const Path& q) const {
        if (p.target() != q.source()) return std::nullopt;
        Path cat = p.concat(q);
        if (is_zero_path(cat)) return std::nullopt;
        return cat;
    }

    Path arrow_path(int arrow_index) const { return Path(quiver_, {arrow_index}); }

    // Basis indices of paths starting (resp. ending) at a vertex, in basis order.
    const std::vector<int>& basis_with_source(int vertex) const {
        return by_source_.at(static_cast<std::size_t>(vertex - 1));
    }
    const std::vector<int>& basis_with_target(int vertex) const {
        return by_target_.at(static_cast<std::size_t>(vertex - 1));
    }

    const MonomialAlgebra* opposite_raw() const { return opposite_; }

private:
    friend struct detail::AlgebraTwins;
    friend AlgebraPtr build_algebra(const Quiver&, const std::vector<Path>&, PrimeField, std::size_t);

    MonomialAlgebra(Quiver q, std::vector<Path> relations, PrimeField field, std::size_t basis_bound)
        : quiver_(std::move(q)), relations_(std::move(relations)), field_(field) {
        for (const Path& rel : relations_)
            if (rel.length() < 2)
                throw InvalidRelation("relation '" + path_to_string(quiver_, rel) +
                                      "' has length < 2 (ideal not admissible)");
        build_basis(basis_bound);
        by_source_.assign(static_cast<std::size_t>(quiver_.vertex_count()), {});
        by_target_.assign(static_cast<std::size_t>(quiver_.vertex_count()), {});
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            index_.emplace(basis_[i], static_cast<int>(i));
            by_source_[static_cast<std::size_t>(basis_[i].source() - 1)].push_back(static_cast<int>(i));
            by_target_[static_cast<std::size_t>(basis_[i].target() - 1)].push_back(static_cast<int>(i));
        }
    }

    void build_basis(std::size_t bound) {
        std::vector<Path> level;
        for (int v = 1; v <= quiver_.vertex_count(); ++v) {
            level.push_back(Path::trivial(v));
            basis_.push_back(level.back());
        }
        while (!level.empty()) {
            std::vector<std::pair<std::vector<std::string>, Path>> next;
            for (const Path& p : level)
                for (int k = 0; k < quiver_.arrow_count(); ++k) {
                    if (quiver_.arrow(k).source != p.target()) continue;
                    Path cand = p.concat(arrow_path(k));
                    // The prefix is relation-free, so any new occurrence is a suffix.
                    bool killed = false;
                    for (const Path& rel : relations_)
                        if (cand.ends_with(rel)) {
                            killed = true;
                            break;
                        }
                    if (killed) continue;
                    std::vector<std::string> key;
                    key.reserve(cand.arrows().size());
                    for (int a : cand.arrows()) key.push_back(quiver_.arrow(a).label);
                    next.emplace_back(std::move(key), std::move(cand));
                }
            std::sort(next.begin(), next.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            level.clear();
            for (auto& [key, p] : next) {
                basis_.push_back(p);
                level.push_back(std::move(p));
                if (basis_.size() > bound)
                    throw InfiniteDimensional("path basis exceeds bound of " + std::to_string(bound) +
                                              " elements; algebra is likely infinite-dimensional");
            }
        }
    }

    Quiver quiver_;
    std::vector<Path> relations_;
    PrimeField field_;
    std::vector<Path> basis_;
    std::map<Path, int> index_;
    std::vector<std::vector<int>> by_source_;
    std::vector<std::vector<int>> by_target_;
    const MonomialAlgebra* opposite_ = nullptr;
};

namespace detail {
struct AlgebraTwins {
    AlgebraTwins(MonomialAlgebra p, MonomialAlgebra o) : primal(std::move(p)), opp(std::move(o)) {}
    MonomialAlgebra primal;
    MonomialAlgebra opp;
};
}  // namespace detail

inline AlgebraPtr build_algebra(const Quiver& q, const std::vector<Path>& relations, PrimeField field,
                                std::size_t basis_bound = 1'000'000) {
    Quiver rq = q.reversed();
    std::vector<Path> rrel;
    rrel.reserve(relations.size());
    for (const Path& rel : relations) rrel.push_back(reversed_path(rel));
    MonomialAlgebra primal(q, relations, field, basis_bound);
    MonomialAlgebra opp(rq, std::move(rrel), field, basis_bound);
    auto twins = std::make_shared<detail::AlgebraTwins>(std::move(primal), std::move(opp));
    twins->primal.opposite_ = &twins->opp;
    twins->opp.opposite_ = &twins->primal;
    return AlgebraPtr(twins, &twins->primal);
}

inline AlgebraPtr opposite(const AlgebraPtr& a) { return AlgebraPtr(a, a->opposite_raw()); }

// An element of the algebra as a coefficient row over the path basis.
class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraPtr a)
        : algebra_(std::move(a)), coeffs_(algebra_->field(), 1, algebra_->dimension()) {}

    static AlgebraElement from_path(AlgebraPtr a, const Path& p) {
        AlgebraElement e(std::move(a));
        auto idx = e.algebra_->basis_index(p);
        if (!idx) {
            if (!e.algebra_->is_zero_path(p))
                throw std::invalid_argument("AlgebraElement::from_path: path not in basis");
            return e;  // the path is zero in the algebra
        }
        e.coeffs_.set(0, *idx, 1 % e.algebra_->field().modulus());
        return e;
    }

    static AlgebraElement from_coefficients(AlgebraPtr a, Matrix row) {
        AlgebraElement e(std::move(a));
        if (row.rows() != 1 || row.cols() != e.algebra_->dimension())
            throw std::invalid_argument("AlgebraElement: coefficient row has wrong shape");
        e.coeffs_ = std::move(row);
        return e;
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    const Matrix& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.is_zero(); }

    AlgebraElement operator+(const AlgebraElement& o) const {
        require_same(o);
        return from_coefficients(algebra_, coeffs_ + o.coeffs_);
    }
    AlgebraElement operator-(const AlgebraElement& o) const {
        require_same(o);
        return from_coefficients(algebra_, coeffs_ - o.coeffs_);
    }
    AlgebraElement scaled(std::uint32_t c) const { return from_coefficients(algebra_, coeffs_.scaled(c)); }

    // Right multiplication by a path.
    AlgebraElement times_path(const Path& p) const {
        AlgebraElement out(algebra_);
        for (int i = 0; i < algebra_->dimension(); ++i) {
            const std::uint32_t c = coeffs_(0, i);
            if (c == 0) continue;
            auto prod = algebra_->multiply(algebra_->basis()[static_cast<std::size_t>(i)], p);
            if (!prod) continue;
            out.coeffs_.add_at(0, *algebra_->basis_index(*prod), c);
        }
        return out;
    }

private:
    void require_same(const AlgebraElement& o) const {
        if (algebra_.get() != o.algebra_.get())
            throw std::invalid_argument("AlgebraElement: mixed algebras");
    }

    AlgebraPtr algebra_;
    Matrix coeffs_;
};

// A reduced vector-space basis of the right ideal generated by the given
// elements, obtained by multiplying each generator by every basis path and
// row-reducing the coefficient vectors.
inline std::vector<AlgebraElement> right_ideal_basis(const AlgebraPtr& a,
                                                     const std::vector<AlgebraElement>& gens) {
    RowSpace span(a->field(), a->dimension());
    for (const AlgebraElement& g : gens) {
        if (g.algebra().get() != a.get())
            throw std::invalid_argument("right_ideal_basis: generator over a different algebra");
        for (const Path& p : a->basis()) span.insert(g.times_path(p).coefficients());
    }
    std::vector<AlgebraElement> out;
    for (int i = 0; i < span.rank(); ++i)
        out.push_back(AlgebraElement::from_coefficients(a, span.basis().row(i)));
    return out;
}

}  // namespace qmod
