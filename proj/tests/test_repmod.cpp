#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace qmod;
using fixtures::counterexample_algebra;

TEST_CASE("projectives, injectives and simples") {
    const AlgebraPtr a = counterexample_algebra();
    CHECK(projective(a, 1).dims() == std::vector<int>{3, 1});
    CHECK(projective(a, 2).dims() == std::vector<int>{1, 2});
    CHECK(injective(a, 1).dims() == std::vector<int>{3, 1});
    CHECK(injective(a, 2).dims() == std::vector<int>{1, 2});
    CHECK(simple(a, 1).dims() == std::vector<int>{1, 0});
    CHECK(simple(a, 2).dims() == std::vector<int>{0, 1});
    CHECK(is_isomorphic(injective(a, 2), projective(a, 2)));
    CHECK_FALSE(is_isomorphic(injective(a, 1), projective(a, 1)));
}

TEST_CASE("quotients by right ideals") {
    const AlgebraPtr a = counterexample_algebra();
    CHECK(fixtures::m1(a).dims() == std::vector<int>{2, 2});
    CHECK(fixtures::module_u(a).dims() == std::vector<int>{2, 1});
    CHECK(regular_representation(a).dims() == std::vector<int>{4, 3});
}

TEST_CASE("relation violations are rejected at construction") {
    const AlgebraPtr a = counterexample_algebra();
    const PrimeField& f = a->field();
    // x acting invertibly on a [1,0] module breaks x^3 = 0.
    std::vector<Matrix> actions = {Matrix::from_rows(f, {{1}}), Matrix(f, 1, 0), Matrix(f, 0, 1)};
    CHECK_THROWS_AS(Representation(a, {1, 0}, actions), std::invalid_argument);
    // Wrong shape.
    std::vector<Matrix> bad_shape = {Matrix(f, 2, 1), Matrix(f, 1, 0), Matrix(f, 0, 1)};
    CHECK_THROWS_AS(Representation(a, {1, 0}, bad_shape), std::invalid_argument);
}

TEST_CASE("submodules generated by vectors") {
    const AlgebraPtr a = counterexample_algebra();
    const Representation p2 = projective(a, 2);
    SECTION("the socle generator zy spans a copy of S2") {
        // Component 2 of P2 is spanned by e2, zy.
        Matrix g1(a->field(), 0, p2.dim_at(1));
        Matrix g2 = Matrix::from_rows(a->field(), {{0, 1}});
        const auto sub = submodule_generated(p2, {g1, g2});
        CHECK(sub.rep.dims() == std::vector<int>{0, 1});
        CHECK(is_isomorphic(sub.rep, simple(a, 2)));
    }
    SECTION("the full module and the zero module") {
        const auto whole = submodule_generated(
            p2, {Matrix::identity(a->field(), p2.dim_at(1)), Matrix::identity(a->field(), p2.dim_at(2))});
        CHECK(whole.rep.dims() == p2.dims());
        CHECK(is_isomorphism_hom(whole.inclusion));
        const auto zero = submodule_generated(
            p2, {Matrix(a->field(), 0, p2.dim_at(1)), Matrix(a->field(), 0, p2.dim_at(2))});
        CHECK(zero.rep.is_zero_module());
    }
    SECTION("the generator e2 recovers all of P2 by closure") {
        Matrix g1(a->field(), 0, p2.dim_at(1));
        Matrix g2 = Matrix::from_rows(a->field(), {{1, 0}});
        CHECK(submodule_generated(p2, {g1, g2}).rep.dims() == p2.dims());
    }
}

TEST_CASE("radical, socle and top") {
    const AlgebraPtr a = counterexample_algebra();
    CHECK(radical(projective(a, 2)).rep.dims() == std::vector<int>{1, 1});
    const Representation p1 = projective(a, 1);
    const auto soc = socle(p1);
    CHECK(soc.rep.dims() == std::vector<int>{1, 1});
    CHECK(quotient_by_submodule(p1, soc).rep.dims() == std::vector<int>{2, 0});
    const Representation s1 = simple(a, 1);
    CHECK(top(s1).rep == s1);
    CHECK(radical(s1).rep.is_zero_module());
    // The socle is semisimple: all of its arrow actions vanish.
    const Representation soc_m1 = socle(fixtures::m1(a)).rep;
    for (const Matrix& m : soc_m1.actions()) CHECK(m.is_zero());
}

TEST_CASE("hom spaces") {
    const AlgebraPtr a = counterexample_algebra();
    CHECK(hom_basis(projective(a, 1), projective(a, 1)).size() == 3);
    CHECK(hom_basis(simple(a, 1), simple(a, 2)).empty());
    CHECK(hom_basis(simple(a, 1), simple(a, 1)).size() == 1);
    // Hom out of a projective is the corresponding vertex component.
    std::mt19937_64 rng(11);
    for (int t = 0; t < 8; ++t) {
        const Representation m = fixtures::random_module(a, rng);
        for (int v = 1; v <= 2; ++v)
            CHECK(static_cast<int>(hom_basis(projective(a, v), m).size()) == m.dim_at(v));
    }
}

TEST_CASE("kernel, image and cokernel") {
    const AlgebraPtr a = counterexample_algebra();
    SECTION("cokernel of the socle inclusion of P2 is M2") {
        const Representation m2 = fixtures::m2(a);
        CHECK(m2.dims() == std::vector<int>{1, 1});
        CHECK(is_isomorphic(m2, quotient_by_submodule(projective(a, 2), socle(projective(a, 2))).rep));
    }
    SECTION("identity has zero kernel and cokernel") {
        const ModuleHom id = ModuleHom::identity(fixtures::m1(a));
        CHECK(kernel(id).rep.is_zero_module());
        CHECK(cokernel(id).rep.is_zero_module());
        CHECK(image(id).rep.dims() == fixtures::m1(a).dims());
    }
    SECTION("the explicit monomorphism into the middle term") {
        // The [2,2] module mapped into the [3,3] extension middle term by
        // (1 0 0; 0 1 0) at both vertices; its image and cokernel pin the
        // short exact sequence.
        const PrimeField& f = a->field();
        const Representation w(
            a, {3, 3},
            {Matrix::from_rows(f, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
             Matrix::from_rows(f, {{1, 0, 0}, {0, 0, 0}, {1, 0, 0}}),
             Matrix::from_rows(f, {{0, 0, 0}, {0, -1, 0}, {0, 0, 1}})});
        const Representation m1_explicit(
            a, {2, 2},
            {Matrix::from_rows(f, {{0, 1}, {0, 0}}), Matrix::from_rows(f, {{1, 0}, {0, 0}}),
             Matrix::from_rows(f, {{0, 0}, {0, -1}})});
        const Matrix u12 = Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}});
        const ModuleHom u(m1_explicit, w, {u12, u12});
        CHECK(is_injective_hom(u));
        CHECK(is_isomorphic(m1_explicit, fixtures::m1(a)));
        CHECK(image(u).rep.dims() == std::vector<int>{2, 2});
        const auto coker = cokernel(u);
        CHECK(coker.rep.dims() == std::vector<int>{1, 1});
        CHECK(is_isomorphic(coker.rep, fixtures::m2(a)));
    }
}

TEST_CASE("direct sums") {
    const AlgebraPtr a = counterexample_algebra();
    const auto ds = direct_sum(a, {projective(a, 2), fixtures::module_u(a)});
    CHECK(ds.rep.dims() == std::vector<int>{3, 3});
    CHECK(direct_sum(a, {}).rep.is_zero_module());
    CHECK(direct_sum(a, {simple(a, 1), simple(a, 2)}).rep.dims() == std::vector<int>{1, 1});
    for (std::size_t i = 0; i < ds.inclusions.size(); ++i) {
        CHECK(compose(ds.inclusions[i], ds.projections[i]) ==
              ModuleHom::identity(ds.inclusions[i].source()));
        CHECK(compose(ds.inclusions[i], ds.projections[1 - i]).is_zero());
    }
}

TEST_CASE("exactness and additivity on random homs") {
    const AlgebraPtr a = counterexample_algebra();
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 12; ++t) {
        const Representation m = fixtures::random_module(a, rng);
        const Representation n = fixtures::random_module(a, rng);
        const ModuleHom f = fixtures::random_hom(m, n, rng);
        const auto ker = kernel(f);
        const auto img = image(f);
        for (int v = 1; v <= 2; ++v)
            CHECK(img.rep.dim_at(v) + ker.rep.dim_at(v) == m.dim_at(v));
        CHECK(compose(ker.inclusion, f).is_zero());
        const auto ds = direct_sum(a, {m, n});
        for (int v = 1; v <= 2; ++v) CHECK(ds.rep.dim_at(v) == m.dim_at(v) + n.dim_at(v));
    }
}

TEST_CASE("intertwining is enforced") {
    const AlgebraPtr a = counterexample_algebra();
    const Representation p1 = projective(a, 1);
    const Representation s1 = simple(a, 1);
    // A vertex map that ignores the radical fails to intertwine x.
    std::vector<Matrix> maps = {Matrix::from_rows(a->field(), {{1}, {1}, {0}}),
                                Matrix(a->field(), 1, 0)};
    CHECK_THROWS_AS(ModuleHom(p1, s1, maps), std::invalid_argument);
}
