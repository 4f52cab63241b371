#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"

using namespace qmod;

TEST_CASE("path basis of the two-vertex loop algebra") {
    const AlgebraPtr a = fixtures::counterexample_algebra();
    REQUIRE(a->dimension() == 7);
    std::vector<std::string> names;
    for (const Path& p : a->basis()) names.push_back(path_to_string(a->quiver(), p));
    CHECK(names == std::vector<std::string>{"e1", "e2", "x", "y", "z", "x^2", "z*y"});
    // Trivial paths come first and every vertex contributes one.
    CHECK(a->basis()[0].is_trivial());
    CHECK(a->basis()[1].is_trivial());
}

TEST_CASE("one-loop algebra with a^2 = 0") {
    const AlgebraPtr a = fixtures::loop_algebra();
    REQUIRE(a->dimension() == 2);
    CHECK(path_to_string(a->quiver(), a->basis()[1]) == "a");
}

TEST_CASE("dropping x^3 makes the algebra infinite-dimensional") {
    Quiver q(2, {{"x", 1, 1}, {"y", 1, 2}, {"z", 2, 1}});
    std::vector<Path> rels = {
        path_from_labels(q, {"x", "y"}),
        path_from_labels(q, {"y", "z"}),
        path_from_labels(q, {"z", "x"}),
    };
    CHECK_THROWS_AS(build_algebra(q, rels, PrimeField(3), 100), InfiniteDimensional);
}

TEST_CASE("relations must be admissible and composable") {
    Quiver q(2, {{"x", 1, 1}, {"y", 1, 2}, {"z", 2, 1}});
    CHECK_THROWS_AS(build_algebra(q, {path_from_labels(q, {"x"})}, PrimeField(3)), InvalidRelation);
    // y then x does not compose (y ends at 2, x starts at 1).
    CHECK_THROWS_AS(path_from_labels(q, {"y", "x"}), std::invalid_argument);
}

TEST_CASE("path multiplication") {
    const AlgebraPtr a = fixtures::counterexample_algebra();
    const Quiver& q = a->quiver();
    const Path x = path_from_labels(q, {"x"});
    const Path y = path_from_labels(q, {"y"});
    const Path z = path_from_labels(q, {"z"});

    const auto unit = a->multiply(Path::trivial(1), x);
    REQUIRE(unit.has_value());
    CHECK(*unit == x);
    CHECK_FALSE(a->multiply(x, y).has_value());  // relation xy
    const auto zy = a->multiply(z, y);
    REQUIRE(zy.has_value());
    CHECK(path_to_string(q, *zy) == "z*y");
    CHECK(a->basis_index(*zy).has_value());
    CHECK_FALSE(a->multiply(x, z).has_value());  // not composable
}

TEST_CASE("associativity and grading on all basis paths") {
    const AlgebraPtr a = fixtures::counterexample_algebra();
    for (const Path& p : a->basis())
        for (const Path& q : a->basis()) {
            const auto pq = a->multiply(p, q);
            if (pq) {
                CHECK(pq->source() == p.source());
                CHECK(pq->target() == q.target());
                CHECK(pq->length() == p.length() + q.length());
            }
            for (const Path& r : a->basis()) {
                const std::optional<Path> left = pq ? a->multiply(*pq, r) : std::optional<Path>{};
                const auto qr = a->multiply(q, r);
                const std::optional<Path> right = qr ? a->multiply(p, *qr) : std::optional<Path>{};
                CHECK(left.has_value() == right.has_value());
                if (left) CHECK(*left == *right);
            }
        }
}

TEST_CASE("opposite algebra") {
    const AlgebraPtr a = fixtures::counterexample_algebra();
    const AlgebraPtr op = opposite(a);
    CHECK(op->dimension() == a->dimension());
    CHECK(op->quiver().arrow(0).label == "x");
    CHECK(op->quiver().arrow(1).source == 2);  // y reversed: 2 -> 1
    CHECK(op->quiver().arrow(1).target == 1);
    // Relations are the reversed words: yx, zy, xz, x^3.
    std::set<std::string> rels;
    for (const Path& r : op->relations()) rels.insert(path_to_string(op->quiver(), r));
    CHECK(rels == std::set<std::string>{"y*x", "z*y", "x*z", "x^3"});
    // Double opposite is the identical object, not a rebuilt copy.
    CHECK(opposite(op).get() == a.get());

    const AlgebraPtr loop = fixtures::loop_algebra();
    CHECK(opposite(loop)->dimension() == loop->dimension());
}

TEST_CASE("right ideal bases") {
    const AlgebraPtr a = fixtures::counterexample_algebra();
    const Quiver& q = a->quiver();
    SECTION("(x+z)A has basis {x+z, x^2, zy}") {
        const auto basis = right_ideal_basis(a, {fixtures::arrow_sum(a, {"x", "z"})});
        REQUIRE(basis.size() == 3);
        // The span contains x+z, x^2 and zy.
        RowSpace span(a->field(), a->dimension());
        for (const auto& e : basis) span.insert(e.coefficients());
        CHECK(span.contains(fixtures::arrow_sum(a, {"x", "z"}).coefficients()));
        const Path x2 = path_from_labels(q, {"x", "x"});
        const Path zy = path_from_labels(q, {"z", "y"});
        CHECK(span.contains(AlgebraElement::from_path(a, x2).coefficients()));
        CHECK(span.contains(AlgebraElement::from_path(a, zy).coefficients()));
    }
    SECTION("e1 generates e1A of dimension 4") {
        const auto basis = right_ideal_basis(a, {AlgebraElement::from_path(a, Path::trivial(1))});
        CHECK(basis.size() == 4);
    }
    SECTION("(x+y+z)A has dimension 4") {
        const auto basis = right_ideal_basis(a, {fixtures::arrow_sum(a, {"x", "y", "z"})});
        CHECK(basis.size() == 4);
    }
}

TEST_CASE("algebra elements reduce modulo the field") {
    const AlgebraPtr a = fixtures::counterexample_algebra();
    const AlgebraElement x = AlgebraElement::from_path(a, path_from_labels(a->quiver(), {"x"}));
    CHECK((x + x + x).is_zero());
    CHECK((x.scaled(2) + x).is_zero());
    // Multiplying by a path that hits a relation gives zero.
    CHECK(x.times_path(path_from_labels(a->quiver(), {"y"})).is_zero());
    CHECK_FALSE(x.times_path(path_from_labels(a->quiver(), {"x"})).is_zero());
}
