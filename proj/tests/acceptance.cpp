// Acceptance suite: one pass/fail line per criterion, exit status 0 only if
// every criterion holds. All arithmetic is exact, so every comparison is an
// integer equality; there are no tolerances anywhere.
//
// Usage: acceptance [--cli <path-to-qmod>] [--algebra <path-to-xyz.alg>]
// When the CLI path is given, the end-to-end criterion also runs the real
// binary and checks its exit code and verdict line.

#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qmod/qmod.hpp"

using namespace qmod;

namespace {

int g_failures = 0;

void criterion(int index, const std::string& label, bool ok) {
    std::printf("%s: criterion %d — %s\n", ok ? "PASS" : "FAIL", index, label.c_str());
    if (!ok) ++g_failures;
}

AlgebraPtr make_algebra(std::uint32_t p) {
    Quiver q(2, {{"x", 1, 1}, {"y", 1, 2}, {"z", 2, 1}});
    std::vector<Path> rels = {
        path_from_labels(q, {"x", "y"}),
        path_from_labels(q, {"y", "z"}),
        path_from_labels(q, {"z", "x"}),
        path_from_labels(q, {"x", "x", "x"}),
    };
    return build_algebra(q, rels, PrimeField(p));
}

AlgebraElement arrow_sum(const AlgebraPtr& a, const std::vector<std::string>& labels) {
    AlgebraElement e(a);
    for (const std::string& l : labels)
        e = e + AlgebraElement::from_path(a, path_from_labels(a->quiver(), {l}));
    return e;
}

Representation build_m1(const AlgebraPtr& a) {
    return quotient_by_right_ideal(a, {arrow_sum(a, {"x", "z"})});
}

Representation build_m2(const AlgebraPtr& a) {
    return cokernel(socle(projective(a, 2)).inclusion).rep;
}

Representation build_u(const AlgebraPtr& a) {
    return quotient_by_right_ideal(a, {arrow_sum(a, {"x", "y", "z"})});
}

Representation build_e2j(const AlgebraPtr& a) { return radical(projective(a, 2)).rep; }

Representation build_p1_mod_s1(const AlgebraPtr& a) {
    const Representation p1 = projective(a, 1);
    Matrix g1(a->field(), 1, p1.dim_at(1));
    g1.set(0, 2, 1);  // the socle direction x^2 in component (e1, x, x^2)
    Matrix g2(a->field(), 0, p1.dim_at(2));
    return quotient_by_submodule(p1, submodule_generated(p1, {g1, g2})).rep;
}

bool same_multiset(const Decomposition& d, std::vector<Representation> expected) {
    int total = 0;
    for (const DecompSummand& s : d.summands) total += s.multiplicity;
    if (total != static_cast<int>(expected.size())) return false;
    for (const DecompSummand& s : d.summands)
        for (int copy = 0; copy < s.multiplicity; ++copy) {
            bool matched = false;
            for (std::size_t i = 0; i < expected.size(); ++i)
                if (is_isomorphic(s.rep, expected[i])) {
                    expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(i));
                    matched = true;
                    break;
                }
            if (!matched) return false;
        }
    return expected.empty();
}

Matrix random_matrix(const PrimeField& f, int rows, int cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f.modulus() - 1);
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, dist(rng));
    return m;
}

Representation random_module(const AlgebraPtr& a, std::mt19937_64& rng, int max_total = 8) {
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

int run_command(const std::string& command, std::string& output) {
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return -1;
    char buffer[512];
    while (std::fgets(buffer, sizeof buffer, pipe)) output += buffer;
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---- criteria ----

void criterion_1_algebra() {
    const AlgebraPtr a = make_algebra(3);
    bool ok = a->dimension() == 7;
    std::vector<std::string> names;
    for (const Path& p : a->basis()) names.push_back(path_to_string(a->quiver(), p));
    ok = ok && names == std::vector<std::string>{"e1", "e2", "x", "y", "z", "x^2", "z*y"};
    ok = ok && projective(a, 1).dims() == std::vector<int>{3, 1};
    ok = ok && projective(a, 2).dims() == std::vector<int>{1, 2};
    ok = ok && injective(a, 1).dims() == std::vector<int>{3, 1};
    ok = ok && is_isomorphic(injective(a, 2), projective(a, 2));
    criterion(1, "algebra has dimension 7 with basis {e1,e2,x,y,z,x^2,zy}; P/I dimension vectors",
              ok);
}

void criterion_2_periodicity() {
    const AlgebraPtr a = make_algebra(3);
    const Representation m1 = build_m1(a);
    const Representation m2 = build_m2(a);
    bool ok = m1.dims() == std::vector<int>{2, 2} && m2.dims() == std::vector<int>{1, 1};
    ok = ok && is_isomorphic(syzygy(m1, 2), simple(a, 1));
    ok = ok && is_isomorphic(syzygy(m2, 2), build_e2j(a));
    ok = ok && is_isomorphic(tau_n(m1, 3), m1);
    ok = ok && is_isomorphic(tau_n(m2, 3), m2);
    criterion(2, "Omega^2(M1) = S1, Omega^2(M2) = e2J, tau_3-periodicity of M1 and M2", ok);
}

void criterion_3_extension() {
    const AlgebraPtr a = make_algebra(3);
    const Representation m1 = build_m1(a);
    const Representation m2 = build_m2(a);
    // Independent oracle for dim Ext^1(M2, M1) = 1: Omega^1(M2) = S2, so the
    // space is the left kernel of the z-action on M1, and the restriction
    // image is the rank of the socle path action zy; plain matrix ranks.
    const int oracle_hom = m1.dim_at(2) - rank(m1.action(2));
    const int oracle_restriction =
        rank(m1.path_action(path_from_labels(a->quiver(), {"z", "y"})));
    bool ok = oracle_hom == 1 && oracle_restriction == 0;
    const auto classes = ext1_basis(m2, m1);
    ok = ok && classes.size() == static_cast<std::size_t>(oracle_hom - oracle_restriction);
    if (ok) {
        const ShortExactSequence s = extension_from_class(classes[0]);
        const Representation& w = s.right.source();
        ok = ok && is_exact(s) && !is_split(s);
        ok = ok && w.dims() == std::vector<int>{3, 3};
        const Representation u = build_u(a);
        ok = ok && u.dims() == std::vector<int>{2, 1} && is_indecomposable(u);
        ok = ok && same_multiset(decompose(w), {projective(a, 2), u});
    }
    criterion(3, "dim Ext^1(M2,M1) = 1 (rank oracle); non-split middle term [3,3] = P2 + U", ok);
}

void criterion_4_not_second_syzygy() {
    const AlgebraPtr a = make_algebra(3);
    const Representation u = build_u(a);
    const Representation p1s1 = build_p1_mod_s1(a);
    bool ok = p1s1.dims() == std::vector<int>{2, 1};
    ok = ok && is_isomorphic(tau_inverse(u), p1s1);
    ok = ok && same_multiset(decompose(cosyzygy(p1s1, 1)), {simple(a, 2), u});
    ok = ok && same_multiset(decompose(cosyzygy(p1s1, 2)), {simple(a, 1), build_m2(a)});
    ok = ok && same_multiset(decompose(syzygy(cosyzygy(p1s1, 2), 2)),
                             {simple(a, 1), simple(a, 2), build_e2j(a), build_e2j(a)});
    ok = ok && !is_nth_syzygy(p1s1, 2).holds;
    criterion(4, "tau^{-1}(U) = P1/S1; coresolution cokernels; P1/S1 is not a 2nd syzygy", ok);
}

void criterion_5_end_to_end(const std::string& cli, const std::string& algebra_file) {
    bool ok = true;
    std::map<std::string, std::vector<int>> reference;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const VerifierReport r = verify_counterexample(make_algebra(p));
        ok = ok && r.confirmed && r.verdict == "counterexample confirmed";
        std::map<std::string, std::vector<int>> dims;
        for (const VerifierCheck& c : r.checks)
            for (const auto& [name, d] : c.dims) dims[c.name + "/" + name] = d;
        if (p == 2)
            reference = dims;
        else
            ok = ok && dims == reference;
    }
    if (!cli.empty() && !algebra_file.empty()) {
        for (const std::string& field : {std::string(""), std::string("--field 2"),
                                         std::string("--field 5"), std::string("--field 7")}) {
            std::string output;
            const int status = run_command(
                cli + " --algebra " + algebra_file + " " + field + " verify-counterexample", output);
            ok = ok && status == 0 && output.find("counterexample confirmed") != std::string::npos;
        }
    } else {
        std::fprintf(stderr, "note: --cli/--algebra not given, skipping the subprocess check\n");
    }
    criterion(5, "verify-counterexample exits 0 over GF(2), GF(3), GF(5), GF(7) with equal dims",
              ok);
}

void criterion_6_property_suites() {
    const AlgebraPtr a = make_algebra(3);
    bool ok = true;

    // Tr Tr stability on every non-projective indecomposable the verifier
    // touches.
    for (const Representation& m : {build_m1(a), build_m2(a), build_u(a), build_p1_mod_s1(a),
                                    simple(a, 1), simple(a, 2), build_e2j(a)})
        ok = ok && is_isomorphic(transpose(transpose(m)), m);

    // D is an involution on 50 random modules of total dimension <= 8.
    std::mt19937_64 rng(6021023);
    for (int t = 0; t < 50; ++t) {
        const Representation m = random_module(a, rng);
        ok = ok && is_isomorphic(dual(dual(m)), m);
    }

    // Exactness and additivity on random homs; Hom-projective adjunction.
    for (int t = 0; t < 10; ++t) {
        const Representation m = random_module(a, rng);
        const Representation n = random_module(a, rng);
        const auto homs = hom_basis(m, n);
        ModuleHom f = ModuleHom::zero(m, n);
        if (!homs.empty()) {
            std::vector<std::uint32_t> coeffs(homs.size());
            std::uniform_int_distribution<std::uint32_t> dist(0, 2);
            for (auto& c : coeffs) c = dist(rng);
            f = hom_linear_combination(homs, coeffs);
        }
        for (int v = 1; v <= 2; ++v) {
            ok = ok && kernel(f).rep.dim_at(v) + image(f).rep.dim_at(v) == m.dim_at(v);
            ok = ok && direct_sum(a, {m, n}).rep.dim_at(v) == m.dim_at(v) + n.dim_at(v);
            ok = ok && static_cast<int>(hom_basis(projective(a, v), m).size()) == m.dim_at(v);
        }
    }

    // Krull-Schmidt: reassembly and seed-independence on random direct sums
    // of known indecomposables.
    const std::vector<Representation> known = {simple(a, 1), simple(a, 2), build_e2j(a),
                                               build_m2(a),  build_u(a),   projective(a, 2)};
    std::uniform_int_distribution<std::size_t> pick(0, known.size() - 1);
    for (int t = 0; t < 5; ++t) {
        std::vector<Representation> parts;
        for (int i = 0; i < 2 + t % 2; ++i) parts.push_back(known[pick(rng)]);
        const Representation m = direct_sum(a, parts).rep;
        const Decomposition d = decompose(m);
        ok = ok && same_multiset(d, parts);
        DecompOptions other;
        other.seed = 777 + static_cast<std::uint64_t>(t);
        ok = ok && same_multiset(decompose(m, other), parts);
        std::vector<Representation> reassembled;
        for (const DecompPiece& piece : d.pieces) reassembled.push_back(piece.rep);
        ok = ok && is_isomorphic(direct_sum(a, reassembled).rep, m);
    }

    // Brute-force Ext oracle on K[a]/(a^2): Ext^1(S,S) is one-dimensional and
    // the nonzero class's middle term is the regular module. The oracle
    // enumerates 2-dimensional representations and exact sequences raw.
    {
        const int q = 3;
        Quiver loop_quiver(1, {{"a", 1, 1}});
        const AlgebraPtr loop =
            build_algebra(loop_quiver, {path_from_labels(loop_quiver, {"a", "a"})}, PrimeField(3));
        using M2x2 = std::array<std::array<int, 2>, 2>;
        auto mul2 = [&](const M2x2& x, const M2x2& y) {
            M2x2 c{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) c[i][j] = (x[i][0] * y[0][j] + x[i][1] * y[1][j]) % q;
            return c;
        };
        struct Seq {
            M2x2 n;
            std::array<int, 2> v, w;
        };
        std::vector<Seq> seqs;
        for (int n00 = 0; n00 < q; ++n00)
            for (int n01 = 0; n01 < q; ++n01)
                for (int n10 = 0; n10 < q; ++n10)
                    for (int n11 = 0; n11 < q; ++n11) {
                        const M2x2 n{{{n00, n01}, {n10, n11}}};
                        if (mul2(n, n) != M2x2{}) continue;
                        for (int v0 = 0; v0 < q; ++v0)
                            for (int v1 = 0; v1 < q; ++v1) {
                                if ((!v0 && !v1) || (v0 * n00 + v1 * n10) % q ||
                                    (v0 * n01 + v1 * n11) % q)
                                    continue;
                                for (int w0 = 0; w0 < q; ++w0)
                                    for (int w1 = 0; w1 < q; ++w1) {
                                        if ((!w0 && !w1) || (n00 * w0 + n01 * w1) % q ||
                                            (n10 * w0 + n11 * w1) % q)
                                            continue;
                                        if ((v0 * w0 + v1 * w1) % q) continue;
                                        seqs.push_back({n, {v0, v1}, {w0, w1}});
                                    }
                            }
                    }
        auto equivalent = [&](const Seq& s, const Seq& t) {
            for (int g00 = 0; g00 < q; ++g00)
                for (int g01 = 0; g01 < q; ++g01)
                    for (int g10 = 0; g10 < q; ++g10)
                        for (int g11 = 0; g11 < q; ++g11) {
                            if (((g00 * g11 - g01 * g10) % q + q) % q == 0) continue;
                            const M2x2 g{{{g00, g01}, {g10, g11}}};
                            if (mul2(g, t.n) != mul2(s.n, g)) continue;
                            if ((s.v[0] * g00 + s.v[1] * g10) % q != t.v[0]) continue;
                            if ((s.v[0] * g01 + s.v[1] * g11) % q != t.v[1]) continue;
                            if ((g00 * t.w[0] + g01 * t.w[1]) % q != s.w[0]) continue;
                            if ((g10 * t.w[0] + g11 * t.w[1]) % q != s.w[1]) continue;
                            return true;
                        }
            return false;
        };
        std::vector<Seq> classes;
        for (const Seq& s : seqs) {
            bool seen = false;
            for (const Seq& r : classes)
                if (equivalent(r, s)) {
                    seen = true;
                    break;
                }
            if (!seen) classes.push_back(s);
        }
        const auto basis = ext1_basis(simple(loop, 1), simple(loop, 1));
        ok = ok && basis.size() == 1;
        ok = ok && classes.size() == static_cast<std::size_t>(q);  // p classes = |Ext^1|
        const ShortExactSequence s = extension_from_class(basis[0]);
        ok = ok && !is_split(s) && is_isomorphic(s.right.source(), regular_representation(loop));
    }

    criterion(6, "property suites: TrTr, D involution, exactness, adjunction, Krull-Schmidt, Ext oracle",
              ok);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    std::string algebra_file;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") cli = argv[i + 1];
        if (flag == "--algebra") algebra_file = argv[i + 1];
    }
    criterion_1_algebra();
    criterion_2_periodicity();
    criterion_3_extension();
    criterion_4_not_second_syzygy();
    criterion_5_end_to_end(cli, algebra_file);
    criterion_6_property_suites();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
