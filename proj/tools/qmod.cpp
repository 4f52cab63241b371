// Command-line front end: loads an algebra file, evaluates module
// expressions, applies the homological operators, and runs the
// extension-closure counterexample verifier.
//
// Exit codes: 0 success / property holds / counterexample confirmed,
//             1 property fails / not confirmed,
//             2 input error,
//             3 inconclusive (randomized budget exhausted).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmod/qmod.hpp"

using nlohmann::json;

namespace {

json matrix_json(const qmod::Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json module_json(const qmod::Representation& m) {
    const qmod::Quiver& q = m.algebra_ref().quiver();
    json arrows = json::object();
    for (int k = 0; k < q.arrow_count(); ++k) arrows[q.arrow(k).label] = matrix_json(m.action(k));
    return json{{"dims", m.dims()}, {"total_dim", m.total_dim()}, {"arrows", arrows}};
}

std::string module_text(const qmod::Representation& m) {
    const qmod::Quiver& q = m.algebra_ref().quiver();
    std::ostringstream os;
    os << "dims " << qmod::dims_to_string(m.dims()) << "\n";
    for (int k = 0; k < q.arrow_count(); ++k)
        os << "  " << q.arrow(k).label << " = " << m.action(k).to_string() << "\n";
    return os.str();
}

json summands_json(const qmod::Decomposition& d) {
    json out = json::array();
    for (const qmod::DecompSummand& s : d.summands)
        out.push_back(json{{"dims", s.rep.dims()}, {"multiplicity", s.multiplicity}});
    return out;
}

std::string summands_text(const qmod::Decomposition& d) {
    std::string s;
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
        if (i) s += " + ";
        s += qmod::dims_to_string(d.summands[i].rep.dims());
        if (d.summands[i].multiplicity > 1) s += "x" + std::to_string(d.summands[i].multiplicity);
    }
    return s.empty() ? "0" : s;
}

json report_json(const qmod::VerifierReport& r) {
    json checks = json::array();
    for (const qmod::VerifierCheck& c : r.checks) {
        json dims = json::object();
        for (const auto& [name, d] : c.dims) dims[name] = d;
        json summands = json::array();
        for (const auto& [d, mult] : c.summands)
            summands.push_back(json{{"dims", d}, {"multiplicity", mult}});
        checks.push_back(json{{"name", c.name},
                              {"status", c.status},
                              {"detail", c.detail},
                              {"dims", dims},
                              {"summands", summands}});
    }
    return json{{"command", "verify-counterexample"},
                {"field", r.field},
                {"confirmed", r.confirmed},
                {"inconclusive", r.inconclusive},
                {"verdict", r.verdict},
                {"notes", r.notes},
                {"checks", checks}};
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

struct Options {
    std::string algebra_file;
    std::optional<std::uint32_t> field;
    bool as_json = false;
    qmod::DecompOptions decomp;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological algebra over monomial bound quiver algebras"};
    app.require_subcommand(1);

    Options opt;
    std::uint32_t field_flag = 0;
    std::uint64_t seed_flag = 0;
    app.add_option("--algebra", opt.algebra_file, "algebra description file")->required();
    auto* field_opt = app.add_option("--field", field_flag, "override the field modulus p");
    auto* seed_opt = app.add_option("--seed", seed_flag, "seed for randomized fallbacks");
    app.add_flag("--json", opt.as_json, "machine-readable output");

    std::string expr_a, expr_b;
    int index_arg = 1;

    CLI::App* cmd_info = app.add_subcommand("info", "print the algebra, its basis and projectives");
    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a module expression");
    cmd_eval->add_option("expr", expr_a, "module expression")->required();
    CLI::App* cmd_syz = app.add_subcommand("syzygy", "n-th syzygy of a module");
    cmd_syz->add_option("expr", expr_a)->required();
    cmd_syz->add_option("n", index_arg)->required();
    CLI::App* cmd_tau = app.add_subcommand("tau", "Auslander-Reiten translate");
    cmd_tau->add_option("expr", expr_a)->required();
    CLI::App* cmd_tr = app.add_subcommand("transpose", "transpose, over the opposite algebra");
    cmd_tr->add_option("expr", expr_a)->required();
    CLI::App* cmd_ext = app.add_subcommand("ext", "basis of Ext^1(X, Y) with middle terms");
    cmd_ext->add_option("exprX", expr_a)->required();
    cmd_ext->add_option("exprY", expr_b)->required();
    CLI::App* cmd_dec = app.add_subcommand("decompose", "Krull-Schmidt decomposition");
    cmd_dec->add_option("expr", expr_a)->required();
    CLI::App* cmd_nth = app.add_subcommand("is-nth-syzygy", "summand-of-n-th-syzygy test");
    cmd_nth->add_option("expr", expr_a)->required();
    cmd_nth->add_option("n", index_arg)->required();
    CLI::App* cmd_tom = app.add_subcommand("in-tau-omega", "membership in tau(Omega^i(mod-A))");
    cmd_tom->add_option("expr", expr_a)->required();
    cmd_tom->add_option("i", index_arg)->required();
    CLI::App* cmd_ver = app.add_subcommand("verify-counterexample",
                                           "replay the extension-closure counterexample check");
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*field_opt) opt.field = field_flag;
        if (*seed_opt) opt.decomp.seed = seed_flag;

        std::ifstream in(opt.algebra_file);
        if (!in) {
            std::cerr << "error: cannot open algebra file '" << opt.algebra_file << "'\n";
            return 2;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        const qmod::AlgebraSpec spec = qmod::parse_algebra_spec(buffer.str());
        const qmod::AlgebraPtr algebra = qmod::algebra_from_spec(spec, opt.field);

        auto eval = [&](const std::string& text) { return qmod::eval_module(algebra, text); };

        if (*cmd_info) {
            const qmod::Quiver& q = algebra->quiver();
            json basis = json::array();
            std::string basis_text;
            for (const qmod::Path& p : algebra->basis()) {
                basis.push_back(qmod::path_to_string(q, p));
                basis_text += (basis_text.empty() ? "" : ", ") + qmod::path_to_string(q, p);
            }
            json projs = json::array();
            json injs = json::array();
            std::ostringstream os;
            os << "algebra " << spec.name << " over GF(" << algebra->field().modulus() << ")\n"
               << "dimension " << algebra->dimension() << "\n"
               << "basis: " << basis_text << "\n";
            for (int v = 1; v <= q.vertex_count(); ++v) {
                const auto pd = qmod::projective(algebra, v).dims();
                const auto id = qmod::injective(algebra, v).dims();
                projs.push_back(pd);
                injs.push_back(id);
                os << "P" << v << " dims " << qmod::dims_to_string(pd) << ", I" << v << " dims "
                   << qmod::dims_to_string(id) << "\n";
            }
            emit(opt.as_json, json{{"command", "info"},
                                   {"name", spec.name},
                                   {"field", algebra->field().modulus()},
                                   {"dimension", algebra->dimension()},
                                   {"basis", basis},
                                   {"projective_dims", projs},
                                   {"injective_dims", injs}},
                 os.str());
            return 0;
        }
        if (*cmd_eval) {
            const qmod::Representation m = eval(expr_a);
            json j = module_json(m);
            j["command"] = "eval";
            emit(opt.as_json, j, module_text(m));
            return 0;
        }
        if (*cmd_syz) {
            const qmod::Representation m = qmod::syzygy(eval(expr_a), index_arg);
            json j = module_json(m);
            j["command"] = "syzygy";
            j["n"] = index_arg;
            emit(opt.as_json, j, module_text(m));
            return 0;
        }
        if (*cmd_tau) {
            const qmod::Representation input = eval(expr_a);
            const qmod::Representation m = qmod::tau(input);
            // Minimal presentations annihilate projective summands; say so.
            json dropped = json::array();
            std::string dropped_text;
            if (!input.is_zero_module())
                for (const qmod::DecompSummand& s : qmod::decompose(input, opt.decomp).summands)
                    if (qmod::is_projective_module(s.rep))
                        for (int c = 0; c < s.multiplicity; ++c) {
                            dropped.push_back(s.rep.dims());
                            dropped_text += (dropped_text.empty() ? "" : ", ") +
                                            qmod::dims_to_string(s.rep.dims());
                        }
            json j = module_json(m);
            j["command"] = "tau";
            j["dropped_projective_summands"] = dropped;
            std::string text = module_text(m);
            if (!dropped_text.empty())
                text += "dropped projective summands: " + dropped_text + "\n";
            emit(opt.as_json, j, text);
            return 0;
        }
        if (*cmd_tr) {
            const qmod::Representation m = qmod::transpose(eval(expr_a));
            json j = module_json(m);
            j["command"] = "transpose";
            j["over_opposite"] = true;
            emit(opt.as_json, j, "over the opposite algebra:\n" + module_text(m));
            return 0;
        }
        if (*cmd_ext) {
            const qmod::Representation x = eval(expr_a);
            const qmod::Representation y = eval(expr_b);
            const auto classes = qmod::ext1_basis(x, y);
            json jclasses = json::array();
            std::ostringstream os;
            os << "dim Ext^1 = " << classes.size() << "\n";
            for (const qmod::ExtClass& c : classes) {
                const qmod::ShortExactSequence s = qmod::extension_from_class(c);
                const qmod::Representation& w = s.right.source();
                const qmod::Decomposition d = qmod::decompose(w, opt.decomp);
                jclasses.push_back(json{{"middle_dims", w.dims()},
                                        {"split", qmod::is_split(s)},
                                        {"exact", qmod::is_exact(s)},
                                        {"middle_summands", summands_json(d)}});
                os << "  middle term dims " << qmod::dims_to_string(w.dims()) << " = "
                   << summands_text(d) << (qmod::is_split(s) ? " (split)" : " (non-split)") << "\n";
            }
            emit(opt.as_json, json{{"command", "ext"}, {"dim", classes.size()}, {"classes", jclasses}},
                 os.str());
            return 0;
        }
        if (*cmd_dec) {
            const qmod::Decomposition d = qmod::decompose(eval(expr_a), opt.decomp);
            json j{{"command", "decompose"}, {"summands", summands_json(d)}};
            emit(opt.as_json, j, summands_text(d) + "\n");
            return 0;
        }
        if (*cmd_nth) {
            const qmod::NthSyzygyReport r = qmod::is_nth_syzygy(eval(expr_a), index_arg, opt.decomp);
            json j{{"command", "is-nth-syzygy"},
                   {"n", index_arg},
                   {"holds", r.holds},
                   {"witness_summands", summands_json(r.comparison_summands)}};
            std::ostringstream os;
            os << (r.holds ? "true" : "false") << "; Omega^n(Omega^{-n}) = "
               << summands_text(r.comparison_summands) << "\n";
            emit(opt.as_json, j, os.str());
            return r.holds ? 0 : 1;
        }
        if (*cmd_tom) {
            const qmod::TauOmegaReport r = qmod::in_tau_omega(eval(expr_a), index_arg, opt.decomp);
            json verdicts = json::array();
            std::ostringstream os;
            os << (r.holds ? "true" : "false") << "\n";
            for (const auto& [label, ok] : r.summand_verdicts) {
                verdicts.push_back(json{{"summand", label}, {"holds", ok}});
                os << "  " << label << ": " << (ok ? "in" : "out") << "\n";
            }
            emit(opt.as_json,
                 json{{"command", "in-tau-omega"}, {"i", index_arg}, {"holds", r.holds}, {"summands", verdicts}},
                 os.str());
            return r.holds ? 0 : 1;
        }
        if (*cmd_ver) {
            const qmod::VerifierReport r = qmod::verify_counterexample(algebra, opt.decomp);
            emit(opt.as_json, report_json(r), qmod::render_text(r));
            if (r.confirmed) return 0;
            return r.inconclusive ? 3 : 1;
        }
        std::cerr << "error: no command\n";
        return 2;
    } catch (const qmod::PositionedError& e) {
        std::cerr << opt.algebra_file << ": " << e.what() << "\n";
        return 2;
    } catch (const qmod::InconclusiveIsomorphism& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const qmod::InconclusiveDecomposition& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
