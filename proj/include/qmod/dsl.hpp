#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qmod/homology.hpp"

namespace qmod {

// Line-oriented algebra description and a compositional module-expression
// language.
//
// Algebra files:
//
//     algebra <name>
//     vertices <n>
//     arrow <label> : <i> -> <j>       (one per line)
//     relation <word>                  word := label('^'power)? ('*' label('^'power)?)*
//     field GF(<p>)                    (optional; defaults to GF(3))
//
// '#' starts a comment; blank lines are ignored.
//
// Module expressions:
//
//     P(i) | I(i) | S(i)                                projective / injective / simple
//     rad(e) | soc(e) | top(e)                          radical, socle, top
//     quot(g1, g2, ...)                                 A modulo the right ideal (g1,...)
//                                                       g := [c*]word [+/- [c*]word ...],
//                                                       'e<i>' names a trivial path
//     syz(e, n) | cosyz(e, n)                           syzygy and cosyzygy
//     tau(e) | tauinv(e) | taun(e, i)                   Auslander-Reiten translates
//     sum(e, e)                                         direct sum
//     explicit([d1,...], label=[[row],...], ...)        matrices given entry by entry;
//                                                       omitted arrows act by zero
//
// All errors carry a line and column.

struct SourcePos {
    int line = 1;
    int col = 1;
};

class PositionedError : public std::runtime_error {
public:
    PositionedError(SourcePos pos, const std::string& message)
        : std::runtime_error("line " + std::to_string(pos.line) + ", col " +
                             std::to_string(pos.col) + ": " + message),
          pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

struct ParseError : PositionedError {
    using PositionedError::PositionedError;
};

struct EvalError : PositionedError {
    using PositionedError::PositionedError;
};

namespace dsl {

enum class Tok { Ident, Number, Symbol, Newline, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    Lexer(std::string_view text, bool newline_tokens)
        : text_(text), newline_tokens_(newline_tokens) {
        advance();
    }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (at_ < text_.size()) {
            const char c = text_[at_];
            if (c == '#') {
                while (at_ < text_.size() && text_[at_] != '\n') step();
            } else if (c == '\n') {
                if (newline_tokens_) break;
                step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
        current_.pos = pos_;
        if (at_ >= text_.size()) {
            current_ = {Tok::End, "", pos_};
            return;
        }
        const char c = text_[at_];
        if (c == '\n') {
            current_ = {Tok::Newline, "\n", pos_};
            step();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (at_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[at_])) || text_[at_] == '_')) {
                s += text_[at_];
                step();
            }
            current_ = {Tok::Ident, std::move(s), current_.pos};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_]))) {
                s += text_[at_];
                step();
            }
            current_ = {Tok::Number, std::move(s), current_.pos};
            return;
        }
        if (c == '-' && at_ + 1 < text_.size() && text_[at_ + 1] == '>') {
            step();
            step();
            current_ = {Tok::Symbol, "->", current_.pos};
            return;
        }
        static const std::string singles = ":*^()[],=+-";
        if (singles.find(c) != std::string::npos) {
            step();
            current_ = {Tok::Symbol, std::string(1, c), current_.pos};
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    void step() {
        if (text_[at_] == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        ++at_;
    }

    std::string_view text_;
    bool newline_tokens_;
    std::size_t at_ = 0;
    SourcePos pos_;
    Token current_;
};

inline Token expect(Lexer& lex, Tok kind, const std::string& what) {
    Token t = lex.next();
    if (t.kind != kind)
        throw ParseError(t.pos, "expected " + what + ", found '" + (t.kind == Tok::End ? "end of input" : t.text) + "'");
    return t;
}

inline Token expect_symbol(Lexer& lex, const std::string& sym) {
    Token t = lex.next();
    if (t.kind != Tok::Symbol || t.text != sym)
        throw ParseError(t.pos, "expected '" + sym + "', found '" + (t.kind == Tok::End ? "end of input" : t.text) + "'");
    return t;
}

inline long long parse_number(Lexer& lex, const std::string& what) {
    Token t = expect(lex, Tok::Number, what);
    return std::stoll(t.text);
}

}  // namespace dsl

struct WordFactor {
    std::string label;
    int power = 1;
    SourcePos pos;
};

struct ArrowDecl {
    std::string label;
    int source = 0;
    int target = 0;
    SourcePos pos;
};

struct RelationDecl {
    std::vector<WordFactor> factors;
    SourcePos pos;
};

struct AlgebraSpec {
    std::string name;
    int vertex_count = 0;
    std::vector<ArrowDecl> arrows;
    std::vector<RelationDecl> relations;
    std::optional<std::uint32_t> field_p;
    SourcePos vertices_pos;
    SourcePos field_pos;
};

namespace dsl {

// word := label ('^' power)? ('*' label ('^' power)?)*
inline std::vector<WordFactor> parse_word(Lexer& lex) {
    std::vector<WordFactor> out;
    while (true) {
        Token label = expect(lex, Tok::Ident, "arrow label");
        WordFactor f{label.text, 1, label.pos};
        if (lex.peek().kind == Tok::Symbol && lex.peek().text == "^") {
            lex.next();
            Token p = expect(lex, Tok::Number, "power");
            f.power = static_cast<int>(std::stoll(p.text));
            if (f.power < 1) throw ParseError(p.pos, "power must be >= 1");
        }
        out.push_back(std::move(f));
        if (lex.peek().kind == Tok::Symbol && lex.peek().text == "*")
            lex.next();
        else
            break;
    }
    return out;
}

}  // namespace dsl

inline AlgebraSpec parse_algebra_spec(std::string_view text) {
    dsl::Lexer lex(text, /*newline_tokens=*/true);
    AlgebraSpec spec;
    bool saw_name = false;
    bool saw_vertices = false;
    auto end_of_line = [&]() {
        dsl::Token t = lex.next();
        if (t.kind != dsl::Tok::Newline && t.kind != dsl::Tok::End)
            throw ParseError(t.pos, "unexpected trailing '" + t.text + "'");
    };
    while (lex.peek().kind != dsl::Tok::End) {
        if (lex.peek().kind == dsl::Tok::Newline) {
            lex.next();
            continue;
        }
        dsl::Token kw = dsl::expect(lex, dsl::Tok::Ident, "statement keyword");
        if (kw.text == "algebra") {
            if (saw_name) throw ParseError(kw.pos, "duplicate 'algebra' line");
            spec.name = dsl::expect(lex, dsl::Tok::Ident, "algebra name").text;
            saw_name = true;
        } else if (kw.text == "vertices") {
            if (saw_vertices) throw ParseError(kw.pos, "duplicate 'vertices' line");
            dsl::Token n = dsl::expect(lex, dsl::Tok::Number, "vertex count");
            spec.vertex_count = static_cast<int>(std::stoll(n.text));
            spec.vertices_pos = n.pos;
            saw_vertices = true;
        } else if (kw.text == "arrow") {
            ArrowDecl a;
            dsl::Token label = dsl::expect(lex, dsl::Tok::Ident, "arrow label");
            a.label = label.text;
            a.pos = label.pos;
            dsl::expect_symbol(lex, ":");
            a.source = static_cast<int>(dsl::parse_number(lex, "source vertex"));
            dsl::expect_symbol(lex, "->");
            a.target = static_cast<int>(dsl::parse_number(lex, "target vertex"));
            spec.arrows.push_back(std::move(a));
        } else if (kw.text == "relation") {
            RelationDecl r;
            r.pos = lex.peek().pos;
            r.factors = dsl::parse_word(lex);
            spec.relations.push_back(std::move(r));
        } else if (kw.text == "field") {
            dsl::Token gf = dsl::expect(lex, dsl::Tok::Ident, "GF");
            if (gf.text != "GF") throw ParseError(gf.pos, "expected 'GF'");
            dsl::expect_symbol(lex, "(");
            dsl::Token p = dsl::expect(lex, dsl::Tok::Number, "field modulus");
            spec.field_p = static_cast<std::uint32_t>(std::stoull(p.text));
            spec.field_pos = p.pos;
            dsl::expect_symbol(lex, ")");
        } else {
            throw ParseError(kw.pos, "unknown statement '" + kw.text + "'");
        }
        end_of_line();
    }
    if (!saw_name) throw ParseError({1, 1}, "missing 'algebra <name>' line");
    if (!saw_vertices) throw ParseError({1, 1}, "missing 'vertices <n>' line");
    return spec;
}

inline std::string print_algebra_spec(const AlgebraSpec& spec) {
    std::ostringstream os;
    os << "algebra " << spec.name << "\n";
    os << "vertices " << spec.vertex_count << "\n";
    for (const ArrowDecl& a : spec.arrows)
        os << "arrow " << a.label << " : " << a.source << " -> " << a.target << "\n";
    for (const RelationDecl& r : spec.relations) {
        os << "relation ";
        for (std::size_t i = 0; i < r.factors.size(); ++i) {
            if (i) os << "*";
            os << r.factors[i].label;
            if (r.factors[i].power > 1) os << "^" << r.factors[i].power;
        }
        os << "\n";
    }
    if (spec.field_p) os << "field GF(" << *spec.field_p << ")\n";
    return os.str();
}

namespace dsl {

// Resolves a word against a quiver, checking labels and composability at the
// offending factor.
inline Path word_to_path(const Quiver& q, const std::vector<WordFactor>& factors) {
    std::vector<int> arrows;
    for (const WordFactor& f : factors) {
        auto idx = q.arrow_index(f.label);
        if (!idx) throw ParseError(f.pos, "unknown arrow label '" + f.label + "'");
        for (int i = 0; i < f.power; ++i) {
            if (!arrows.empty() && q.arrow(arrows.back()).target != q.arrow(*idx).source)
                throw ParseError(f.pos, "word does not compose at '" + f.label + "'");
            arrows.push_back(*idx);
        }
    }
    return Path(q, std::move(arrows));
}

}  // namespace dsl

inline AlgebraPtr algebra_from_spec(const AlgebraSpec& spec,
                                    std::optional<std::uint32_t> field_override = {},
                                    std::size_t basis_bound = 1'000'000) {
    if (spec.vertex_count < 1) throw ParseError(spec.vertices_pos, "vertex count must be positive");
    for (const ArrowDecl& a : spec.arrows)
        if (a.source < 1 || a.source > spec.vertex_count || a.target < 1 || a.target > spec.vertex_count)
            throw ParseError(a.pos, "arrow '" + a.label + "' has a vertex out of range");
    std::vector<Arrow> arrows;
    for (const ArrowDecl& a : spec.arrows) arrows.push_back({a.label, a.source, a.target});
    Quiver q(spec.vertex_count, std::move(arrows));
    std::vector<Path> relations;
    for (const RelationDecl& r : spec.relations) {
        Path p = dsl::word_to_path(q, r.factors);
        if (p.length() < 2) throw ParseError(r.pos, "relation must have length >= 2");
        relations.push_back(std::move(p));
    }
    const std::uint32_t p = field_override.value_or(spec.field_p.value_or(3));
    if (!PrimeField::is_prime(p))
        throw ParseError(field_override ? SourcePos{0, 0} : spec.field_pos,
                         "GF(" + std::to_string(p) + ") is not a prime field");
    return build_algebra(q, relations, PrimeField(p), basis_bound);
}

inline AlgebraPtr parse_algebra(std::string_view text,
                                std::optional<std::uint32_t> field_override = {}) {
    return algebra_from_spec(parse_algebra_spec(text), field_override);
}

namespace dsl {

class ModuleExprParser {
public:
    ModuleExprParser(AlgebraPtr algebra, std::string_view text)
        : algebra_(std::move(algebra)), lex_(text, /*newline_tokens=*/false) {}

    Representation parse() {
        Representation m = expr();
        Token t = lex_.next();
        if (t.kind != Tok::End) throw ParseError(t.pos, "unexpected trailing '" + t.text + "'");
        return m;
    }

private:
    Representation expr() {
        Token head = expect(lex_, Tok::Ident, "module expression");
        const std::string& f = head.text;
        if (f == "P" || f == "I" || f == "S") return vertex_module(f);
        if (f == "rad" || f == "soc" || f == "top" || f == "tau" || f == "tauinv")
            return unary(f);
        if (f == "syz" || f == "cosyz" || f == "taun") return indexed(f);
        if (f == "sum") return sum();
        if (f == "quot") return quot();
        if (f == "explicit") return explicit_module();
        throw ParseError(head.pos, "unknown module constructor '" + f + "'");
    }

    Representation vertex_module(const std::string& f) {
        expect_symbol(lex_, "(");
        Token n = expect(lex_, Tok::Number, "vertex");
        expect_symbol(lex_, ")");
        const int v = static_cast<int>(std::stoll(n.text));
        if (v < 1 || v > algebra_->quiver().vertex_count())
            throw EvalError(n.pos, "vertex " + n.text + " out of range");
        if (f == "P") return projective(algebra_, v);
        if (f == "I") return injective(algebra_, v);
        return simple(algebra_, v);
    }

    Representation unary(const std::string& f) {
        expect_symbol(lex_, "(");
        Representation m = expr();
        expect_symbol(lex_, ")");
        if (f == "rad") return radical(m).rep;
        if (f == "soc") return socle(m).rep;
        if (f == "top") return top(m).rep;
        if (f == "tau") return tau(m);
        return tau_inverse(m);
    }

    Representation indexed(const std::string& f) {
        expect_symbol(lex_, "(");
        Representation m = expr();
        expect_symbol(lex_, ",");
        Token n = expect(lex_, Tok::Number, "index");
        expect_symbol(lex_, ")");
        const int i = static_cast<int>(std::stoll(n.text));
        if (i < 1) throw EvalError(n.pos, f + " requires an index >= 1");
        if (f == "syz") return syzygy(m, i);
        if (f == "cosyz") return cosyzygy(m, i);
        return tau_n(m, i);
    }

    Representation sum() {
        expect_symbol(lex_, "(");
        Representation a = expr();
        expect_symbol(lex_, ",");
        Representation b = expr();
        expect_symbol(lex_, ")");
        return direct_sum(algebra_, {a, b}).rep;
    }

    Representation quot() {
        expect_symbol(lex_, "(");
        std::vector<AlgebraElement> gens;
        if (!(lex_.peek().kind == Tok::Symbol && lex_.peek().text == ")")) {
            gens.push_back(generator());
            while (lex_.peek().kind == Tok::Symbol && lex_.peek().text == ",") {
                lex_.next();
                gens.push_back(generator());
            }
        }
        expect_symbol(lex_, ")");
        return quotient_by_right_ideal(algebra_, gens);
    }

    // generator := ('+'|'-')? term (('+'|'-') term)*, term := (num '*')? word
    AlgebraElement generator() {
        AlgebraElement acc(algebra_);
        bool negative = false;
        if (lex_.peek().kind == Tok::Symbol && (lex_.peek().text == "+" || lex_.peek().text == "-"))
            negative = lex_.next().text == "-";
        acc = acc + term(negative);
        while (lex_.peek().kind == Tok::Symbol && (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            negative = lex_.next().text == "-";
            acc = acc + term(negative);
        }
        return acc;
    }

    AlgebraElement term(bool negative) {
        long long coeff = 1;
        if (lex_.peek().kind == Tok::Number) {
            Token c = lex_.next();
            coeff = std::stoll(c.text);
            expect_symbol(lex_, "*");
        }
        if (negative) coeff = -coeff;
        Token first = expect(lex_, Tok::Ident, "path word");
        Path p = ident_word_path(first);
        return AlgebraElement::from_path(algebra_, p).scaled(algebra_->field().reduce(coeff));
    }

    // A word beginning with an already-consumed identifier. 'e<i>' names the
    // trivial path at vertex i unless an arrow uses that label.
    Path ident_word_path(const Token& first) {
        const Quiver& q = algebra_->quiver();
        if (!q.arrow_index(first.text) && first.text.size() > 1 && first.text[0] == 'e') {
            bool digits = true;
            for (std::size_t i = 1; i < first.text.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(first.text[i]))) digits = false;
            if (digits) {
                const int v = std::stoi(first.text.substr(1));
                if (v < 1 || v > q.vertex_count())
                    throw EvalError(first.pos, "vertex " + first.text.substr(1) + " out of range");
                return Path::trivial(v);
            }
        }
        std::vector<WordFactor> factors;
        factors.push_back({first.text, 1, first.pos});
        if (lex_.peek().kind == Tok::Symbol && lex_.peek().text == "^") {
            lex_.next();
            Token p = expect(lex_, Tok::Number, "power");
            factors.back().power = static_cast<int>(std::stoll(p.text));
            if (factors.back().power < 1) throw ParseError(p.pos, "power must be >= 1");
        }
        while (lex_.peek().kind == Tok::Symbol && lex_.peek().text == "*") {
            lex_.next();
            Token label = expect(lex_, Tok::Ident, "arrow label");
            WordFactor f{label.text, 1, label.pos};
            if (lex_.peek().kind == Tok::Symbol && lex_.peek().text == "^") {
                lex_.next();
                Token p = expect(lex_, Tok::Number, "power");
                f.power = static_cast<int>(std::stoll(p.text));
                if (f.power < 1) throw ParseError(p.pos, "power must be >= 1");
            }
            factors.push_back(std::move(f));
        }
        return word_to_path(q, factors);
    }

    Representation explicit_module() {
        const Quiver& q = algebra_->quiver();
        Token open = expect_symbol(lex_, "(");
        std::vector<int> dims = int_list("dimension vector");
        if (static_cast<int>(dims.size()) != q.vertex_count())
            throw EvalError(open.pos, "dimension vector must have " +
                                          std::to_string(q.vertex_count()) + " entries");
        for (int d : dims)
            if (d < 0) throw EvalError(open.pos, "dimensions must be non-negative");
        std::vector<std::optional<Matrix>> given(static_cast<std::size_t>(q.arrow_count()));
        while (lex_.peek().kind == Tok::Symbol && lex_.peek().text == ",") {
            lex_.next();
            Token label = expect(lex_, Tok::Ident, "arrow label");
            auto idx = q.arrow_index(label.text);
            if (!idx) throw EvalError(label.pos, "unknown arrow label '" + label.text + "'");
            expect_symbol(lex_, "=");
            const Arrow& a = q.arrow(*idx);
            given[static_cast<std::size_t>(*idx)] =
                matrix_literal(dims[static_cast<std::size_t>(a.source - 1)],
                               dims[static_cast<std::size_t>(a.target - 1)], label.pos);
        }
        expect_symbol(lex_, ")");
        std::vector<Matrix> actions;
        for (int k = 0; k < q.arrow_count(); ++k) {
            const Arrow& a = q.arrow(k);
            if (given[static_cast<std::size_t>(k)])
                actions.push_back(*given[static_cast<std::size_t>(k)]);
            else
                actions.emplace_back(algebra_->field(), dims[static_cast<std::size_t>(a.source - 1)],
                                     dims[static_cast<std::size_t>(a.target - 1)]);
        }
        try {
            return Representation(algebra_, dims, std::move(actions));
        } catch (const std::invalid_argument& e) {
            throw EvalError(open.pos, std::string("invalid explicit module: ") + e.what());
        }
    }

    std::vector<int> int_list(const std::string& what) {
        expect_symbol(lex_, "[");
        std::vector<int> out;
        if (!(lex_.peek().kind == Tok::Symbol && lex_.peek().text == "]")) {
            out.push_back(static_cast<int>(signed_number(what)));
            while (lex_.peek().kind == Tok::Symbol && lex_.peek().text == ",") {
                lex_.next();
                out.push_back(static_cast<int>(signed_number(what)));
            }
        }
        expect_symbol(lex_, "]");
        return out;
    }

    long long signed_number(const std::string& what) {
        bool neg = false;
        if (lex_.peek().kind == Tok::Symbol && lex_.peek().text == "-") {
            lex_.next();
            neg = true;
        }
        const long long v = parse_number(lex_, what);
        return neg ? -v : v;
    }

    Matrix matrix_literal(int rows, int cols, SourcePos at) {
        expect_symbol(lex_, "[");
        std::vector<std::vector<long long>> entries;
        if (!(lex_.peek().kind == Tok::Symbol && lex_.peek().text == "]")) {
            entries.push_back(row_literal());
            while (lex_.peek().kind == Tok::Symbol && lex_.peek().text == ",") {
                lex_.next();
                entries.push_back(row_literal());
            }
        }
        expect_symbol(lex_, "]");
        if (static_cast<int>(entries.size()) != rows)
            throw EvalError(at, "matrix has " + std::to_string(entries.size()) + " rows, expected " +
                                    std::to_string(rows));
        for (const auto& r : entries)
            if (static_cast<int>(r.size()) != cols)
                throw EvalError(at, "matrix row has " + std::to_string(r.size()) +
                                        " entries, expected " + std::to_string(cols));
        Matrix m(algebra_->field(), rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.set_int(i, j, entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        return m;
    }

    std::vector<long long> row_literal() {
        expect_symbol(lex_, "[");
        std::vector<long long> out;
        if (!(lex_.peek().kind == Tok::Symbol && lex_.peek().text == "]")) {
            out.push_back(signed_number("matrix entry"));
            while (lex_.peek().kind == Tok::Symbol && lex_.peek().text == ",") {
                lex_.next();
                out.push_back(signed_number("matrix entry"));
            }
        }
        expect_symbol(lex_, "]");
        return out;
    }

    AlgebraPtr algebra_;
    Lexer lex_;
};

}  // namespace dsl

inline Representation eval_module(const AlgebraPtr& algebra, std::string_view text) {
    return dsl::ModuleExprParser(algebra, text).parse();
}

}  // namespace qmod
