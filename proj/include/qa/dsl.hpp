#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "qa/morita.hpp"

namespace qa {

class ParseError : public QaError {
  public:
    ParseError(const std::string& msg, int line, int col)
        : QaError(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line),
          col(col) {}
    int line, col;
};

namespace dsl {

// ---- AST -------------------------------------------------------------------

/// Scalar literal: a rational, or a parameter name resolved against the
/// document's params block.
struct Scalar {
    bool negated = false;
    Rat value = 1;
    std::string param;  // nonempty: look up instead of using value
};

struct TermAst {
    Scalar scalar;
    std::vector<std::string> arrows;  // left-to-right composition
    int line = 0, col = 0;
};

using RelationAst = std::vector<TermAst>;

struct AlgebraDecl {
    std::string name;
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> vertices;
    std::vector<ArrowDecl> arrows;
    std::vector<RelationAst> relations;
    int truncate = 12;
};

struct MatrixAst {
    std::vector<std::vector<Scalar>> rows;
    int line = 0, col = 0;
};

struct ModuleDecl {
    std::string name;
    std::string algebra;
    std::vector<std::pair<std::string, int>> dims;  // vertex label -> dimension
    std::vector<std::pair<std::string, MatrixAst>> maps;  // arrow label -> matrix
};

struct GlueDecl {
    std::string name;
    std::string a, b;
    std::vector<ArrowDecl> forward, backward;
    GlueMode mode = GlueMode::EqualityIdeal;
    std::vector<RelationAst> extra;
    int lmax = 0;
};

struct Document {
    std::map<std::string, Rat> params;
    std::vector<AlgebraDecl> algebras;
    std::vector<ModuleDecl> modules;
    std::vector<GlueDecl> glues;
};

// ---- lexer -----------------------------------------------------------------

struct Token {
    enum class Kind { Ident, Int, Punct, End } kind = Kind::End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        cur_ = Token{Token::Kind::End, "", line_, col_};
        if (pos_ >= s_.size()) return;
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_' || s_[pos_] == '\''))
                take();
            cur_.kind = Token::Kind::Ident;
            cur_.text = s_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) take();
            cur_.kind = Token::Kind::Int;
            cur_.text = s_.substr(start, pos_ - start);
        } else if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            take();
            take();
            cur_.kind = Token::Kind::Punct;
            cur_.text = "->";
        } else if (std::string("{};,:*+-=()[]/").find(c) != std::string::npos) {
            take();
            cur_.kind = Token::Kind::Punct;
            cur_.text = std::string(1, c);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
    }

    void take() {
        ++pos_;
        ++col_;
    }

    std::string s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

// ---- parser ----------------------------------------------------------------

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Document parse_document() {
        Document doc;
        while (lex_.peek().kind != Token::Kind::End) {
            const Token& t = lex_.peek();
            if (t.kind != Token::Kind::Ident)
                throw ParseError("expected a declaration keyword", t.line, t.col);
            if (t.text == "params")
                parse_params(doc);
            else if (t.text == "algebra")
                doc.algebras.push_back(parse_algebra_decl());
            else if (t.text == "module")
                doc.modules.push_back(parse_module_decl());
            else if (t.text == "glue")
                doc.glues.push_back(parse_glue_decl());
            else
                throw ParseError("unknown declaration '" + t.text +
                                     "' (expected params, algebra, module, or glue)",
                                 t.line, t.col);
        }
        return doc;
    }

  private:
    Token expect_ident(const std::string& what) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Ident) throw ParseError("expected " + what, t.line, t.col);
        return t;
    }

    Token expect_int(const std::string& what) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Int) throw ParseError("expected " + what, t.line, t.col);
        return t;
    }

    void expect_punct(const std::string& p) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Punct || t.text != p)
            throw ParseError("expected '" + p + "'", t.line, t.col);
    }

    void expect_keyword(const std::string& kw) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Ident || t.text != kw)
            throw ParseError("expected '" + kw + "'", t.line, t.col);
    }

    bool at_punct(const std::string& p) const {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
    }

    bool at_ident(const std::string& s) const {
        return lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == s;
    }

    /// Vertex and arrow names may be identifiers or bare integers.
    std::string name_token(const std::string& what) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Ident && t.kind != Token::Kind::Int)
            throw ParseError("expected " + what, t.line, t.col);
        return t.text;
    }

    void parse_params(Document& doc) {
        expect_keyword("params");
        while (lex_.peek().kind == Token::Kind::Ident) {
            Token name = lex_.next();
            expect_punct("=");
            doc.params[name.text] = parse_rational();
        }
        expect_punct(";");
    }

    Rat parse_rational() {
        bool neg = false;
        if (at_punct("-")) {
            lex_.next();
            neg = true;
        }
        Token num = expect_int("a number");
        Rat v(num.text);
        if (at_punct("/")) {
            lex_.next();
            Token den = expect_int("a denominator");
            if (Rat(den.text) == 0) throw ParseError("zero denominator", den.line, den.col);
            v /= Rat(den.text);
        }
        return neg ? Rat(-v) : v;
    }

    FieldSpec parse_field() {
        Token t = expect_ident("a field (Q or Q(p))");
        if (t.text != "Q") throw ParseError("unknown field '" + t.text + "'", t.line, t.col);
        if (!at_punct("(")) return FieldSpec::rationals();
        lex_.next();
        Token p = expect_int("a prime");
        expect_punct(")");
        long pv = std::stol(p.text);
        if (!is_prime(pv)) throw ParseError("'" + p.text + "' is not prime", p.line, p.col);
        return FieldSpec::prime(pv);
    }

    AlgebraDecl parse_algebra_decl() {
        expect_keyword("algebra");
        AlgebraDecl d;
        d.name = expect_ident("an algebra name").text;
        expect_keyword("over");
        d.field = parse_field();
        expect_punct("{");
        while (!at_punct("}")) {
            Token kw = expect_ident("a section (vertices, arrows, relations, truncate)");
            if (kw.text == "vertices") {
                while (!at_punct(";")) {
                    d.vertices.push_back(name_token("a vertex name"));
                    if (at_punct(",")) lex_.next();
                }
                lex_.next();
            } else if (kw.text == "arrows") {
                while (!at_punct(";")) {
                    ArrowDecl a;
                    a.label = name_token("an arrow name");
                    expect_punct(":");
                    a.src = name_token("a source vertex");
                    expect_punct("->");
                    a.dst = name_token("a target vertex");
                    d.arrows.push_back(std::move(a));
                    if (at_punct(",")) lex_.next();
                }
                lex_.next();
            } else if (kw.text == "relations") {
                while (!at_punct(";")) {
                    d.relations.push_back(parse_relation());
                    if (at_punct(",")) lex_.next();
                }
                lex_.next();
            } else if (kw.text == "truncate") {
                d.truncate = std::stoi(expect_int("a truncation bound").text);
                expect_punct(";");
            } else {
                throw ParseError("unknown section '" + kw.text + "'", kw.line, kw.col);
            }
        }
        lex_.next();
        return d;
    }

    /// relation := term (("+"|"-") term)*; term := [scalar] path; path := name ("*" name)*
    RelationAst parse_relation() {
        RelationAst rel;
        rel.push_back(parse_term(false));
        while (at_punct("+") || at_punct("-")) {
            bool minus = lex_.next().text == "-";
            rel.push_back(parse_term(minus));
        }
        return rel;
    }

    TermAst parse_term(bool negated) {
        TermAst term;
        term.line = lex_.peek().line;
        term.col = lex_.peek().col;
        term.scalar.negated = negated;
        if (lex_.peek().kind == Token::Kind::Int) {
            term.scalar.value = parse_rational();
        } else if (lex_.peek().kind == Token::Kind::Ident) {
            // one-symbol lookahead: a scalar parameter is followed by another
            // identifier starting the path
            Token first = lex_.next();
            if (lex_.peek().kind == Token::Kind::Ident) {
                term.scalar.param = first.text;
            } else {
                term.arrows.push_back(first.text);
            }
        } else {
            throw ParseError("expected a relation term", term.line, term.col);
        }
        if (term.arrows.empty()) term.arrows.push_back(name_token("an arrow name"));
        while (at_punct("*")) {
            lex_.next();
            term.arrows.push_back(name_token("an arrow name"));
        }
        return term;
    }

    MatrixAst parse_matrix() {
        MatrixAst m;
        m.line = lex_.peek().line;
        m.col = lex_.peek().col;
        expect_punct("[");
        while (!at_punct("]")) {
            expect_punct("[");
            std::vector<Scalar> row;
            while (!at_punct("]")) {
                Scalar s;
                if (lex_.peek().kind == Token::Kind::Ident) {
                    s.param = lex_.next().text;
                } else {
                    s.value = parse_rational();
                }
                row.push_back(std::move(s));
                if (at_punct(",")) lex_.next();
            }
            lex_.next();
            m.rows.push_back(std::move(row));
            if (at_punct(",")) lex_.next();
        }
        lex_.next();
        return m;
    }

    ModuleDecl parse_module_decl() {
        expect_keyword("module");
        ModuleDecl d;
        d.name = expect_ident("a module name").text;
        expect_keyword("over");
        d.algebra = expect_ident("an algebra name").text;
        expect_punct("{");
        while (!at_punct("}")) {
            Token kw = expect_ident("a section (dims, map)");
            if (kw.text == "dims") {
                while (!at_punct(";")) {
                    std::string v = name_token("a vertex name");
                    expect_punct("=");
                    d.dims.emplace_back(v, std::stoi(expect_int("a dimension").text));
                    if (at_punct(",")) lex_.next();
                }
                lex_.next();
            } else if (kw.text == "map") {
                std::string a = name_token("an arrow name");
                expect_punct("=");
                d.maps.emplace_back(a, parse_matrix());
                expect_punct(";");
            } else {
                throw ParseError("unknown section '" + kw.text + "'", kw.line, kw.col);
            }
        }
        lex_.next();
        return d;
    }

    GlueDecl parse_glue_decl() {
        expect_keyword("glue");
        GlueDecl d;
        d.name = expect_ident("a glue name").text;
        expect_punct("{");
        while (!at_punct("}")) {
            Token kw = expect_ident("a glue section");
            if (kw.text == "a" || kw.text == "b") {
                std::string n = expect_ident("an algebra name").text;
                (kw.text == "a" ? d.a : d.b) = n;
                expect_punct(";");
            } else if (kw.text == "forward" || kw.text == "backward") {
                auto& out = kw.text == "forward" ? d.forward : d.backward;
                while (!at_punct(";")) {
                    ArrowDecl a;
                    a.label = name_token("an arrow name");
                    expect_punct(":");
                    a.src = name_token("a source vertex");
                    expect_punct("->");
                    a.dst = name_token("a target vertex");
                    out.push_back(std::move(a));
                    if (at_punct(",")) lex_.next();
                }
                lex_.next();
            } else if (kw.text == "mode") {
                Token m = expect_ident("equality or extended");
                if (m.text == "equality")
                    d.mode = GlueMode::EqualityIdeal;
                else if (m.text == "extended")
                    d.mode = GlueMode::ExtendedIdeal;
                else
                    throw ParseError("unknown glue mode '" + m.text + "'", m.line, m.col);
                expect_punct(";");
            } else if (kw.text == "extra") {
                while (!at_punct(";")) {
                    d.extra.push_back(parse_relation());
                    if (at_punct(",")) lex_.next();
                }
                lex_.next();
            } else if (kw.text == "lmax") {
                d.lmax = std::stoi(expect_int("a truncation bound").text);
                expect_punct(";");
            } else {
                throw ParseError("unknown glue section '" + kw.text + "'", kw.line, kw.col);
            }
        }
        lex_.next();
        return d;
    }

    Lexer lex_;
};

inline Document parse_document(const std::string& text) { return Parser(text).parse_document(); }

// ---- semantics -------------------------------------------------------------

inline Rat resolve_scalar(const Scalar& s, const std::map<std::string, Rat>& params, int line,
                          int col) {
    Rat v = s.value;
    if (!s.param.empty()) {
        auto it = params.find(s.param);
        if (it == params.end())
            throw ParseError("unknown parameter '" + s.param + "'", line, col);
        v = it->second;
    }
    return s.negated ? Rat(-v) : v;
}

inline Relation resolve_relation(const Quiver& q, const RelationAst& ast,
                                 const std::map<std::string, Rat>& params) {
    Relation rel;
    for (const TermAst& t : ast) {
        Path p;
        for (size_t i = 0; i < t.arrows.size(); ++i) {
            if (!q.has_arrow(t.arrows[i]))
                throw ParseError("unknown arrow '" + t.arrows[i] + "'", t.line, t.col);
            int a = q.arrow_index(t.arrows[i]);
            if (i == 0)
                p.source = q.arrow(a).src;
            else if (q.arrow(p.arrows.back()).dst != q.arrow(a).src)
                throw ParseError("arrows '" + q.arrow(p.arrows.back()).label + "' and '" +
                                     t.arrows[i] + "' do not compose",
                                 t.line, t.col);
            p.arrows.push_back(a);
        }
        rel.push_back({resolve_scalar(t.scalar, params, t.line, t.col), std::move(p)});
    }
    return rel;
}

inline AlgebraRef build_algebra(const AlgebraDecl& d,
                                const std::map<std::string, Rat>& params = {}) {
    Quiver q = Quiver::build(d.vertices, d.arrows);
    std::vector<Relation> rels;
    for (const RelationAst& r : d.relations) rels.push_back(resolve_relation(q, r, params));
    return BoundAlgebra::from_presentation(q, rels, d.field, d.truncate);
}

inline Representation build_module(const ModuleDecl& d, AlgebraRef alg,
                                   const std::map<std::string, Rat>& params = {}) {
    const Quiver& q = alg->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    for (const auto& [label, n] : d.dims) {
        if (!q.has_vertex(label)) throw QaError("module " + d.name + ": unknown vertex " + label);
        dims[q.vertex_index(label)] = n;
    }
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a)
        maps.push_back(
            Matrix::zero(dims[q.arrow(a).dst], dims[q.arrow(a).src], alg->field()));
    for (const auto& [label, m] : d.maps) {
        if (!q.has_arrow(label))
            throw ParseError("unknown arrow '" + label + "'", m.line, m.col);
        int a = q.arrow_index(label);
        int rows = dims[q.arrow(a).dst], cols = dims[q.arrow(a).src];
        if (static_cast<int>(m.rows.size()) != rows)
            throw ParseError("matrix for '" + label + "' must have " + std::to_string(rows) +
                                 " rows",
                             m.line, m.col);
        Matrix mat(rows, cols, alg->field());
        for (int i = 0; i < rows; ++i) {
            if (static_cast<int>(m.rows[i].size()) != cols)
                throw ParseError("matrix for '" + label + "' must have " + std::to_string(cols) +
                                     " columns",
                                 m.line, m.col);
            FieldOps ops(alg->field());
            for (int j = 0; j < cols; ++j)
                mat.at(i, j) = ops.reduce(resolve_scalar(m.rows[i][j], params, m.line, m.col));
        }
        maps[a] = std::move(mat);
    }
    return Representation::make(alg, dims, maps);
}

inline GluedAlgebra build_glue(const GlueDecl& d, const std::map<std::string, AlgebraRef>& algebras,
                               const std::map<std::string, Rat>& params = {}) {
    auto find = [&](const std::string& n) {
        auto it = algebras.find(n);
        if (it == algebras.end()) throw QaError("glue " + d.name + ": unknown algebra " + n);
        return it->second;
    };
    GlueSpec spec;
    spec.a = find(d.a);
    spec.b = find(d.b);
    spec.forward = d.forward;
    spec.backward = d.backward;
    spec.mode = d.mode;
    spec.l_max = d.lmax;
    for (const RelationAst& r : d.extra) {
        LabelRelation lr;
        for (const TermAst& t : r)
            lr.push_back({resolve_scalar(t.scalar, params, t.line, t.col), t.arrows});
        spec.extra.push_back(std::move(lr));
    }
    return glue(spec);
}

// ---- serialization ---------------------------------------------------------

inline std::string serialize(const AlgebraDecl& d) {
    std::ostringstream os;
    os << "algebra " << d.name << " over " << d.field.str() << " {\n  vertices";
    for (size_t i = 0; i < d.vertices.size(); ++i)
        os << (i ? ", " : " ") << d.vertices[i];
    os << ";\n  arrows";
    for (size_t i = 0; i < d.arrows.size(); ++i)
        os << (i ? ", " : " ") << d.arrows[i].label << ": " << d.arrows[i].src << " -> "
           << d.arrows[i].dst;
    os << ";\n  relations";
    for (size_t i = 0; i < d.relations.size(); ++i) {
        os << (i ? ", " : " ");
        for (size_t j = 0; j < d.relations[i].size(); ++j) {
            const TermAst& t = d.relations[i][j];
            bool neg = t.scalar.negated;
            if (j) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            if (!t.scalar.param.empty())
                os << t.scalar.param << " ";
            else if (t.scalar.value != 1)
                os << rat_to_string(t.scalar.value) << " ";
            for (size_t k = 0; k < t.arrows.size(); ++k) os << (k ? "*" : "") << t.arrows[k];
        }
    }
    os << ";\n  truncate " << d.truncate << ";\n}\n";
    return os.str();
}

inline std::string serialize(const ModuleDecl& d) {
    std::ostringstream os;
    os << "module " << d.name << " over " << d.algebra << " {\n  dims";
    for (size_t i = 0; i < d.dims.size(); ++i)
        os << (i ? ", " : " ") << d.dims[i].first << " = " << d.dims[i].second;
    os << ";\n";
    for (const auto& [label, m] : d.maps) {
        os << "  map " << label << " = [";
        for (size_t i = 0; i < m.rows.size(); ++i) {
            os << (i ? ", [" : "[");
            for (size_t j = 0; j < m.rows[i].size(); ++j) {
                if (j) os << ", ";
                if (!m.rows[i][j].param.empty())
                    os << (m.rows[i][j].negated ? "-" : "") << m.rows[i][j].param;
                else
                    os << rat_to_string(m.rows[i][j].negated ? Rat(-m.rows[i][j].value)
                                                             : m.rows[i][j].value);
            }
            os << "]";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

/// Reconstruct a source declaration from a built algebra.
inline AlgebraDecl algebra_to_decl(AlgebraRef alg, const std::string& name) {
    AlgebraDecl d;
    d.name = name;
    d.field = alg->field();
    const Quiver& q = alg->quiver();
    for (int v = 0; v < q.num_vertices(); ++v) d.vertices.push_back(q.vertex(v));
    for (int a = 0; a < q.num_arrows(); ++a)
        d.arrows.push_back({q.arrow(a).label, q.vertex(q.arrow(a).src),
                            q.vertex(q.arrow(a).dst)});
    for (const Relation& r : alg->relations()) {
        RelationAst ast;
        for (const RelTerm& t : r) {
            TermAst ta;
            Rat c = t.coeff;
            if (!ast.empty() && c < 0) {
                ta.scalar.negated = true;
                c = -c;
            }
            ta.scalar.value = c;
            for (int a : t.path.arrows) ta.arrows.push_back(q.arrow(a).label);
            ast.push_back(std::move(ta));
        }
        d.relations.push_back(std::move(ast));
    }
    d.truncate = alg->truncation();
    return d;
}

inline ModuleDecl module_to_decl(const Representation& m, const std::string& name,
                                 const std::string& algebra_name) {
    ModuleDecl d;
    d.name = name;
    d.algebra = algebra_name;
    const Quiver& q = m.algebra()->quiver();
    for (int v = 0; v < q.num_vertices(); ++v)
        if (m.dim(v) > 0) d.dims.emplace_back(q.vertex(v), m.dim(v));
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Matrix& mat = m.map(a);
        if (mat.rows() == 0 || mat.cols() == 0 || mat.is_zero()) continue;
        MatrixAst ast;
        for (int i = 0; i < mat.rows(); ++i) {
            std::vector<Scalar> row;
            for (int j = 0; j < mat.cols(); ++j) {
                Scalar s;
                s.value = mat.at(i, j);
                row.push_back(std::move(s));
            }
            ast.rows.push_back(std::move(row));
        }
        d.maps.emplace_back(q.arrow(a).label, std::move(ast));
    }
    return d;
}

/// Module expressions for the command line: "+"-separated names, each either a
/// declared module, S<vertex> (simple), or P<vertex> (projective).
inline Representation eval_module_expr(AlgebraRef alg, const std::string& expr,
                                       const std::map<std::string, Representation>& named) {
    Representation acc = Representation::zero(alg);
    std::string token;
    std::istringstream is(expr);
    bool any = false;
    while (std::getline(is, token, '+')) {
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw QaError("empty term in module expression");
        std::string t = token.substr(b, e - b + 1);
        auto it = named.find(t);
        Representation part = Representation::zero(alg);
        if (it != named.end()) {
            part = it->second;
        } else if (t.size() > 1 && (t[0] == 'S' || t[0] == 'P') &&
                   alg->quiver().has_vertex(t.substr(1))) {
            int v = alg->quiver().vertex_index(t.substr(1));
            part = t[0] == 'S' ? simple(alg, v) : indecomposable_projective(alg, v);
        } else {
            throw QaError("unknown module '" + t + "' in expression");
        }
        acc = direct_sum(acc, part);
        any = true;
    }
    if (!any) throw QaError("empty module expression");
    return acc;
}

}  // namespace dsl
}  // namespace qa
