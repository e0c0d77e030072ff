#include "ainfcat/catfile.hpp"

#include <sstream>

namespace ainfcat {

namespace {

struct Token {
    enum Kind { ident, number, punct, eof } kind = eof;
    std::string text;
    int line = 0, col = 0;
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
            } else if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        cur_ = Token{};
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= s_.size()) {
            cur_.kind = Token::eof;
            return;
        }
        char c = s_[pos_];
        auto isid = [](char ch) {
            return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_' ||
                   ch == '\'';
        };
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            cur_.kind = Token::ident;
            while (pos_ < s_.size() && isid(s_[pos_])) {
                cur_.text += s_[pos_++];
                ++col_;
            }
        } else if ((c >= '0' && c <= '9') || c == '-' || c == '+') {
            cur_.kind = Token::number;
            cur_.text += s_[pos_++];
            ++col_;
            while (pos_ < s_.size() && ((s_[pos_] >= '0' && s_[pos_] <= '9') || s_[pos_] == '/')) {
                cur_.text += s_[pos_++];
                ++col_;
            }
            if (cur_.text == "-" || cur_.text == "+") {
                // arrow "->" begins with '-'
                if (pos_ < s_.size() && s_[pos_] == '>') {
                    cur_.kind = Token::punct;
                    cur_.text = "->";
                    ++pos_;
                    ++col_;
                }
            }
        } else {
            cur_.kind = Token::punct;
            cur_.text = std::string(1, c);
            ++pos_;
            ++col_;
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Document parse() {
        while (lex_.peek().kind != Token::eof) {
            Token t = expect_ident("block");
            if (t.text == "category")
                parse_category();
            else if (t.text == "functor")
                parse_functor();
            else if (t.text == "dcoder")
                parse_dcoder();
            else if (t.text == "dgmodel")
                parse_model();
            else
                fail(t, "unknown block '" + t.text + "'");
        }
        return std::move(doc_);
    }

private:
    Token expect_ident(const std::string& what) {
        Token t = lex_.next();
        if (t.kind != Token::ident) fail(t, "expected " + what);
        return t;
    }
    Token expect_punct(const std::string& p) {
        Token t = lex_.next();
        if (t.kind != Token::punct || t.text != p) fail(t, "expected '" + p + "'");
        return t;
    }
    long expect_int() {
        Token t = lex_.next();
        if (t.kind != Token::number || t.text.find('/') != std::string::npos) fail(t, "expected an integer");
        try {
            return std::stol(t.text);
        } catch (...) {
            fail(t, "bad integer");
        }
    }
    Scalar expect_scalar(const Field& f) {
        Token t = lex_.next();
        return scalar_from(t, f);
    }
    Scalar scalar_from(const Token& t, const Field& f) {
        if (t.kind != Token::number) fail(t, "expected a coefficient");
        auto slash = t.text.find('/');
        try {
            if (slash == std::string::npos) return Scalar(f, mpq_class(mpz_class(t.text)));
            mpz_class num(t.text.substr(0, slash));
            mpz_class den(t.text.substr(slash + 1));
            if (den == 0) fail(t, "zero denominator");
            return Scalar::fraction(f, num, den);
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            fail(t, "bad coefficient '" + t.text + "'");
        }
    }

    const NamedCategory& resolve_cat(const Token& t) {
        for (const auto& c : doc_.categories)
            if (c.name == t.text) return c;
        fail(t, "unknown category '" + t.text + "'");
    }
    const NamedFunctor& resolve_fun(const Token& t) {
        for (const auto& f : doc_.functors)
            if (f.name == t.text) return f;
        fail(t, "unknown functor '" + t.text + "'");
    }

    // object path "( X Y Z )" resolved against a quiver
    std::vector<int> parse_path(const GradedQuiver& Q) {
        expect_punct("(");
        std::vector<int> path;
        while (lex_.peek().kind == Token::ident) {
            Token t = lex_.next();
            try {
                path.push_back(Q.object_index(t.text));
            } catch (...) {
                fail(t, "unknown object '" + t.text + "'");
            }
        }
        expect_punct(")");
        return path;
    }

    // "[ a b c ]" resolved along a path into basis refs
    std::vector<BasisRef> parse_factors(const GradedQuiver& Q, const std::vector<int>& path,
                                        const std::map<std::pair<int, int>, std::map<std::string, BasisRef>>& labels) {
        expect_punct("[");
        std::vector<BasisRef> out;
        std::size_t i = 0;
        while (lex_.peek().kind == Token::ident) {
            Token t = lex_.next();
            if (i + 1 >= path.size()) fail(t, "more factors than path steps");
            auto pair = std::make_pair(path[i], path[i + 1]);
            auto it = labels.find(pair);
            if (it == labels.end() || it->second.find(t.text) == it->second.end())
                fail(t, "unknown basis label '" + t.text + "'");
            out.push_back(it->second.at(t.text));
            ++i;
        }
        expect_punct("]");
        if (out.size() + 1 != path.size()) fail(lex_.peek(), "factor count does not match the path");
        return out;
    }

    // "{ label : coeff  label : coeff }" in a fixed hom pair
    HomElem parse_output(const Field& f, const std::map<std::string, BasisRef>& labels) {
        expect_punct("{");
        HomElem v;
        while (lex_.peek().kind == Token::ident) {
            Token t = lex_.next();
            auto it = labels.find(t.text);
            if (it == labels.end()) fail(t, "unknown basis label '" + t.text + "'");
            expect_punct(":");
            v.add(it->second, expect_scalar(f));
        }
        expect_punct("}");
        return v;
    }

    // unit-style expression: 0 | [coeff] label (('+'|'-') [coeff] label)*
    HomElem parse_expr(const Field& f, const std::map<std::string, BasisRef>& labels) {
        HomElem v;
        bool first = true;
        while (true) {
            Scalar c = Scalar::one(f);
            bool neg = false;
            if (!first) {
                if (lex_.peek().kind == Token::punct && (lex_.peek().text == "+" || lex_.peek().text == "-")) {
                    neg = lex_.next().text == "-";
                } else {
                    break;
                }
            }
            if (lex_.peek().kind == Token::number) {
                Token t = lex_.next();
                if (t.text == "0" && first && lex_.peek().kind != Token::ident) return v;
                c = scalar_from(t, f);
                if (lex_.peek().kind == Token::punct && lex_.peek().text == "*") lex_.next();
            }
            if (lex_.peek().kind != Token::ident) {
                if (first) fail(lex_.peek(), "expected an expression");
                fail(lex_.peek(), "expected a basis label");
            }
            Token t = lex_.next();
            auto it = labels.find(t.text);
            if (it == labels.end()) fail(t, "unknown basis label '" + t.text + "'");
            if (neg) c = -c;
            v.add(it->second, c);
            first = false;
        }
        return v;
    }

    void parse_category() {
        NamedCategory nc;
        nc.name = expect_ident("category name").text;
        expect_punct("{");
        Field field;
        bool have_field = false, have_conv = false;
        int truncation = 4;
        auto Q = std::make_shared<GradedQuiver>();
        std::map<std::pair<int, int>, std::map<std::string, BasisRef>> labels;
        struct OpEntry {
            std::vector<int> path;
            std::vector<BasisRef> factors;
            HomElem out;
        };
        std::vector<OpEntry> ops;
        std::map<int, HomElem> units;
        bool have_units = false;
        while (!(lex_.peek().kind == Token::punct && lex_.peek().text == "}")) {
            Token t = expect_ident("category item");
            if (t.text == "field") {
                Token ft = expect_ident("field kind");
                if (ft.text == "rational") {
                    field = Field::rationals();
                } else if (ft.text == "prime") {
                    long p = expect_int();
                    if (p < 2 || p > 0x7fffffffL || !is_prime_u32(static_cast<std::uint32_t>(p)))
                        fail(ft, "characteristic is not prime");
                    field = Field::prime(static_cast<std::uint32_t>(p));
                } else {
                    fail(ft, "field must be 'rational' or 'prime p'");
                }
                have_field = true;
            } else if (t.text == "convention") {
                Token ct = expect_ident("convention");
                if (ct.text != "sA") fail(ct, "hom data must be declared in the sA convention");
                have_conv = true;
            } else if (t.text == "truncation") {
                truncation = static_cast<int>(expect_int());
                if (truncation < 1) fail(t, "truncation must be >= 1");
            } else if (t.text == "objects") {
                expect_punct("{");
                std::vector<std::string> names;
                while (lex_.peek().kind == Token::ident) names.push_back(lex_.next().text);
                expect_punct("}");
                *Q = GradedQuiver(names);
            } else if (t.text == "hom") {
                Token xo = expect_ident("object");
                Token yo = expect_ident("object");
                int x, y;
                try {
                    x = Q->object_index(xo.text);
                } catch (...) {
                    fail(xo, "unknown object '" + xo.text + "'");
                }
                try {
                    y = Q->object_index(yo.text);
                } catch (...) {
                    fail(yo, "unknown object '" + yo.text + "'");
                }
                expect_punct("{");
                Token bt = expect_ident("basis");
                if (bt.text != "basis") fail(bt, "expected 'basis'");
                expect_punct("{");
                while (lex_.peek().kind == Token::ident) {
                    Token lt = lex_.next();
                    expect_punct(":");
                    long d = expect_int();
                    if (labels[{x, y}].count(lt.text)) fail(lt, "duplicate basis label '" + lt.text + "'");
                    labels[{x, y}][lt.text] = Q->hom_mut(x, y).add_basis(static_cast<Deg>(d), lt.text);
                }
                expect_punct("}");
                expect_punct("}");
            } else if (t.text == "op") {
                Token bt = expect_ident("op kind");
                if (bt.text != "b") fail(bt, "only 'b' operations live in a category block");
                long arity = expect_int();
                OpEntry e;
                e.path = parse_path(*Q);
                if (static_cast<long>(e.path.size()) != arity + 1) fail(bt, "path length does not match the arity");
                e.factors = parse_factors(*Q, e.path, labels);
                if (!have_field) fail(bt, "field must be declared before operations");
                e.out = parse_output(field, labels[{e.path.front(), e.path.back()}]);
                ops.push_back(std::move(e));
            } else if (t.text == "units") {
                if (!have_field) fail(t, "field must be declared before units");
                expect_punct("{");
                while (lex_.peek().kind == Token::ident) {
                    Token ot = lex_.next();
                    int x;
                    try {
                        x = Q->object_index(ot.text);
                    } catch (...) {
                        fail(ot, "unknown object '" + ot.text + "'");
                    }
                    expect_punct(":");
                    units[x] = parse_expr(field, labels[{x, x}]);
                }
                expect_punct("}");
                have_units = true;
            } else {
                fail(t, "unknown category item '" + t.text + "'");
            }
        }
        expect_punct("}");
        if (!have_field) throw ParseError(1, 1, "category '" + nc.name + "' declares no field");
        if (!have_conv) throw ParseError(1, 1, "category '" + nc.name + "' must declare 'convention sA'");
        nc.cat.field = field;
        nc.cat.quiver = Q;
        nc.cat.truncation = truncation;
        nc.cat.b = ComponentFamily::make(ComponentFamily::Kind::coderivation, truncation);
        for (auto& e : ops) {
            TensorWord w;
            w.path = e.path;
            w.factors = e.factors;
            if (w.length() < 1 || w.length() > truncation)
                throw ParseError(1, 1, "operation arity outside the truncation");
            HomElem prev = nc.cat.b.apply(w);
            prev.add(e.out);
            nc.cat.b.set(w, prev);
        }
        if (have_units) nc.units = units;
        doc_.categories.push_back(std::move(nc));
    }

    void parse_functor() {
        NamedFunctor nf;
        nf.name = expect_ident("functor name").text;
        Token ft = expect_ident("from");
        if (ft.text != "from") fail(ft, "expected 'from'");
        nf.from = expect_ident("category name").text;
        Token tt = expect_ident("to");
        if (tt.text != "to") fail(tt, "expected 'to'");
        nf.to = expect_ident("category name").text;
        const NamedCategory* A = nullptr;
        const NamedCategory* B = nullptr;
        for (const auto& c : doc_.categories) {
            if (c.name == nf.from) A = &c;
            if (c.name == nf.to) B = &c;
        }
        if (!A) fail(ft, "unknown category '" + nf.from + "'");
        if (!B) fail(tt, "unknown category '" + nf.to + "'");
        if (!(A->cat.field == B->cat.field)) fail(ft, "functor endpoints live over different fields");
        expect_punct("{");
        nf.f.src = A->cat.quiver;
        nf.f.tgt = B->cat.quiver;
        nf.f.truncation = std::min(A->cat.truncation, B->cat.truncation);
        nf.f.obj.assign(static_cast<std::size_t>(A->cat.quiver->object_count()), -1);
        nf.f.f = ComponentFamily::make(ComponentFamily::Kind::morphism, nf.f.truncation);
        auto labels_of = [](const GradedQuiver& Q) {
            std::map<std::pair<int, int>, std::map<std::string, BasisRef>> labels;
            for (int x = 0; x < Q.object_count(); ++x)
                for (int y = 0; y < Q.object_count(); ++y) {
                    const GradedSpace& s = Q.hom(x, y);
                    for (Deg d : s.degrees())
                        for (int i = 0; i < s.dim(d); ++i) labels[{x, y}][s.label({d, i})] = BasisRef{d, i};
                }
            return labels;
        };
        auto labelsA = labels_of(*A->cat.quiver);
        auto labelsB = labels_of(*B->cat.quiver);
        while (!(lex_.peek().kind == Token::punct && lex_.peek().text == "}")) {
            Token t = expect_ident("functor item");
            if (t.text == "obj") {
                expect_punct("{");
                while (lex_.peek().kind == Token::ident) {
                    Token xo = lex_.next();
                    expect_punct("->");
                    Token yo = expect_ident("object");
                    int x, y;
                    try {
                        x = A->cat.quiver->object_index(xo.text);
                    } catch (...) {
                        fail(xo, "unknown object '" + xo.text + "'");
                    }
                    try {
                        y = B->cat.quiver->object_index(yo.text);
                    } catch (...) {
                        fail(yo, "unknown object '" + yo.text + "'");
                    }
                    nf.f.obj[static_cast<std::size_t>(x)] = y;
                }
                expect_punct("}");
            } else if (t.text == "comp") {
                long arity = expect_int();
                auto path = parse_path(*A->cat.quiver);
                if (static_cast<long>(path.size()) != arity + 1) fail(t, "path length does not match the arity");
                auto factors = parse_factors(*A->cat.quiver, path, labelsA);
                int xf = nf.f.obj.at(static_cast<std::size_t>(path.front()));
                int yf = nf.f.obj.at(static_cast<std::size_t>(path.back()));
                if (xf < 0 || yf < 0) fail(t, "object map must be declared before components");
                HomElem out = parse_output(A->cat.field, labelsB[{xf, yf}]);
                TensorWord w;
                w.path = path;
                w.factors = factors;
                if (w.length() < 1 || w.length() > nf.f.truncation) fail(t, "component arity outside the truncation");
                HomElem prev = nf.f.f.apply(w);
                prev.add(out);
                nf.f.f.set(w, prev);
            } else {
                fail(t, "unknown functor item '" + t.text + "'");
            }
        }
        expect_punct("}");
        for (std::size_t i = 0; i < nf.f.obj.size(); ++i)
            if (nf.f.obj[i] < 0) throw ParseError(1, 1, "functor '" + nf.name + "' does not map object " +
                                                             A->cat.quiver->object_name(static_cast<int>(i)));
        doc_.functors.push_back(std::move(nf));
    }

    void parse_dcoder() {
        NamedDCoder nd;
        nd.name = expect_ident("dcoder name").text;
        Token kind = expect_ident("'of' or 'over'");
        const AInfCategory* A = nullptr;
        Field field;
        if (kind.text == "of") {
            Token ct = expect_ident("category");
            nd.of_cat = ct.text;
            const NamedCategory& c = resolve_cat(ct);
            A = &c.cat;
            field = c.cat.field;
            nd.r.f = nd.r.g = identity_functor(c.cat);
        } else if (kind.text == "over") {
            expect_punct("(");
            Token f1 = expect_ident("functor");
            Token f2 = expect_ident("functor");
            expect_punct(")");
            nd.over_f = f1.text;
            nd.over_g = f2.text;
            const NamedFunctor& F1 = resolve_fun(f1);
            const NamedFunctor& F2 = resolve_fun(f2);
            if (F1.from != F2.from || F1.to != F2.to) fail(f1, "double coderivation needs parallel functors");
            nd.r.f = F1.f;
            nd.r.g = F2.f;
        } else {
            fail(kind, "expected 'of' or 'over'");
        }
        Token dt = expect_ident("degree");
        if (dt.text != "degree") fail(dt, "expected 'degree'");
        nd.r.degree = static_cast<Deg>(expect_int());
        expect_punct("{");
        const GradedQuiver& Q = *nd.r.f.src;
        if (!A) {
            for (const auto& c : doc_.categories)
                if (c.cat.quiver == nd.r.f.src) {
                    A = &c.cat;
                    field = c.cat.field;
                }
            if (!A) fail(kind, "cannot locate the source category of the functors");
        }
        nd.r.truncation = A->truncation;
        std::map<std::pair<int, int>, std::map<std::string, BasisRef>> labelsA, labelsB;
        for (int x = 0; x < Q.object_count(); ++x)
            for (int y = 0; y < Q.object_count(); ++y) {
                const GradedSpace& s = Q.hom(x, y);
                for (Deg d : s.degrees())
                    for (int i = 0; i < s.dim(d); ++i) labelsA[{x, y}][s.label({d, i})] = BasisRef{d, i};
            }
        const GradedQuiver& QB = *nd.r.f.tgt;
        for (int x = 0; x < QB.object_count(); ++x)
            for (int y = 0; y < QB.object_count(); ++y) {
                const GradedSpace& s = QB.hom(x, y);
                for (Deg d : s.degrees())
                    for (int i = 0; i < s.dim(d); ++i) labelsB[{x, y}][s.label({d, i})] = BasisRef{d, i};
            }
        while (!(lex_.peek().kind == Token::punct && lex_.peek().text == "}")) {
            Token t = expect_ident("dcoder item");
            if (t.text != "comp") fail(t, "expected 'comp'");
            long n = expect_int();
            long m = expect_int();
            auto path = parse_path(Q);
            if (static_cast<long>(path.size()) != n + m + 1) fail(t, "path length does not match n+m");
            auto factors = parse_factors(Q, path, labelsA);
            int xf = nd.r.f.ob(path.front());
            int yg = nd.r.g.ob(path.back());
            HomElem out = parse_output(field, labelsB[{xf, yg}]);
            TensorWord w;
            w.path = path;
            w.factors = factors;
            TensorWord w1 = subword(w, 0, static_cast<int>(n));
            TensorWord w2 = subword(w, static_cast<int>(n), static_cast<int>(m));
            nd.r.set(w1, w2, out);
        }
        expect_punct("}");
        doc_.dcoders.push_back(std::move(nd));
    }

    void parse_model() {
        NamedModel nm;
        nm.name = expect_ident("model name").text;
        Token ft = expect_ident("for");
        if (ft.text != "for") fail(ft, "expected 'for'");
        nm.for_cat = expect_ident("category").text;
        const NamedCategory* C = nullptr;
        for (const auto& c : doc_.categories)
            if (c.name == nm.for_cat) C = &c;
        if (!C) fail(ft, "unknown category '" + nm.for_cat + "'");
        expect_punct("{");
        const NamedCategory* D = nullptr;
        while (!(lex_.peek().kind == Token::punct && lex_.peek().text == "}")) {
            Token t = expect_ident("model item");
            if (t.text == "dg") {
                Token dt = expect_ident("category");
                nm.dg = dt.text;
                D = &resolve_cat(dt);
            } else if (t.text == "functor") {
                Token ftk = expect_ident("functor");
                nm.functor = ftk.text;
                resolve_fun(ftk);
            } else if (t.text == "v") {
                if (!D) fail(t, "'dg' must precede 'v'");
                expect_punct("{");
                std::map<std::pair<int, int>, std::map<std::string, BasisRef>> labelsD;
                const GradedQuiver& QD = *D->cat.quiver;
                for (int x = 0; x < QD.object_count(); ++x) {
                    const GradedSpace& s = QD.hom(x, x);
                    for (Deg d : s.degrees())
                        for (int i = 0; i < s.dim(d); ++i) labelsD[{x, x}][s.label({d, i})] = BasisRef{d, i};
                }
                while (lex_.peek().kind == Token::ident) {
                    Token ot = lex_.next();
                    int x;
                    try {
                        x = QD.object_index(ot.text);
                    } catch (...) {
                        fail(ot, "unknown object '" + ot.text + "'");
                    }
                    expect_punct(":");
                    nm.v[x] = parse_expr(D->cat.field, labelsD[{x, x}]);
                }
                expect_punct("}");
            } else {
                fail(t, "unknown model item '" + t.text + "'");
            }
        }
        expect_punct("}");
        if (nm.dg.empty()) throw ParseError(1, 1, "dgmodel '" + nm.name + "' is missing its 'dg' block");
        if (nm.functor.empty()) throw ParseError(1, 1, "dgmodel '" + nm.name + "' is missing its 'functor' block");
        doc_.models.push_back(std::move(nm));
    }

    Lexer lex_;
    Document doc_;
};

std::string scalar_text(const Scalar& c) { return c.to_string(); }

void emit_expr(std::ostringstream& os, const GradedQuiver& Q, int x, int y, const HomElem& v) {
    if (v.is_zero()) {
        os << "0";
        return;
    }
    bool first = true;
    for (const auto& [r, c] : v) {
        Scalar a = c;
        if (!first) {
            bool neg = a.value() < 0;
            os << (neg ? " - " : " + ");
            if (neg) a = -a;
        }
        if (!a.is_one()) os << scalar_text(a) << " ";
        os << Q.hom(x, y).label(r);
        first = false;
    }
}

}  // namespace

const NamedCategory& Document::category(const std::string& name) const {
    for (const auto& c : categories)
        if (c.name == name) return c;
    throw std::out_of_range("no category named '" + name + "'");
}
const NamedFunctor& Document::functor(const std::string& name) const {
    for (const auto& f : functors)
        if (f.name == name) return f;
    throw std::out_of_range("no functor named '" + name + "'");
}
const NamedDCoder& Document::dcoder(const std::string& name) const {
    for (const auto& d : dcoders)
        if (d.name == name) return d;
    throw std::out_of_range("no dcoder named '" + name + "'");
}
const NamedModel& Document::model(const std::string& name) const {
    for (const auto& m : models)
        if (m.name == name) return m;
    throw std::out_of_range("no dgmodel named '" + name + "'");
}

Document parse_document(const std::string& text) { return Parser(text).parse(); }

std::string emit_document(const Document& doc) {
    std::ostringstream os;
    for (const auto& nc : doc.categories) {
        const GradedQuiver& Q = *nc.cat.quiver;
        os << "category " << nc.name << " {\n";
        os << "  field " << (nc.cat.field.is_rational() ? "rational" : "prime " + std::to_string(nc.cat.field.characteristic())) << "\n";
        os << "  convention sA\n";
        os << "  truncation " << nc.cat.truncation << "\n";
        os << "  objects {";
        for (const auto& o : Q.objects()) os << " " << o;
        os << " }\n";
        for (int x = 0; x < Q.object_count(); ++x)
            for (int y = 0; y < Q.object_count(); ++y) {
                const GradedSpace& s = Q.hom(x, y);
                if (s.empty()) continue;
                os << "  hom " << Q.object_name(x) << " " << Q.object_name(y) << " { basis {";
                for (Deg d : s.degrees())
                    for (int i = 0; i < s.dim(d); ++i) os << " " << s.label({d, i}) << " : " << d;
                os << " } }\n";
            }
        for (int k = 1; k <= nc.cat.truncation; ++k)
            for (const auto& [w, v] : nc.cat.b.at(k).table) {
                os << "  op b " << k << " (";
                for (int o : w.path) os << " " << Q.object_name(o);
                os << " ) [";
                for (int i = 0; i < w.length(); ++i)
                    os << " "
                       << Q.hom(w.path[static_cast<std::size_t>(i)], w.path[static_cast<std::size_t>(i + 1)])
                              .label(w.factors[static_cast<std::size_t>(i)]);
                os << " ] {";
                for (const auto& [r, c] : v) os << " " << Q.hom(w.from(), w.to()).label(r) << " : " << scalar_text(c);
                os << " }\n";
            }
        if (nc.units) {
            os << "  units {";
            for (const auto& [x, u] : *nc.units) {
                os << " " << Q.object_name(x) << " : ";
                std::ostringstream ex;
                emit_expr(ex, Q, x, x, u);
                os << ex.str();
            }
            os << " }\n";
        }
        os << "}\n";
    }
    for (const auto& nf : doc.functors) {
        const GradedQuiver& QA = *nf.f.src;
        const GradedQuiver& QB = *nf.f.tgt;
        os << "functor " << nf.name << " from " << nf.from << " to " << nf.to << " {\n";
        os << "  obj {";
        for (int x = 0; x < QA.object_count(); ++x)
            os << " " << QA.object_name(x) << " -> " << QB.object_name(nf.f.ob(x));
        os << " }\n";
        for (int k = 1; k <= nf.f.truncation; ++k)
            for (const auto& [w, v] : nf.f.f.at(k).table) {
                os << "  comp " << k << " (";
                for (int o : w.path) os << " " << QA.object_name(o);
                os << " ) [";
                for (int i = 0; i < w.length(); ++i)
                    os << " "
                       << QA.hom(w.path[static_cast<std::size_t>(i)], w.path[static_cast<std::size_t>(i + 1)])
                              .label(w.factors[static_cast<std::size_t>(i)]);
                os << " ] {";
                for (const auto& [r, c] : v)
                    os << " " << QB.hom(nf.f.ob(w.from()), nf.f.ob(w.to())).label(r) << " : " << scalar_text(c);
                os << " }\n";
            }
        os << "}\n";
    }
    for (const auto& nd : doc.dcoders) {
        const GradedQuiver& QA = *nd.r.f.src;
        const GradedQuiver& QB = *nd.r.f.tgt;
        if (!nd.of_cat.empty())
            os << "dcoder " << nd.name << " of " << nd.of_cat << " degree " << nd.r.degree << " {\n";
        else
            os << "dcoder " << nd.name << " over ( " << nd.over_f << " " << nd.over_g << " ) degree " << nd.r.degree
               << " {\n";
        for (const auto& [nmk, table] : nd.r.comp)
            for (const auto& [pair, v] : table) {
                TensorWord w = concat(pair.first, pair.second);
                os << "  comp " << nmk.first << " " << nmk.second << " (";
                for (int o : w.path) os << " " << QA.object_name(o);
                os << " ) [";
                for (int i = 0; i < w.length(); ++i)
                    os << " "
                       << QA.hom(w.path[static_cast<std::size_t>(i)], w.path[static_cast<std::size_t>(i + 1)])
                              .label(w.factors[static_cast<std::size_t>(i)]);
                os << " ] {";
                for (const auto& [r, c] : v)
                    os << " " << QB.hom(nd.r.f.ob(w.from()), nd.r.g.ob(w.to())).label(r) << " : " << scalar_text(c);
                os << " }\n";
            }
        os << "}\n";
    }
    for (const auto& nm : doc.models) {
        os << "dgmodel " << nm.name << " for " << nm.for_cat << " {\n";
        os << "  dg " << nm.dg << "\n";
        os << "  functor " << nm.functor << "\n";
        if (!nm.v.empty()) {
            const GradedQuiver* QD = nullptr;
            for (const auto& c : doc.categories)
                if (c.name == nm.dg) QD = c.cat.quiver.get();
            os << "  v {";
            for (const auto& [x, u] : nm.v) {
                os << " " << QD->object_name(x) << " : ";
                std::ostringstream ex;
                emit_expr(ex, *QD, x, x, u);
                os << ex.str();
            }
            os << " }\n";
        }
        os << "}\n";
    }
    return os.str();
}

NamedCategory make_named_category(std::string name, const AInfCategory& cat, std::optional<Units> units) {
    NamedCategory nc;
    nc.name = std::move(name);
    nc.cat = cat;
    nc.units = std::move(units);
    return nc;
}

NamedFunctor make_named_functor(std::string name, std::string from, std::string to, const AInfFunctor& f) {
    NamedFunctor nf;
    nf.name = std::move(name);
    nf.from = std::move(from);
    nf.to = std::move(to);
    nf.f = f;
    return nf;
}

}  // namespace ainfcat
