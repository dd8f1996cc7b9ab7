#include "itdim/text_format.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "itdim/errors.hpp"

namespace itdim {

namespace {

enum class Tok { Ident, Int, Sym, Sep, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1, col = 1;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    int paren_depth = 0;  // () and []
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == '\n' || c == ';') {
            if (paren_depth == 0) out.push_back({Tok::Sep, std::string(1, c), line, col});
            advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t{Tok::Sym, "", line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
                ++j;
            t.kind = Tok::Ident;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Tok::Int;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            t.text = "->";
            advance(2);
        } else if (std::string_view(":,.^()[]{}=+*-").find(c) != std::string_view::npos) {
            t.text = std::string(1, c);
            if (c == '(' || c == '[') ++paren_depth;
            if ((c == ')' || c == ']') && paren_depth > 0) --paren_depth;
            advance(1);
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::string_view src, Residue p) : toks_(tokenize(src)), p_(p) {}

    // Whole file. Module statements freeze the presentation on first use.
    AlgebraFile file() {
        AlgebraFile f;
        bool seen_vertices = false;
        while (true) {
            skip_seps();
            if (at_end()) break;
            const Token& t = peek();
            if (is_word("vertices")) {
                if (f.algebra) fail(t, "'vertices' after a module statement");
                next();
                f.presentation.quiver.vertices = integer();
                if (f.presentation.quiver.vertices < 1) fail(t, "an algebra needs at least one vertex");
                seen_vertices = true;
            } else if (is_word("arrow")) {
                if (!seen_vertices) fail(t, "'arrow' before 'vertices'");
                if (f.algebra) fail(t, "'arrow' after a module statement");
                next();
                arrow(f.presentation.quiver);
            } else if (is_word("relations")) {
                if (!seen_vertices) fail(t, "'relations' before 'vertices'");
                if (f.algebra) fail(t, "'relations' after a module statement");
                next();
                expect(":");
                relations(f.presentation);
            } else if (is_word("module")) {
                if (!seen_vertices) fail(t, "'module' before 'vertices'");
                if (!f.algebra) f.algebra = Algebra::create(f.presentation);
                next();
                const Token& name = ident();
                for (const auto& [n, m] : f.modules)
                    if (n == name.text) fail(name, "module '" + name.text + "' defined twice");
                expect("=");
                alg_ = f.algebra;
                named_ = &f.modules;
                Rep m = expr();
                f.modules.emplace_back(name.text, std::move(m));
            } else {
                fail(t, "expected 'vertices', 'arrow', 'relations' or 'module'");
            }
            if (!at_end() && peek().kind != Tok::Sep) fail(peek(), "expected end of statement");
        }
        if (!seen_vertices) fail(peek(), "missing 'vertices' statement");
        if (!f.algebra) f.algebra = Algebra::create(f.presentation);
        return f;
    }

    Rep expression(const AlgebraPtr& alg, const NamedModules& named) {
        alg_ = alg;
        named_ = &named;
        skip_seps();
        Rep m = expr();
        skip_seps();
        if (!at_end()) fail(peek(), "unexpected trailing input");
        return m;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Residue p_;
    AlgebraPtr alg_;
    const NamedModules* named_ = nullptr;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_end() const { return peek().kind == Tok::End; }
    bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
    bool is_word(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
    void skip_seps() {
        while (peek().kind == Tok::Sep) next();
    }
    [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }

    void expect(const char* s) {
        if (!is_sym(s)) fail(peek(), std::string("expected '") + s + "'");
        next();
    }
    const Token& ident() {
        if (peek().kind != Tok::Ident) fail(peek(), "expected a name");
        return next();
    }
    int integer() {
        if (peek().kind != Tok::Int) fail(peek(), "expected an integer");
        const Token& t = next();
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) fail(t, "integer out of range");
        return v;
    }
    Residue residue() {
        bool neg = false;
        if (is_sym("-")) {
            next();
            neg = true;
        }
        if (peek().kind != Tok::Int) fail(peek(), "expected an integer");
        const Token& t = next();
        long long v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{}) fail(t, "integer out of range");
        return mod_reduce(neg ? -v : v, p_);
    }
    int vertex(int n) {
        const Token& t = peek();
        const int v = integer();
        if (v < 1 || v > n) fail(t, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        return v - 1;
    }

    void arrow(Quiver& q) {
        const Token& name = ident();
        if (q.arrow_index(name.text) >= 0) fail(name, "arrow '" + name.text + "' defined twice");
        expect(":");
        const int s = vertex(q.vertices);
        expect("->");
        const int t = vertex(q.vertices);
        q.arrows.push_back({name.text, s, t});
    }

    void relations(MonomialPresentation& pres) {
        if (is_word("J") && toks_[pos_ + 1].kind == Tok::Sym && toks_[pos_ + 1].text == "^") {
            const Token& at = next();
            next();
            const int k = integer();
            if (k < 2) fail(at, "J^k needs k >= 2");
            pres.truncation = pres.truncation ? std::min(*pres.truncation, k) : k;
            return;
        }
        while (true) {
            std::vector<int> word;
            const Token& start = peek();
            while (true) {
                const Token& a = ident();
                const int idx = pres.quiver.arrow_index(a.text);
                if (idx < 0) fail(a, "unknown arrow '" + a.text + "'");
                word.push_back(idx);
                if (!is_sym(".")) break;
                next();
            }
            if (word.size() < 2) fail(start, "a relation needs at least two arrows");
            pres.relations.push_back(std::move(word));
            if (!is_sym(",")) break;
            next();
        }
    }

    Rep expr() {
        Rep acc = term();
        while (is_sym("+")) {
            next();
            acc = direct_sum(acc, term());
        }
        return acc;
    }

    Rep over_vertices(const Token& head, Rep (*make)(const AlgebraPtr&, Residue, int)) {
        expect("(");
        Rep out;
        if (is_sym("*")) {
            next();
            std::vector<Rep> parts;
            for (int v = 0; v < alg_->vertices(); ++v) parts.push_back(make(alg_, p_, v));
            out = direct_sum(alg_, p_, parts);
        } else {
            (void)head;
            out = make(alg_, p_, vertex(alg_->vertices()));
        }
        expect(")");
        return out;
    }

    Rep term() {
        const Token& t = peek();
        if (is_sym("(")) {
            next();
            Rep m = expr();
            expect(")");
            return m;
        }
        if (t.kind != Tok::Ident) fail(t, "expected a module expression");
        if (t.text == "simple") return next(), over_vertices(t, &simple);
        if (t.text == "proj") return next(), over_vertices(t, &projective);
        if (t.text == "inj") return next(), over_vertices(t, &injective);
        if (t.text == "zero") return next(), Rep::zero(alg_, p_);
        if (t.text == "rad") {
            next();
            expect("(");
            Rep m = expr();
            expect(")");
            return radical(m).module;
        }
        if (t.text == "syz") {
            next();
            expect("(");
            Rep m = expr();
            expect(")");
            return syzygy(m);
        }
        if (t.text == "module" && toks_[pos_ + 1].kind == Tok::Sym && toks_[pos_ + 1].text == "{") {
            next();
            return literal();
        }
        next();
        if (named_)
            for (const auto& [n, m] : *named_)
                if (n == t.text) return m;
        fail(t, "unknown module '" + t.text + "'");
    }

    std::vector<std::vector<Residue>> matrix() {
        std::vector<std::vector<Residue>> rows;
        expect("[");
        while (!is_sym("]")) {
            expect("[");
            std::vector<Residue> row;
            while (!is_sym("]")) {
                row.push_back(residue());
                if (!is_sym(",")) break;
                next();
            }
            expect("]");
            rows.push_back(std::move(row));
            if (!is_sym(",")) break;
            next();
        }
        expect("]");
        return rows;
    }

    Rep literal() {
        const Token& open = peek();
        expect("{");
        const Quiver& q = alg_->quiver();
        std::optional<std::vector<int>> dims;
        std::vector<std::optional<std::pair<Token, std::vector<std::vector<Residue>>>>> arrows(q.arrows.size());
        while (true) {
            skip_seps();
            if (is_sym("}")) break;
            if (is_word("dims")) {
                const Token& at = next();
                if (dims) fail(at, "dims given twice");
                expect("=");
                expect("[");
                std::vector<int> d;
                while (!is_sym("]")) {
                    d.push_back(integer());
                    if (!is_sym(",")) break;
                    next();
                }
                expect("]");
                if (static_cast<int>(d.size()) != q.vertices)
                    fail(at, "dims needs " + std::to_string(q.vertices) + " entries");
                dims = std::move(d);
            } else if (is_word("arrow")) {
                next();
                const Token name = ident();
                const int idx = q.arrow_index(name.text);
                if (idx < 0) fail(name, "unknown arrow '" + name.text + "'");
                if (arrows[idx]) fail(name, "matrix for arrow '" + name.text + "' given twice");
                expect("=");
                arrows[idx] = std::make_pair(name, matrix());
            } else {
                fail(peek(), "expected 'dims' or 'arrow'");
            }
            if (!is_sym("}") && peek().kind != Tok::Sep) fail(peek(), "expected ';' or '}'");
        }
        next();
        if (!dims) fail(open, "module literal without dims");
        std::vector<FpMatrix> action;
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const int rows = (*dims)[q.arrows[a].target], cols = (*dims)[q.arrows[a].source];
            FpMatrix m(rows, cols, p_);
            if (arrows[a]) {
                const auto& [tok, data] = *arrows[a];
                const bool empty_ok = data.empty() && (rows == 0 || cols == 0);
                if (!empty_ok) {
                    if (static_cast<int>(data.size()) != rows)
                        fail(tok, "arrow '" + tok.text + "' needs " + std::to_string(rows) + " rows");
                    for (int r = 0; r < rows; ++r) {
                        if (static_cast<int>(data[r].size()) != cols)
                            fail(tok, "arrow '" + tok.text + "' needs " + std::to_string(cols) + " columns");
                        for (int c = 0; c < cols; ++c) m(r, c) = data[r][c];
                    }
                }
            }
            action.push_back(std::move(m));
        }
        try {
            return Rep(alg_, p_, *dims, std::move(action));
        } catch (const Error& e) {
            fail(open, e.what());
        }
    }
};

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text, Residue p) { return Parser(text, p).file(); }

MonomialPresentation parse_algebra(std::string_view text) {
    return parse_algebra_file(text, 10007).presentation;
}

Rep parse_module_expr(std::string_view text, const AlgebraPtr& alg, Residue p, const NamedModules& named) {
    return Parser(text, p).expression(alg, named);
}

}  // namespace itdim
