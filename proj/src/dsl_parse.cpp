#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "shacldl/dsl.hpp"
#include "shacldl/errors.hpp"

namespace shacldl {

namespace {

enum class Tok {
    Ident,
    Iri,
    Int,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Amp,
    Pipe,
    Bang,
    Geq,
    Dot,
    Comma,
    Caret,
    Slash,
    Star,
    Question,
    Assign,    // :=
    Subset,    // <=
    Arrow,     // ~>
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::uint32_t value = 0;
    SourceLocation loc;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-';
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_space();
            SourceLocation loc{line_, col_};
            if (pos_ >= text_.size()) {
                tokens.push_back({Tok::End, "", 0, loc});
                return tokens;
            }
            char c = text_[pos_];
            if (ident_start(c)) {
                std::string s;
                while (pos_ < text_.size() && ident_char(text_[pos_])) {
                    // ':' only belongs to the name when it is not ':='
                    if (text_[pos_] == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=')
                        break;
                    s += advance();
                }
                tokens.push_back({Tok::Ident, std::move(s), 0, loc});
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::uint64_t v = 0;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    v = v * 10 + static_cast<std::uint64_t>(advance() - '0');
                    if (v > 0x7fffffffu) throw ParseError(loc, "count out of range");
                }
                tokens.push_back({Tok::Int, "", static_cast<std::uint32_t>(v), loc});
            } else if (c == '<') {
                advance();
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    advance();
                    tokens.push_back({Tok::Subset, "<=", 0, loc});
                } else {
                    std::string s;
                    while (pos_ < text_.size() && text_[pos_] != '>' && text_[pos_] != '\n')
                        s += advance();
                    if (pos_ >= text_.size() || text_[pos_] != '>')
                        throw ParseError(loc, "unterminated <iri>");
                    advance();
                    tokens.push_back({Tok::Iri, std::move(s), 0, loc});
                }
            } else {
                switch (c) {
                    case '{': advance(); tokens.push_back({Tok::LBrace, "{", 0, loc}); break;
                    case '}': advance(); tokens.push_back({Tok::RBrace, "}", 0, loc}); break;
                    case '(': advance(); tokens.push_back({Tok::LParen, "(", 0, loc}); break;
                    case ')': advance(); tokens.push_back({Tok::RParen, ")", 0, loc}); break;
                    case '&': advance(); tokens.push_back({Tok::Amp, "&", 0, loc}); break;
                    case '|': advance(); tokens.push_back({Tok::Pipe, "|", 0, loc}); break;
                    case '!': advance(); tokens.push_back({Tok::Bang, "!", 0, loc}); break;
                    case '.': advance(); tokens.push_back({Tok::Dot, ".", 0, loc}); break;
                    case ',': advance(); tokens.push_back({Tok::Comma, ",", 0, loc}); break;
                    case '^': advance(); tokens.push_back({Tok::Caret, "^", 0, loc}); break;
                    case '/': advance(); tokens.push_back({Tok::Slash, "/", 0, loc}); break;
                    case '*': advance(); tokens.push_back({Tok::Star, "*", 0, loc}); break;
                    case '?': advance(); tokens.push_back({Tok::Question, "?", 0, loc}); break;
                    case '>':
                        advance();
                        if (pos_ >= text_.size() || advance() != '=')
                            throw ParseError(loc, "expected >=");
                        tokens.push_back({Tok::Geq, ">=", 0, loc});
                        break;
                    case ':':
                        advance();
                        if (pos_ >= text_.size() || advance() != '=')
                            throw ParseError(loc, "expected :=");
                        tokens.push_back({Tok::Assign, ":=", 0, loc});
                        break;
                    case '~':
                        advance();
                        if (pos_ >= text_.size() || advance() != '>')
                            throw ParseError(loc, "expected ~>");
                        tokens.push_back({Tok::Arrow, "~>", 0, loc});
                        break;
                    default:
                        throw ParseError(loc, std::string("unexpected character '") + c + "'");
                }
            }
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                return;
            }
        }
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ShapeSchema schema() {
        Definitions defs;
        std::vector<Target> targets;
        while (peek().kind != Tok::End) {
            const Token& t = peek();
            if (t.kind != Tok::Ident)
                throw ParseError(t.loc, "expected 'shape' or a target statement");
            if (t.text == "shape") {
                next();
                Name s = shape_name(expect_name("shape name"));
                if (defs.count(s))
                    throw ParseError(t.loc, "duplicate definition of shape " + s.text);
                expect(Tok::Assign, ":=");
                ShapePtr body = shape();
                expect(Tok::Dot, ".");
                defs.emplace(std::move(s), std::move(body));
            } else if (t.text == "target") {
                next();
                ShapePtr lhs = shape();
                expect(Tok::Subset, "<=");
                ShapePtr rhs = shape();
                expect(Tok::Dot, ".");
                targets.push_back({std::move(lhs), std::move(rhs)});
            } else if (t.text == "targetNode") {
                next();
                Name c = node_name(expect_name("node name"));
                expect(Tok::Arrow, "~>");
                Name s = shape_name(expect_name("shape name"));
                expect(Tok::Dot, ".");
                targets.push_back({shape_constant(std::move(c)), shape_ref(std::move(s))});
            } else if (t.text == "targetSubjectsOf" || t.text == "targetObjectsOf") {
                bool subjects = t.text == "targetSubjectsOf";
                next();
                Name p = property_name(expect_name("property name"));
                expect(Tok::Arrow, "~>");
                Name s = shape_name(expect_name("shape name"));
                expect(Tok::Dot, ".");
                PathPtr path = subjects ? path_prop(std::move(p)) : path_inverse(std::move(p));
                targets.push_back(
                    {shape_at_least(1, std::move(path), shape_top()), shape_ref(std::move(s))});
            } else if (t.text == "targetClass") {
                next();
                Name r = property_name(expect_name("property name"));
                Name c = node_name(expect_name("node name"));
                expect(Tok::Arrow, "~>");
                Name s = shape_name(expect_name("shape name"));
                expect(Tok::Dot, ".");
                targets.push_back({shape_at_least(1, path_prop(std::move(r)),
                                                  shape_constant(std::move(c))),
                                   shape_ref(std::move(s))});
            } else {
                throw ParseError(t.loc, "unknown statement '" + t.text + "'");
            }
        }
        return ShapeSchema(std::move(defs), std::move(targets));
    }

    ShapePtr standalone_shape() {
        ShapePtr s = shape();
        expect(Tok::End, "end of input");
        return s;
    }

    PathPtr standalone_path() {
        PathPtr p = path();
        expect(Tok::End, "end of input");
        return p;
    }

private:
    // shape := and_level ('|' and_level)*
    ShapePtr shape() {
        ShapePtr left = shape_and_level();
        while (peek().kind == Tok::Pipe) {
            next();
            left = shape_or(std::move(left), shape_and_level());
        }
        return left;
    }

    ShapePtr shape_and_level() {
        ShapePtr left = shape_unary();
        while (peek().kind == Tok::Amp) {
            next();
            left = shape_and(std::move(left), shape_unary());
        }
        return left;
    }

    // Quantifier bodies bind at this level; compound bodies need parens.
    ShapePtr shape_unary() {
        const Token& t = peek();
        if (t.kind == Tok::Bang) {
            next();
            return shape_not(shape_unary());
        }
        if (t.kind == Tok::Geq) {
            next();
            const Token& n = expect(Tok::Int, "count");
            if (n.value == 0) throw ParseError(n.loc, ">= requires a count of at least 1");
            PathPtr p = path();
            expect(Tok::Dot, ".");
            return shape_at_least(n.value, std::move(p), shape_unary());
        }
        if (t.kind == Tok::Ident && (t.text == "exists" || t.text == "forall")) {
            bool is_exists = t.text == "exists";
            next();
            PathPtr p = path();
            expect(Tok::Dot, ".");
            ShapePtr body = shape_unary();
            return is_exists ? shape_exists(std::move(p), std::move(body))
                             : shape_forall(std::move(p), std::move(body));
        }
        return shape_atom();
    }

    ShapePtr shape_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::LBrace: {
                next();
                Name c = node_name(expect_name("node name"));
                expect(Tok::RBrace, "}");
                return shape_constant(std::move(c));
            }
            case Tok::LParen: {
                next();
                ShapePtr s = shape();
                expect(Tok::RParen, ")");
                return s;
            }
            case Tok::Iri:
                next();
                return shape_ref(shape_name(t.text));
            case Tok::Ident: {
                if (t.text == "top") {
                    next();
                    return shape_top();
                }
                if (t.text == "eq" || t.text == "disj") {
                    bool is_eq = t.text == "eq";
                    next();
                    expect(Tok::LParen, "(");
                    Name p = property_name(expect_name("property name"));
                    expect(Tok::Comma, ",");
                    PathPtr e = path();
                    expect(Tok::RParen, ")");
                    return is_eq ? shape_eq(std::move(p), std::move(e))
                                 : shape_disj(std::move(p), std::move(e));
                }
                if (t.text == "closed") {
                    next();
                    expect(Tok::LParen, "(");
                    std::vector<Name> props;
                    if (peek().kind != Tok::RParen) {
                        props.push_back(property_name(expect_name("property name")));
                        while (peek().kind == Tok::Comma) {
                            next();
                            props.push_back(property_name(expect_name("property name")));
                        }
                    }
                    expect(Tok::RParen, ")");
                    return shape_closed(std::move(props));
                }
                next();
                return shape_ref(shape_name(t.text));
            }
            default:
                throw ParseError(t.loc, "expected a shape");
        }
    }

    // path := seq ('|' seq)*
    PathPtr path() {
        PathPtr left = path_seq();
        while (peek().kind == Tok::Pipe) {
            next();
            left = path_union(std::move(left), path_seq());
        }
        return left;
    }

    PathPtr path_seq() {
        PathPtr left = path_postfix();
        while (peek().kind == Tok::Slash) {
            next();
            left = path_compose(std::move(left), path_postfix());
        }
        return left;
    }

    PathPtr path_postfix() {
        PathPtr e = path_primary();
        while (true) {
            if (peek().kind == Tok::Star) {
                next();
                e = path_star(std::move(e));
            } else if (peek().kind == Tok::Question) {
                next();
                e = path_optional(std::move(e));
            } else {
                return e;
            }
        }
    }

    PathPtr path_primary() {
        const Token& t = peek();
        if (t.kind == Tok::Caret) {
            next();
            return path_inverse(property_name(expect_name("property name")));
        }
        if (t.kind == Tok::LParen) {
            next();
            PathPtr p = path();
            expect(Tok::RParen, ")");
            return p;
        }
        return path_prop(property_name(expect_name("property name")));
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    const Token& expect(Tok kind, const std::string& what) {
        const Token& t = peek();
        if (t.kind != kind) throw ParseError(t.loc, "expected " + what);
        return next();
    }

    std::string expect_name(const std::string& what) {
        const Token& t = peek();
        if (t.kind != Tok::Ident && t.kind != Tok::Iri)
            throw ParseError(t.loc, "expected " + what);
        next();
        return t.text;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ShapeSchema parse_schema(const std::string& text) {
    return Parser(Lexer(text).run()).schema();
}

ShapePtr parse_shape_expr(const std::string& text) {
    return Parser(Lexer(text).run()).standalone_shape();
}

PathPtr parse_path_expr(const std::string& text) {
    return Parser(Lexer(text).run()).standalone_path();
}

}  // namespace shacldl
