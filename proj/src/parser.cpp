#include "surfparam/parser.hpp"

#include <cctype>

namespace surfparam {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text; // Number digits or identifier
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) step();
        tok_.line = line_;
        tok_.column = col_;
        tok_.text.clear();
        if (pos_ >= src_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Kind::Number;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                tok_.text.push_back(src_[pos_]);
                step();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::Kind::Ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                tok_.text.push_back(src_[pos_]);
                step();
            }
            return;
        }
        step();
        switch (c) {
            case '+': tok_.kind = Token::Kind::Plus; return;
            case '-': tok_.kind = Token::Kind::Minus; return;
            case '*': tok_.kind = Token::Kind::Star; return;
            case '^': tok_.kind = Token::Kind::Caret; return;
            case '/': tok_.kind = Token::Kind::Slash; return;
            case '(': tok_.kind = Token::Kind::LParen; return;
            case ')': tok_.kind = Token::Kind::RParen; return;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", tok_.line, tok_.column);
        }
    }

    void step() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_{};
};

class Parser {
public:
    Parser(const std::string& text, std::span<const std::string> vars) : lex_(text), vars_(vars) {}

    MultiPoly run() {
        MultiPoly p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw parse_error("trailing input after expression", t.line, t.column);
        return p;
    }

private:
    int nvars() const { return static_cast<int>(vars_.size()); }

    MultiPoly expr() {
        MultiPoly p = term();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::Plus) {
                lex_.next();
                p = p + term();
            } else if (t.kind == Token::Kind::Minus) {
                lex_.next();
                p = p - term();
            } else {
                return p;
            }
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.next();
            p = p * factor();
        }
        return p;
    }

    MultiPoly factor() {
        MultiPoly p = base();
        if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.next();
            Token t = lex_.next();
            if (t.kind != Token::Kind::Number)
                throw parse_error("exponent must be a non-negative integer literal", t.line, t.column);
            unsigned long e = std::stoul(t.text);
            p = p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    MultiPoly base() {
        Token t = lex_.next();
        switch (t.kind) {
            case Token::Kind::Number: {
                BigInt num(t.text);
                if (lex_.peek().kind == Token::Kind::Slash) {
                    lex_.next();
                    Token d = lex_.next();
                    if (d.kind != Token::Kind::Number)
                        throw parse_error("denominator must be an integer literal", d.line, d.column);
                    BigInt den(d.text);
                    if (den == 0) throw parse_error("zero denominator", d.line, d.column);
                    return MultiPoly::constant(nvars(), rat(num, den));
                }
                return MultiPoly::constant(nvars(), Rational(num));
            }
            case Token::Kind::Ident: {
                for (int i = 0; i < nvars(); ++i)
                    if (vars_[static_cast<size_t>(i)] == t.text) return MultiPoly::variable(nvars(), i);
                throw parse_error("unknown variable '" + t.text + "'", t.line, t.column);
            }
            case Token::Kind::LParen: {
                MultiPoly p = expr();
                Token r = lex_.next();
                if (r.kind != Token::Kind::RParen)
                    throw parse_error("expected ')'", r.line, r.column);
                return p;
            }
            case Token::Kind::Minus:
                return -factor();
            default:
                throw parse_error("expected a number, variable, '(' or '-'", t.line, t.column);
        }
    }

    Lexer lex_;
    std::span<const std::string> vars_;
};

} // namespace

MultiPoly parse_polynomial(const std::string& text, std::span<const std::string> vars) {
    if (text.empty()) throw parse_error("empty input", 1, 1);
    return Parser(text, vars).run();
}

} // namespace surfparam
