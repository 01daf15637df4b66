#include "psc/parse.hpp"

#include <cctype>
#include <sstream>

#include "psc/errors.hpp"

namespace psc {

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;  // 1-based offset of first character
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t start = i_ + 1;
        if (i_ >= text_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            current_ = {Tok::Integer, std::string(text_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            current_ = {Tok::Ident, std::string(text_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '/': k = Tok::Slash; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        current_ = {k, std::string(1, c), start};
        ++i_;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view text, SignaturePtr sig) : lex_(text), sig_(std::move(sig)) {}

    Polynomial run() {
        Polynomial p = expr();
        if (lex_.peek().kind != Tok::End)
            throw ParseError("unexpected token '" + lex_.peek().text + "'", lex_.peek().pos);
        return p;
    }

private:
    Polynomial expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        } else if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            Polynomial t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Token head = lex_.peek();
        bool bare_variable = head.kind == Tok::Ident;
        Polynomial base = primary();
        if (lex_.peek().kind != Tok::Caret) return base;
        lex_.take();
        auto [k, pos] = exponent_literal();
        if (k >= 0) return base.pow(static_cast<unsigned>(k));
        if (!bare_variable)
            throw ParseError("negative exponent is only permitted on an invertible variable", pos);
        std::size_t var = *sig_->index_of(head.text);
        if (!sig_->invertible(var))
            throw ParseError("negative exponent on non-invertible variable '" + head.text + "'",
                             pos);
        std::vector<int> e(sig_->size(), 0);
        e[var] = k;
        return Polynomial::monomial(sig_, Monomial(std::move(e)));
    }

    Polynomial primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Integer: {
                Integer num(t.text);
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Tok::Integer)
                        throw ParseError("expected integer denominator", d.pos);
                    Integer den(d.text);
                    if (sgn(den) == 0) throw ParseError("zero denominator", d.pos);
                    return Polynomial::constant(sig_, Rational(num, den));
                }
                return Polynomial::constant(sig_, Rational(std::move(num), Integer(1)));
            }
            case Tok::Ident: {
                auto idx = sig_->index_of(t.text);
                if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return Polynomial::variable(sig_, *idx);
            }
            case Tok::LParen: {
                Polynomial p = expr();
                Token close = lex_.take();
                if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
                return p;
            }
            default:
                throw ParseError("expected a number, variable or '('", t.pos);
        }
    }

    // Integer exponent, optionally negated.
    std::pair<int, std::size_t> exponent_literal() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.take();
        if (t.kind != Tok::Integer) throw ParseError("expected integer exponent", t.pos);
        int v;
        try {
            v = std::stoi(t.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", t.pos);
        }
        return {neg ? -v : v, t.pos};
    }

    Lexer lex_;
    SignaturePtr sig_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const SignaturePtr& sig) {
    return Parser(text, sig).run();
}

std::string render_monomial(const Monomial& m, const Signature& sig) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!first) os << "*";
        os << sig.name(i);
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string render_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const Signature& sig = *f.signature();
    std::ostringstream os;
    bool first = true;
    // Leading term first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string mono = m.is_unit() ? "" : render_monomial(m, sig);
        if (mono.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << mono;
        } else {
            os << a.str() << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace psc
