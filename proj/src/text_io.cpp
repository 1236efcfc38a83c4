#include "triag/text_io.hpp"

#include <cctype>

namespace triag {

namespace {

std::string term_text(const Universe& u, const Monomial& m, const Rat& abs_coeff) {
    std::string s = rat_to_string(abs_coeff);
    for (const auto& [v, e] : m.entries()) {
        s += "*" + u.label(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool neg = it->second < 0;
        const Rat mag = neg ? Rat(-it->second) : it->second;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_text(p.universe(), it->first, mag);
    }
    return out;
}

std::string to_text(const RationalFn& r) {
    if (r.is_polynomial()) {
        if (r.den().constant_value() == 1) return to_text(r.num());
        return "(" + to_text(r.num()) + ")/(" + to_text(r.den()) + ")";
    }
    return "(" + to_text(r.num()) + ")/(" + to_text(r.den()) + ")";
}

std::string to_text(const InvariantExpr& e) {
    std::vector<std::string> parts;
    if (!e.rational_part().is_zero()) parts.push_back(to_text(e.rational_part()));
    if (!e.power_factors().empty()) {
        std::string s;
        if (!e.power_coeff().is_one()) s += "(" + to_text(e.power_coeff()) + ")*";
        bool first = true;
        for (const auto& [base, exp] : e.power_factors()) {
            if (!first) s += "*";
            first = false;
            s += "(" + to_text(base) + ")^(" + rat_to_string(exp) + ")";
        }
        parts.push_back(std::move(s));
    }
    for (const auto& lt : e.log_terms()) {
        std::string s;
        if (!lt.coeff.is_one()) s += "(" + to_text(lt.coeff) + ")*";
        s += "ln(" + to_text(lt.arg) + ")";
        parts.push_back(std::move(s));
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

std::string to_text(const VectorField& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [v, c] : f.components()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_text(c) + ")*d/d(" + f.universe().label(v) + ")";
    }
    return out;
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

class Lexer {
public:
    Lexer(const std::string& s) : s_(s) { advance(); }

    Tok tok() const { return tok_; }
    const std::string& text() const { return text_; }
    std::size_t pos() const { return tok_pos_; }

    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        tok_pos_ = pos_;
        text_.clear();
        if (pos_ >= s_.size()) {
            tok_ = Tok::End;
            return;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                text_ += s_[pos_++];
            tok_ = Tok::Number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                text_ += s_[pos_++];
            tok_ = Tok::Ident;
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = Tok::Plus; return;
            case '-': tok_ = Tok::Minus; return;
            case '*': tok_ = Tok::Star; return;
            case '/': tok_ = Tok::Slash; return;
            case '^': tok_ = Tok::Caret; return;
            case '(': tok_ = Tok::LParen; return;
            case ')': tok_ = Tok::RParen; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", tok_pos_);
        }
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t tok_pos_ = 0;
    Tok tok_ = Tok::End;
    std::string text_;
};

class Parser {
public:
    Parser(const std::string& s, const Universe& u) : lex_(s), u_(u) {}

    InvariantExpr parse() {
        InvariantExpr e = expr();
        if (lex_.tok() != Tok::End) throw ParseError("trailing input", lex_.pos());
        return e;
    }

private:
    InvariantExpr expr() {
        bool neg = false;
        if (lex_.tok() == Tok::Minus) {
            neg = true;
            lex_.advance();
        } else if (lex_.tok() == Tok::Plus) {
            lex_.advance();
        }
        InvariantExpr acc = term();
        if (neg) acc = -acc;
        while (lex_.tok() == Tok::Plus || lex_.tok() == Tok::Minus) {
            const bool minus = lex_.tok() == Tok::Minus;
            lex_.advance();
            InvariantExpr t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    InvariantExpr term() {
        InvariantExpr acc = factor();
        while (lex_.tok() == Tok::Star || lex_.tok() == Tok::Slash) {
            const bool div = lex_.tok() == Tok::Slash;
            lex_.advance();
            InvariantExpr f = factor();
            acc = div ? acc / f : acc * f;
        }
        return acc;
    }

    InvariantExpr factor() {
        InvariantExpr p = primary();
        if (lex_.tok() == Tok::Caret) {
            lex_.advance();
            return p.pow(exponent());
        }
        return p;
    }

    Rat exponent() {
        bool paren = false;
        if (lex_.tok() == Tok::LParen) {
            paren = true;
            lex_.advance();
        }
        bool neg = false;
        if (lex_.tok() == Tok::Minus) {
            neg = true;
            lex_.advance();
        }
        if (lex_.tok() != Tok::Number) throw ParseError("expected exponent", lex_.pos());
        Rat e(lex_.text());
        lex_.advance();
        if (paren && lex_.tok() == Tok::Slash) {
            lex_.advance();
            if (lex_.tok() != Tok::Number) throw ParseError("expected exponent denominator", lex_.pos());
            const Rat d(lex_.text());
            if (d == 0) throw ParseError("zero exponent denominator", lex_.pos());
            e /= d;
            lex_.advance();
        }
        if (paren) {
            if (lex_.tok() != Tok::RParen) throw ParseError("expected ')' after exponent", lex_.pos());
            lex_.advance();
        }
        e.canonicalize();
        return neg ? Rat(-e) : e;
    }

    InvariantExpr primary() {
        switch (lex_.tok()) {
            case Tok::Number: {
                Rat c(lex_.text());
                lex_.advance();
                return InvariantExpr(RationalFn(u_, c));
            }
            case Tok::Ident: {
                const std::string name = lex_.text();
                const std::size_t at = lex_.pos();
                lex_.advance();
                if (name == "ln") {
                    if (lex_.tok() != Tok::LParen) throw ParseError("expected '(' after ln", lex_.pos());
                    lex_.advance();
                    InvariantExpr arg = expr();
                    if (lex_.tok() != Tok::RParen) throw ParseError("expected ')'", lex_.pos());
                    lex_.advance();
                    if (!arg.is_plain_rational() || !arg.rational_part().is_polynomial())
                        throw ParseError("ln argument must be a polynomial", at);
                    Polynomial q =
                        arg.rational_part().num() * (1 / arg.rational_part().den().constant_value());
                    return InvariantExpr::log_term(RationalFn(u_, Rat(1)), std::move(q));
                }
                return InvariantExpr(Polynomial::variable(u_, u_.parse_label(name)));
            }
            case Tok::LParen: {
                lex_.advance();
                InvariantExpr e = expr();
                if (lex_.tok() != Tok::RParen) throw ParseError("expected ')'", lex_.pos());
                lex_.advance();
                return e;
            }
            default:
                throw ParseError("expected number, variable or '('", lex_.pos());
        }
    }

    Lexer lex_;
    Universe u_;
};

} // namespace

InvariantExpr parse_invariant(const std::string& text, const Universe& u) {
    return Parser(text, u).parse();
}

Polynomial parse_polynomial(const std::string& text, const Universe& u) {
    InvariantExpr e = parse_invariant(text, u);
    if (!e.is_plain_rational()) throw ParseError("expected a polynomial, got a general expression", 0);
    const RationalFn& r = e.rational_part();
    if (!r.is_polynomial()) throw ParseError("expected a polynomial, got a quotient", 0);
    return r.num() * (1 / r.den().constant_value());
}

} // namespace triag
