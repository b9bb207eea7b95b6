#pragma once

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "singspec/errors.hpp"
#include "singspec/polynomial.hpp"

namespace singspec {

// Recursive-descent parser for polynomial expressions over a fixed variable
// list. Grammar (standard precedence, ^ binds tightest and right-associates):
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := ('-'|'+') factor | power
//   power    := atom ('^' exponent)?
//   exponent := INT ('^' exponent)?
//   atom     := INT ('/' INT)? | IDENT | '(' expr ')'
//
// Implicit multiplication ("2xy") is rejected; '/' only forms fraction
// literals, never divides.
class PolynomialParser {
public:
    PolynomialParser(std::string text, std::vector<std::string> variables)
        : text_(std::move(text)), vars_(std::move(variables)) {
        if (vars_.empty()) throw InputError("empty variable list");
        std::set<std::string> seen;
        for (const auto& v : vars_)
            if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
    }

    Polynomial run() {
        next_token();
        Polynomial p = parse_expr();
        expect(TokKind::End, "end of input");
        return p;
    }

private:
    enum class TokKind { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

    struct Token {
        TokKind kind;
        std::string text;
        std::size_t pos;  // 1-based column of the first character
    };

    static std::string describe(TokKind k) {
        switch (k) {
            case TokKind::Int: return "integer";
            case TokKind::Ident: return "identifier";
            case TokKind::Plus: return "'+'";
            case TokKind::Minus: return "'-'";
            case TokKind::Star: return "'*'";
            case TokKind::Caret: return "'^'";
            case TokKind::Slash: return "'/'";
            case TokKind::LParen: return "'('";
            case TokKind::RParen: return "')'";
            case TokKind::End: return "end of input";
        }
        return "?";
    }

    std::string describe(const Token& t) const {
        if (t.kind == TokKind::Int || t.kind == TokKind::Ident) return "'" + t.text + "'";
        return describe(t.kind);
    }

    void next_token() {
        while (cursor_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[cursor_])))
            ++cursor_;
        std::size_t start = cursor_;
        if (cursor_ >= text_.size()) {
            tok_ = {TokKind::End, "", start + 1};
            return;
        }
        char c = text_[cursor_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (cursor_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[cursor_])))
                ++cursor_;
            tok_ = {TokKind::Int, text_.substr(start, cursor_ - start), start + 1};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (cursor_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[cursor_])) || text_[cursor_] == '_'))
                ++cursor_;
            tok_ = {TokKind::Ident, text_.substr(start, cursor_ - start), start + 1};
            return;
        }
        ++cursor_;
        switch (c) {
            case '+': tok_ = {TokKind::Plus, "+", start + 1}; return;
            case '-': tok_ = {TokKind::Minus, "-", start + 1}; return;
            case '*': tok_ = {TokKind::Star, "*", start + 1}; return;
            case '^': tok_ = {TokKind::Caret, "^", start + 1}; return;
            case '/': tok_ = {TokKind::Slash, "/", start + 1}; return;
            case '(': tok_ = {TokKind::LParen, "(", start + 1}; return;
            case ')': tok_ = {TokKind::RParen, ")", start + 1}; return;
            default:
                throw SyntaxError(start + 1, "a token", std::string("'") + c + "'");
        }
    }

    void expect(TokKind k, const std::string& what) {
        if (tok_.kind != k) throw SyntaxError(tok_.pos, what, describe(tok_));
        if (k != TokKind::End) next_token();
    }

    bool accept(TokKind k) {
        if (tok_.kind != k) return false;
        next_token();
        return true;
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            if (accept(TokKind::Plus)) {
                acc += parse_term();
            } else if (accept(TokKind::Minus)) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept(TokKind::Star)) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        if (accept(TokKind::Minus)) return -parse_factor();
        if (accept(TokKind::Plus)) return parse_factor();
        return parse_power();
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (!accept(TokKind::Caret)) return base;
        return base.pow(parse_exponent());
    }

    // Integer exponent tower, folded right-associatively: 2^3^2 = 2^9.
    long long parse_exponent() {
        if (tok_.kind != TokKind::Int)
            throw SyntaxError(tok_.pos, "integer exponent", describe(tok_));
        mpz_class e(tok_.text);
        next_token();
        if (accept(TokKind::Caret)) {
            long long upper = parse_exponent();
            mpz_class folded;
            if (e > 1 && upper > 64) throw InputError("exponent too large");
            mpz_pow_ui(folded.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(upper));
            e = folded;
        }
        if (e > 1000000) throw InputError("exponent too large");
        return e.get_si();
    }

    Polynomial parse_atom() {
        if (tok_.kind == TokKind::Int) {
            mpz_class num(tok_.text);
            next_token();
            if (accept(TokKind::Slash)) {
                if (tok_.kind != TokKind::Int)
                    throw SyntaxError(tok_.pos, "integer denominator", describe(tok_));
                mpz_class den(tok_.text);
                next_token();
                return Polynomial::constant(vars_, Rational(num, den));
            }
            return Polynomial::constant(vars_, Rational(num));
        }
        if (tok_.kind == TokKind::Ident) {
            std::size_t idx = 0;
            while (idx < vars_.size() && vars_[idx] != tok_.text) ++idx;
            if (idx == vars_.size()) throw UnknownVariable(tok_.text, tok_.pos);
            std::vector<int> raw(vars_.size(), 0);
            raw[idx] = 1;
            next_token();
            return Polynomial::monomial(vars_, ExponentVector(std::move(raw)), Rational(1));
        }
        if (accept(TokKind::LParen)) {
            Polynomial p = parse_expr();
            expect(TokKind::RParen, "')'");
            return p;
        }
        throw SyntaxError(tok_.pos, "integer, variable or '('", describe(tok_));
    }

    std::string text_;
    std::vector<std::string> vars_;
    std::size_t cursor_ = 0;
    Token tok_{TokKind::End, "", 0};
};

inline Polynomial parse_polynomial(const std::string& text, std::vector<std::string> variables) {
    return PolynomialParser(text, std::move(variables)).run();
}

}  // namespace singspec
