#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "singspec/errors.hpp"
#include "singspec/exponent_vector.hpp"
#include "singspec/rational.hpp"

namespace singspec {

// Sparse multivariate polynomial over Rational, keyed by exponent vectors.
// Canonical form: no zero coefficient is ever stored. Values are immutable
// in practice; all operations return fresh polynomials.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    static Polynomial zero(std::vector<std::string> variables) {
        return Polynomial(std::move(variables));
    }

    static Polynomial constant(std::vector<std::string> variables, const Rational& c) {
        Polynomial p(std::move(variables));
        if (!c.is_zero()) p.terms_.emplace(ExponentVector(p.vars_.size()), c);
        return p;
    }

    static Polynomial monomial(std::vector<std::string> variables, ExponentVector e,
                               const Rational& c) {
        Polynomial p(std::move(variables));
        if (e.size() != p.vars_.size()) throw LengthMismatch("exponent vector vs variable count");
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t variable_count() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const ExponentVector& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(ExponentVector(vars_.size())); }

    // True iff the polynomial is a nonzero constant.
    bool is_unit_constant() const {
        return terms_.size() == 1 && terms_.begin()->first.is_constant();
    }

    Polynomial operator-() const {
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        Polynomial r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea.plus(eb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : p.terms_) r.terms_.emplace(e, c * k);
        return r;
    }
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    // Multiply by c * z^e in one pass; the workhorse of polynomial division.
    Polynomial times_term(const ExponentVector& e, const Rational& c) const {
        Polynomial r(vars_);
        if (c.is_zero()) return r;
        for (const auto& [ep, cp] : terms_) r.terms_.emplace(ep.plus(e), cp * c);
        return r;
    }

    Polynomial pow(long long k) const {
        if (k < 0) throw InputError("negative polynomial power");
        Polynomial acc = constant(vars_, 1);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    Polynomial partial_derivative(std::size_t i) const {
        if (i >= vars_.size())
            throw IndexOutOfRange("variable index " + std::to_string(i) + " out of range");
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            r.terms_.emplace(e.with_decrement(i), c * Rational(e[i]));
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string monomial_str(const ExponentVector& e) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            first = false;
        }
        if (first) os << "1";
        return os.str();
    }

    // Canonical text form: terms in descending lexicographic exponent order,
    // coefficients as exact fractions. parse() accepts everything printed here.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) os << "-";
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            bool has_vars = !e.is_constant();
            if (!has_vars) {
                os << mag.str();
            } else {
                if (!(mag == Rational(1))) os << mag.str() << "*";
                os << monomial_str(e);
            }
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void add_term(const ExponentVector& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void check_same_ring(const Polynomial& o) const {
        if (vars_ != o.vars_) throw VariableMismatch("operands live in different polynomial rings");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace singspec
