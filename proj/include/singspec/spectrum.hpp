#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "singspec/errors.hpp"
#include "singspec/rational.hpp"
#include "singspec/singularity.hpp"

namespace singspec {

// The spectrum of an isolated quasi-homogeneous hypersurface singularity:
// a sorted multiset of rationals in (0, n+1), symmetric about (n+1)/2, of
// total mass mu. Construction checks all three facts; they are theorems on
// accepted inputs, so a violation is an engine bug, not a user error.
class Spectrum {
public:
    using Entries = std::map<Rational, long long>;

    static Spectrum from_multiset(Entries entries, long long n, long long expected_mass) {
        Spectrum s;
        s.entries_ = std::move(entries);
        s.n_ = n;
        const Rational top(n + 1);
        long long mass = 0;
        for (const auto& [alpha, m] : s.entries_) {
            if (m <= 0) throw InternalError("spectrum", "nonpositive multiplicity at " + alpha.str());
            if (!(Rational(0) < alpha) || !(alpha < top))
                throw InternalError("spectrum-range",
                                    "spectral number " + alpha.str() + " outside (0," +
                                        Rational(n + 1).str() + ")");
            mass += m;
        }
        for (const auto& [alpha, m] : s.entries_) {
            auto it = s.entries_.find(top - alpha);
            long long mirror = it == s.entries_.end() ? 0 : it->second;
            if (mirror != m)
                throw InternalError("symmetry", "m_{" + (top - alpha).str() + "} = " +
                                                    std::to_string(mirror) + " but m_{" +
                                                    alpha.str() + "} = " + std::to_string(m));
        }
        if (mass != expected_mass)
            throw InternalError("mass", "total multiplicity " + std::to_string(mass) +
                                            " != mu = " + std::to_string(expected_mass));
        return s;
    }

    const Entries& entries() const { return entries_; }
    long long n() const { return n_; }
    bool empty() const { return entries_.empty(); }

    long long total_mass() const {
        long long m = 0;
        for (const auto& [a, k] : entries_) m += k;
        return m;
    }

    long long multiplicity(const Rational& alpha) const {
        auto it = entries_.find(alpha);
        return it == entries_.end() ? 0 : it->second;
    }

    Rational min_alpha() const {
        if (entries_.empty()) throw SmoothPoint("empty spectrum has no minimal exponent");
        return entries_.begin()->first;
    }
    Rational max_alpha() const {
        if (entries_.empty()) throw SmoothPoint("empty spectrum has no maximal exponent");
        return entries_.rbegin()->first;
    }

    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    // "1:1 4/3:3 5/3:3 2:1", ascending.
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [a, m] : entries_) {
            if (!first) os << " ";
            os << a.str() << ":" << m;
            first = false;
        }
        return first ? "(empty)" : os.str();
    }

private:
    Spectrum() = default;
    Entries entries_;
    long long n_ = 0;
};

// V-filtration value of the monomial z^alpha: l(alpha) = sum (alpha_i+1) w_i.
// Under the +1-shifted convention used throughout, this IS the spectral
// number the monomial contributes.
inline Rational spectral_number(const ExponentVector& alpha, const WeightSystem& ws) {
    if (alpha.size() != ws.variable_count())
        throw LengthMismatch("exponent vector length differs from weight count");
    long long num = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        num += (static_cast<long long>(alpha[i]) + 1) * ws.a()[i];
    return Rational(num, ws.d());
}

// Engine route: the multiset { l(alpha) : alpha in the staircase basis }.
inline Spectrum compute_spectrum(const MilnorData& md) {
    Spectrum::Entries entries;
    for (const auto& alpha : md.basis.monomials) entries[spectral_number(alpha, md.ws)] += 1;
    return Spectrum::from_multiset(std::move(entries), md.ws.n(), md.mu);
}

// Closed-form oracle for x_1^{c_1} + ... + x_{n+1}^{c_{n+1}}: the staircase
// is the full box 0 <= alpha_i <= c_i - 2, enumerated directly with no
// Groebner machinery involved.
inline Spectrum spectrum_oracle_brieskorn_pham(const std::vector<long long>& c, long long n) {
    if (static_cast<long long>(c.size()) != n + 1)
        throw LengthMismatch("Brieskorn-Pham exponent count must be n+1");
    for (long long ci : c)
        if (ci < 2) throw InputError("Brieskorn-Pham exponents must be >= 2");
    long long mass = 1;
    for (long long ci : c) mass *= ci - 1;

    Spectrum::Entries entries;
    std::vector<long long> alpha(c.size(), 0);
    for (;;) {
        Rational l(0);
        for (std::size_t i = 0; i < c.size(); ++i) l += Rational(alpha[i] + 1, c[i]);
        entries[l] += 1;
        std::size_t v = 0;
        while (v < c.size()) {
            if (++alpha[v] <= c[v] - 2) break;
            alpha[v] = 0;
            ++v;
        }
        if (v == c.size()) break;
    }
    return Spectrum::from_multiset(std::move(entries), n, mass);
}

namespace detail {

// Exact division by the monic binomial u^k - 1; remainder must vanish.
inline std::vector<mpz_class> divide_by_u_pow_minus_one(std::vector<mpz_class> p, long long k) {
    std::vector<mpz_class> q(p.size() > static_cast<std::size_t>(k) ? p.size() - k : 0, 0);
    for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(k);) {
        if (p[i] == 0) continue;
        mpz_class c = p[i];
        q[i - k] += c;
        p[i] = 0;
        p[i - k] += c;
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(k) && i < p.size(); ++i)
        if (p[i] != 0)
            throw InternalError("product-oracle", "generating function is not a polynomial");
    return q;
}

}  // namespace detail

// Second independent oracle: expand prod_i (t - t^{w_i}) / (t^{w_i} - 1)
// exactly as a polynomial in u = t^{1/d} and read multiplicities off the
// coefficients. Validated against the Brieskorn-Pham oracle before use;
// see the spectrum tests and the acceptance suite.
inline Spectrum spectrum_oracle_product(const WeightSystem& ws) {
    const long long d = ws.d();
    std::vector<mpz_class> poly{1};
    for (long long ai : ws.a()) {
        // multiply by u^d - u^{a_i}
        std::vector<mpz_class> next(poly.size() + d, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            if (poly[k] == 0) continue;
            next[k + d] += poly[k];
            next[k + ai] -= poly[k];
        }
        poly = std::move(next);
    }
    for (long long ai : ws.a()) poly = detail::divide_by_u_pow_minus_one(std::move(poly), ai);

    Rational mu = milnor_orlik_mu(ws);
    if (!mu.is_integer() || !mu.num().fits_slong_p())
        throw InternalError("product-oracle", "weight product " + mu.str() + " is not a small integer");

    Spectrum::Entries entries;
    for (std::size_t e = 0; e < poly.size(); ++e) {
        if (poly[e] == 0) continue;
        if (poly[e] < 0)
            throw InternalError("product-oracle", "negative multiplicity in expansion");
        if (!poly[e].fits_slong_p())
            throw InternalError("product-oracle", "multiplicity overflow");
        entries[Rational(static_cast<long long>(e), d)] = poly[e].get_si();
    }
    return Spectrum::from_multiset(std::move(entries), ws.n(), mu.num().get_si());
}

}  // namespace singspec
