#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "singspec/errors.hpp"
#include "singspec/rational.hpp"
#include "singspec/spectrum.hpp"

namespace singspec {

// Everything the classification pipeline produces for one singularity.
// max_du_bois / max_rational are -1 when the property fails already at
// k = 0 ("not Du Bois" / "not rational"); liminal_k is present exactly when
// the minimal exponent is an integer.
struct InvariantReport {
    long long mu = 0;
    long long n = 0;
    std::optional<Rational> alpha_tilde;  // absent iff smooth (mu = 0)
    std::vector<long long> s;             // s_0 .. s_n
    int max_du_bois = -1;
    int max_rational = -1;
    std::optional<int> liminal_k;
    bool smooth = false;
    bool odp = false;
    bool outside_paper_convention = false;  // set when n < 2
};

struct PropertyOutcome {
    std::string check_id;
    bool passed = true;
    std::string detail;
};

// Hodge numbers of the Milnor fiber from the spectrum: s_p is the spectrum
// mass in [p, p+1). The mirrored formula (mass in (p, p+1] at index n-p)
// must give the same vector by symmetry; both are computed and compared.
inline std::vector<long long> s_invariants(const Spectrum& spec) {
    const long long n = spec.n();
    std::vector<long long> s(n + 1, 0), mirrored(n + 1, 0);
    for (const auto& [alpha, m] : spec.entries()) {
        long long p = alpha.floor().get_si();  // alpha in (0,n+1) so p in [0,n]
        s[p] += m;
        long long q = mpz_class(alpha.ceil() - 1).get_si();  // alpha in (q, q+1]
        mirrored[q] += m;
    }
    for (long long p = 0; p <= n; ++p) {
        if (s[p] != mirrored[n - p])
            throw InternalError("s-bucket-symmetry",
                                "s_" + std::to_string(p) + " = " + std::to_string(s[p]) +
                                    " but the (p,p+1] route gives " +
                                    std::to_string(mirrored[n - p]));
    }
    return s;
}

// Smallest spectral number.
inline Rational minimal_exponent(const Spectrum& spec) { return spec.min_alpha(); }

namespace detail {

// Largest k such that s_p = 0 for all p <= k; -1 when s_0 != 0.
inline int zero_prefix(const std::vector<long long>& s) {
    int k = -1;
    for (std::size_t p = 0; p < s.size(); ++p) {
        if (s[p] != 0) break;
        k = static_cast<int>(p);
    }
    return k;
}

inline int zero_suffix(const std::vector<long long>& s) {
    int k = -1;
    for (std::size_t p = 0; p < s.size(); ++p) {
        if (s[s.size() - 1 - p] != 0) break;
        k = static_cast<int>(p);
    }
    return k;
}

}  // namespace detail

// Classification along two provably equivalent routes, asserted identical:
// thresholds on the minimal exponent, and vanishing of s-prefixes/suffixes.
inline InvariantReport classify(const Spectrum& spec, long long mu, long long n) {
    InvariantReport rep;
    rep.mu = mu;
    rep.n = n;
    rep.outside_paper_convention = n < 2;
    if (mu == 0) {
        rep.smooth = true;
        rep.s.assign(n + 1, 0);
        return rep;
    }
    rep.s = s_invariants(spec);
    Rational at = minimal_exponent(spec);
    rep.alpha_tilde = at;
    rep.odp = (mu == 1);

    long long fl = at.floor().get_si();
    rep.max_du_bois = static_cast<int>(fl - 1);
    if (at.is_integer()) {
        rep.max_rational = static_cast<int>(at.ceil().get_si() - 2);
        rep.liminal_k = static_cast<int>(fl - 1);
    } else {
        rep.max_rational = static_cast<int>(fl - 1);
    }

    int du_bois_via_s = detail::zero_prefix(rep.s);
    int rational_via_s = detail::zero_suffix(rep.s);
    if (du_bois_via_s != rep.max_du_bois || rational_via_s != rep.max_rational)
        throw InternalError("classification-equivalence",
                            "alpha-route gives (" + std::to_string(rep.max_du_bois) + "," +
                                std::to_string(rep.max_rational) + "), s-route gives (" +
                                std::to_string(du_bois_via_s) + "," +
                                std::to_string(rational_via_s) + ")");
    if (rep.liminal_k.has_value() != at.is_integer() ||
        (rep.liminal_k && rep.max_du_bois != rep.max_rational + 1) ||
        (!rep.liminal_k && rep.max_du_bois != rep.max_rational))
        throw InternalError("liminal-characterization", "report fields are inconsistent");
    return rep;
}

namespace detail {

inline PropertyOutcome outcome(std::string id, bool ok, std::string detail) {
    return PropertyOutcome{std::move(id), ok, std::move(detail)};
}

}  // namespace detail

// Runs the full numerical-theorem suite against one report. Never throws:
// a failed check becomes an outcome carrying the instantiated numbers.
inline std::vector<PropertyOutcome> property_suite(const InvariantReport& rep,
                                                   const Spectrum& spec) {
    std::vector<PropertyOutcome> out;
    const long long n = rep.n;
    const auto& s = rep.s;
    auto fmt = [](long long v) { return std::to_string(v); };

    // (a) sum_{p<=k-1} s_{n-p} <= sum_{p<=k} s_p <= sum_{p<=k} s_{n-p}
    {
        bool ok = true;
        std::string detail = "holds for all k <= " + fmt(n);
        long long lo = 0, mid = 0, hi = 0;
        for (long long k = 0; k <= n && ok; ++k) {
            mid += s[k];
            hi += s[n - k];
            if (!(lo <= mid && mid <= hi)) {
                ok = false;
                detail = "k=" + fmt(k) + ": " + fmt(lo) + " <= " + fmt(mid) + " <= " + fmt(hi) +
                         " fails";
            }
            lo = hi;
        }
        out.push_back(detail::outcome("sandwich-inequality", ok, detail));
    }

    // (b) s_{n-p} - s_p = m_{p+1} - m_p, multiplicities 0 off the spectrum
    {
        bool ok = true;
        std::string detail = "holds for all p <= " + fmt(n);
        for (long long p = 0; p <= n && ok; ++p) {
            long long lhs = s[n - p] - s[p];
            long long rhs = spec.multiplicity(Rational(p + 1)) - spec.multiplicity(Rational(p));
            if (lhs != rhs) {
                ok = false;
                detail = "p=" + fmt(p) + ": s_" + fmt(n - p) + " - s_" + fmt(p) + " = " +
                         fmt(lhs) + " but m_" + fmt(p + 1) + " - m_" + fmt(p) + " = " + fmt(rhs);
            }
        }
        out.push_back(detail::outcome("difference-identity", ok, detail));
    }

    // (c) multiplicity one at the minimal exponent
    if (rep.mu == 0) {
        out.push_back(detail::outcome("dimca-saito-multiplicity-one", true, "vacuous: smooth point"));
    } else {
        long long m = spec.multiplicity(*rep.alpha_tilde);
        out.push_back(detail::outcome("dimca-saito-multiplicity-one", m == 1,
                                      "m_{" + rep.alpha_tilde->str() + "} = " + fmt(m)));
    }

    // (d) alpha~ <= (n+1)/2, equality exactly for mu = 1
    if (rep.mu == 0) {
        out.push_back(detail::outcome("minimal-exponent-bound", true, "vacuous: smooth point"));
    } else {
        Rational half(n + 1, 2);
        bool bound = *rep.alpha_tilde <= half;
        bool eq_iff = (*rep.alpha_tilde == half) == (rep.mu == 1);
        out.push_back(detail::outcome(
            "minimal-exponent-bound", bound && eq_iff,
            "alpha~ = " + rep.alpha_tilde->str() + ", (n+1)/2 = " + half.str() + ", mu = " +
                fmt(rep.mu)));
    }

    // (e) s_p = 0 for all p <= k for some k > (n-1)/2 forces smoothness
    {
        int prefix = detail::zero_prefix(s);
        bool antecedent = 2 * prefix > n - 1;
        bool ok = !antecedent || rep.mu == 0;
        std::string detail = antecedent
                                 ? "s_0..s_" + fmt(prefix) + " = 0 with k > (n-1)/2; mu = " +
                                       fmt(rep.mu)
                                 : "vacuous: zero prefix stops at k = " + fmt(prefix);
        out.push_back(detail::outcome("smoothness-bound", ok, detail));
    }

    // (f) k-liminal forces s_{n-k} = 1
    if (!rep.liminal_k) {
        out.push_back(detail::outcome("liminal-s-value", true, "vacuous: not liminal"));
    } else {
        long long k = *rep.liminal_k;
        out.push_back(detail::outcome("liminal-s-value", s[n - k] == 1,
                                      "k = " + fmt(k) + ", s_" + fmt(n - k) + " = " +
                                          fmt(s[n - k])));
    }

    // (g) in odd dimension n = 2k+1, a k-Du Bois singularity is the ODP
    if (rep.mu > 0 && n % 2 == 1 && rep.max_du_bois >= (n - 1) / 2) {
        long long k = (n - 1) / 2;
        out.push_back(detail::outcome("odd-dimension-rigidity", rep.mu == 1,
                                      "n = " + fmt(n) + ", max_du_bois >= " + fmt(k) +
                                          ", mu = " + fmt(rep.mu)));
    } else {
        out.push_back(detail::outcome("odd-dimension-rigidity", true,
                                      rep.mu == 0 ? "vacuous: smooth point"
                                                  : "vacuous: antecedent fails"));
    }

    return out;
}

}  // namespace singspec
