#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "singspec/errors.hpp"
#include "singspec/monomial_order.hpp"
#include "singspec/polynomial.hpp"

namespace singspec {

// Leading term of a nonzero polynomial under the given order.
inline std::pair<ExponentVector, Rational> leading_term(const Polynomial& f,
                                                        const MonomialOrder& order) {
    if (f.is_zero()) throw InternalError("leading-term", "leading term of the zero polynomial");
    auto it = f.terms().begin();
    auto best = it;
    for (++it; it != f.terms().end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

inline ExponentVector leading_monomial(const Polynomial& f, const MonomialOrder& order) {
    return leading_term(f, order).first;
}

inline Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
    auto [lm, lc] = leading_term(f, order);
    if (lc == Rational(1)) return f;
    return f * (Rational(1) / lc);
}

// Reduced Groebner basis: generators are monic, pairwise tail-reduced, and
// sorted ascending by leading monomial, so equal ideals print identically.
struct GroebnerBasis {
    std::vector<Polynomial> generators;
    MonomialOrder order;

    std::vector<ExponentVector> leading_monomials() const {
        std::vector<ExponentVector> lms;
        lms.reserve(generators.size());
        for (const auto& g : generators) lms.push_back(leading_monomial(g, order));
        return lms;
    }
};

// All standard monomials of a zero-dimensional quotient, sorted ascending.
struct StaircaseBasis {
    std::vector<ExponentVector> monomials;
    std::size_t dimension = 0;
};

// Remainder of f on division by the (not necessarily reduced) family gens.
// No monomial of the result is divisible by any leading monomial of gens,
// and f - result lies in the ideal they generate.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                              const MonomialOrder& order) {
    for (const auto& g : gens)
        if (g.variables() != f.variables())
            throw VariableMismatch("normal form across different polynomial rings");
    std::vector<const Polynomial*> divisors;
    std::vector<std::pair<ExponentVector, Rational>> lts;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        divisors.push_back(&g);
        lts.push_back(leading_term(g, order));
    }

    Polynomial h = f;
    Polynomial remainder(f.variables());
    while (!h.is_zero()) {
        auto [lm, lc] = leading_term(h, order);
        bool reduced = false;
        for (std::size_t i = 0; i < lts.size(); ++i) {
            if (!lts[i].first.divides(lm)) continue;
            h -= divisors[i]->times_term(lm.minus(lts[i].first), lc / lts[i].second);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder += Polynomial::monomial(f.variables(), lm, lc);
            h -= Polynomial::monomial(f.variables(), lm, lc);
        }
    }
    return remainder;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    return normal_form(f, basis.generators, basis.order);
}

// S-polynomial of two monic generators.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order) {
    auto [lmf, lcf] = leading_term(f, order);
    auto [lmg, lcg] = leading_term(g, order);
    ExponentVector l = lcm(lmf, lmg);
    return f.times_term(l.minus(lmf), Rational(1) / lcf) -
           g.times_term(l.minus(lmg), Rational(1) / lcg);
}

namespace detail {

// Pair queue key: weighted degree of the lcm first, then insertion sequence.
// A std::set pops the minimum, which realizes the normal selection strategy
// deterministically.
using PairKey = std::tuple<long long, long long, std::size_t, std::size_t>;

}  // namespace detail

// Buchberger's algorithm over Q. Deterministic for fixed input: pairs are
// processed by minimal weighted lcm degree then first-in-first-out, with the
// product and chain criteria pruning redundant reductions. Exact rational
// arithmetic throughout; the result is the reduced basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& input, const MonomialOrder& order) {
    std::vector<Polynomial> gens;
    for (const auto& g : input)
        if (!g.is_zero()) gens.push_back(make_monic(g, order));
    if (gens.empty()) throw ZeroIdeal();
    for (const auto& g : gens)
        if (g.variables() != gens.front().variables())
            throw VariableMismatch("generators live in different polynomial rings");

    std::vector<Polynomial> basis = gens;
    std::vector<ExponentVector> lms;
    for (const auto& g : basis) lms.push_back(leading_monomial(g, order));

    std::set<detail::PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    long long seq = 0;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        ExponentVector l = lcm(lms[i], lms[j]);
        queue.emplace(order.weighted_degree(l), seq++, i, j);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!queue.empty()) {
        auto [wdeg, tag, i, j] = *queue.begin();
        queue.erase(queue.begin());
        handled.emplace(i, j);

        // product criterion: coprime leading monomials reduce to zero
        if (coprime(lms[i], lms[j])) continue;

        // chain criterion: some k divides the lcm and both companion pairs
        // are already out of the queue
        ExponentVector l = lcm(lms[i], lms[j]);
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j || !lms[k].divides(l)) continue;
            auto pik = std::minmax(i, k);
            auto pjk = std::minmax(j, k);
            if (handled.count({pik.first, pik.second}) && handled.count({pjk.first, pjk.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, order));
        lms.push_back(leading_monomial(basis.back(), order));
        for (std::size_t t = 0; t + 1 < basis.size(); ++t) push_pair(t, basis.size() - 1);
    }

    // minimalize: ascending by leading monomial, drop anything whose leading
    // monomial is divisible by a kept one
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order.compare(lms[a], lms[b]);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Polynomial> minimal;
    std::vector<ExponentVector> minimal_lms;
    for (std::size_t i : idx) {
        bool redundant = false;
        for (const auto& kept : minimal_lms)
            if (kept.divides(lms[i])) {
                redundant = true;
                break;
            }
        if (!redundant) {
            minimal.push_back(basis[i]);
            minimal_lms.push_back(lms[i]);
        }
    }

    // tail-reduce every survivor against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
        reduced.push_back(make_monic(r, order));
    }
    return GroebnerBasis{std::move(reduced), order};
}

// Standard monomials of the quotient by a reduced basis, when finite.
// Finiteness is decided by the pure-power test: the staircase is finite iff
// every variable contributes some pure power to the leading-term ideal.
inline StaircaseBasis staircase(const GroebnerBasis& basis) {
    const std::size_t n = basis.order.variable_count();
    auto lms = basis.leading_monomials();

    for (const auto& lm : lms)
        if (lm.is_constant()) return StaircaseBasis{{}, 0};  // unit ideal

    std::vector<int> bound(n, -1);
    std::vector<std::size_t> missing;
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& lm : lms) {
            bool pure = lm[v] > 0;
            for (std::size_t u = 0; u < n && pure; ++u)
                if (u != v && lm[u] != 0) pure = false;
            if (pure && (bound[v] < 0 || lm[v] < bound[v])) bound[v] = lm[v];
        }
        if (bound[v] < 0) missing.push_back(v);
    }
    if (!missing.empty()) throw NonZeroDimensional(std::move(missing));

    std::vector<ExponentVector> monomials;
    std::vector<int> e(n, 0);
    for (;;) {
        ExponentVector cand(e);
        bool standard = true;
        for (const auto& lm : lms)
            if (lm.divides(cand)) {
                standard = false;
                break;
            }
        if (standard) monomials.push_back(std::move(cand));
        std::size_t v = 0;
        while (v < n) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    std::sort(monomials.begin(), monomials.end(),
              [&](const ExponentVector& a, const ExponentVector& b) {
                  return basis.order.less(a, b);
              });
    std::size_t dim = monomials.size();
    return StaircaseBasis{std::move(monomials), dim};
}

}  // namespace singspec
