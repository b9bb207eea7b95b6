#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singspec/errors.hpp"
#include "singspec/groebner.hpp"
#include "singspec/polynomial.hpp"
#include "singspec/weight_system.hpp"

namespace singspec {

// Verifies that every monomial of f has weighted degree exactly ws.d(),
// i.e. f(lambda^{a_1} z_1, ..) = lambda^d f(z). Returns d as the witness.
inline long long check_quasi_homogeneous(const Polynomial& f, const WeightSystem& ws) {
    if (f.is_zero()) throw InputError("zero polynomial");
    if (f.variable_count() != ws.variable_count())
        throw VariableMismatch("polynomial has " + std::to_string(f.variable_count()) +
                               " variables, weight system has " +
                               std::to_string(ws.variable_count()));
    if (!f.constant_term().is_zero()) throw ConstantTerm();
    for (const auto& [e, c] : f.terms()) {
        long long wdeg = e.weighted_degree(ws.a());
        if (wdeg != ws.d()) throw NotQuasiHomogeneous(f.monomial_str(e), wdeg, ws.d());
    }
    return ws.d();
}

namespace detail {

// Reduced row echelon form over Q, in place. Returns pivot column per row.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational factor = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Solution of the homogeneous degree system over a set of exponent vectors,
// in unknowns (a_1..a_m, d).
struct WeightSolution {
    std::size_t nullity = 0;
    std::vector<Rational> values;  // the a_i then d; filled only when nullity == 1
};

inline WeightSolution solve_degree_system(const std::vector<ExponentVector>& exponents,
                                          std::size_t m) {
    const std::size_t cols = m + 1;
    std::vector<std::vector<Rational>> mat;
    for (const auto& e : exponents) {
        std::vector<Rational> row(cols);
        for (std::size_t i = 0; i < m; ++i) row[i] = Rational(e[i]);
        row[m] = Rational(-1);
        mat.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots = rref(mat);
    WeightSolution sol;
    sol.nullity = cols - pivots.size();
    if (sol.nullity != 1) return sol;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    sol.values.assign(cols, Rational(0));
    sol.values[free_col] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        sol.values[pivots[r]] = -mat[r][free_col];
    if (sol.values[m].sign() < 0)
        for (auto& x : sol.values) x = -x;
    return sol;
}

// Scales a rational ray to the least positive integer point; nullopt when
// any coordinate fails to come out a positive integer.
inline std::optional<std::pair<std::vector<long long>, long long>> integerize_weights(
    const std::vector<Rational>& sol) {
    const std::size_t m = sol.size() - 1;
    if (sol[m].sign() <= 0) return std::nullopt;
    mpz_class scale = 1;
    for (const auto& x : sol) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), x.den().get_mpz_t());
        scale = l;
    }
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& x : sol) {
        mpz_class v = x.num() * (scale / x.den());
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        g = gg;
        ints.push_back(v);
    }
    std::vector<long long> a;
    for (std::size_t i = 0; i < m; ++i) {
        mpz_class v = ints[i] / g;
        if (v <= 0 || !v.fits_slong_p()) return std::nullopt;
        a.push_back(v.get_si());
    }
    mpz_class dd = ints[m] / g;
    if (!dd.fits_slong_p()) return std::nullopt;
    return std::make_pair(std::move(a), dd.get_si());
}

}  // namespace detail

// Solves { sum_i alpha_i a_i = d : z^alpha a monomial of f } for positive
// integers (a, d). The solution space must be exactly one-dimensional;
// richer spaces mean several gradings fit and the caller has to choose.
inline WeightSystem infer_weights(const Polynomial& f) {
    if (f.is_zero()) throw InputError("zero polynomial");
    if (!f.constant_term().is_zero()) throw ConstantTerm();
    const std::size_t m = f.variable_count();

    std::vector<ExponentVector> exponents;
    for (const auto& [e, c] : f.terms()) exponents.push_back(e);
    detail::WeightSolution sol = detail::solve_degree_system(exponents, m);

    if (sol.nullity == 0) {
        // inconsistent system: if dropping a single monomial leaves a unique
        // grading, name that monomial as the culprit
        for (std::size_t k = 0; k < exponents.size(); ++k) {
            std::vector<ExponentVector> rest = exponents;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            detail::WeightSolution sub = detail::solve_degree_system(rest, m);
            if (sub.nullity != 1) continue;
            auto integral = detail::integerize_weights(sub.values);
            if (!integral) continue;
            long long wdeg = exponents[k].weighted_degree(integral->first);
            throw NotQuasiHomogeneous(f.monomial_str(exponents[k]), wdeg, integral->second);
        }
        throw NotQuasiHomogeneous(
            "no weight system fits: the degree equations only have the zero solution");
    }
    if (sol.nullity >= 2) {
        std::string detail = "solution space has dimension " + std::to_string(sol.nullity);
        std::vector<std::string> absent;
        for (std::size_t i = 0; i < m; ++i) {
            bool appears = false;
            for (const auto& e : exponents)
                if (e[i] > 0) appears = true;
            if (!appears) absent.push_back(f.variables()[i]);
        }
        if (!absent.empty()) {
            detail += "; unconstrained variable(s):";
            for (const auto& v : absent) detail += " " + v;
        }
        throw AmbiguousWeights(detail);
    }

    auto integral = detail::integerize_weights(sol.values);
    if (!integral) throw NotQuasiHomogeneous("no positive integer weight system fits");
    return WeightSystem(std::move(integral->first), integral->second);  // may raise SmoothPoint
}

// Generators of the Jacobian ideal, zero entries retained in variable order.
inline std::vector<Polynomial> jacobian_ideal(const Polynomial& f) {
    std::vector<Polynomial> jac;
    jac.reserve(f.variable_count());
    for (std::size_t i = 0; i < f.variable_count(); ++i)
        jac.push_back(f.partial_derivative(i));
    return jac;
}

// Milnor number as a product of weights: prod (d - a_i)/a_i. An integer on
// every accepted input; kept as an independent cross-check of the Groebner
// route, never the primary computation.
inline Rational milnor_orlik_mu(const WeightSystem& ws) {
    Rational mu(1);
    for (long long ai : ws.a()) mu *= Rational(ws.d() - ai, ai);
    return mu;
}

struct MilnorData {
    Polynomial f;
    WeightSystem ws;
    GroebnerBasis gb;
    StaircaseBasis basis;
    long long mu = 0;
};

// Full Milnor-algebra pipeline: Jacobian ideal -> reduced Groebner basis ->
// staircase monomial basis. mu is the staircase cardinality and must match
// the Milnor-Orlik product exactly.
inline MilnorData milnor_data(const Polynomial& f, const WeightSystem& ws) {
    check_quasi_homogeneous(f, ws);
    MonomialOrder order(ws.a());
    GroebnerBasis gb = buchberger(jacobian_ideal(f), order);
    StaircaseBasis basis;
    try {
        basis = staircase(gb);
    } catch (const NonZeroDimensional& e) {
        std::vector<std::string> names;
        std::string detail = "no pure power of";
        for (std::size_t idx : e.missing_variables()) {
            names.push_back(f.variables()[idx]);
            detail += " " + f.variables()[idx];
        }
        detail += " in the leading-term ideal of the Jacobian";
        throw NonIsolatedSingularity(std::move(names), detail);
    }
    long long mu = static_cast<long long>(basis.dimension);
    Rational expected = milnor_orlik_mu(ws);
    if (!expected.is_integer() || !(expected == Rational(mu)))
        throw InternalError("milnor-orlik",
                            "staircase dimension " + std::to_string(mu) +
                                " != weight product " + expected.str());
    return MilnorData{f, ws, std::move(gb), std::move(basis), mu};
}

}  // namespace singspec
