#pragma once

#include <string>
#include <vector>

#include "singspec/errors.hpp"
#include "singspec/exponent_vector.hpp"

namespace singspec {

// Weighted graded order: monomials are compared by weighted degree first,
// ties broken by graded reverse lexicographic on the plain exponent vector.
// With positive weights this is a multiplicative total order with 1 minimal,
// so division terminates and staircases are well defined.
class MonomialOrder {
public:
    explicit MonomialOrder(std::vector<long long> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) throw InputError("empty weight vector");
        for (long long w : weights_)
            if (w <= 0) throw InputError("monomial order weights must be positive");
    }

    static MonomialOrder unit(std::size_t n) {
        return MonomialOrder(std::vector<long long>(n, 1));
    }

    const std::vector<long long>& weights() const { return weights_; }
    std::size_t variable_count() const { return weights_.size(); }

    long long weighted_degree(const ExponentVector& e) const {
        return e.weighted_degree(weights_);
    }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const ExponentVector& a, const ExponentVector& b) const {
        if (a.size() != weights_.size() || b.size() != weights_.size())
            throw LengthMismatch("exponent vector length differs from order arity");
        long long wa = weighted_degree(a), wb = weighted_degree(b);
        if (wa != wb) return wa < wb ? -1 : 1;
        long long ta = a.total_degree(), tb = b.total_degree();
        if (ta != tb) return ta < tb ? -1 : 1;
        // reverse lex: the rightmost difference decides, smaller entry wins
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }
    bool greater(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.weights_ == b.weights_;
    }

private:
    std::vector<long long> weights_;
};

}  // namespace singspec
