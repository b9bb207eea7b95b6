#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "singspec/errors.hpp"
#include "singspec/rational.hpp"

namespace singspec {

// Integer weights a_1..a_{n+1} with degree d; the grading under which the
// input polynomial is homogeneous. Normalized so gcd(a_1,..,a_{n+1},d) = 1,
// and each a_i < d: a weight w_i = a_i/d >= 1 would force a variable the
// polynomial is linear in, i.e. a smooth point, which is rejected here.
class WeightSystem {
public:
    WeightSystem(std::vector<long long> a, long long d) : a_(std::move(a)), d_(d) {
        if (a_.empty()) throw InputError("empty weight vector");
        if (d_ <= 0) throw InputError("degree must be positive");
        long long g = d_;
        for (long long ai : a_) {
            if (ai <= 0) throw InputError("weights must be positive integers");
            g = std::gcd(g, ai);
        }
        if (g > 1) {
            for (long long& ai : a_) ai /= g;
            d_ /= g;
        }
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] >= d_)
                throw SmoothPoint("weight a_" + std::to_string(i + 1) + " = " +
                                  std::to_string(a_[i]) + " >= d = " + std::to_string(d_) +
                                  " (variable " + std::to_string(i + 1) + " enters linearly)");
    }

    const std::vector<long long>& a() const { return a_; }
    long long d() const { return d_; }
    std::size_t variable_count() const { return a_.size(); }
    // Ambient singularity dimension n (the hypersurface lives in C^{n+1}).
    long long n() const { return static_cast<long long>(a_.size()) - 1; }

    Rational weight(std::size_t i) const { return Rational(a_[i], d_); }
    std::vector<Rational> weights() const {
        std::vector<Rational> w;
        w.reserve(a_.size());
        for (long long ai : a_) w.emplace_back(ai, d_);
        return w;
    }
    Rational weight_sum() const {
        long long s = 0;
        for (long long ai : a_) s += ai;
        return Rational(s, d_);
    }

    friend bool operator==(const WeightSystem& x, const WeightSystem& y) {
        return x.a_ == y.a_ && x.d_ == y.d_;
    }

private:
    std::vector<long long> a_;
    long long d_;
};

}  // namespace singspec
