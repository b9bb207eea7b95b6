#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "singspec/errors.hpp"

namespace singspec {

// Multi-index of a monomial: fixed-length sequence of nonnegative exponents.
class ExponentVector {
public:
    explicit ExponentVector(std::size_t length) : e_(length, 0) {}
    ExponentVector(std::initializer_list<int> e) : e_(e) { validate(); }
    explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) { validate(); }

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }

    bool is_constant() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }

    long long total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), 0LL);
    }

    long long weighted_degree(std::span<const long long> weights) const {
        if (weights.size() != e_.size()) throw LengthMismatch("weight count differs from variable count");
        long long d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) d += weights[i] * e_[i];
        return d;
    }

    ExponentVector plus(const ExponentVector& o) const {
        check_same_length(o);
        std::vector<int> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
        return ExponentVector(std::move(r));
    }

    // Componentwise difference; caller must know o divides *this.
    ExponentVector minus(const ExponentVector& o) const {
        check_same_length(o);
        std::vector<int> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r[i] = e_[i] - o.e_[i];
            if (r[i] < 0) throw InputError("monomial quotient with negative exponent");
        }
        return ExponentVector(std::move(r));
    }

    bool divides(const ExponentVector& o) const {
        check_same_length(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    ExponentVector with_decrement(std::size_t i) const {
        if (i >= e_.size() || e_[i] == 0) throw IndexOutOfRange("cannot decrement exponent");
        std::vector<int> r = e_;
        --r[i];
        return ExponentVector(std::move(r));
    }

    friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
        a.check_same_length(b);
        std::vector<int> r(a.e_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
        return ExponentVector(std::move(r));
    }

    friend bool coprime(const ExponentVector& a, const ExponentVector& b) {
        a.check_same_length(b);
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    // Plain lexicographic order; used only as a canonical map key.
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

private:
    void validate() const {
        for (int x : e_)
            if (x < 0) throw InputError("negative exponent");
    }
    void check_same_length(const ExponentVector& o) const {
        if (e_.size() != o.e_.size())
            throw LengthMismatch("exponent vectors of length " + std::to_string(e_.size()) +
                                 " and " + std::to_string(o.e_.size()));
    }

    std::vector<int> e_;
};

}  // namespace singspec
