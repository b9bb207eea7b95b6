#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace singspec {

// Base of everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with user-supplied input (bad expression, wrong weights, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// A violated theorem or broken engine invariant. Never caused by input;
// if one of these fires, the implementation is wrong.
class InternalError : public Error {
public:
    InternalError(std::string check, const std::string& msg)
        : Error(check + ": " + msg), check_(std::move(check)) {}
    const std::string& check() const { return check_; }

private:
    std::string check_;
};

class SyntaxError : public InputError {
public:
    SyntaxError(std::size_t position, const std::string& expected, const std::string& found)
        : InputError("syntax error at position " + std::to_string(position) + ": expected " +
                     expected + ", found " + found),
          position_(position),
          expected_(expected) {}
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class UnknownVariable : public InputError {
public:
    UnknownVariable(std::string name, std::size_t position)
        : InputError("unknown variable '" + name + "' at position " + std::to_string(position)),
          name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class VariableMismatch : public InputError {
public:
    using InputError::InputError;
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class LengthMismatch : public InputError {
public:
    using InputError::InputError;
};

class ZeroIdeal : public InputError {
public:
    ZeroIdeal() : InputError("all generators are zero") {}
};

// Staircase is infinite: some variables have no pure-power leading term.
class NonZeroDimensional : public Error {
public:
    explicit NonZeroDimensional(std::vector<std::size_t> missing)
        : Error("quotient is not zero-dimensional"), missing_(std::move(missing)) {}
    // Indices of every variable lacking a pure-power leading term.
    const std::vector<std::size_t>& missing_variables() const { return missing_; }

private:
    std::vector<std::size_t> missing_;
};

class NotQuasiHomogeneous : public InputError {
public:
    using InputError::InputError;
    NotQuasiHomogeneous(const std::string& monomial, long long wdeg, long long expected)
        : InputError("not quasi-homogeneous: monomial " + monomial + " has weighted degree " +
                     std::to_string(wdeg) + ", expected " + std::to_string(expected)),
          monomial_(monomial) {}
    const std::string& monomial() const { return monomial_; }

private:
    std::string monomial_;
};

class ConstantTerm : public InputError {
public:
    ConstantTerm() : InputError("polynomial has a nonzero constant term: no singularity at the origin") {}
};

class AmbiguousWeights : public InputError {
public:
    explicit AmbiguousWeights(const std::string& why)
        : InputError("weights are not determined by the polynomial: " + why) {}
};

// Raised where a well-defined answer exists but is "the point is smooth";
// callers usually convert this into a mu = 0 report rather than failing.
class SmoothPoint : public Error {
public:
    explicit SmoothPoint(const std::string& why) : Error("smooth point: " + why) {}
};

class NonIsolatedSingularity : public Error {
public:
    NonIsolatedSingularity(std::vector<std::string> variables, const std::string& detail)
        : Error("non-isolated singularity: " + detail), variables_(std::move(variables)) {}
    // Names of the variables with no pure power in the leading-term ideal.
    const std::vector<std::string>& variables() const { return variables_; }

private:
    std::vector<std::string> variables_;
};

}  // namespace singspec
