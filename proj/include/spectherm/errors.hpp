#pragma once

#include <stdexcept>
#include <string>

namespace spectherm {

// Invalid or inconsistent user-supplied configuration (files, parameters).
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure during model construction or solution.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Robin endpoint system is singular for some basis degree n.
class DegenerateBcError : public NumericError {
public:
    DegenerateBcError(int n, const std::string& what)
        : NumericError(what), degree_(n) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

// The 2x2 prefactor system of the boundary lifting is singular.
class DegenerateLiftingError : public NumericError {
public:
    explicit DegenerateLiftingError(const std::string& what) : NumericError(what) {}
};

} // namespace spectherm
