#pragma once

#include <stdexcept>
#include <string>

namespace rfr {

/// Invalid or inconsistent input: bad files, bad dates, contract violations.
/// CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: solver non-convergence, degenerate systems.
/// CLI maps this to exit code 3.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rfr
