#pragma once

#include <stdexcept>
#include <string>

namespace pdnrel {

// Error taxonomy used across the toolkit. The CLI maps these onto exit
// codes: ValidationError/ParseError -> 1, NumericalError -> 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* code() const { return "E_VALIDATE"; }
};

class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& msg) : ValidationError(msg) {}
    const char* code() const override { return "E_PARSE"; }
};

// Solver failures (non-convergence, indefinite systems, overflow).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg, double residual = 0.0)
        : std::runtime_error(msg), residual_(residual) {}
    const char* code() const { return "E_NUMERIC"; }
    double residual() const { return residual_; }

private:
    double residual_;
};

}  // namespace pdnrel
