#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

enum class ErrorKind {
    ZeroInverse,
    InvalidDegree,
    NotSquarefree,
    VariableMismatch,
    DegenerateParams,
    DivisionByZero,
    GenusParity,
    ParamDrawFailure,
    NotARoot,
    SingularResult,
    CurveMismatch,
    NotOnCurve,
    WeierstrassPoint,
    EmptyFiber,
    RamifiedFiber,
    BadFiber,
    DecompositionFailure,
    PrimeUnsuitable,
    ScaleGuard,
    NoRationalRoot,
    DuplicateInput,
    SpecialPosition,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Carries every violated non-degeneracy condition, not just the first one.
class DegenerateParamsError : public Error {
public:
    explicit DegenerateParamsError(std::vector<std::string> conditions);

    const std::vector<std::string>& conditions() const noexcept { return conditions_; }

private:
    std::vector<std::string> conditions_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace forge
