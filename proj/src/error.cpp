#include "forge/error.hpp"

namespace forge {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::InvalidDegree: return "InvalidDegree";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::VariableMismatch: return "VariableMismatch";
        case ErrorKind::DegenerateParams: return "DegenerateParams";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::GenusParity: return "GenusParity";
        case ErrorKind::ParamDrawFailure: return "ParamDrawFailure";
        case ErrorKind::NotARoot: return "NotARoot";
        case ErrorKind::SingularResult: return "SingularResult";
        case ErrorKind::CurveMismatch: return "CurveMismatch";
        case ErrorKind::NotOnCurve: return "NotOnCurve";
        case ErrorKind::WeierstrassPoint: return "WeierstrassPoint";
        case ErrorKind::EmptyFiber: return "EmptyFiber";
        case ErrorKind::RamifiedFiber: return "RamifiedFiber";
        case ErrorKind::BadFiber: return "BadFiber";
        case ErrorKind::DecompositionFailure: return "DecompositionFailure";
        case ErrorKind::PrimeUnsuitable: return "PrimeUnsuitable";
        case ErrorKind::ScaleGuard: return "ScaleGuard";
        case ErrorKind::NoRationalRoot: return "NoRationalRoot";
        case ErrorKind::DuplicateInput: return "DuplicateInput";
        case ErrorKind::SpecialPosition: return "SpecialPosition";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {
std::string join_conditions(const std::vector<std::string>& conditions) {
    std::string out;
    for (const auto& c : conditions) {
        if (!out.empty()) out += "; ";
        out += c;
    }
    return out;
}
}  // namespace

DegenerateParamsError::DegenerateParamsError(std::vector<std::string> conditions)
    : Error(ErrorKind::DegenerateParams, join_conditions(conditions)), conditions_(std::move(conditions)) {}

}  // namespace forge
