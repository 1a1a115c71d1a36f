#pragma once

#include <stdexcept>
#include <string>

namespace dilatekit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Eigensolver failed to converge within the iteration cap.
struct ConvergenceFailure : Error {
    double residual;
    ConvergenceFailure(const std::string& what, double res) : Error(what), residual(res) {}
};

struct NotPSD : Error {
    double lambda_min;
    NotPSD(const std::string& what, double lmin) : Error(what), lambda_min(lmin) {}
};

struct NotContraction : Error {
    using Error::Error;
};

struct NotCommuting : Error {
    using Error::Error;
};

struct DegenerateSpectrum : Error {
    double residual;
    DegenerateSpectrum(const std::string& what, double res) : Error(what), residual(res) {}
};

struct InfeasibleWeights : Error {
    using Error::Error;
};

struct NotInMatrixBall : Error {
    using Error::Error;
};

struct SumExceedsIdentity : Error {
    using Error::Error;
};

struct NotPositive : Error {
    using Error::Error;
};

struct SurgeryBrokeCompression : Error {
    int worst_component;
    double residual;
    SurgeryBrokeCompression(const std::string& what, int comp, double res)
        : Error(what), worst_component(comp), residual(res) {}
};

struct InfeasiblePair : Error {
    using Error::Error;
};

struct Unsupported : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// A construction's own postcondition check failed.
struct SelfCheckFailure : Error {
    double residual;
    SelfCheckFailure(const std::string& what, double res) : Error(what), residual(res) {}
};

}  // namespace dilatekit
