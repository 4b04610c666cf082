#pragma once

#include <stdexcept>
#include <string>

#include "pcms/report.hpp"

namespace pcms {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vector/cone dimensionality disagreement.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An argument left its mathematical domain ([0,1], Int P, the carrier interval, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Structurally invalid input (empty sample lists, malformed tables).
class InputError : public Error {
public:
    using Error::Error;
};

// A documented precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Operation not defined for this variant (e.g. shells of tabulated structures).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// A constructor's validation sweep failed; carries the failing report.
class ConstructionError : public Error {
public:
    ConstructionError(const std::string& msg, AxiomReport report)
        : Error(msg), report_(std::move(report)) {}
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

// A search-style operation exhausted its budget without a valid witness.
class WitnessNotFoundError : public Error {
public:
    using Error::Error;
};

}  // namespace pcms
