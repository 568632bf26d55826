#pragma once

#include <stdexcept>
#include <string>

namespace ulrich {

enum class ErrorKind {
    DivisibilityViolation,
    PrimeFactorMismatch,
    InvalidDescriptor,
    OutOfTableDomain,
    NotMultipleOfPeriod,
    DimensionTooSmall,
    NotPrime,
    FlagInconsistent,
    UnknownClass,
    NonDivisible,
    HypothesisUnrecorded,
    SchemaError,
    ValidationError,
    MissingCatalog,
};

const char* error_kind_name(ErrorKind kind);

// All domain failures are thrown as Error. `path` carries the offending field
// for descriptor and catalogue parsing ("records[3].value"), empty otherwise.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message, std::string path = {})
        : std::runtime_error(path.empty() ? std::string(error_kind_name(kind)) + ": " + message
                                          : std::string(error_kind_name(kind)) + " at " + path +
                                                ": " + message),
          kind_(kind),
          path_(std::move(path)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& path() const { return path_; }

    // CLI contract: 0 success, 1 validation, 2 schema, 3 missing catalogue.
    int exit_code() const {
        switch (kind_) {
            case ErrorKind::SchemaError: return 2;
            case ErrorKind::MissingCatalog: return 3;
            default: return 1;
        }
    }

  private:
    ErrorKind kind_;
    std::string path_;
};

}  // namespace ulrich
