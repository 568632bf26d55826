#include "ulrich/errors.hpp"

namespace ulrich {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
        case ErrorKind::PrimeFactorMismatch: return "PrimeFactorMismatch";
        case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
        case ErrorKind::OutOfTableDomain: return "OutOfTableDomain";
        case ErrorKind::NotMultipleOfPeriod: return "NotMultipleOfPeriod";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::FlagInconsistent: return "FlagInconsistent";
        case ErrorKind::UnknownClass: return "UnknownClass";
        case ErrorKind::NonDivisible: return "NonDivisible";
        case ErrorKind::HypothesisUnrecorded: return "HypothesisUnrecorded";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::MissingCatalog: return "MissingCatalog";
    }
    return "Error";
}

}  // namespace ulrich
