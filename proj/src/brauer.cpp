#include "ulrich/brauer.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

AlgebraInvariants AlgebraInvariants::validate(const Int& degree, const Int& period,
                                              const Int& index) {
    if (degree < 1 || period < 1 || index < 1)
        throw Error(ErrorKind::ValidationError, "degree, period and index must be positive");
    if (period == 1 || index == 1) {
        if (period != index)
            throw Error(ErrorKind::PrimeFactorMismatch,
                        "period and index can only be 1 together (split case)");
    } else if (prime_support(period) != prime_support(index)) {
        throw Error(ErrorKind::PrimeFactorMismatch, "period " + period.str() + " and index " +
                                                        index.str() +
                                                        " have different prime supports");
    }
    if (index % period != 0)
        throw Error(ErrorKind::DivisibilityViolation,
                    "period " + period.str() + " does not divide index " + index.str());
    if (degree % index != 0)
        throw Error(ErrorKind::DivisibilityViolation,
                    "index " + index.str() + " does not divide degree " + degree.str());
    return AlgebraInvariants(degree, period, index);
}

Int period_of_tensor_power(const Int& per, const Int& m) {
    if (per < 1 || m < 1)
        throw Error(ErrorKind::ValidationError, "period and tensor power must be positive");
    return per / gcd(per, m);
}

Int min_splitting_degree(const AlgebraInvariants& a) { return a.index(); }

Int pushforward_rank(const Int& rk, const Int& ind) {
    if (rk < 1 || ind < 1)
        throw Error(ErrorKind::ValidationError, "rank and index must be positive");
    return rk * ind;
}

}  // namespace ulrich
