#include "ulrich/cohomology.hpp"

#include "ulrich/errors.hpp"

#include <stdexcept>

namespace ulrich {

SplittingType::SplittingType(std::int64_t ambient_dim, std::vector<std::int64_t> twists)
    : n_(ambient_dim), twists_(std::move(twists)) {
    if (n_ < 1) throw Error(ErrorKind::ValidationError, "ambient dimension must be >= 1");
    if (twists_.empty())
        throw Error(ErrorKind::ValidationError, "a splitting type needs at least one summand");
    std::sort(twists_.begin(), twists_.end());
}

SplittingType SplittingType::disjoint_union(const SplittingType& other) const {
    if (n_ != other.n_)
        throw Error(ErrorKind::ValidationError, "cannot merge types on different ambient spaces");
    std::vector<std::int64_t> merged = twists_;
    merged.insert(merged.end(), other.twists_.begin(), other.twists_.end());
    return SplittingType(n_, std::move(merged));
}

Int h_line_bundle(std::int64_t n, std::int64_t a, std::int64_t q) {
    if (n < 1 || q < 0 || q > n) throw Error(ErrorKind::ValidationError, "need 0 <= q <= n");
    if (q == 0 && a >= 0) return binomial(Int(n) + a, n);
    if (q == n && a <= -n - 1) return binomial(Int(-a) - 1, n);
    return 0;
}

CohomologyTable cohomology_of(const SplittingType& t, std::int64_t twist) {
    const std::int64_t n = t.ambient_dim();
    CohomologyTable table;
    table.h.assign(static_cast<std::size_t>(n) + 1, Int(0));
    for (std::int64_t a : t.twists())
        for (std::int64_t q = 0; q <= n; ++q)
            table.h[static_cast<std::size_t>(q)] += h_line_bundle(n, a + twist, q);
    return table;
}

bool is_ulrich_split(const SplittingType& t, std::int64_t pd) {
    if (pd < 1) throw Error(ErrorKind::ValidationError, "polarization degree must be >= 1");
    for (std::int64_t i = 1; i <= t.ambient_dim(); ++i)
        if (!cohomology_of(t, -i * pd).all_zero()) return false;
    return true;
}

Int euler_char(const SplittingType& t, std::int64_t twist) {
    const Int from_cohomology = cohomology_of(t, twist).euler();
    Rat from_polynomial = 0;
    for (std::int64_t a : t.twists())
        from_polynomial += line_bundle_chi_poly(t.ambient_dim(), Int(a) + twist);
    if (denominator(from_polynomial) != 1 || numerator(from_polynomial) != from_cohomology)
        throw std::logic_error("cohomology sum and Hilbert polynomial disagree");
    return from_cohomology;
}

Rat ulrich_chi_formula(std::int64_t n, std::int64_t pd, const Int& rank, const Int& l) {
    if (n < 1 || pd < 1 || rank < 1)
        throw Error(ErrorKind::ValidationError, "n, pd and rank must be positive");
    Int num = rank;
    for (std::int64_t j = 1; j <= n; ++j) num *= l + Int(j) * pd;
    return Rat(num, factorial(n));
}

Int veronese_embedding_dim(std::int64_t n, std::int64_t pd) {
    if (n < 1 || pd < 1) throw Error(ErrorKind::ValidationError, "n and pd must be positive");
    return binomial(Int(n) + pd, pd);
}

}  // namespace ulrich
