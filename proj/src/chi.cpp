#include "ulrich/chi.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

Int chi_ulrich_bs(std::int64_t n, const Int& pd, const Int& rank) {
    if (n < 1 || pd < 1 || rank < 1)
        throw Error(ErrorKind::ValidationError, "n, pd and rank must be positive");
    return rank * pow_int(pd, n);
}

bool chi_rank_inequality_holds(std::int64_t n, const Int& ind, const Int& pd, const Int& chi,
                               const Int& rdim, const Int& uc) {
    if (n < 1 || ind < 1 || pd < 1 || uc < 1 || rdim < 0)
        throw Error(ErrorKind::ValidationError, "invalid inequality inputs");
    if (pd % ind != 0)
        throw Error(ErrorKind::NonDivisible,
                    "index " + ind.str() + " does not divide pd " + pd.str());
    const Int t = pd / ind;
    // chi / t^n >= uc * (rdim+1)^n, cleared of denominators.
    return chi >= uc * pow_int(rdim + 1, n) * pow_int(t, n);
}

std::optional<Int> root_criterion(std::int64_t n, const Int& d, const Int& chi, const Int& rank) {
    if (n < 1 || d < 1 || chi < 1 || rank < 1)
        throw Error(ErrorKind::ValidationError, "n, d, chi and rank must be positive");
    auto root = exact_nth_root(Rat(chi, rank), n);
    if (!root) return std::nullopt;
    const Rat u = *root / d;
    if (denominator(u) != 1 || numerator(u) < 1) return std::nullopt;
    return numerator(u);
}

Int chi_at_period_twist(std::int64_t p, std::int64_t t, const Int& rank) {
    if (p < 1 || t < 0 || rank < 1)
        throw Error(ErrorKind::ValidationError, "need p >= 1, t >= 0, rank >= 1");
    return rank * pow_int(Int(p), p - 1) * binomial(Int(p) + t - 1, p - 1);
}

Int grassmannian_degree(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < m) throw Error(ErrorKind::ValidationError, "need 1 <= m <= n");
    Int num = factorial(m * (n - m));
    Int den = 1;
    for (std::int64_t i = 0; i < m; ++i) {
        num *= factorial(i);
        den *= factorial(n - m + i);
    }
    const Rat deg(num, den);
    if (denominator(deg) != 1)
        throw std::logic_error("Grassmannian degree came out non-integral");
    return numerator(deg);
}

void GeneralizedBSDescriptor::check() const {
    if (m < 1 || m > n())
        throw Error(ErrorKind::InvalidDescriptor, "need 1 <= m <= deg(A)");
    if (s < 1 || e < 1)
        throw Error(ErrorKind::InvalidDescriptor, "s and e must be positive");
}

Rat generalized_chi(const GeneralizedBSDescriptor& g, const Int& rank, const Int& t) {
    g.check();
    if (rank < 1) throw Error(ErrorKind::ValidationError, "rank must be positive");
    const std::int64_t dim = g.dim();
    Int num = rank * grassmannian_degree(g.m, g.n()) *
              pow_int(Int(g.s) * g.e * g.split_period(), dim);
    for (std::int64_t i = 1; i <= dim; ++i) num *= t + i;
    return dim == 0 ? Rat(num) : Rat(num, factorial(dim));
}

GeneralizedCriterionResult generalized_root_criterion(const GeneralizedBSDescriptor& g,
                                                      const Int& chi, const Int& rank,
                                                      bool hypothesis_recorded) {
    g.check();
    if (!hypothesis_recorded)
        throw Error(ErrorKind::HypothesisUnrecorded,
                    "the criterion assumes rdim + 1 = ind = period; record it first");
    if (chi < 1 || rank < 1)
        throw Error(ErrorKind::ValidationError, "chi and rank must be positive");
    const std::int64_t dim = g.dim();
    if (dim < 1)
        throw Error(ErrorKind::InvalidDescriptor, "zero-dimensional variety has no criterion");
    const Int p = g.algebra.period();
    const Int deg = grassmannian_degree(g.m, g.n());
    const Rat prefactor(gcd(p, Int(g.m)), Int(g.s) * g.e);

    GeneralizedCriterionResult result;
    auto root = exact_nth_root(Rat(chi, rank * deg), dim);
    if (!root) return result;
    const Rat u = prefactor * *root;
    if (denominator(u) != 1 || numerator(u) < 1) return result;
    result.uc = numerator(u);
    // chi * prefactor^dim >= uc * deg * p^dim, exactly in rationals.
    const Rat lhs = Rat(chi) * pow_int(numerator(prefactor), dim) /
                    pow_int(denominator(prefactor), dim);
    const Rat rhs = Rat(*result.uc * deg * pow_int(p, dim));
    result.inequality_holds = lhs >= rhs;
    return result;
}

bool affine_relation_holds(std::int64_t n, const Int& d, const Int& chi, const Int& rank,
                           const Int& c, const Int& b, const Int& rdim) {
    if (n < 1 || d < 1 || chi < 1 || rank < 1 || c < 1 || rdim < 0)
        throw Error(ErrorKind::ValidationError, "invalid affine relation inputs");
    auto root = exact_nth_root(Rat(chi, rank), n);
    if (!root) return false;
    const Rat rhs = Rat(b - c) + Rat(c, d) * *root;
    return Rat(c * rdim + b) == rhs;
}

}  // namespace ulrich
