#include "ulrich/bounds.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

void UcBound::check() const {
    if (lower < 1) throw Error(ErrorKind::ValidationError, "uc lower bound must be >= 1");
    if (upper && *upper < lower)
        throw Error(ErrorKind::ValidationError,
                    "uc bound inverted: lower " + lower.str() + " > upper " + upper->str());
    if (candidates) {
        if (candidates->empty())
            throw Error(ErrorKind::ValidationError, "candidate set present but empty");
        for (const Int& c : *candidates)
            if (c < lower || (upper && c > *upper))
                throw Error(ErrorKind::ValidationError,
                            "candidate " + c.str() + " escapes the bound interval");
    }
    auto tagged = [&](Provenance::Target t) {
        for (const auto& p : provenance)
            if (p.target == t) return true;
        return false;
    };
    if (!tagged(Provenance::Target::Lower))
        throw Error(ErrorKind::ValidationError, "lower bound carries no provenance");
    if (upper && !tagged(Provenance::Target::Upper))
        throw Error(ErrorKind::ValidationError, "upper bound carries no provenance");
    if (candidates && !tagged(Provenance::Target::Candidates))
        throw Error(ErrorKind::ValidationError, "candidate set carries no provenance");
}

namespace {

constexpr std::int64_t kMaxDim = 1000000;  // sieve and factorial guard

void require_small_dim(std::int64_t n) {
    if (n > kMaxDim)
        throw Error(ErrorKind::InvalidDescriptor,
                    "dimension " + std::to_string(n) + " exceeds the supported range");
}

}  // namespace

Int divisibility_lower_bound(std::int64_t n, const Int& pd) {
    if (n < 1 || pd < 1) throw Error(ErrorKind::ValidationError, "n and pd must be positive");
    require_small_dim(n);
    Int bound = 1;
    for (std::int64_t q : primes_upto(n))
        if (pd % q == 0) bound *= pow_int(Int(q), factorial_valuation(n, q));
    return bound;
}

Int high_dimension_rank_floor(std::int64_t n, bool split) {
    if (n < 1) throw Error(ErrorKind::ValidationError, "dimension must be positive");
    return (n >= 4 && !split) ? 4 : 1;
}

UcBound brauer_severi_bounds(const PolarizedBS& x, std::optional<Int> split_uc,
                             std::optional<Int> split_lower, std::optional<Int> split_upper) {
    if (x.d < 1) throw Error(ErrorKind::InvalidDescriptor, "polarization multiple d must be >= 1");
    for (const auto& opt : {split_uc, split_lower, split_upper})
        if (opt && *opt < 1)
            throw Error(ErrorKind::InvalidDescriptor, "split uc data must be positive");
    const std::int64_t n = x.dim();
    if (n < 1) throw Error(ErrorKind::InvalidDescriptor, "degree-1 algebra has no variety");
    require_small_dim(n);
    const Int pd = x.pd();
    const bool split = x.algebra.split();

    UcBound b;
    b.lower = 1;
    b.tag(Provenance::Target::Lower, "rank positivity", "every Ulrich bundle has rank >= 1");

    auto raise = [&](const Int& value, std::string rule, std::string detail) {
        b.tag(Provenance::Target::Lower, std::move(rule), std::move(detail));
        if (value > b.lower) b.lower = value;
    };

    const Int div = divisibility_lower_bound(n, pd);
    if (div > 1)
        raise(div, "chi integrality divisibility",
              "for each prime q <= n dividing pd, the q-part of n! divides the rank; gives " +
                  div.str());
    if (!split) {
        raise(2, "no Ulrich line bundle",
              "a non-split Brauer-Severi variety has no rational point, hence no Ulrich "
              "line bundle");
        const Int floor4 = high_dimension_rank_floor(n, split);
        if (floor4 > 1)
            raise(floor4, "rank floor in dimension >= 4",
                  "no Ulrich bundle of rank < 4 on a non-split variety of dimension >= 4");
    }
    if (split_uc)
        raise(*split_uc, "split model lower bound",
              "uc over the minimal splitting field bounds uc below; value " + split_uc->str());
    if (split_lower)
        raise(*split_lower, "imported split lower bound",
              "catalogued lower bound " + split_lower->str() + " for the split model");

    if (split_uc) {
        b.upper = x.algebra.index() * *split_uc;
        b.tag(Provenance::Target::Upper, "pushforward from splitting field",
              "index * split uc = " + x.algebra.index().str() + " * " + split_uc->str());
    } else if (split_upper) {
        b.upper = x.algebra.index() * *split_upper;
        b.tag(Provenance::Target::Upper, "pushforward from splitting field",
              "index * imported split upper bound " + split_upper->str());
    } else {
        b.upper = x.algebra.index() * factorial(n);
        b.tag(Provenance::Target::Upper, "pushforward with factorial fallback",
              "uc of the split model is at most n!; upper = index * n!");
    }
    b.check();
    return b;
}

std::set<Int> threefold_candidate_set(const Int& p, const Int& pd) {
    if (p != 2 && p != 4)
        throw Error(ErrorKind::OutOfTableDomain, "table covers periods 2 and 4 only");
    if (pd < 1 || pd % p != 0)
        throw Error(ErrorKind::OutOfTableDomain, "pd must be a positive multiple of the period");
    const Int g = pd % 6;
    if (g != 0 && g != 2 && g != 4)
        throw Error(ErrorKind::OutOfTableDomain, "pd mod 6 outside {0,2,4}");
    if (p == 2) {
        if (g == 0) return {6, 12};
        return {2, 4};
    }
    if (g == 0) return {6, 12, 24};
    return {2, 4, 6, 8};
}

std::set<Int> surface_candidate_set(const Int& threed) {
    if (threed < 1 || threed % 3 != 0)
        throw Error(ErrorKind::NotMultipleOfPeriod,
                    "polarization degree must be a positive multiple of 3");
    if (threed % 2 == 0) return {2, 4, 6};
    return {2, 3, 4, 5, 6};
}

UcBound quadric_complexity(std::int64_t m, const Int& d) {
    if (m < 4)
        throw Error(ErrorKind::DimensionTooSmall,
                    "need m >= 4 so the quadric in P^{m-1} has dimension >= 2");
    if (d < 1) throw Error(ErrorKind::ValidationError, "polarization multiple must be >= 1");
    require_small_dim(m);
    const Int base = pow_int(2, (m - 3) / 2);
    UcBound b;
    if (d == 1) {
        b.lower = base;
        b.upper = base;
        b.candidates = std::set<Int>{base};
        b.tag(Provenance::Target::Lower, "quadric complexity formula",
              "uc(Q, O(1)) = 2^floor((m-3)/2) for Q in P^{m-1}");
        b.tag(Provenance::Target::Upper, "quadric complexity formula", "exact value");
        b.tag(Provenance::Target::Candidates, "quadric complexity formula", "exact value");
    } else {
        b.lower = 1;
        b.upper = factorial(m - 2) * base;
        b.tag(Provenance::Target::Lower, "rank positivity",
              "no lower bound beyond 1 is known at scaled polarizations");
        b.tag(Provenance::Target::Upper, "rank scaling",
              "a rank-r Ulrich bundle yields rank r * dim! at any multiple of the polarization");
    }
    b.check();
    return b;
}

UcBound involution_bounds(std::int64_t dim_x, const Int& ind, const Int& split_uc,
                          bool real_field) {
    if (dim_x < 2)
        throw Error(ErrorKind::InvalidDescriptor, "involution variety must have dimension >= 2");
    if (ind < 1 || split_uc < 1)
        throw Error(ErrorKind::InvalidDescriptor, "index and split uc must be positive");
    if (real_field && ind > 2)
        throw Error(ErrorKind::InvalidDescriptor,
                    "an orthogonal algebra over the reals has index at most 2");
    UcBound b;
    b.lower = split_uc;
    b.upper = ind * split_uc;
    b.tag(Provenance::Target::Lower, "split quadric lower bound",
          "uc of the split quadric at the induced polarization bounds uc below");
    b.tag(Provenance::Target::Upper, "pushforward from splitting field",
          real_field ? "index 2: the minimal separable splitting field of a real orthogonal "
                       "algebra is the complex numbers"
                     : "index * split quadric value");
    b.check();
    return b;
}

UcBound involution_explicit_bounds(std::int64_t dim_x, const Int& ind) {
    if (dim_x < 2)
        throw Error(ErrorKind::InvalidDescriptor, "involution variety must have dimension >= 2");
    if (ind < 2)
        throw Error(ErrorKind::InvalidDescriptor,
                    "closed-form bounds apply to twisted descriptors (index >= 2)");
    const Int base = pow_int(2, (dim_x - 1) / 2);
    UcBound b;
    b.lower = base;
    b.upper = ind * dim_x * base;
    b.tag(Provenance::Target::Lower, "split quadric complexity",
          "2^floor((dimX-1)/2) from the quadric formula at the generating polarization");
    b.tag(Provenance::Target::Upper, "explicit involution chain",
          "index * dimX * 2^floor((dimX-1)/2)");
    b.check();
    return b;
}

UcBound twisted_flag_bounds(const Int& ind, const Int& split_uc, FlagKind kind,
                            bool rdim_plus_one_equals_ind) {
    if (ind < 1 || split_uc < 1)
        throw Error(ErrorKind::ValidationError, "index and split uc must be positive");
    const char* chain = kind == FlagKind::TypeA ? "flag pushforward chain (inner type A)"
                                                : "flag pushforward chain (types B/C/D)";
    UcBound b;
    b.lower = split_uc;
    b.upper = ind * split_uc;
    b.tag(Provenance::Target::Lower, chain, "split flag value bounds uc below");
    b.tag(Provenance::Target::Upper, chain,
          rdim_plus_one_equals_ind ? "(rdim + 1) * split flag value (caller asserts rdim+1 = ind)"
                                   : "index * split flag value");
    b.check();
    return b;
}

PrimeDimensionGap prime_dimension_gap(std::int64_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    PrimeDimensionGap g;
    g.rdim_upper = Int(p) - 1;
    g.uc_lower = factorial(p - 1);
    g.strict = g.rdim_upper < g.uc_lower;
    return g;
}

}  // namespace ulrich
