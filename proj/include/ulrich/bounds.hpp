#pragma once

// Bound engine for the minimal rank of an Ulrich bundle (the Ulrich
// complexity uc) on Brauer-Severi varieties, twisted flags, involution
// varieties and quadrics. Every bound end carries provenance: which rule
// produced it and why. Imported literature constants never appear here; they
// come in through the caller (catalogue or descriptor).

#include "ulrich/brauer.hpp"
#include "ulrich/numeric.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ulrich {

struct Provenance {
    enum class Target { Lower, Upper, Candidates, Value };

    Target target = Target::Value;
    std::string rule;    // short rule identifier
    std::string detail;  // one-line justification or citation
};

struct UcBound {
    Int lower = 1;
    std::optional<Int> upper;                 // nullopt = unknown
    std::optional<std::set<Int>> candidates;  // exhaustive candidate set, when known
    std::vector<Provenance> provenance;

    bool exact() const { return upper.has_value() && *upper == lower; }

    // Type invariants: lower <= upper when known; candidates nonempty and
    // inside [lower, upper]; every present end has at least one tag.
    void check() const;

    void tag(Provenance::Target target, std::string rule, std::string detail = {}) {
        provenance.push_back({target, std::move(rule), std::move(detail)});
    }
};

// A Brauer-Severi variety with a chosen polarization multiple d >= 1; the
// embedding line bundle is O_X(period * d).
struct PolarizedBS {
    AlgebraInvariants algebra;
    std::int64_t d = 1;

    std::int64_t dim() const { return to_int64(algebra.degree()) - 1; }
    Int pd() const { return algebra.period() * d; }
};

// Lower bound forced on the rank of any Ulrich bundle for (P^n, O(pd)) by
// integrality of its Euler characteristic: the product over primes q <= n
// dividing pd of q^{v_q(n!)}. Equals n! when every prime <= n divides pd.
Int divisibility_lower_bound(std::int64_t n, const Int& pd);

// Rank floor on non-split Brauer-Severi varieties of dimension >= 4
// (returns 4 there, 1 otherwise).
Int high_dimension_rank_floor(std::int64_t n, bool split);

// Full bound assembly for a polarized Brauer-Severi variety.
//   split_uc:    exact value of uc for the split model (P^n, O(pd)) over the
//                minimal splitting field, when the caller knows it.
//   split_lower / split_upper: one-sided information about the split model,
//                when only that is available.
// Upper end: index * split_uc, falling back to index * split_upper, then to
// index * n!. Lower end: max of the divisibility bound, the split value, the
// dimension->=4 floor, and 2 on non-split varieties (no Ulrich line bundle
// without a rational point).
UcBound brauer_severi_bounds(const PolarizedBS& x, std::optional<Int> split_uc,
                             std::optional<Int> split_lower = std::nullopt,
                             std::optional<Int> split_upper = std::nullopt);

// Candidate table for non-split Brauer-Severi threefolds with period 2 or 4,
// keyed by the residue of pd mod 6.
std::set<Int> threefold_candidate_set(const Int& p, const Int& pd);

// Candidate set for the non-split Brauer-Severi surface (period = index = 3)
// at polarization degree threed = 3d: {2,4,6} when even, {2,3,4,5,6} when odd.
std::set<Int> surface_candidate_set(const Int& threed);

// Smooth quadric Q in P^{m-1} (so dim Q = m - 2 >= 2). d = 1 gives the exact
// value 2^floor((m-3)/2); d > 1 only the upper bound (m-2)! * 2^floor((m-3)/2).
UcBound quadric_complexity(std::int64_t m, const Int& d);

// Pushforward chain for an involution variety: split quadric value below,
// index times it above. real_field records that the index came from a real
// algebra (forcing ind = 2).
UcBound involution_bounds(std::int64_t dim_x, const Int& ind, const Int& split_uc,
                          bool real_field = false);

// Closed-form involution bounds independent of the descent twist:
// 2^floor((dimX-1)/2) <= uc <= ind * dimX * 2^floor((dimX-1)/2). Needs a
// genuinely twisted descriptor (ind >= 2).
UcBound involution_explicit_bounds(std::int64_t dim_x, const Int& ind);

enum class FlagKind { TypeA, TypeBCD };

// Pushforward chain for inner twisted flags: [split_uc, ind * split_uc].
// When the caller asserts rdim + 1 = ind, the upper tag records the chain in
// that phrasing.
UcBound twisted_flag_bounds(const Int& ind, const Int& split_uc, FlagKind kind,
                            bool rdim_plus_one_equals_ind = false);

struct PrimeDimensionGap {
    Int rdim_upper;  // p - 1
    Int uc_lower;    // (p - 1)!
    bool strict;     // rdim_upper < uc_lower, i.e. rdim < uc is forced
};

// For a non-split Brauer-Severi variety of dimension p-1 (p prime) polarized
// by degree p!: bounds rdim above by p-1 and uc below by (p-1)!. The chain is
// strict only from p = 5 on; smaller primes are reported, not rejected.
PrimeDimensionGap prime_dimension_gap(std::int64_t p);

}  // namespace ulrich
