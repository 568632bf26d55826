#pragma once

// Euler-characteristic identities for (generalized) Brauer-Severi varieties
// and the exact decision procedures relating uc to rdim. All roots are
// integer Newton iteration with verification; nothing is approximated.

#include "ulrich/brauer.hpp"
#include "ulrich/numeric.hpp"

#include <optional>

namespace ulrich {

// chi of an Ulrich bundle on projective n-space at polarization degree pd:
// rank * (pd)^n.
Int chi_ulrich_bs(std::int64_t n, const Int& pd, const Int& rank);

// Exact check of chi / t^n >= uc * (rdim + 1)^n where pd = ind * t.
// Throws NonDivisible when ind does not divide pd.
bool chi_rank_inequality_holds(std::int64_t n, const Int& ind, const Int& pd, const Int& chi,
                               const Int& rdim, const Int& uc);

// The root criterion: (1/d) * (chi/rank)^(1/n), returned when it is a
// positive integer. That integer is the only value uc can take if
// uc = rdim + 1 holds under the hypothesis rdim + 1 = period.
std::optional<Int> root_criterion(std::int64_t n, const Int& d, const Int& chi, const Int& rank);

// chi of an Ulrich bundle on a (p-1)-dimensional variety twisted by t times
// the period generator: rank * p^{p-1} * C(p+t-1, p-1).
Int chi_at_period_twist(std::int64_t p, std::int64_t t, const Int& rank);

// Degree of the Pluecker-embedded Grassmannian of m-planes in n-space:
// (m(n-m))! * prod_{i=0..m-1} i! / (n-m+i)!.
Int grassmannian_degree(std::int64_t m, std::int64_t n);

// A twisted Grassmannian: the variety of rank-(m*n) right ideals of a
// degree-n algebra, embedded by the e-th power of the Pluecker bundle M,
// where L^s = M for the positive Picard generator L.
struct GeneralizedBSDescriptor {
    AlgebraInvariants algebra;
    std::int64_t m = 1;
    std::int64_t s = 1;
    std::int64_t e = 1;

    std::int64_t n() const { return to_int64(algebra.degree()); }
    std::int64_t dim() const { return m * (n() - m); }
    Int split_period() const { return period_of_tensor_power(algebra.period(), m); }

    void check() const;
};

// chi(E_E(t)) = rank/dim! * deg(Grass(m,n)) * (s*e*per(A^m))^dim * prod(t+i).
Rat generalized_chi(const GeneralizedBSDescriptor& g, const Int& rank, const Int& t);

struct GeneralizedCriterionResult {
    // (gcd(p,m)/(s*e)) * (chi/(rank*deg))^(1/dim) when it is a positive
    // integer; absent otherwise.
    std::optional<Int> uc;
    // Sanity report: chi * (gcd(p,m)/(s*e))^dim >= uc * deg * p^dim, checked
    // exactly when uc is defined.
    std::optional<bool> inequality_holds;
};

// The generalized root criterion. The caller must have recorded the
// hypothesis rdim + 1 = ind = period; passing false throws
// HypothesisUnrecorded.
GeneralizedCriterionResult generalized_root_criterion(const GeneralizedBSDescriptor& g,
                                                      const Int& chi, const Int& rank,
                                                      bool hypothesis_recorded);

// Exact test of the affine relation uc = c*rdim + b against the witness chi:
// c*rdim + b must equal (b - c) + (c/d) * (chi/rank)^(1/n), with a rational
// root; irrational roots make the relation fail.
bool affine_relation_holds(std::int64_t n, const Int& d, const Int& chi, const Int& rank,
                           const Int& c, const Int& b, const Int& rdim);

}  // namespace ulrich
