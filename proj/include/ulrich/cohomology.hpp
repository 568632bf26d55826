#pragma once

// Brute-force cohomology oracle on split projective space. Handles direct
// sums of line bundles only: that is the locus where Ulrich-ness of the
// catalogued examples can be verified by pure arithmetic.

#include "ulrich/numeric.hpp"

#include <algorithm>
#include <vector>

namespace ulrich {

// A direct sum of line bundles O(a_1) + ... + O(a_r) on projective n-space.
// Twists are kept sorted so two types with the same multiset compare equal.
class SplittingType {
  public:
    SplittingType(std::int64_t ambient_dim, std::vector<std::int64_t> twists);

    std::int64_t ambient_dim() const { return n_; }
    const std::vector<std::int64_t>& twists() const { return twists_; }
    std::int64_t rank() const { return static_cast<std::int64_t>(twists_.size()); }

    // Disjoint union of summands (same ambient space).
    SplittingType disjoint_union(const SplittingType& other) const;

    bool operator==(const SplittingType& o) const { return n_ == o.n_ && twists_ == o.twists_; }

  private:
    std::int64_t n_;
    std::vector<std::int64_t> twists_;  // sorted ascending
};

struct CohomologyTable {
    std::vector<Int> h;  // h[q] for q = 0..n; degrees outside are zero

    Int euler() const {
        Int e = 0;
        int sign = 1;
        for (const Int& v : h) {
            e += sign * v;
            sign = -sign;
        }
        return e;
    }

    bool all_zero() const {
        return std::all_of(h.begin(), h.end(), [](const Int& v) { return v == 0; });
    }
};

// h^q(P^n, O(a)): C(n+a, n) at q = 0 for a >= 0, C(-a-1, n) at q = n for
// a <= -n-1 (Serre duality), zero otherwise.
Int h_line_bundle(std::int64_t n, std::int64_t a, std::int64_t q);

// Componentwise sum of h_line_bundle over all summands, shifted by twist.
CohomologyTable cohomology_of(const SplittingType& t, std::int64_t twist);

// Ulrich condition at polarization degree pd: total vanishing at the twists
// -pd, -2*pd, ..., -n*pd.
bool is_ulrich_split(const SplittingType& t, std::int64_t pd);

// Euler characteristic of t(twist), computed twice -- alternating cohomology
// sum and Hilbert-polynomial evaluation -- and cross-checked.
Int euler_char(const SplittingType& t, std::int64_t twist);

// chi(E(l)) = rank/n! * prod_{j=1..n}(l + j*pd) for an Ulrich bundle E on
// projective n-space at polarization degree pd.
Rat ulrich_chi_formula(std::int64_t n, std::int64_t pd, const Int& rank, const Int& l);

// Dimension N = C(n+pd, pd) of the space of degree-pd forms; the degree-pd
// embedding of P^n lands in P^{N-1}.
Int veronese_embedding_dim(std::int64_t n, std::int64_t pd);

}  // namespace ulrich
