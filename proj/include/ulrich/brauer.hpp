#pragma once

// Validated degree/period/index arithmetic for central simple algebras.
// The invariants are always taken as inputs; nothing here computes them from
// an algebra presentation.

#include "ulrich/numeric.hpp"

namespace ulrich {

class AlgebraInvariants {
  public:
    // Enforces: per | ind, ind | deg, per and ind share the same prime
    // support, and per = 1 <=> ind = 1. Throws Error on violation.
    static AlgebraInvariants validate(const Int& degree, const Int& period, const Int& index);

    const Int& degree() const { return degree_; }
    const Int& period() const { return period_; }
    const Int& index() const { return index_; }

    // Dimension of the associated Brauer-Severi variety.
    Int dim() const { return degree_ - 1; }

    bool split() const { return index_ == 1; }

    bool operator==(const AlgebraInvariants& o) const {
        return degree_ == o.degree_ && period_ == o.period_ && index_ == o.index_;
    }

  private:
    AlgebraInvariants(Int degree, Int period, Int index)
        : degree_(std::move(degree)), period_(std::move(period)), index_(std::move(index)) {}

    Int degree_;
    Int period_;
    Int index_;
};

// per(A^{tensor m}) = per(A) / gcd(per(A), m).
Int period_of_tensor_power(const Int& per, const Int& m);

// Minimal degree of a separable splitting field: the index.
Int min_splitting_degree(const AlgebraInvariants& a);

// Rank of the pushforward of a rank-rk bundle along the degree-ind projection
// from the minimal splitting field.
Int pushforward_rank(const Int& rk, const Int& ind);

}  // namespace ulrich
