#pragma once

// Independent oracles used by the tests. Each one recomputes a quantity by a
// route the library does not use, so agreement is evidence, not tautology.

#include "ulrich/numeric.hpp"

#include <cstdint>
#include <vector>

namespace oracles {

using ulrich::Int;
using ulrich::Rat;

// Dimension of the space of global sections of O(a) on P^n, counted as the
// number of monomials of degree a in n+1 variables, by direct enumeration.
inline Int monomial_count(std::int64_t num_vars, std::int64_t degree) {
    if (degree < 0) return 0;
    if (num_vars == 1) return 1;
    Int total = 0;
    for (std::int64_t first = 0; first <= degree; ++first)
        total += monomial_count(num_vars - 1, degree - first);
    return total;
}

inline Int h0_oracle(std::int64_t n, std::int64_t a) { return monomial_count(n + 1, a); }

// Smallest rank r such that r/n! * prod_{j=1..n}(l + j*pd) is an integer for
// every l in a window long enough to hit all residues modulo the prime powers
// in n!. This is the integrality constraint behind the divisibility bound.
inline Int chi_integral_minimal_rank(std::int64_t n, std::int64_t pd) {
    const Int nfact = ulrich::factorial(n);
    for (Int r = 1; r <= nfact; ++r) {
        bool ok = true;
        for (std::int64_t l = 0; l < 100 && ok; ++l) {
            Int prod = r;
            for (std::int64_t j = 1; j <= n; ++j) prod *= l + j * pd;
            if (prod % nfact != 0) ok = false;
        }
        if (ok) return r;
    }
    return nfact;
}

// Number of standard Young tableaux of an m x k rectangle by the hook length
// formula: (mk)! / prod of hooks. The hook of cell (i,j) is
// (m-1-i) + (k-1-j) + 1.
inline Int rectangle_syt_hook(std::int64_t m, std::int64_t k) {
    Int hooks = 1;
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < k; ++j) hooks *= (m - 1 - i) + (k - 1 - j) + 1;
    const Rat count(ulrich::factorial(m * k), hooks);
    return ulrich::numerator(count);  // always integral
}

// Brute-force count of standard Young tableaux of an m x k rectangle by
// backtracking placement of 1..mk. Only usable for tiny shapes; validates the
// hook-length oracle itself.
inline Int rectangle_syt_enumerate(std::int64_t m, std::int64_t k) {
    std::vector<std::int64_t> filled(static_cast<std::size_t>(m), 0);  // cells used per row
    Int count = 0;
    const std::int64_t total = m * k;
    auto place = [&](auto&& self, std::int64_t next) -> void {
        if (next > total) {
            ++count;
            return;
        }
        for (std::int64_t i = 0; i < m; ++i) {
            if (filled[static_cast<std::size_t>(i)] == k) continue;
            if (i > 0 && filled[static_cast<std::size_t>(i - 1)] <=
                             filled[static_cast<std::size_t>(i)])
                continue;  // column condition: the cell above must be filled
            ++filled[static_cast<std::size_t>(i)];
            self(self, next + 1);
            --filled[static_cast<std::size_t>(i)];
        }
    };
    place(place, 1);
    return count;
}

}  // namespace oracles
