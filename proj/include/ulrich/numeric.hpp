#pragma once

// Exact arithmetic helpers shared by all engines. Everything here is
// big-integer or big-rational; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace ulrich {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

Int factorial(std::int64_t n);

// C(top, k) for top >= 0; zero when k < 0 or k > top.
Int binomial(const Int& top, std::int64_t k);

// Hilbert-polynomial value of a degree-a line bundle on projective n-space:
// prod_{j=1..n}(a + j) / n!, valid for every integer a (the extended binomial
// C(n + a, n)).
Rat line_bundle_chi_poly(std::int64_t n, const Int& a);

std::vector<std::int64_t> primes_upto(std::int64_t n);

bool is_prime(std::int64_t n);

// Set of prime divisors, by trial division. Inputs are validated small
// (<= 10^12) so the scan is bounded; larger values are rejected upstream.
std::set<Int> prime_support(const Int& n);

// q-adic valuation of n! (Legendre: sum of floor(n / q^i)).
std::int64_t factorial_valuation(std::int64_t n, std::int64_t q);

Int pow_int(const Int& base, std::int64_t exp);

// Exact integer n-th root: the unique u >= 0 with u^n == value, if it exists.
std::optional<Int> exact_nth_root(const Int& value, std::int64_t n);

// Exact rational n-th root (numerator and denominator must both be perfect
// n-th powers). Negative inputs only succeed for odd n.
std::optional<Rat> exact_nth_root(const Rat& value, std::int64_t n);

// Narrowing conversion used at API boundaries where a structural parameter
// (dimension, exponent) must drive loops.
std::int64_t to_int64(const Int& v);

}  // namespace ulrich
