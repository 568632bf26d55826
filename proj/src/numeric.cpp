#include "ulrich/numeric.hpp"

#include <stdexcept>

namespace ulrich {

Int factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(const Int& top, std::int64_t k) {
    if (k < 0 || top < 0 || top < k) return 0;
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= top - (k - i);
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

Rat line_bundle_chi_poly(std::int64_t n, const Int& a) {
    Int num = 1;
    for (std::int64_t j = 1; j <= n; ++j) num *= a + j;
    return Rat(num, factorial(n));
}

std::vector<std::int64_t> primes_upto(std::int64_t n) {
    std::vector<std::int64_t> ps;
    if (n < 2) return ps;
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    for (std::int64_t p = 2; p <= n; ++p) {
        if (!sieve[static_cast<std::size_t>(p)]) continue;
        ps.push_back(p);
        for (std::int64_t m = p * p; m <= n; m += p) sieve[static_cast<std::size_t>(m)] = false;
    }
    return ps;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::set<Int> prime_support(const Int& n) {
    if (n <= 0) throw std::invalid_argument("prime support needs a positive integer");
    if (n > Int(1000000000000LL))
        throw std::invalid_argument("input too large for trial-division factorization");
    std::set<Int> support;
    Int m = n;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            support.insert(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) support.insert(m);
    return support;
}

std::int64_t factorial_valuation(std::int64_t n, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("valuation base must be >= 2");
    std::int64_t v = 0;
    for (std::int64_t pk = q; pk <= n; pk *= q) {
        v += n / pk;
        if (pk > n / q) break;  // next power would overflow past n anyway
    }
    return v;
}

Int pow_int(const Int& base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Int r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return r;
}

std::optional<Int> exact_nth_root(const Int& value, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("root index must be >= 1");
    if (value < 0) return std::nullopt;
    if (n == 1 || value == 0 || value == 1) {
        if (n == 1) return value;
        return value;  // 0 and 1 are their own roots
    }
    // Newton iteration on u -> ((n-1)u + value/u^(n-1)) / n, then verify.
    Int u = 1;
    u <<= (static_cast<unsigned>(boost::multiprecision::msb(value)) / static_cast<unsigned>(n)) + 1;
    while (true) {
        Int un1 = pow_int(u, n - 1);
        Int next = ((n - 1) * u + value / un1) / n;
        if (next >= u) break;
        u = next;
    }
    if (pow_int(u, n) == value) return u;
    return std::nullopt;
}

std::optional<Rat> exact_nth_root(const Rat& value, std::int64_t n) {
    Int num = numerator(value), den = denominator(value);
    bool negative = num < 0;
    if (negative) {
        if (n % 2 == 0) return std::nullopt;
        num = -num;
    }
    auto rn = exact_nth_root(num, n);
    if (!rn) return std::nullopt;
    auto rd = exact_nth_root(den, n);
    if (!rd) return std::nullopt;
    Rat r(*rn, *rd);
    return negative ? Rat(-r) : r;
}

std::int64_t to_int64(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

}  // namespace ulrich
