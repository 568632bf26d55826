#include "ulrich/numeric.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace ulrich;

TEST_CASE("factorial and binomial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(Int(5), 2) == 10);
    CHECK(binomial(Int(2), 1) == 2);
    CHECK(binomial(Int(1), 3) == 0);
    CHECK(binomial(Int(10), 0) == 1);
    CHECK(binomial(Int(40), 20) == Int("137846528820"));
}

TEST_CASE("line bundle chi polynomial matches binomial on nonnegative twists") {
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t a = 0; a <= 12; ++a) {
            const Rat chi = line_bundle_chi_poly(n, a);
            CHECK(denominator(chi) == 1);
            CHECK(numerator(chi) == binomial(Int(n + a), n));
        }
}

TEST_CASE("prime utilities") {
    CHECK(primes_upto(1).empty());
    CHECK(primes_upto(10) == std::vector<std::int64_t>{2, 3, 5, 7});
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
    CHECK(prime_support(12) == std::set<Int>{2, 3});
    CHECK(prime_support(1).empty());
    CHECK(prime_support(997) == std::set<Int>{997});
}

TEST_CASE("factorial valuation agrees with direct count") {
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t q : {2, 3, 5, 7}) {
            Int f = factorial(n);
            std::int64_t direct = 0;
            while (f % q == 0) {
                f /= q;
                ++direct;
            }
            CHECK(factorial_valuation(n, q) == direct);
        }
}

TEST_CASE("exact integer roots") {
    CHECK(exact_nth_root(Int(0), 3) == Int(0));
    CHECK(exact_nth_root(Int(1), 7) == Int(1));
    CHECK(exact_nth_root(Int(27), 3) == Int(3));
    CHECK(exact_nth_root(Int(1024), 2) == Int(32));
    CHECK(!exact_nth_root(Int(10), 2).has_value());
    CHECK(!exact_nth_root(Int(26), 3).has_value());
    CHECK(!exact_nth_root(Int(-8), 2).has_value());

    std::mt19937 rng(20240521);
    std::uniform_int_distribution<std::int64_t> base(2, 200);
    std::uniform_int_distribution<std::int64_t> exp(2, 6);
    for (int i = 0; i < 200; ++i) {
        const Int b = base(rng);
        const std::int64_t k = exp(rng);
        const Int power = pow_int(b, k);
        CHECK(exact_nth_root(power, k) == b);
        CHECK(!exact_nth_root(Int(power + 1), k).has_value());
    }
}

TEST_CASE("exact rational roots") {
    CHECK(exact_nth_root(Rat(4, 9), 2) == Rat(2, 3));
    CHECK(exact_nth_root(Rat(-8, 27), 3) == Rat(-2, 3));
    CHECK(!exact_nth_root(Rat(1, 2), 2).has_value());
    CHECK(!exact_nth_root(Rat(-4, 9), 2).has_value());
}

TEST_CASE("hook-length oracle agrees with brute-force tableau enumeration") {
    for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t k = 1; k <= 3; ++k)
            CHECK(oracles::rectangle_syt_hook(m, k) == oracles::rectangle_syt_enumerate(m, k));
    CHECK(oracles::rectangle_syt_hook(2, 2) == 2);
    CHECK(oracles::rectangle_syt_hook(2, 3) == 5);
}
