#include <doctest.h>

#include <random>

#include "idealgraph/arith.hpp"

using namespace idealgraph;

namespace {

// independent divisor enumeration by scanning all candidates
std::vector<int64_t> brute_divisors(int64_t k) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d < k; ++d) {
        if (k % d == 0) out.push_back(d);
    }
    return out;
}

bool trial_is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t q = 2; q * q <= p; ++q) {
        if (p % q == 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("factorize on fixed inputs") {
    CHECK(factorize(36).factors == std::vector<std::pair<int64_t, int>>{{2, 2}, {3, 2}});
    CHECK(factorize(128).factors == std::vector<std::pair<int64_t, int>>{{2, 7}});
    CHECK(factorize(30).factors == std::vector<std::pair<int64_t, int>>{{2, 1}, {3, 1}, {5, 1}});
    CHECK(factorize(2).factors == std::vector<std::pair<int64_t, int>>{{2, 1}});
    CHECK_THROWS_AS(factorize(1), ValidationError);
    CHECK_THROWS_AS(factorize(0), ValidationError);
    CHECK_THROWS_AS(factorize(-6), ValidationError);
}

TEST_CASE("factorize reconstructs random inputs with prime factors") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int64_t> dist(2, 1000000);
    for (int trial = 0; trial < 5000; ++trial) {
        int64_t k = dist(rng);
        Factorization f = factorize(k);
        int64_t product = 1;
        int64_t prev = 0;
        for (auto [p, e] : f.factors) {
            CHECK(trial_is_prime(p));
            CHECK(p > prev);
            CHECK(e >= 1);
            prev = p;
            for (int i = 0; i < e; ++i) product *= p;
        }
        CHECK(product == k);
    }
}

TEST_CASE("proper nontrivial divisors") {
    CHECK(proper_nontrivial_divisors(factorize(12)) == std::vector<int64_t>{2, 3, 4, 6});
    CHECK(proper_nontrivial_divisors(factorize(7)).empty());
    CHECK(proper_nontrivial_divisors(factorize(36)) ==
          std::vector<int64_t>{2, 3, 4, 6, 9, 12, 18});
}

TEST_CASE("divisor count matches prod(alpha+1)-2 up to 10^4") {
    for (int64_t m = 2; m <= 10000; ++m) {
        Factorization f = factorize(m);
        long long expected = 1;
        for (auto [p, e] : f.factors) {
            (void)p;
            expected *= e + 1;
        }
        expected -= 2;
        CHECK(static_cast<long long>(proper_nontrivial_divisors(f).size()) == expected);
    }
}

TEST_CASE("divisor list agrees with brute enumeration on a sample") {
    for (int64_t m : {2, 6, 36, 60, 97, 128, 210, 1024, 2310, 5040}) {
        CHECK(proper_nontrivial_divisors(factorize(m)) == brute_divisors(m));
    }
}

TEST_CASE("lcm and gcd basics") {
    CHECK(lcm64(4, 6) == 12);
    CHECK(lcm64(17, 17) == 17);
    CHECK(gcd64(9, 30) == 3);
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int64_t> dist(1, 100000);
    for (int trial = 0; trial < 2000; ++trial) {
        int64_t a = dist(rng), b = dist(rng);
        CHECK(lcm64(a, b) * gcd64(a, b) == a * b);
        CHECK(lcm64(a, a) == a);
    }
}

TEST_CASE("validate_module_pair on fixed inputs") {
    ModulePair p = validate_module_pair(36, 6);
    CHECK(p.alpha == std::vector<int>{2, 2});
    CHECK(p.beta == std::vector<int>{1, 1});
    CHECK(p.support == std::vector<int>{0, 1});
    CHECK(p.support_size() == 2);

    ModulePair q = validate_module_pair(18, 18);
    CHECK(q.alpha == std::vector<int>{1, 2});
    CHECK(q.beta == q.alpha);

    ModulePair r = validate_module_pair(24, 8);
    CHECK(r.beta == std::vector<int>{3, 0});
    CHECK(r.support == std::vector<int>{0});

    CHECK_THROWS_AS(validate_module_pair(12, 5), ValidationError);
    CHECK_THROWS_AS(validate_module_pair(1, 1), ValidationError);
    CHECK_THROWS_AS(validate_module_pair(12, 1), ValidationError);
    CHECK_THROWS_AS(validate_module_pair(0, 2), ValidationError);
    try {
        validate_module_pair(12, 5);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.kind() == ValidationErrorKind::NotAModule);
    }
    try {
        validate_module_pair(12, 1);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.kind() == ValidationErrorKind::OutOfRange);
    }
}

TEST_CASE("validate_module_pair succeeds exactly when n divides m (m <= 300)") {
    for (int64_t m = 2; m <= 300; ++m) {
        for (int64_t n = 2; n <= m; ++n) {
            bool ok = true;
            try {
                ModulePair pair = validate_module_pair(m, n);
                // beta stays within alpha
                for (std::size_t i = 0; i < pair.alpha.size(); ++i) {
                    CHECK(pair.beta[i] >= 0);
                    CHECK(pair.beta[i] <= pair.alpha[i]);
                }
            } catch (const ValidationError&) {
                ok = false;
            }
            CHECK(ok == (m % n == 0));
        }
    }
}
