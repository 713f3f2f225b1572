#include "idealgraph/arith.hpp"

#include <algorithm>
#include <numeric>

namespace idealgraph {

std::vector<int> Factorization::exponents() const {
    std::vector<int> e;
    e.reserve(factors.size());
    for (const auto& [p, a] : factors) {
        (void)p;
        e.push_back(a);
    }
    return e;
}

Factorization factorize(int64_t k) {
    if (k < 2) {
        throw ValidationError(ValidationErrorKind::OutOfRange,
                              "factorize: argument must be >= 2, got " + std::to_string(k));
    }
    Factorization f;
    f.value = k;
    int64_t rest = k;
    auto strip = [&](int64_t p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (int64_t p = 5; p * p <= rest; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) f.factors.emplace_back(rest, 1);
    return f;
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

std::vector<int64_t> all_divisors(const Factorization& f) {
    std::vector<int64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<int64_t> proper_nontrivial_divisors(const Factorization& f) {
    std::vector<int64_t> divs = all_divisors(f);
    std::vector<int64_t> proper;
    proper.reserve(divs.size() >= 2 ? divs.size() - 2 : 0);
    for (int64_t d : divs) {
        if (d != 1 && d != f.value) proper.push_back(d);
    }
    return proper;
}

ModulePair validate_module_pair(int64_t m, int64_t n) {
    if (m < 2 || n < 2) {
        throw ValidationError(ValidationErrorKind::OutOfRange,
                              "module pair (" + std::to_string(m) + ", " + std::to_string(n) +
                                  "): both members must be >= 2");
    }
    if (m % n != 0) {
        throw ValidationError(ValidationErrorKind::NotAModule,
                              "module pair (" + std::to_string(m) + ", " + std::to_string(n) +
                                  "): " + std::to_string(n) + " does not divide " +
                                  std::to_string(m));
    }
    ModulePair pair;
    pair.m = factorize(m);
    pair.n = factorize(n);
    pair.primes.reserve(pair.m.factors.size());
    pair.alpha.reserve(pair.m.factors.size());
    for (const auto& [p, e] : pair.m.factors) {
        pair.primes.push_back(p);
        pair.alpha.push_back(e);
    }
    pair.beta.assign(pair.primes.size(), 0);
    int64_t rest = n;
    for (std::size_t i = 0; i < pair.primes.size(); ++i) {
        while (rest % pair.primes[i] == 0) {
            rest /= pair.primes[i];
            ++pair.beta[i];
        }
        if (pair.beta[i] >= 1) pair.support.push_back(static_cast<int>(i));
    }
    return pair;
}

}  // namespace idealgraph
