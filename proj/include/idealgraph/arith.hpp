#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idealgraph {

enum class ValidationErrorKind { OutOfRange, NotAModule };

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ValidationErrorKind kind() const { return kind_; }

private:
    ValidationErrorKind kind_;
};

// Prime factorization with strictly increasing primes, exponents >= 1.
struct Factorization {
    int64_t value = 1;
    std::vector<std::pair<int64_t, int>> factors;

    int prime_count() const { return static_cast<int>(factors.size()); }
    std::vector<int> exponents() const;
};

// Deterministic trial division; rejects k < 2.
Factorization factorize(int64_t k);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);

// Divisors d of f.value with 1 < d < f.value, strictly increasing.
// Empty when f.value is prime. Length is prod(alpha_i + 1) - 2.
std::vector<int64_t> proper_nontrivial_divisors(const Factorization& f);

// All divisors including 1 and value, strictly increasing.
std::vector<int64_t> all_divisors(const Factorization& f);

// Validated pair (m, n) with n | m and both >= 2. The exponents of n are
// stored aligned to m's prime list (zeros allowed) so case-pattern matching
// never has to re-align primes.
struct ModulePair {
    Factorization m;
    Factorization n;
    std::vector<int64_t> primes;  // m's primes, increasing
    std::vector<int> alpha;       // exponents of m
    std::vector<int> beta;        // exponents of n aligned to primes
    std::vector<int> support;     // indices i with beta[i] >= 1

    int prime_count() const { return static_cast<int>(primes.size()); }
    int support_size() const { return static_cast<int>(support.size()); }
};

// Throws ValidationError: OutOfRange when m < 2 or n < 2, NotAModule when
// n does not divide m.
ModulePair validate_module_pair(int64_t m, int64_t n);

}  // namespace idealgraph
