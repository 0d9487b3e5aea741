#include "pmd/exact.hpp"

#include "pmd/errors.hpp"

namespace pmd {

Nat binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Nat result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) at each step
    }
    return result;
}

Nat falling(long long a, long long len) {
    if (a < 0) throw NegativeBase("falling factorial requires a >= 0, got a=" + std::to_string(a));
    if (len <= 0) return 1;
    if (len > a) return 0;  // the product reaches the factor 0
    Nat result = 1;
    for (long long i = 0; i < len; ++i) result *= a - i;
    return result;
}

Nat factorial(long long n) {
    Nat result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

Nat fuss_catalan(int p, long long n) {
    if (p < 2) throw InvalidArity("fuss_catalan requires p >= 2, got p=" + std::to_string(p));
    if (n < 0) return 0;
    Nat num = binomial(p * n + 1, n);
    Nat div = p * n + 1;
    if (num % div != 0) throw NonIntegerSum("fuss_catalan division not exact");
    return num / div;
}

Nat decreasing_count(int p, long long n) {
    if (p < 2) throw InvalidArity("decreasing_count requires p >= 2, got p=" + std::to_string(p));
    Nat result = 1;
    for (long long j = 0; j < n; ++j) result *= 1 + (p - 1) * j;
    return result;
}

}  // namespace pmd
