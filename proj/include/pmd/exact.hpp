#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pmd {

// All counts are exact nonnegative integers; values grow past 64 bits quickly
// (t(8,1) is already ~2.5e7 and row sums reach 5.7e7 at n=8).
using Nat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n,k); 0 whenever the pair is out of range (k < 0, k > n, n < 0).
Nat binomial(long long n, long long k);

// a(a-1)...(a-len+1). Empty product is 1. Once a factor hits zero the
// result is 0. Throws NegativeBase for a < 0.
Nat falling(long long a, long long len);

Nat factorial(long long n);

// Order-p Fuss-Catalan number C(pn+1, n) / (pn+1); the division is asserted
// exact. Throws InvalidArity for p < 2.
Nat fuss_catalan(int p, long long n);

// prod_{j=0}^{n-1} (1 + (p-1)j): the number of decreasing p-ary trees on [n].
Nat decreasing_count(int p, long long n);

}  // namespace pmd
