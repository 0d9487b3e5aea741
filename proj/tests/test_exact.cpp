#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "pmd/errors.hpp"
#include "pmd/exact.hpp"

using pmd::Nat;

namespace {

// Independent shape-count oracle: s(n) = sum over the weak compositions of
// n-1 into p parts of the product of subtree shape counts. Used to pin the
// Fuss-Catalan values without going through the binomial closed form.
Nat shape_count(int p, int n) {
    std::vector<Nat> s(n + 1, Nat(0));
    s[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // convolve p copies of s, total m-1
        std::vector<Nat> conv(m, Nat(0));
        conv[0] = 1;
        for (int part = 0; part < p; ++part) {
            std::vector<Nat> next(m, Nat(0));
            for (int a = 0; a < m; ++a) {
                if (conv[a] == 0) continue;
                for (int b = 0; a + b < m; ++b) next[a + b] += conv[a] * s[b];
            }
            conv = std::move(next);
        }
        s[m] = conv[m - 1];
    }
    return s[n];
}

}  // namespace

TEST_CASE("binomial small values and conventions") {
    CHECK(pmd::binomial(4, 2) == 6);
    CHECK(pmd::binomial(0, 0) == 1);
    CHECK(pmd::binomial(7, 0) == 1);
    CHECK(pmd::binomial(5, 7) == 0);
    CHECK(pmd::binomial(-1, 0) == 0);
    CHECK(pmd::binomial(5, -2) == 0);
}

TEST_CASE("binomial symmetry up to n = 40") {
    for (long long n = 0; n <= 40; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(pmd::binomial(n, k) == pmd::binomial(n, n - k));
        }
    }
}

TEST_CASE("falling factorial") {
    CHECK(pmd::falling(6, 2) == 30);
    CHECK(pmd::falling(12, 0) == 1);
    CHECK(pmd::falling(0, 0) == 1);
    CHECK(pmd::falling(3, 5) == 0);  // the product crosses zero
    CHECK(pmd::falling(0, 1) == 0);
    CHECK_THROWS_AS(pmd::falling(-2, 1), pmd::NegativeBase);
}

TEST_CASE("falling equals binomial times factorial") {
    for (long long a = 0; a <= 40; ++a) {
        for (long long len = 0; len <= a; ++len) {
            CHECK(pmd::falling(a, len) == pmd::binomial(a, len) * pmd::factorial(len));
        }
    }
}

TEST_CASE("fuss-catalan") {
    CHECK(pmd::fuss_catalan(3, 3) == 12);  // the twelve ternary trees on 3 vertices
    CHECK(pmd::fuss_catalan(2, 0) == 1);
    CHECK(pmd::fuss_catalan(5, 0) == 1);
    CHECK_THROWS_AS(pmd::fuss_catalan(1, 4), pmd::InvalidArity);
}

TEST_CASE("fuss-catalan matches the composition-recursion shape oracle") {
    CHECK(shape_count(2, 8) == 1430);
    CHECK(pmd::fuss_catalan(2, 8) == 1430);
    for (int p = 2; p <= 4; ++p) {
        for (int n = 0; n <= 9; ++n) {
            CHECK(pmd::fuss_catalan(p, n) == shape_count(p, n));
        }
    }
}

TEST_CASE("labeled-tree cardinality identity") {
    // n! C_n^(p) = (pn)_(n-1)
    for (int p = 2; p <= 4; ++p) {
        for (long long n = 1; n <= 12; ++n) {
            CHECK(pmd::fuss_catalan(p, n) * pmd::factorial(n) == pmd::falling(p * n, n - 1));
        }
    }
}

TEST_CASE("decreasing tree counts") {
    CHECK(pmd::decreasing_count(2, 5) == 120);
    CHECK(pmd::decreasing_count(2, 0) == 1);
    CHECK(pmd::decreasing_count(3, 0) == 1);
    CHECK(pmd::decreasing_count(3, 4) == 105);  // 1*3*5*7
    CHECK_THROWS_AS(pmd::decreasing_count(0, 3), pmd::InvalidArity);
    for (long long n = 0; n <= 12; ++n) {
        CHECK(pmd::decreasing_count(2, n) == pmd::factorial(n));
    }
}
