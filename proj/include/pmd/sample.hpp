#pragma once

#include <cstdint>
#include <map>

#include "pmd/exact.hpp"
#include "pmd/tree.hpp"

namespace pmd {

// Self-contained xoshiro256** generator, seeded via splitmix64, so sampled
// trees are bit-reproducible across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();

    // Uniform in [0, n), unbiased (rejection on the top slice).
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t s_[4];
};

// Derives a sub-seed for shard `index` of a run seeded with `seed`; used to
// split sampling across threads while keeping the merged result a pure
// function of (seed, shard layout).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// A tree drawn uniformly from T^(p)_n: a uniform shape (ballot word rotated
// into place by the cycle lemma) combined with a uniform labeling, which
// factorizes the uniform measure since every shape admits exactly n!
// labelings. Deterministic in (p, n, seed).
PAryTree sample_tree(int p, long long n, std::uint64_t seed);

struct SampleReport {
    int arity;
    long long n;
    long long trials;
    std::uint64_t seed;
    std::map<long long, long long> observed;  // md size -> draw count
    std::map<long long, Nat> t_counts;        // md size -> t(n,k)
    Nat total;                                // (pn)_(n-1)
    std::map<long long, Rational> expected;   // md size -> t(n,k) / total
    double chi_square;
};

// Draws `trials` trees, tabulates MD sizes, and computes the chi-square
// statistic against the formula distribution t(n,k)/(pn)_(n-1).
SampleReport sample_md_distribution(int p, long long n, long long trials, std::uint64_t seed);

// Lower CDF of the chi-square distribution with `df` degrees of freedom.
double chi_square_cdf(double df, double x);

// Upper-tail critical value: the x with P(X > x) = alpha.
double chi_square_critical(double df, double alpha);

}  // namespace pmd
