#pragma once

#include <map>
#include <vector>

#include "pmd/exact.hpp"

namespace pmd {

// Memoized counting of the three families for one fixed arity p:
//   y(n,k)  trees made of a k-vertex decreasing tree plus n-k increasing leaves
//   f(n,k)  non-ordered forests of k trees on [n]
//   t(n,k)  trees on [n] whose maximal decreasing subtree has k vertices
//
// The y table is filled bottom-up over n, so no recursion depth issue at
// large n. A Counter is cheap to construct; reuse one instance when querying
// many cells of the same p. Reads after a single-threaded fill are safe to
// share across threads.
class Counter {
public:
    explicit Counter(int p);

    int arity() const { return p_; }

    Nat y(long long n, long long k);
    Nat f(long long n, long long k) const;
    Nat t(long long n, long long k);

    // {k -> t(n,k)} for 0 <= k <= n; asserts the row-sum identity
    // sum_k t(n,k) = (pn)_(n-1).
    std::map<long long, Nat> t_row(long long n);

private:
    void ensure_y(long long n);
    Nat y_cell(long long n, long long k) const;

    int p_;
    std::vector<std::vector<Nat>> y_;  // y_[n][k], rows 0..filled
};

// One-shot conveniences.
Nat count_y(int p, long long n, long long k);
Nat count_f(int p, long long n, long long k);
Nat count_t(int p, long long n, long long k);

}  // namespace pmd
