#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "pmd/exact.hpp"
#include "pmd/tree.hpp"

namespace pmd {

// Caps exhaustive generation. The counter is cumulative, so one budget can
// guard a whole verification run. Exceeding the cap throws BudgetExceeded.
struct EnumerationBudget {
    std::uint64_t max_trees = 100000000ULL;  // default, overridable
    std::uint64_t generated = 0;

    void charge();
};

// Exact distribution of MD-subtree sizes over T^(p)_n.
struct MdHistogram {
    int arity;
    long long n;
    std::map<long long, Nat> counts;  // k -> number of trees with md_size == k

    Nat total() const;
};

using TreeVisitor = std::function<void(const PAryTree&)>;
using ForestVisitor = std::function<void(const Forest&)>;

// Visits every p-ary labeled tree on `labels` exactly once, in a fixed
// deterministic order: root label ascending, then the weak ordered partition
// of the remaining labels into the p slots in odometer order, then subtree
// structures depth-first. The visited tree is a transient buffer; copy it if
// it must outlive the callback. An empty label set yields one empty tree.
void enumerate_trees(int p, const std::vector<long long>& labels, EnumerationBudget& budget,
                     const TreeVisitor& visit);

// Visits every canonical forest of k p-ary trees on `labels` exactly once.
// Roots are chosen as a sorted k-subset, so components arrive already in
// canonical order (root labels ascending).
void enumerate_forests(int p, const std::vector<long long>& labels, long long k,
                       EnumerationBudget& budget, const ForestVisitor& visit);

// Brute-force t(n,k) for every k at once: enumerate T^(p)_n and tabulate
// md_size.
MdHistogram md_histogram(int p, long long n, EnumerationBudget& budget);

// Brute-force y(n,k): trees in T^(p)_n whose MD subtree has k vertices and
// whose non-MD vertices are all leaves.
Nat y_oracle(int p, long long n, long long k, EnumerationBudget& budget);

// Brute-force f(n,k): number of forests visited by enumerate_forests on [n].
Nat forest_oracle(int p, long long n, long long k, EnumerationBudget& budget);

}  // namespace pmd
