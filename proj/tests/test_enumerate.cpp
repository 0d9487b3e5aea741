#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <set>

#include "doctest.h"
#include "pmd/count.hpp"
#include "pmd/enumerate.hpp"
#include "pmd/errors.hpp"

using namespace pmd;

TEST_CASE("tree counts match (pn)_(n-1)") {
    EnumerationBudget budget;
    long long count = 0;
    auto tally = [&](const PAryTree&) { ++count; };

    enumerate_trees(2, {1, 2, 3}, budget, tally);
    CHECK(count == 30);

    count = 0;
    enumerate_trees(3, {1, 2, 3}, budget, tally);
    CHECK(count == 72);  // 3! * C_3^(3)

    count = 0;
    enumerate_trees(2, {}, budget, tally);
    CHECK(count == 1);  // the empty tree

    for (int p = 2; p <= 3; ++p) {
        for (long long n = 1; n <= 5; ++n) {
            std::vector<long long> verts(n);
            std::iota(verts.begin(), verts.end(), 1);
            count = 0;
            enumerate_trees(p, verts, budget, tally);
            CHECK(Nat(count) == falling(p * n, n - 1));
        }
    }
}

TEST_CASE("every generated tree is valid, on the right labels, no duplicates") {
    EnumerationBudget budget;
    for (int p = 2; p <= 3; ++p) {
        std::set<std::string> seen;
        enumerate_trees(p, {1, 2, 3, 4}, budget, [&](const PAryTree& t) {
            CHECK(validate(t));
            CHECK(labels(t) == std::set<long long>{1, 2, 3, 4});
            CHECK(seen.insert(canonical_encode(t)).second);
        });
    }
}

TEST_CASE("enumeration order is deterministic") {
    auto run = [] {
        EnumerationBudget budget;
        std::size_t hash = 0;
        enumerate_trees(2, {1, 2, 3, 4, 5}, budget, [&](const PAryTree& t) {
            hash = hash * 1000003 + std::hash<std::string>{}(canonical_encode(t));
        });
        return hash;
    };
    CHECK(run() == run());
}

TEST_CASE("forest counts") {
    EnumerationBudget budget;
    long long count = 0;
    auto tally = [&](const Forest&) { ++count; };

    enumerate_forests(2, {1, 2, 3, 4}, 2, budget, tally);
    CHECK(count == 168);

    count = 0;
    enumerate_forests(2, {1, 2, 3, 4}, 4, budget, tally);
    CHECK(count == 1);  // the edgeless forest

    count = 0;
    enumerate_forests(3, {1, 2, 3}, 0, budget, tally);
    CHECK(count == 0);

    count = 0;
    enumerate_forests(2, {}, 0, budget, tally);
    CHECK(count == 1);
}

TEST_CASE("forests come out canonical and distinct") {
    EnumerationBudget budget;
    std::set<std::string> seen;
    enumerate_forests(2, {1, 2, 3, 4}, 2, budget, [&](const Forest& f) {
        CHECK(f.components.size() == 2);
        long long r0 = f.components[0].nodes[f.components[0].root].label;
        long long r1 = f.components[1].nodes[f.components[1].root].label;
        CHECK(r0 < r1);
        CHECK(seen.insert(canonical_encode(f.components[0]) + "|" +
                          canonical_encode(f.components[1]))
                  .second);
    });
    CHECK(seen.size() == 168);
}

TEST_CASE("md histogram") {
    EnumerationBudget budget;
    MdHistogram h = md_histogram(2, 3, budget);
    CHECK(h.counts[1] == 14);
    CHECK(h.counts[2] == 10);
    CHECK(h.counts[3] == 6);

    MdHistogram h1 = md_histogram(2, 1, budget);
    CHECK(h1.counts[1] == 1);
    CHECK(h1.total() == 1);

    MdHistogram h34 = md_histogram(3, 4, budget);
    CHECK(h34.total() == falling(12, 3));
}

TEST_CASE("y oracle against known table values") {
    EnumerationBudget budget;
    CHECK(y_oracle(2, 4, 3, budget) == 56);
    CHECK(y_oracle(2, 5, 5, budget) == 120);
    CHECK(y_oracle(2, 6, 2, budget) == 0);
    CHECK(y_oracle(3, 4, 4, budget) == 105);
}

TEST_CASE("budget aborts cleanly") {
    EnumerationBudget budget;
    budget.max_trees = 10;
    long long seen = 0;
    CHECK_THROWS_AS(
        enumerate_trees(2, {1, 2, 3}, budget, [&](const PAryTree&) { ++seen; }),
        BudgetExceeded);
    CHECK(seen == 10);
}
