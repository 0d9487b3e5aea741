#include "pmd/verify.hpp"

#include <numeric>

#include "pmd/count.hpp"

namespace pmd {

bool verify_range(int p, long long n_lo, long long n_hi, EnumerationBudget& budget,
                  const VerifyCallback& report) {
    Counter counter(p);
    bool all_ok = true;
    auto check = [&](char family, long long n, long long k, const Nat& measured,
                     const Nat& formula) {
        bool ok = measured == formula;
        all_ok &= ok;
        if (report) report(family, n, k, ok);
    };

    for (long long n = std::max<long long>(n_lo, 0); n <= n_hi; ++n) {
        if (n >= 1) {
            // one sweep over T^(p)_n feeds both the t and y checks
            std::map<long long, Nat> t_counts, y_counts;
            for (long long k = 1; k <= n; ++k) t_counts[k] = y_counts[k] = 0;
            std::vector<long long> verts(n);
            std::iota(verts.begin(), verts.end(), 1);
            enumerate_trees(p, verts, budget, [&](const PAryTree& t) {
                long long k = md_size(t);
                ++t_counts[k];
                auto md_labels = labels(md_subtree(t));
                bool is_y = true;
                for (const auto& node : t.nodes) {
                    if (md_labels.count(node.label)) continue;
                    for (int c : node.slot) {
                        if (c != PAryTree::kNone) is_y = false;
                    }
                }
                if (is_y) ++y_counts[k];
            });
            for (long long k = 1; k <= n; ++k) {
                check('t', n, k, t_counts[k], counter.t(n, k));
                check('y', n, k, y_counts[k], counter.y(n, k));
            }
        }
        for (long long k = 0; k <= n; ++k) {
            check('f', n, k, forest_oracle(p, n, k, budget), counter.f(n, k));
        }
    }
    return all_ok;
}

}  // namespace pmd
