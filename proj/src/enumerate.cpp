#include "pmd/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "pmd/errors.hpp"

namespace pmd {

void EnumerationBudget::charge() {
    if (++generated > max_trees) {
        throw BudgetExceeded("enumeration budget of " + std::to_string(max_trees) +
                             " trees exceeded");
    }
}

Nat MdHistogram::total() const {
    Nat sum = 0;
    for (const auto& [k, v] : counts) sum += v;
    return sum;
}

namespace {

// Advances a base-p odometer; returns false after wrapping past the last
// assignment.
bool next_assignment(std::vector<int>& digits, int p) {
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (++*it < p) return true;
        *it = 0;
    }
    return false;
}

// Recursive generator for all p-ary tree structures on a label set, built
// into a shared buffer `t` with backtracking (node count is restored on
// return). `emit(root_index)` fires once per structure; root_index is kNone
// for the empty set. If `fixed_root` >= 0 only that label may be the root.
// Deep-copies the subtree of `src` rooted at `node` into `dst`.
int snapshot(const PAryTree& src, int node, PAryTree& dst) {
    int me = static_cast<int>(dst.nodes.size());
    dst.nodes.push_back({src.nodes[node].label, std::vector<int>(src.arity, PAryTree::kNone)});
    for (int i = 0; i < src.arity; ++i) {
        int c = src.nodes[node].slot[i];
        if (c != PAryTree::kNone) dst.nodes[me].slot[i] = snapshot(src, c, dst);
    }
    return me;
}

class TreeGen {
public:
    explicit TreeGen(PAryTree& t) : t_(t) {}

    void on(const std::vector<long long>& labels, long long fixed_root,
            const std::function<void(int)>& emit) {
        if (labels.empty()) {
            emit(PAryTree::kNone);
            return;
        }
        const int p = t_.arity;
        for (long long r : labels) {
            if (fixed_root > 0 && r != fixed_root) continue;
            std::vector<long long> rest;
            rest.reserve(labels.size() - 1);
            for (long long l : labels) {
                if (l != r) rest.push_back(l);
            }
            std::vector<int> assign(rest.size(), 0);
            std::vector<std::vector<long long>> blocks(p);
            do {
                for (auto& b : blocks) b.clear();
                for (std::size_t j = 0; j < rest.size(); ++j) blocks[assign[j]].push_back(rest[j]);
                int me = static_cast<int>(t_.nodes.size());
                t_.nodes.push_back({r, std::vector<int>(p, PAryTree::kNone)});
                fill_slot(me, 0, blocks, emit);
                t_.nodes.resize(me);
            } while (!rest.empty() && next_assignment(assign, p));
        }
    }

private:
    void fill_slot(int me, int i, const std::vector<std::vector<long long>>& blocks,
                   const std::function<void(int)>& emit) {
        if (i == t_.arity) {
            emit(me);
            return;
        }
        // blocks[i] is copied: deeper recursion reuses the blocks vector
        std::vector<long long> block = blocks[i];
        on(block, 0, [&](int child) {
            t_.nodes[me].slot[i] = child;
            fill_slot(me, i + 1, blocks, emit);
            t_.nodes[me].slot[i] = PAryTree::kNone;
        });
    }

    PAryTree& t_;
};

void check_inputs(int p, long long k_min) {
    if (p < 2) throw InvalidArity("enumeration requires p >= 2, got p=" + std::to_string(p));
    if (k_min < 0) throw std::invalid_argument("negative k");
}

}  // namespace

void enumerate_trees(int p, const std::vector<long long>& labels, EnumerationBudget& budget,
                     const TreeVisitor& visit) {
    check_inputs(p, 0);
    PAryTree buffer;
    buffer.arity = p;
    TreeGen gen(buffer);
    gen.on(labels, 0, [&](int root) {
        budget.charge();
        buffer.root = root;
        visit(buffer);
        buffer.root = PAryTree::kNone;
    });
}

void enumerate_forests(int p, const std::vector<long long>& labels, long long k,
                       EnumerationBudget& budget, const ForestVisitor& visit) {
    check_inputs(p, k);
    const long long n = static_cast<long long>(labels.size());
    if (k > n) return;
    if (k == 0) {
        if (n == 0) {
            budget.charge();
            visit(Forest{p, {}});
        }
        return;  // no forest with zero components covers a nonempty label set
    }
    std::vector<long long> sorted = labels;
    std::sort(sorted.begin(), sorted.end());

    // roots: sorted k-subsets of `sorted`, by selector bitmask in
    // lexicographic combination order
    std::vector<long long> selector(k);
    std::iota(selector.begin(), selector.end(), 0);

    Forest forest;
    forest.arity = p;
    forest.components.resize(k);

    PAryTree buffer;
    buffer.arity = p;
    TreeGen gen(buffer);

    auto emit_forest = [&]() {
        budget.charge();
        visit(forest);
    };

    for (;;) {
        std::vector<long long> roots(k);
        std::vector<bool> is_root(n, false);
        for (long long i = 0; i < k; ++i) {
            roots[i] = sorted[selector[i]];
            is_root[selector[i]] = true;
        }
        std::vector<long long> rest;
        for (long long i = 0; i < n; ++i) {
            if (!is_root[i]) rest.push_back(sorted[i]);
        }
        // distribute the non-root labels over the k components
        std::vector<int> assign(rest.size(), 0);
        do {
            std::vector<std::vector<long long>> member(k);
            for (long long i = 0; i < k; ++i) member[i] = {roots[i]};
            for (std::size_t j = 0; j < rest.size(); ++j) member[assign[j]].push_back(rest[j]);

            // enumerate each component's structures (root fixed), nested
            std::function<void(long long)> fill = [&](long long i) {
                if (i == k) {
                    emit_forest();
                    return;
                }
                gen.on(member[i], roots[i], [&](int root) {
                    buffer.root = root;
                    // snapshot this component; the buffer is reused below
                    PAryTree comp;
                    comp.arity = p;
                    comp.root = snapshot(buffer, root, comp);
                    buffer.root = PAryTree::kNone;
                    forest.components[i] = std::move(comp);
                    fill(i + 1);
                });
            };
            fill(0);
        } while (!rest.empty() && next_assignment(assign, static_cast<int>(k)));

        // next k-combination
        long long i = k - 1;
        while (i >= 0 && selector[i] == n - k + i) --i;
        if (i < 0) break;
        ++selector[i];
        for (long long j = i + 1; j < k; ++j) selector[j] = selector[j - 1] + 1;
    }
}

MdHistogram md_histogram(int p, long long n, EnumerationBudget& budget) {
    if (n < 1) throw std::invalid_argument("md_histogram requires n >= 1");
    MdHistogram hist{p, n, {}};
    for (long long k = 1; k <= n; ++k) hist.counts[k] = 0;
    std::vector<long long> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    enumerate_trees(p, labels, budget, [&](const PAryTree& t) { ++hist.counts[md_size(t)]; });
    return hist;
}

Nat y_oracle(int p, long long n, long long k, EnumerationBudget& budget) {
    if (n < 1) throw std::invalid_argument("y_oracle requires n >= 1");
    std::vector<long long> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    Nat count = 0;
    enumerate_trees(p, verts, budget, [&](const PAryTree& t) {
        if (md_size(t) != k) return;
        // every non-MD vertex must be a leaf of t
        PAryTree md = md_subtree(t);
        auto md_labels = labels(md);
        for (const auto& node : t.nodes) {
            if (md_labels.count(node.label)) continue;
            for (int c : node.slot) {
                if (c != PAryTree::kNone) return;
            }
        }
        ++count;
    });
    return count;
}

Nat forest_oracle(int p, long long n, long long k, EnumerationBudget& budget) {
    std::vector<long long> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    Nat count = 0;
    enumerate_forests(p, labels, k, budget, [&](const Forest&) { ++count; });
    return count;
}

}  // namespace pmd
