#include "pmd/sample.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "pmd/count.hpp"
#include "pmd/errors.hpp"

namespace pmd {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (auto& word : s_) word = splitmix64(state);
}

std::uint64_t Rng::next() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (index * 0xd1b54a32d192ed03ULL + 1);
    return splitmix64(state);
}

PAryTree sample_tree(int p, long long n, std::uint64_t seed) {
    if (p < 2) throw InvalidArity("sample_tree requires p >= 2, got p=" + std::to_string(p));
    if (n < 1) throw std::invalid_argument("sample_tree requires n >= 1");
    Rng rng(seed);

    // Preorder word of a full p-ary tree with n internal vertices: length
    // pn+1 over {internal, leaf}. A uniform n-subset of positions marks the
    // internal vertices; by the cycle lemma exactly one rotation is a valid
    // ballot word, found after the first minimum of the prefix sums of
    // (p-1 for internal, -1 for leaf).
    const long long len = p * n + 1;
    std::vector<long long> pos(len);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<bool> internal(len, false);
    for (long long i = 0; i < n; ++i) {
        long long j = i + static_cast<long long>(rng.below(len - i));
        std::swap(pos[i], pos[j]);
        internal[pos[i]] = true;
    }

    long long sum = 0, min_sum = 0, min_at = -1;
    for (long long i = 0; i < len; ++i) {
        sum += internal[i] ? p - 1 : -1;
        if (sum < min_sum) {
            min_sum = sum;
            min_at = i;
        }
    }
    const long long start = (min_at + 1) % len;

    PAryTree tree;
    tree.arity = p;
    std::vector<long long> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (long long i = 0; i < n - 1; ++i) {
        long long j = i + static_cast<long long>(rng.below(n - i));
        std::swap(perm[i], perm[j]);
    }

    // decode the rotated word in preorder; internal marks become vertices,
    // labeled by `perm` in creation order
    long long cursor = 0;
    std::function<int()> build = [&]() -> int {
        bool is_internal = internal[(start + cursor) % len];
        ++cursor;
        if (!is_internal) return PAryTree::kNone;
        int me = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({perm[me], std::vector<int>(p, PAryTree::kNone)});
        for (int i = 0; i < p; ++i) tree.nodes[me].slot[i] = build();
        return me;
    };
    tree.root = build();
    return tree;
}

SampleReport sample_md_distribution(int p, long long n, long long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    SampleReport report{p, n, trials, seed, {}, {}, 0, {}, 0.0};

    Counter counter(p);
    report.total = falling(p * n, n - 1);
    for (long long k = 1; k <= n; ++k) {
        report.t_counts[k] = counter.t(n, k);
        report.expected[k] = Rational(report.t_counts[k], report.total);
        report.observed[k] = 0;
    }

    for (long long i = 0; i < trials; ++i) {
        PAryTree t = sample_tree(p, n, mix_seed(seed, static_cast<std::uint64_t>(i)));
        ++report.observed[md_size(t)];
    }

    double chi = 0.0;
    for (long long k = 1; k <= n; ++k) {
        double expected = report.expected[k].convert_to<double>() * static_cast<double>(trials);
        if (expected == 0.0) continue;
        double diff = static_cast<double>(report.observed[k]) - expected;
        chi += diff * diff / expected;
    }
    report.chi_square = chi;
    return report;
}

namespace {

// Regularized lower incomplete gamma P(a, x), series for x < a+1 and
// continued fraction otherwise.
double gamma_p(double a, double x) {
    if (x <= 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    // Lentz's continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-15) break;
    }
    double q = std::exp(-x + a * std::log(x) - lg) * h;
    return 1.0 - q;
}

}  // namespace

double chi_square_cdf(double df, double x) { return gamma_p(df / 2.0, x / 2.0); }

double chi_square_critical(double df, double alpha) {
    double lo = 0.0, hi = df + 1.0;
    while (chi_square_cdf(df, hi) < 1.0 - alpha) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (chi_square_cdf(df, mid) < 1.0 - alpha ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace pmd
