#include "pmd/count.hpp"

#include "pmd/errors.hpp"

namespace pmd {

namespace {

// y(n,k) vanishes for k < max((n-1)/p, 1) when n >= 1, i.e. pk < n-1 or
// k < 1. The threshold uses real division, hence the cross-multiplied form.
bool y_is_zero(int p, long long n, long long k) {
    if (n == 0) return k != 0;
    if (k < 1 || k > n) return true;
    return p * k < n - 1;
}

}  // namespace

Counter::Counter(int p) : p_(p) {
    if (p < 2) throw InvalidArity("counting requires p >= 2, got p=" + std::to_string(p));
    y_.push_back({Nat(1)});  // y(0,0) = 1
}

Nat Counter::y_cell(long long n, long long k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    return y_[n][k];
}

void Counter::ensure_y(long long n) {
    for (long long row = static_cast<long long>(y_.size()); row <= n; ++row) {
        std::vector<Nat> cells(row + 1, Nat(0));
        for (long long k = 1; k <= row; ++k) {
            if (y_is_zero(p_, row, k)) continue;
            if (k == row) {
                cells[k] = decreasing_count(p_, row);
                continue;
            }
            Nat sum = 0;
            for (long long m = 0; m <= p_; ++m) {
                Nat sub = y_cell(row - m - 1, k - 1);
                if (sub == 0) continue;
                long long mult = (k - 1) * p_ - row + m + 2;
                if (mult < 0) {
                    // Eq.-(4)-style consistency: a negative multiplier can only
                    // occur against a vanishing y-factor
                    throw NonIntegerSum("negative multiplier with nonzero y(" +
                                        std::to_string(row - m - 1) + "," + std::to_string(k - 1) +
                                        ")");
                }
                sum += binomial(row - 1, m) * binomial(p_, m) * factorial(m) * mult * sub;
            }
            cells[k] = std::move(sum);
        }
        y_.push_back(std::move(cells));
    }
}

Nat Counter::y(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (y_is_zero(p_, n, k)) return 0;
    ensure_y(n);
    return y_[n][k];
}

Nat Counter::f(long long n, long long k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k == n) return 1;  // edgeless forest, including f(0,0) = 1
    if (k == 0) return 0;  // no forest with 0 components covers [n], n >= 1
    Nat result = binomial(n, k) * p_ * k;
    for (long long i = 1; i <= n - k - 1; ++i) result *= p_ * n - i;
    return result;
}

Nat Counter::t(long long n, long long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k <= 0 || k > n) return 0;
    if (k == n) return decreasing_count(p_, n);
    ensure_y(n);
    // Summed in exact rationals: only the whole sum is guaranteed integral,
    // not the individual terms. The m = k term vanishes.
    Rational sum = 0;
    for (long long m = k + 1; m <= n; ++m) {
        Nat yk = y_cell(m, k);
        if (yk == 0) continue;
        Nat num = binomial(n, m) * (m - k) * falling(p_ * (n - k), n - m) * yk;
        sum += Rational(num, Nat(n - k));
    }
    if (boost::multiprecision::denominator(sum) != 1) {
        throw NonIntegerSum("t(" + std::to_string(n) + "," + std::to_string(k) +
                            ") sum is not an integer");
    }
    return boost::multiprecision::numerator(sum);
}

std::map<long long, Nat> Counter::t_row(long long n) {
    std::map<long long, Nat> row;
    Nat sum = 0;
    for (long long k = 0; k <= n; ++k) {
        row[k] = t(n, k);
        sum += row[k];
    }
    Nat expected = n >= 1 ? falling(p_ * n, n - 1) : Nat(1);
    if (sum != expected) {
        throw NonIntegerSum("t row " + std::to_string(n) + " sums to " + sum.str() +
                            ", expected " + expected.str());
    }
    return row;
}

Nat count_y(int p, long long n, long long k) { return Counter(p).y(n, k); }
Nat count_f(int p, long long n, long long k) { return Counter(p).f(n, k); }
Nat count_t(int p, long long n, long long k) { return Counter(p).t(n, k); }

}  // namespace pmd
