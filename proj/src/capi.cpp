#include "pmdtree.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "pmd/count.hpp"
#include "pmd/errors.hpp"
#include "pmd/sample.hpp"
#include "pmd/tree.hpp"
#include "pmd/verify.hpp"

struct pmd_counter {
    pmd::Counter impl;
};

struct pmd_tree {
    pmd::PAryTree impl;
};

struct pmd_report {
    pmd::SampleReport impl;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pmd_status fail(pmd_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Runs `fn`, translating the library's exceptions to status codes.
template <typename Fn>
pmd_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const pmd::ParseError& e) {
        return fail(PMD_EPARSE, e.what());
    } catch (const pmd::BudgetExceeded& e) {
        return fail(PMD_EBUDGET, e.what());
    } catch (const pmd::EmptyTree& e) {
        return fail(PMD_EEMPTY, e.what());
    } catch (const pmd::AttachmentMismatch& e) {
        return fail(PMD_EATTACH, e.what());
    } catch (const pmd::InvalidArity& e) {
        return fail(PMD_EINVAL, e.what());
    } catch (const pmd::NegativeBase& e) {
        return fail(PMD_EINVAL, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PMD_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(PMD_EINTERNAL, e.what());
    }
}

pmd::Nat family_count(pmd::Counter& c, char family, long long n, long long k) {
    switch (family) {
        case 'y':
            return c.y(n, k);
        case 'f':
            return c.f(n, k);
        case 't':
            return c.t(n, k);
        default:
            throw std::invalid_argument(std::string("unknown family '") + family +
                                        "', expected y, f or t");
    }
}

}  // namespace

extern "C" {

const char* pmd_last_error(void) { return g_last_error.c_str(); }

void pmd_string_free(char* s) { std::free(s); }

pmd_status pmd_counter_create(int p, pmd_counter** out) {
    return guarded([&] {
        *out = new pmd_counter{pmd::Counter(p)};
        return PMD_OK;
    });
}

void pmd_counter_destroy(pmd_counter* c) { delete c; }

pmd_status pmd_counter_count(pmd_counter* c, char family, long long n, long long k, char** out) {
    if (!c || !out) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        *out = dup_string(family_count(c->impl, family, n, k).str());
        return PMD_OK;
    });
}

pmd_status pmd_counter_row_sum(pmd_counter* c, char family, long long n, char** out) {
    if (!c || !out) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        pmd::Nat sum = 0;
        if (family == 't') {
            for (auto& [k, v] : c->impl.t_row(n)) sum += v;
        } else {
            for (long long k = 0; k <= n; ++k) sum += family_count(c->impl, family, n, k);
        }
        *out = dup_string(sum.str());
        return PMD_OK;
    });
}

pmd_status pmd_total_trees(int p, long long n, char** out) {
    if (!out) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        if (p < 2) throw pmd::InvalidArity("p must be >= 2");
        *out = dup_string(n >= 1 ? pmd::falling(p * n, n - 1).str() : std::string("1"));
        return PMD_OK;
    });
}

pmd_status pmd_tree_parse(const char* text, pmd_tree** out) {
    if (!text || !out) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        *out = new pmd_tree{pmd::canonical_decode(text)};
        return PMD_OK;
    });
}

void pmd_tree_destroy(pmd_tree* t) { delete t; }

pmd_status pmd_tree_encode(const pmd_tree* t, char** out) {
    if (!t || !out) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        *out = dup_string(pmd::canonical_encode(t->impl));
        return PMD_OK;
    });
}

pmd_status pmd_tree_arity(const pmd_tree* t, int* out) {
    if (!t || !out) return fail(PMD_EINVAL, "null argument");
    *out = t->impl.arity;
    return PMD_OK;
}

pmd_status pmd_tree_size(const pmd_tree* t, long long* out) {
    if (!t || !out) return fail(PMD_EINVAL, "null argument");
    *out = static_cast<long long>(t->impl.size());
    return PMD_OK;
}

pmd_status pmd_tree_validate(const pmd_tree* t, int* valid, char** diagnostics) {
    if (!t || !valid) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        std::vector<std::string> diag;
        *valid = pmd::validate(t->impl, &diag) ? 1 : 0;
        if (diagnostics) {
            if (diag.empty()) {
                *diagnostics = nullptr;
            } else {
                std::string joined;
                for (const auto& d : diag) {
                    if (!joined.empty()) joined += '\n';
                    joined += d;
                }
                *diagnostics = dup_string(joined);
            }
        }
        return PMD_OK;
    });
}

pmd_status pmd_tree_md_size(const pmd_tree* t, long long* out) {
    if (!t || !out) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        *out = pmd::md_size(t->impl);
        return PMD_OK;
    });
}

pmd_status pmd_tree_md_subtree(const pmd_tree* t, pmd_tree** out) {
    if (!t || !out) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        *out = new pmd_tree{pmd::md_subtree(t->impl)};
        return PMD_OK;
    });
}

pmd_status pmd_verify(int p, long long n_lo, long long n_hi, uint64_t budget, pmd_verify_cb cb,
                      void* user) {
    return guarded([&] {
        pmd::EnumerationBudget b;
        if (budget > 0) b.max_trees = budget;
        bool ok = pmd::verify_range(p, n_lo, n_hi, b,
                                    [&](char family, long long n, long long k, bool cell_ok) {
                                        if (cb) cb(family, n, k, cell_ok ? 1 : 0, user);
                                    });
        if (!ok) return fail(PMD_EMISMATCH, "formula and enumeration disagree");
        return PMD_OK;
    });
}

pmd_status pmd_sample_tree(int p, long long n, uint64_t seed, pmd_tree** out) {
    if (!out) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        *out = new pmd_tree{pmd::sample_tree(p, n, seed)};
        return PMD_OK;
    });
}

pmd_status pmd_sample_md(int p, long long n, long long trials, uint64_t seed, pmd_report** out) {
    if (!out) return fail(PMD_EINVAL, "null argument");
    return guarded([&] {
        *out = new pmd_report{pmd::sample_md_distribution(p, n, trials, seed)};
        return PMD_OK;
    });
}

void pmd_report_destroy(pmd_report* r) { delete r; }

pmd_status pmd_report_trials(const pmd_report* r, long long* out) {
    if (!r || !out) return fail(PMD_EINVAL, "null argument");
    *out = r->impl.trials;
    return PMD_OK;
}

pmd_status pmd_report_observed(const pmd_report* r, long long k, long long* out) {
    if (!r || !out) return fail(PMD_EINVAL, "null argument");
    auto it = r->impl.observed.find(k);
    if (it == r->impl.observed.end()) return fail(PMD_EINVAL, "k out of range");
    *out = it->second;
    return PMD_OK;
}

pmd_status pmd_report_expected(const pmd_report* r, long long k, char** out) {
    if (!r || !out) return fail(PMD_EINVAL, "null argument");
    auto it = r->impl.t_counts.find(k);
    if (it == r->impl.t_counts.end()) return fail(PMD_EINVAL, "k out of range");
    // rendered unreduced, "t(n,k)/(pn)_(n-1)"
    *out = dup_string(it->second.str() + "/" + r->impl.total.str());
    return PMD_OK;
}

pmd_status pmd_report_chi_square(const pmd_report* r, double* out) {
    if (!r || !out) return fail(PMD_EINVAL, "null argument");
    *out = r->impl.chi_square;
    return PMD_OK;
}

pmd_status pmd_chi_square_critical(double df, double alpha, double* out) {
    if (!out || df <= 0.0 || alpha <= 0.0 || alpha >= 1.0) {
        return fail(PMD_EINVAL, "bad chi-square arguments");
    }
    *out = pmd::chi_square_critical(df, alpha);
    return PMD_OK;
}

}  // extern "C"
