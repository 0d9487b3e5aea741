// Command-line front end. Everything goes through the C API in pmdtree.h;
// the CLI itself does no counting.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmdtree.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitError = 4;

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { pmd_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

[[noreturn]] void die(const std::string& msg, int code = kExitError) {
    std::cerr << "pmdtree: " << msg << "\n";
    std::exit(code);
}

void check(pmd_status st) {
    if (st == PMD_OK) return;
    int code = st == PMD_EBUDGET ? kExitBudget : (st == PMD_EINVAL ? kExitUsage : kExitError);
    die(pmd_last_error(), code);
}

bool parse_range(const std::string& text, long long& lo, long long& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, dots));
            hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 0 && lo <= hi;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) die("cannot open output file " + path);
    return file;
}

std::string cell(pmd_counter* counter, char family, long long n, long long k) {
    StringGuard s;
    check(pmd_counter_count(counter, family, n, k, &s.s));
    return s.str();
}

uint64_t budget_from_env(uint64_t flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PARY_MD_BUDGET")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;  // library default
}

int cmd_table(char family, int p, long long n_lo, long long n_hi, const std::string& format,
              const std::string& out_path) {
    pmd_counter* counter = nullptr;
    check(pmd_counter_create(p, &counter));
    std::unique_ptr<pmd_counter, void (*)(pmd_counter*)> guard(counter, pmd_counter_destroy);

    const bool with_sum = family == 't';
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> sums;
    for (long long n = n_lo; n <= n_hi; ++n) {
        std::vector<std::string> row;
        for (long long k = 0; k <= n; ++k) row.push_back(cell(counter, family, n, k));
        rows.push_back(std::move(row));
        if (with_sum) {
            StringGuard s;
            check(pmd_counter_row_sum(counter, family, n, &s.s));
            sums.push_back(s.str());
        }
    }

    if (format == "csv") {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << n_lo + static_cast<long long>(i);
            for (const auto& v : rows[i]) out << ',' << v;
            if (with_sum) out << ',' << sums[i];
            out << '\n';
        }
    } else if (format == "json") {
        ordered_json doc;
        doc["family"] = std::string(1, family);
        doc["p"] = p;
        doc["rows"] = ordered_json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            ordered_json row;
            row["n"] = n_lo + static_cast<long long>(i);
            row["counts"] = rows[i];  // decimal strings; values outgrow 64 bits
            if (with_sum) row["row_sum"] = sums[i];
            doc["rows"].push_back(std::move(row));
        }
        out << doc.dump(2) << '\n';
    } else {
        // text: triangular layout, blank above the diagonal
        std::size_t width = 1;
        for (const auto& row : rows) {
            for (const auto& v : row) width = std::max(width, v.size());
        }
        for (const auto& s : sums) width = std::max(width, s.size());
        auto pad = [&](const std::string& s) {
            return std::string(width + 1 - s.size(), ' ') + s;
        };
        out << "n\\k";
        for (long long k = 0; k <= n_hi; ++k) out << pad(std::to_string(k));
        if (with_sum) out << pad("n!C_n");
        out << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            long long n = n_lo + static_cast<long long>(i);
            out << std::string(3 - std::min<std::size_t>(3, std::to_string(n).size()), ' ')
                << n;
            for (const auto& v : rows[i]) out << pad(v);
            if (with_sum) {
                for (long long k = n + 1; k <= n_hi; ++k) out << std::string(width + 1, ' ');
                out << pad(sums[i]);
            }
            out << '\n';
        }
    }
    return 0;
}

int cmd_count(char family, int p, long long n, long long k) {
    pmd_counter* counter = nullptr;
    check(pmd_counter_create(p, &counter));
    std::unique_ptr<pmd_counter, void (*)(pmd_counter*)> guard(counter, pmd_counter_destroy);
    std::cout << cell(counter, family, n, k) << '\n';
    return 0;
}

int cmd_verify(int p, long long n_lo, long long n_hi, uint64_t budget) {
    auto cb = [](char family, long long n, long long k, int ok, void*) {
        std::printf("%s %c(%lld,%lld)\n", ok ? "PASS" : "FAIL", family, n, k);
    };
    pmd_status st = pmd_verify(p, n_lo, n_hi, budget, cb, nullptr);
    if (st == PMD_OK) {
        std::printf("all checks passed\n");
        return 0;
    }
    if (st == PMD_EMISMATCH) {
        std::printf("MISMATCH: %s\n", pmd_last_error());
        return kExitMismatch;
    }
    if (st == PMD_EBUDGET) {
        std::fprintf(stderr, "pmdtree: %s\n", pmd_last_error());
        return kExitBudget;
    }
    die(pmd_last_error());
}

int cmd_sample(int p, long long n, long long trials, uint64_t seed, const std::string& format,
               const std::string& out_path) {
    pmd_report* report = nullptr;
    check(pmd_sample_md(p, n, trials, seed, &report));
    std::unique_ptr<pmd_report, void (*)(pmd_report*)> guard(report, pmd_report_destroy);

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);

    double chi = 0.0;
    check(pmd_report_chi_square(report, &chi));
    char chi_text[64];
    std::snprintf(chi_text, sizeof chi_text, "%.6f", chi);

    if (format == "json") {
        ordered_json doc;
        doc["p"] = p;
        doc["n"] = n;
        doc["trials"] = trials;
        doc["seed"] = seed;
        ordered_json observed, expected;
        for (long long k = 1; k <= n; ++k) {
            long long obs = 0;
            StringGuard exp;
            check(pmd_report_observed(report, k, &obs));
            check(pmd_report_expected(report, k, &exp.s));
            observed[std::to_string(k)] = obs;
            expected[std::to_string(k)] = exp.str();
        }
        doc["observed"] = std::move(observed);
        doc["expected"] = std::move(expected);
        doc["chi_square"] = std::stod(chi_text);
        out << doc.dump(2) << '\n';
    } else if (format == "csv") {
        out << "k,observed,expected\n";
        for (long long k = 1; k <= n; ++k) {
            long long obs = 0;
            StringGuard exp;
            check(pmd_report_observed(report, k, &obs));
            check(pmd_report_expected(report, k, &exp.s));
            out << k << ',' << obs << ',' << exp.str() << '\n';
        }
        out << "chi_square," << chi_text << ",\n";
    } else {
        out << "p=" << p << " n=" << n << " trials=" << trials << " seed=" << seed << '\n';
        for (long long k = 1; k <= n; ++k) {
            long long obs = 0;
            StringGuard exp;
            check(pmd_report_observed(report, k, &obs));
            check(pmd_report_expected(report, k, &exp.s));
            out << "k=" << k << " observed=" << obs << " expected=" << exp.str() << '\n';
        }
        out << "chi_square=" << chi_text << '\n';
    }
    return 0;
}

int cmd_encode(const std::string& tree_arg) {
    std::string text = tree_arg;
    if (text.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    }
    pmd_tree* tree = nullptr;
    pmd_status st = pmd_tree_parse(text.c_str(), &tree);
    if (st != PMD_OK) die(pmd_last_error(), st == PMD_EPARSE ? kExitUsage : kExitError);
    std::unique_ptr<pmd_tree, void (*)(pmd_tree*)> guard(tree, pmd_tree_destroy);

    StringGuard canonical;
    check(pmd_tree_encode(tree, &canonical.s));
    int arity = 0;
    long long size = 0, md = 0;
    check(pmd_tree_arity(tree, &arity));
    check(pmd_tree_size(tree, &size));
    check(pmd_tree_md_size(tree, &md));
    pmd_tree* md_tree = nullptr;
    check(pmd_tree_md_subtree(tree, &md_tree));
    std::unique_ptr<pmd_tree, void (*)(pmd_tree*)> md_guard(md_tree, pmd_tree_destroy);
    StringGuard md_text;
    check(pmd_tree_encode(md_tree, &md_text.s));

    std::cout << "tree: " << canonical.str() << '\n'
              << "arity: " << arity << '\n'
              << "vertices: " << size << '\n'
              << "md_size: " << md << '\n'
              << "md_subtree: " << md_text.str() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of p-ary labeled trees by maximal decreasing subtree size"};
    app.require_subcommand(1);

    std::string family = "t", range = "0..8", format = "text", out_path, tree_text;
    int p = 2;
    long long k = 0, n_single = 0, trials = 1;
    uint64_t seed = 0, budget = 0;

    auto add_common = [&](CLI::App* cmd, bool with_family) {
        cmd->add_option("--p", p, "arity (>= 2)")->check(CLI::Range(2, 64));
        if (with_family) {
            cmd->add_option("--family", family, "count family: y, f or t")
                ->check(CLI::IsMember({"y", "f", "t"}));
        }
    };

    auto* table = app.add_subcommand("table", "print the triangle of a count family");
    add_common(table, true);
    table->add_option("--n", range, "row range, e.g. 0..10 or 5");
    table->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--output", out_path, "write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "formula vs. brute-force enumeration");
    add_common(verify, false);
    verify->add_option("--n", range, "row range, e.g. 0..6");
    verify->add_option("--budget", budget, "cap on generated objects (default 1e8)");

    auto* sample = app.add_subcommand("sample", "uniform random trees, MD-size distribution");
    add_common(sample, false);
    sample->add_option("--n", n_single, "number of vertices")->required();
    sample->add_option("--trials", trials, "number of draws")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    sample->add_option("--output", out_path);

    auto* count = app.add_subcommand("count", "print one exact count");
    add_common(count, true);
    count->add_option("--n", n_single)->required();
    count->add_option("--k", k)->required();

    auto* encode = app.add_subcommand("encode", "parse a canonical tree, report its MD subtree");
    encode->add_option("tree", tree_text, "canonical tree text (reads stdin when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    long long n_lo = 0, n_hi = 0;
    if ((table->parsed() || verify->parsed()) && !parse_range(range, n_lo, n_hi)) {
        std::cerr << "pmdtree: bad --n range '" << range << "'\n";
        return kExitUsage;
    }

    if (table->parsed()) return cmd_table(family[0], p, n_lo, n_hi, format, out_path);
    if (verify->parsed()) return cmd_verify(p, n_lo, n_hi, budget_from_env(budget));
    if (sample->parsed()) return cmd_sample(p, n_single, trials, seed, format, out_path);
    if (count->parsed()) return cmd_count(family[0], p, n_single, k);
    if (encode->parsed()) return cmd_encode(tree_text);
    return kExitUsage;
}
