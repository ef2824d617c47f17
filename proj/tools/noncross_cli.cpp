#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "noncross/gf.hpp"
#include "noncross/oracle.hpp"
#include "noncross/partition.hpp"

namespace {

using noncross::BigInt;

std::pair<int, int> parse_range(const std::string& text) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, pos));
        int hi = std::stoi(text.substr(pos + 2));
        if (lo > hi) throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid range \"" + text + "\" (expected A or A..B)");
    }
}

std::string join_counts(const std::vector<BigInt>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += values[i].str();
    }
    return out;
}

struct CountArgs {
    int k = 0;
    int d = -1;
    int n = 0;
    std::string method = "auto";
    std::string pattern_text;
    std::string format = "plain";
    int max_brute_n = 12;
};

void run_count(const CountArgs& args) {
    BigInt count;
    nlohmann::ordered_json j;
    j["n"] = args.n;
    if (!args.pattern_text.empty()) {
        if (args.method == "series")
            throw std::invalid_argument("no closed form; use --pattern with brute");
        noncross::Pattern pattern = noncross::Pattern::from_word(noncross::parse_word(args.pattern_text));
        noncross::BruteForceLimits limits{args.max_brute_n};
        if (args.n > limits.max_n)
            throw std::invalid_argument("n " + std::to_string(args.n) +
                                        " exceeds brute-force cap " +
                                        std::to_string(limits.max_n) + " (--max-brute-n)");
        count = noncross::count_avoiding(args.n, pattern);
        j = nlohmann::ordered_json{{"pattern", noncross::format_word(pattern.word)},
                                   {"n", args.n},
                                   {"count", count.str()}};
    } else {
        if (args.k < 2) throw std::invalid_argument("count requires --k >= 2 (or --pattern)");
        if (args.d < 0 || args.d > args.k)
            throw std::invalid_argument("count requires 0 <= d <= k");
        bool has_formula = args.d <= 2;
        bool use_series = args.method == "series" || (args.method == "auto" && has_formula);
        if (use_series && !has_formula)
            throw std::invalid_argument("no closed form; use --pattern with brute");
        if (use_series) {
            switch (args.d) {
                case 2: count = noncross::gf_k2(args.k, args.n)[args.n]; break;
                case 1: count = noncross::gf_k1(args.k, args.n)[args.n]; break;
                default: count = noncross::gf_k0(args.k, args.n); break;
            }
        } else {
            noncross::BruteForceLimits limits{args.max_brute_n};
            if (args.n > limits.max_n)
                throw std::invalid_argument("n " + std::to_string(args.n) +
                                            " exceeds brute-force cap " +
                                            std::to_string(limits.max_n) + " (--max-brute-n)");
            count = noncross::count_avoiding(args.n, noncross::crossing_pattern(args.k, args.d));
        }
        j = nlohmann::ordered_json{
            {"k", args.k}, {"d", args.d}, {"n", args.n}, {"count", count.str()}};
    }
    if (args.format == "json") {
        std::cout << j.dump() << "\n";
    } else if (args.format == "csv") {
        std::string header, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!header.empty()) {
                header += ",";
                row += ",";
            }
            header += it.key();
            row += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        std::cout << count.str() << "\n";
    }
}

struct SeriesArgs {
    std::string family;
    int k = -1;
    int ell = -1;
    int order = 0;
    std::string format = "plain";
};

void run_series(const SeriesArgs& args) {
    std::vector<BigInt> values;
    int parameter = 0;
    std::string parameter_name = "k";
    if (args.family == "k2" || args.family == "k1") {
        if (args.k < 2) throw std::invalid_argument("family " + args.family + " requires --k >= 2");
        parameter = args.k;
        values = args.family == "k2" ? noncross::gf_k2(args.k, args.order)
                                     : noncross::gf_k1(args.k, args.order);
    } else if (args.family == "k0") {
        if (args.k < 1) throw std::invalid_argument("family k0 requires --k >= 1");
        parameter = args.k;
        values = noncross::gf_k0_sequence(args.k, args.order);
    } else if (args.family == "q") {
        if (args.ell < 0) throw std::invalid_argument("family q requires --l >= 0");
        parameter = args.ell;
        parameter_name = "l";
        values = noncross::gf_q(args.ell, args.order);
    } else {
        throw std::invalid_argument("unknown family \"" + args.family + "\"");
    }
    if (args.format == "bfile") {
        for (size_t n = 0; n < values.size(); ++n) std::cout << n << " " << values[n].str() << "\n";
    } else if (args.format == "csv") {
        std::cout << "n,a_n\n";
        for (size_t n = 0; n < values.size(); ++n) std::cout << n << "," << values[n].str() << "\n";
    } else if (args.format == "json") {
        nlohmann::ordered_json j;
        j["family"] = args.family;
        j[parameter_name] = parameter;
        j["order"] = args.order;
        std::vector<std::string> strs;
        strs.reserve(values.size());
        for (const auto& v : values) strs.push_back(v.str());
        j["coefficients"] = strs;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << join_counts(values) << "\n";
    }
}

void run_table(const std::string& k_range, const std::string& n_range, const std::string& format) {
    auto [k_lo, k_hi] = parse_range(k_range);
    auto [n_lo, n_hi] = parse_range(n_range);
    if (k_lo < 2 || n_lo < 0) throw std::invalid_argument("table requires k >= 2 and n >= 0");
    std::vector<std::pair<int, std::vector<BigInt>>> rows;
    for (int k = k_lo; k <= k_hi; ++k) {
        auto all = noncross::gf_k2(k, n_hi);
        rows.emplace_back(k, std::vector<BigInt>(all.begin() + n_lo, all.end()));
    }
    if (format == "csv") {
        std::cout << "k";
        for (int n = n_lo; n <= n_hi; ++n) std::cout << "," << n;
        std::cout << "\n";
        for (const auto& [k, counts] : rows) std::cout << k << "," << join_counts(counts) << "\n";
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = nlohmann::ordered_json::array();
        for (int n = n_lo; n <= n_hi; ++n) j["n"].push_back(n);
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& [k, counts] : rows) {
            std::vector<std::string> strs;
            strs.reserve(counts.size());
            for (const auto& v : counts) strs.push_back(v.str());
            j["rows"].push_back({{"k", k}, {"counts", strs}});
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [k, counts] : rows) std::cout << join_counts(counts) << "\n";
    }
}

void run_check(const std::string& partition_text, const std::string& pattern_text) {
    noncross::Word word = noncross::parse_word(partition_text);
    if (int pos = noncross::canonical_violation(word); pos != 0)
        throw std::invalid_argument("not canonical at position " + std::to_string(pos));
    noncross::Pattern pattern = noncross::Pattern::from_word(noncross::parse_word(pattern_text));
    auto witness = noncross::find_occurrence(word, pattern);
    if (witness) {
        std::string positions;
        for (size_t i = 0; i < witness->size(); ++i) {
            if (i > 0) positions += ",";
            positions += std::to_string((*witness)[i]);
        }
        std::cout << "contains, witness " << positions << "\n";
    } else {
        std::cout << "avoids\n";
    }
}

int run_verify(const std::string& suite_name, const std::string& format, int max_brute_n,
               bool inject_table_error) {
    noncross::Suite suite = suite_name == "full" ? noncross::Suite::full : noncross::Suite::quick;
    noncross::BruteForceLimits limits{max_brute_n};
    auto reports = noncross::run_suite(suite, limits, inject_table_error);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    if (format == "json") {
        std::cout << noncross::reports_to_json(reports) << "\n";
    } else {
        int passed = 0;
        for (const auto& r : reports) {
            std::string params;
            for (const auto& [key, value] : r.params) {
                if (key == "verbal_definition_note") continue;
                params += " " + key + "=" + value;
            }
            std::printf("%s  %s%s (%.1f ms)\n", r.pass ? "pass" : "FAIL", r.name.c_str(),
                        params.c_str(), r.elapsed_ms);
            if (r.first_discrepancy) {
                std::printf("      first discrepancy at %s: expected %s, got %s\n",
                            r.first_discrepancy->index.c_str(),
                            r.first_discrepancy->expected.c_str(),
                            r.first_discrepancy->actual.c_str());
            }
            if (auto note = r.params.find("verbal_definition_note"); note != r.params.end()) {
                std::printf("      note: %s\n", note->second.c_str());
            }
            if (r.pass) ++passed;
        }
        std::printf("%d/%zu checks passed\n", passed, reports.size());
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of pattern-avoiding set partitions"};
    app.require_subcommand(1);
    int exit_code = 0;

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Count partitions of [n] avoiding 12...k12...d");
    auto* count_k = count->add_option("--k", count_args.k, "Pattern prefix length k (>= 2)");
    auto* count_d = count->add_option("--d", count_args.d, "Pattern tail length d (0 <= d <= k)");
    count->add_option("--n", count_args.n, "Size of the ground set")->required();
    count->add_option("--method", count_args.method, "series, brute or auto")
        ->check(CLI::IsMember({"series", "brute", "auto"}))
        ->capture_default_str();
    count->add_option("--pattern", count_args.pattern_text,
                      "Count avoiders of this reduced pattern instead (brute force)")
        ->excludes(count_k)
        ->excludes(count_d);
    count->add_option("--max-brute-n", count_args.max_brute_n, "Brute-force size cap")
        ->capture_default_str();
    count->add_option("--format", count_args.format, "plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    count->callback([&] { run_count(count_args); });

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "Expand a generating function to a coefficient list");
    series->add_option("--family", series_args.family, "k2, k1, k0 or q")->required();
    series->add_option("--k", series_args.k, "k parameter (families k2, k1, k0)");
    series->add_option("--l", series_args.ell, "l parameter (family q)");
    series->add_option("--order", series_args.order, "Truncation order")->required();
    series->add_option("--format", series_args.format, "plain, csv, json or bfile")
        ->check(CLI::IsMember({"plain", "csv", "json", "bfile"}))
        ->capture_default_str();
    series->callback([&] { run_series(series_args); });

    std::string table_k = "2..6";
    std::string table_n = "0..12";
    std::string table_format = "plain";
    auto* table = app.add_subcommand("table", "Print the grid of (k,2)-avoider counts");
    table->add_option("--k", table_k, "k range, e.g. 2..6")->capture_default_str();
    table->add_option("--n", table_n, "n range, e.g. 0..12")->capture_default_str();
    table->add_option("--format", table_format, "plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    table->callback([&] { run_table(table_k, table_n, table_format); });

    std::string check_partition;
    std::string check_pattern;
    auto* check = app.add_subcommand("check", "Test one partition against one pattern");
    check->add_option("partition", check_partition, "Canonical word, e.g. 1231242")->required();
    check->add_option("pattern", check_pattern, "Reduced pattern, e.g. 1212")->required();
    check->callback([&] { run_check(check_partition, check_pattern); });

    std::string verify_suite = "quick";
    std::string verify_format = "plain";
    int verify_cap = 12;
    bool inject_table_error = false;
    auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
    verify->add_option("--suite", verify_suite, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    verify->add_option("--format", verify_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();
    verify->add_option("--max-brute-n", verify_cap, "Brute-force size cap")->capture_default_str();
    verify->add_flag("--inject-table-error", inject_table_error)->group("");  // test fixture
    verify->callback([&] {
        exit_code = run_verify(verify_suite, verify_format, verify_cap, inject_table_error);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
