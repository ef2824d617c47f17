#include <doctest.h>

#include <json.hpp>

#include "noncross/gf.hpp"
#include "noncross/oracle.hpp"

using namespace noncross;

TEST_CASE("bruteforce_series") {
    CHECK(bruteforce_series(2, 2, 5) == std::vector<BigInt>{1, 1, 2, 5, 14, 42});
    CHECK(bruteforce_series(3, 1, 3) == std::vector<BigInt>{1, 1, 2, 5});
    CHECK(bruteforce_series(4, 0, 0) == std::vector<BigInt>{1});
}

TEST_CASE("brute-force cap is enforced and names the flag") {
    CHECK_THROWS_WITH_AS(bruteforce_series(2, 2, 15),
                         "n_max 15 exceeds brute-force cap 12 (--max-brute-n)",
                         std::invalid_argument);
    BruteForceLimits wide{13};
    CHECK_NOTHROW(bruteforce_run_series(2, 0, 13, wide));
}

TEST_CASE("bruteforce_run_series") {
    auto run0 = bruteforce_run_series(2, 0, 6);
    CHECK(run0 == std::vector<BigInt>{1, 0, 0, 0, 0, 0, 0});
    auto run3 = bruteforce_run_series(2, 3, 3);
    CHECK(run3 == std::vector<BigInt>{0, 0, 0, 1});

    for (int k : {2, 4}) {
        auto totals = bruteforce_series(k, 2, 7);
        std::vector<BigInt> sums(8, 0);
        for (int ell = 0; ell <= 7; ++ell) {
            auto part = bruteforce_run_series(k, ell, 7);
            for (int n = 0; n <= 7; ++n) sums[n] += part[n];
        }
        CHECK(sums == totals);
    }
}

TEST_CASE("check_table1") {
    auto report = check_table1();
    CHECK(report.pass);
    CHECK(report.params.at("cells") == "65");
    CHECK_FALSE(report.first_discrepancy.has_value());

    CHECK(reference_table1()[3][11] == 608996);
    CHECK(reference_table1()[1][6] == 188);
}

TEST_CASE("check_table1 flags an injected wrong value") {
    auto table = reference_table1();
    table[2][9] += 1;
    auto report = check_table1_against(table);
    CHECK_FALSE(report.pass);
    REQUIRE(report.first_discrepancy.has_value());
    CHECK(report.first_discrepancy->index == "k=4,n=9");
    CHECK(report.first_discrepancy->expected == "18314");
    CHECK(report.first_discrepancy->actual == "18313");
}

TEST_CASE("check_series_vs_bruteforce") {
    CHECK(check_series_vs_bruteforce(3, 2, 8).pass);
    CHECK(check_series_vs_bruteforce(3, 1, 8).pass);
    CHECK(check_series_vs_bruteforce(5, 0, 8).pass);
    CHECK_THROWS_AS(check_series_vs_bruteforce(3, 3, 8), std::invalid_argument);
}

TEST_CASE("check_lemma1") {
    CHECK(check_lemma1(2, 1, 9).pass);
    CHECK(check_lemma1(4, 3, 9).pass);
    CHECK_THROWS_AS(check_lemma1(3, 3, 9), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma1(3, 0, 9), std::invalid_argument);
}

TEST_CASE("check_lemma3") {
    CHECK(check_lemma3(3, 0, 9).pass);
    CHECK(check_lemma3(3, 1, 9).pass);
    CHECK(check_lemma3(4, 2, 10).pass);
}

TEST_CASE("check_determinant_identity") {
    auto one_by_one = check_determinant_identity(2, 2);
    CHECK(one_by_one.pass);
    CHECK(check_determinant_identity(1, 2).pass);
    CHECK(check_determinant_identity(2, 4).pass);
    CHECK_THROWS_AS(check_determinant_identity(3, 2), std::invalid_argument);
}

TEST_CASE("check_functional_equation") {
    std::vector<BigRational> samples{BigRational(1, 2), BigRational(1, 3), 2, 3, -1, 5};
    CHECK(check_functional_equation(3, 8, samples).pass);
    CHECK(check_functional_equation(2, 8, samples).pass);
    CHECK(check_functional_equation(4, 8, default_y_samples(16)).pass);

    std::vector<BigRational> with_one{BigRational(1, 2), 1, 2, 3, -1, 5};
    CHECK_THROWS_WITH_AS(check_functional_equation(3, 8, with_one), "invalid sample set",
                         std::invalid_argument);
    std::vector<BigRational> too_few{2, 3};
    CHECK_THROWS_WITH_AS(check_functional_equation(3, 8, too_few), "invalid sample set",
                         std::invalid_argument);
    std::vector<BigRational> repeated{2, 2, 3, -1, 5, 7};
    CHECK_THROWS_WITH_AS(check_functional_equation(3, 8, repeated), "invalid sample set",
                         std::invalid_argument);
}

TEST_CASE("default_y_samples") {
    auto samples = default_y_samples(20);
    CHECK(samples.size() == 20);
    for (const auto& y : samples) CHECK(y != 1);
    std::set<BigRational> uniq(samples.begin(), samples.end());
    CHECK(uniq.size() == samples.size());
}

TEST_CASE("check_q_identity") {
    auto l0 = check_q_identity(0, 8);
    CHECK(l0.pass);
    CHECK(l0.params.count("verbal_definition_note") == 0);

    auto l1 = check_q_identity(1, 8);
    CHECK(l1.pass);
    REQUIRE(l1.params.count("verbal_definition_note") == 1);
    CHECK(l1.params.at("verbal_definition_note").find("n=3") != std::string::npos);
    CHECK(l1.params.at("verbal_definition_note").find("formula=1") != std::string::npos);
    CHECK(l1.params.at("verbal_definition_note").find("enumeration=2") != std::string::npos);

    CHECK(check_q_identity(2, 8).pass);
}

TEST_CASE("report JSON shape") {
    auto report = check_table1();
    auto j = nlohmann::json::parse(report.to_json());
    CHECK(j["name"] == "table1");
    CHECK(j["status"] == "pass");
    CHECK(j["first_discrepancy"].is_null());
    CHECK(j["elapsed_ms"].is_number());
    CHECK(j["params"].is_object());

    auto table = reference_table1();
    table[0][3] += 2;
    auto bad = nlohmann::json::parse(check_table1_against(table).to_json());
    CHECK(bad["status"] == "fail");
    CHECK(bad["first_discrepancy"]["index"] == "k=2,n=3");
    CHECK(bad["first_discrepancy"]["expected"] == "7");
    CHECK(bad["first_discrepancy"]["actual"] == "5");

    auto arr = nlohmann::json::parse(reports_to_json({report, report}));
    CHECK(arr.is_array());
    CHECK(arr.size() == 2);
}

TEST_CASE("quick suite passes") {
    auto reports = run_suite(Suite::quick);
    CHECK(reports.size() == 7);
    for (const auto& r : reports) CHECK(r.pass);
}

TEST_CASE("full suite passes") {
    for (const auto& r : run_suite(Suite::full)) {
        INFO(r.name, " ", r.to_json());
        CHECK(r.pass);
    }
}

TEST_CASE("suite with injected table error fails") {
    auto reports = run_suite(Suite::quick, BruteForceLimits{}, true);
    CHECK_FALSE(reports.front().pass);
    REQUIRE(reports.front().first_discrepancy.has_value());
}
