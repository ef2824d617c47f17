#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "noncross/gf.hpp"
#include "noncross/partition.hpp"

using namespace noncross;

namespace {

// Independent containment oracle: try every index subset of size m.
bool contains_exhaustive(const Word& w, const Pattern& t, bool need_last = false) {
    int n = static_cast<int>(w.size());
    int m = t.length();
    if (m > n) return false;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        if (!need_last || idx[m - 1] == n - 1) {
            Word sub;
            sub.reserve(m);
            for (int i : idx) sub.push_back(w[i]);
            if (reduce(sub).word == t.word) return true;
        }
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Pattern> all_patterns_up_to(int m_max) {
    std::vector<Pattern> out;
    for (int m = 1; m <= m_max; ++m) {
        for (const auto& p : enumerate_partitions(m)) out.push_back(Pattern::from_word(p.word));
    }
    return out;
}

Word random_canonical(std::mt19937& rng, int n) {
    Word w;
    int mx = 0;
    for (int i = 0; i < n; ++i) {
        int c = std::uniform_int_distribution<int>(1, mx + 1)(rng);
        w.push_back(c);
        mx = std::max(mx, c);
    }
    return w;
}

}  // namespace

TEST_CASE("reduce renames letters by rank") {
    CHECK(reduce({1, 3, 5, 3, 5, 1}).word == Word{1, 2, 3, 2, 3, 1});
    CHECK(reduce({1, 1, 1}).word == Word{1, 1, 1});
    CHECK(reduce({4, 2, 4}).word == Word{2, 1, 2});
    CHECK_THROWS_WITH_AS(reduce({}), "empty word", std::invalid_argument);
}

TEST_CASE("reduce is idempotent and fixes canonical words") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(reduce(p.word).word == p.word);
        }
    }
    CHECK(reduce(reduce({7, 2, 7, 9}).word).word == reduce({7, 2, 7, 9}).word);
}

TEST_CASE("is_canonical") {
    CHECK(is_canonical({1, 2, 3, 1, 2, 4, 2}));
    CHECK(is_canonical({}));
    CHECK_FALSE(is_canonical({2, 1}));
    CHECK_FALSE(is_canonical({1, 1, 3}));
    CHECK(canonical_violation({2, 1}) == 1);
    CHECK(canonical_violation({1, 1, 3}) == 3);
    CHECK_THROWS_WITH_AS(SetPartition::from_word({2, 1}), "not canonical at position 1",
                         std::invalid_argument);
}

TEST_CASE("from_blocks / to_blocks") {
    auto p = from_blocks({{1, 4}, {2, 5, 7}, {3}, {6}});
    CHECK(p.word == Word{1, 2, 3, 1, 2, 4, 2});
    CHECK(from_blocks({{1}}).word == Word{1});
    CHECK(from_blocks({{2, 3}, {1}}).word == Word{1, 2, 2});

    CHECK(to_blocks(p) == std::vector<std::vector<int>>{{1, 4}, {2, 5, 7}, {3}, {6}});
    CHECK(to_blocks(SetPartition::from_word({1})) == std::vector<std::vector<int>>{{1}});
    CHECK(to_blocks(SetPartition::from_word({1, 2, 2})) ==
          std::vector<std::vector<int>>{{1}, {2, 3}});

    CHECK_THROWS_AS(from_blocks({{1, 2}, {2, 3}}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(from_blocks({{1}, {3}}), std::invalid_argument);        // gap
    CHECK_THROWS_AS(from_blocks({{1}, {}}), std::invalid_argument);         // empty block
}

TEST_CASE("blocks round-trip exhaustively up to n = 8") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(from_blocks(to_blocks(p)).word == p.word);
        }
    }
}

TEST_CASE("contains: worked examples") {
    auto p = SetPartition::from_word({1, 2, 3, 1, 2, 4, 2});
    CHECK_FALSE(contains(p, Pattern::from_word({1, 2, 3, 2, 1})));
    CHECK(contains(p, Pattern::from_word({1, 2, 1, 2})));
    CHECK(find_occurrence(p.word, Pattern::from_word({1, 2, 1, 2})) ==
          std::vector<int>{1, 2, 4, 5});
    CHECK_FALSE(contains(SetPartition::from_word({1}), Pattern::from_word({1, 1})));
}

TEST_CASE("contains agrees with the exhaustive subset oracle") {
    auto patterns = all_patterns_up_to(5);
    for (int n = 0; n <= 8; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            for (const auto& t : patterns) {
                CHECK(word_contains(p.word, t) == contains_exhaustive(p.word, t));
            }
        }
    }
}

TEST_CASE("ending-at-last matcher agrees with the pinned exhaustive oracle") {
    auto patterns = all_patterns_up_to(4);
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            for (const auto& t : patterns) {
                CHECK(word_contains_ending_at_last(p.word, t) ==
                      contains_exhaustive(p.word, t, true));
            }
        }
    }
}

TEST_CASE("containment is monotone under appending letters") {
    std::mt19937 rng(20240817);
    auto patterns = all_patterns_up_to(4);
    int found = 0;
    while (found < 200) {
        Word w = random_canonical(rng, std::uniform_int_distribution<int>(3, 9)(rng));
        const Pattern& t = patterns[std::uniform_int_distribution<size_t>(0, patterns.size() - 1)(rng)];
        if (!word_contains(w, t)) continue;
        ++found;
        int mx = *std::max_element(w.begin(), w.end());
        for (int step = 0; step < 3; ++step) {
            int c = std::uniform_int_distribution<int>(1, mx + 1)(rng);
            w.push_back(c);
            mx = std::max(mx, c);
            CHECK(word_contains(w, t));
        }
    }
}

TEST_CASE("crossing_pattern") {
    CHECK(crossing_pattern(2, 2).word == Word{1, 2, 1, 2});
    CHECK(crossing_pattern(3, 0).word == Word{1, 2, 3});
    CHECK(crossing_pattern(3, 2).word == Word{1, 2, 3, 1, 2});
    CHECK_THROWS_AS(crossing_pattern(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(crossing_pattern(3, 4), std::invalid_argument);
}

TEST_CASE("enumerate_partitions: order and counts") {
    auto three = enumerate_partitions(3);
    REQUIRE(three.size() == 5);
    CHECK(three[0].word == Word{1, 1, 1});
    CHECK(three[1].word == Word{1, 1, 2});
    CHECK(three[2].word == Word{1, 2, 1});
    CHECK(three[3].word == Word{1, 2, 2});
    CHECK(three[4].word == Word{1, 2, 3});

    auto empty = enumerate_partitions(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].word.empty());

    CHECK(enumerate_partitions(4).size() == 15);

    for (int n = 9; n <= 12; ++n) {
        BigInt count = 0;
        for_each_partition_prefix(n, [&](const Word& w, int) {
            if (static_cast<int>(w.size()) == n) ++count;
        });
        CHECK(count == bell(n));
    }
}

TEST_CASE("enumeration is lexicographically sorted") {
    for (int n : {5, 7}) {
        auto parts = enumerate_partitions(n);
        CHECK(std::is_sorted(parts.begin(), parts.end(),
                             [](const SetPartition& a, const SetPartition& b) {
                                 return a.word < b.word;
                             }));
    }
}

TEST_CASE("initial_run_length") {
    CHECK(initial_run_length(SetPartition::from_word({1, 2, 3, 1, 2, 4, 2})) == 3);
    CHECK(initial_run_length(SetPartition::from_word({1, 2, 3})) == 3);
    CHECK(initial_run_length(SetPartition::from_word({1, 1})) == 1);
    CHECK(initial_run_length(Word{}) == 0);
}

TEST_CASE("count_avoiding") {
    CHECK(count_avoiding(5, crossing_pattern(2, 2)) == 42);
    CHECK(count_avoiding(0, Pattern::from_word({1, 2, 1})) == 1);
    CHECK(count_avoiding(4, Pattern::from_word({1, 2, 2, 1})) == 14);
}

TEST_CASE("count_avoiding equals Bell below the pattern length") {
    for (int k = 2; k <= 4; ++k) {
        auto t = crossing_pattern(k, 2);
        for (int n = 0; n <= k + 1; ++n) CHECK(count_avoiding(n, t) == bell(n));
        CHECK(count_avoiding(k + 2, t) == bell(k + 2) - 1);
    }
}

TEST_CASE("count_avoiding_by_run") {
    auto by_run = count_avoiding_by_run(3, crossing_pattern(2, 2));
    REQUIRE(by_run.size() == 3);
    CHECK(by_run[1] == 2);
    CHECK(by_run[2] == 2);
    CHECK(by_run[3] == 1);

    auto empty = count_avoiding_by_run(0, crossing_pattern(2, 2));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0] == 1);

    BigInt total = 0;
    for (const auto& [run, cnt] : count_avoiding_by_run(5, crossing_pattern(2, 2))) total += cnt;
    CHECK(total == 42);
}

TEST_CASE("run table splits the avoiding counts") {
    auto t = crossing_pattern(3, 2);
    auto table = count_avoiding_run_table(8, t);
    auto totals = count_avoiding_up_to(8, t);
    for (int n = 0; n <= 8; ++n) {
        BigInt sum = 0;
        for (int r = 0; r <= n; ++r) sum += table[n][r];
        CHECK(sum == totals[n]);
    }
}

TEST_CASE("word formatting and parsing") {
    CHECK(format_word({1, 2, 3, 1, 2, 4, 2}) == "1231242");
    CHECK(parse_word("1231242") == Word{1, 2, 3, 1, 2, 4, 2});
    Word big{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 1};
    CHECK(format_word(big) == "1,2,3,4,5,6,7,8,9,10,1");
    CHECK(parse_word("1,2,3,4,5,6,7,8,9,10,1") == big);
    CHECK(parse_word(format_word(big)) == big);
    CHECK(parse_word("1,2,2") == parse_word("122"));
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("120"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1,x"), std::invalid_argument);
}
