#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noncross/numeric.hpp"

namespace noncross {

// A word over positive integers. Set partitions of [n] are identified with
// their canonical sequential form (restricted growth string): letter i is the
// index of the block containing i, blocks ordered by increasing minima.
using Word = std::vector<int>;

// Forbidden pattern: a word in reduced form (its letters are exactly 1..d'
// and it is itself a restricted growth string).
struct Pattern {
    Word word;
    int alphabet = 0;  // number of distinct letters

    static Pattern from_word(const Word& w);  // throws if not reduced
    int length() const { return static_cast<int>(word.size()); }
};

struct SetPartition {
    Word word;

    static SetPartition from_word(const Word& w);  // throws if not canonical
    int size() const { return static_cast<int>(word.size()); }
};

// 1-based index of the first letter violating the canonical-form invariants,
// or 0 if the word is a valid restricted growth string.
int canonical_violation(const Word& w);
bool is_canonical(const Word& w);

// Rename letters by rank among the distinct letters present. Idempotent.
Pattern reduce(const Word& w);  // throws "empty word" on empty input

SetPartition from_blocks(const std::vector<std::vector<int>>& blocks);
std::vector<std::vector<int>> to_blocks(const SetPartition& p);

// Pattern containment: some subsequence of p.word reduces to t.word.
bool contains(const SetPartition& p, const Pattern& t);
bool word_contains(const Word& w, const Pattern& t);
// 1-based witness positions of one occurrence, or nullopt if avoiding.
std::optional<std::vector<int>> find_occurrence(const Word& w, const Pattern& t);
// True iff an occurrence exists that uses the last letter of w. For a word
// whose proper prefix avoids t this decides containment of the whole word.
bool word_contains_ending_at_last(const Word& w, const Pattern& t);

// The pattern 12...k12...d.
Pattern crossing_pattern(int k, int d);  // throws "invalid (k,d)"

// All canonical words of length n in lexicographic order (Bell(n) of them).
std::vector<SetPartition> enumerate_partitions(int n);
// Streaming variant: visits every canonical word of length <= n_max (the
// empty word included), lexicographically, passing the initial run length.
void for_each_partition_prefix(int n_max,
                               const std::function<void(const Word&, int run)>& visit);

// Largest m with word[i] = i+1 for all i < m.
int initial_run_length(const SetPartition& p);
int initial_run_length(const Word& w);

// Counting with subtree pruning: a prefix containing t is never extended.
BigInt count_avoiding(int n, const Pattern& t);
std::map<int, BigInt> count_avoiding_by_run(int n, const Pattern& t);
// counts[m] = number of avoiding words of length m, for m = 0..n_max.
std::vector<BigInt> count_avoiding_up_to(int n_max, const Pattern& t);
// table[m][r] = number of avoiding words of length m with run length r.
std::vector<std::vector<BigInt>> count_avoiding_run_table(int n_max, const Pattern& t);
// Unrestricted variant (no pattern): all partitions, split by run length.
std::vector<std::vector<BigInt>> run_length_table(int n_max);

// Text form: letters concatenated when all are <= 9, comma-separated
// otherwise. The parser accepts both.
std::string format_word(const Word& w);
Word parse_word(const std::string& text);

}  // namespace noncross
