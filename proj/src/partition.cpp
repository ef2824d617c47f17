#include "noncross/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace noncross {

int canonical_violation(const Word& w) {
    int mx = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1 || w[i] > mx + 1) return static_cast<int>(i) + 1;
        mx = std::max(mx, w[i]);
    }
    return 0;
}

bool is_canonical(const Word& w) { return canonical_violation(w) == 0; }

SetPartition SetPartition::from_word(const Word& w) {
    if (int pos = canonical_violation(w); pos != 0) {
        throw std::invalid_argument("not canonical at position " + std::to_string(pos));
    }
    return SetPartition{w};
}

Pattern Pattern::from_word(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    if (!is_canonical(w)) throw std::invalid_argument("pattern not in reduced form");
    return Pattern{w, *std::max_element(w.begin(), w.end())};
}

Pattern reduce(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    std::vector<int> distinct(w);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), letter);
        out.push_back(static_cast<int>(it - distinct.begin()) + 1);
    }
    return Pattern{out, static_cast<int>(distinct.size())};
}

SetPartition from_blocks(const std::vector<std::vector<int>>& blocks) {
    size_t n = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("not a partition of [n]: empty block");
        n += b.size();
    }
    Word word(n, 0);
    std::vector<std::pair<int, const std::vector<int>*>> by_min;
    by_min.reserve(blocks.size());
    for (const auto& b : blocks) by_min.emplace_back(*std::min_element(b.begin(), b.end()), &b);
    std::sort(by_min.begin(), by_min.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t bi = 0; bi < by_min.size(); ++bi) {
        for (int e : *by_min[bi].second) {
            if (e < 1 || e > static_cast<int>(n) || word[e - 1] != 0)
                throw std::invalid_argument("not a partition of [n]");
            word[e - 1] = static_cast<int>(bi) + 1;
        }
    }
    return SetPartition{word};
}

std::vector<std::vector<int>> to_blocks(const SetPartition& p) {
    int d = p.word.empty() ? 0 : *std::max_element(p.word.begin(), p.word.end());
    std::vector<std::vector<int>> blocks(d);
    for (size_t i = 0; i < p.word.size(); ++i) blocks[p.word[i] - 1].push_back(static_cast<int>(i) + 1);
    return blocks;
}

namespace {

// Backtracking embedding search. Pattern classes receive word values as they
// are first matched; cls_val[c] = 0 means class c is unassigned. With
// pin_last the final pattern position is forced onto the last letter of w,
// and that class's value is pre-assigned accordingly.
struct Matcher {
    const Word& w;
    const Word& t;
    int alphabet;
    bool pin_last;
    std::vector<int> cls_val;
    std::vector<int> chosen;

    Matcher(const Word& w_, const Pattern& t_, bool pin)
        : w(w_), t(t_.word), alphabet(t_.alphabet), pin_last(pin),
          cls_val(t_.alphabet + 1, 0), chosen(t_.word.size(), -1) {}

    bool consistent(int c, int v) const {
        for (int c2 = 1; c2 <= alphabet; ++c2) {
            int v2 = cls_val[c2];
            if (v2 == 0) continue;
            if (c2 < c && v2 >= v) return false;
            if (c2 > c && v2 <= v) return false;
        }
        return true;
    }

    bool search(int tp, int from) {
        int m = static_cast<int>(t.size());
        int n = static_cast<int>(w.size());
        if (tp == m) return true;
        int hi = n - (m - tp);  // leave room for the remaining pattern letters
        int lo = from;
        if (pin_last && tp == m - 1) lo = std::max(lo, n - 1);
        int c = t[tp];
        for (int q = lo; q <= hi; ++q) {
            int v = w[q];
            if (cls_val[c] != 0) {
                if (v != cls_val[c]) continue;
                chosen[tp] = q;
                if (search(tp + 1, q + 1)) return true;
            } else {
                if (!consistent(c, v)) continue;
                cls_val[c] = v;
                chosen[tp] = q;
                if (search(tp + 1, q + 1)) return true;
                cls_val[c] = 0;
            }
        }
        return false;
    }

    bool run() {
        int m = static_cast<int>(t.size());
        int n = static_cast<int>(w.size());
        if (m > n) return false;
        if (pin_last) {
            int c = t[m - 1];
            int v = w[n - 1];
            if (!consistent(c, v)) return false;
            cls_val[c] = v;
        }
        return search(0, 0);
    }
};

}  // namespace

bool word_contains(const Word& w, const Pattern& t) {
    Matcher m(w, t, false);
    return m.run();
}

bool contains(const SetPartition& p, const Pattern& t) { return word_contains(p.word, t); }

std::optional<std::vector<int>> find_occurrence(const Word& w, const Pattern& t) {
    Matcher m(w, t, false);
    if (!m.run()) return std::nullopt;
    std::vector<int> witness;
    witness.reserve(m.chosen.size());
    for (int q : m.chosen) witness.push_back(q + 1);
    return witness;
}

bool word_contains_ending_at_last(const Word& w, const Pattern& t) {
    Matcher m(w, t, true);
    return m.run();
}

Pattern crossing_pattern(int k, int d) {
    if (k < 2 || d < 0 || d > k)
        throw std::invalid_argument("invalid (k,d): k=" + std::to_string(k) +
                                    ", d=" + std::to_string(d));
    Word w;
    w.reserve(k + d);
    for (int i = 1; i <= k; ++i) w.push_back(i);
    for (int i = 1; i <= d; ++i) w.push_back(i);
    return Pattern{w, k};
}

int initial_run_length(const Word& w) {
    int m = 0;
    while (m < static_cast<int>(w.size()) && w[m] == m + 1) ++m;
    return m;
}

int initial_run_length(const SetPartition& p) { return initial_run_length(p.word); }

namespace {

// Depth-first walk over canonical words in lexicographic order. With a
// pattern, subtrees rooted at a containing prefix are pruned; every visited
// word avoids the pattern.
template <typename Visit>
void walk(int n_max, const Pattern* t, Visit&& visit) {
    if (n_max < 0) throw std::invalid_argument("negative length");
    Word w;
    w.reserve(n_max);
    auto rec = [&](auto&& self, int mx, int run) -> void {
        visit(static_cast<const Word&>(w), run);
        int len = static_cast<int>(w.size());
        if (len == n_max) return;
        for (int c = 1; c <= mx + 1; ++c) {
            w.push_back(c);
            if (!t || !word_contains_ending_at_last(w, *t)) {
                int nrun = (run == len && c == len + 1) ? len + 1 : run;
                self(self, std::max(mx, c), nrun);
            }
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(int n) {
    std::vector<SetPartition> out;
    walk(n, nullptr, [&](const Word& w, int) {
        if (static_cast<int>(w.size()) == n) out.push_back(SetPartition{w});
    });
    return out;
}

void for_each_partition_prefix(int n_max,
                               const std::function<void(const Word&, int)>& visit) {
    walk(n_max, nullptr, visit);
}

std::vector<BigInt> count_avoiding_up_to(int n_max, const Pattern& t) {
    std::vector<BigInt> counts(n_max + 1, 0);
    walk(n_max, &t, [&](const Word& w, int) { ++counts[w.size()]; });
    return counts;
}

BigInt count_avoiding(int n, const Pattern& t) { return count_avoiding_up_to(n, t).back(); }

std::vector<std::vector<BigInt>> count_avoiding_run_table(int n_max, const Pattern& t) {
    std::vector<std::vector<BigInt>> table(n_max + 1);
    for (int m = 0; m <= n_max; ++m) table[m].assign(m + 1, 0);
    walk(n_max, &t, [&](const Word& w, int run) { ++table[w.size()][run]; });
    return table;
}

std::vector<std::vector<BigInt>> run_length_table(int n_max) {
    std::vector<std::vector<BigInt>> table(n_max + 1);
    for (int m = 0; m <= n_max; ++m) table[m].assign(m + 1, 0);
    walk(n_max, nullptr, [&](const Word& w, int run) { ++table[w.size()][run]; });
    return table;
}

std::map<int, BigInt> count_avoiding_by_run(int n, const Pattern& t) {
    auto table = count_avoiding_run_table(n, t);
    std::map<int, BigInt> by_run;
    for (int r = 0; r <= n; ++r) {
        if (table[n][r] != 0) by_run[r] = table[n][r];
    }
    return by_run;
}

std::string format_word(const Word& w) {
    bool small = std::all_of(w.begin(), w.end(), [](int c) { return c <= 9; });
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!small && i > 0) out << ',';
        out << w[i];
    }
    return out.str();
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            std::istringstream ts(token);
            int v;
            if (!(ts >> v) || v < 1) throw std::invalid_argument("invalid word: \"" + text + "\"");
            w.push_back(v);
        }
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
                throw std::invalid_argument("invalid word: \"" + text + "\"");
            w.push_back(ch - '0');
        }
    }
    return w;
}

}  // namespace noncross
