#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idc/seqmetrics.hpp"

namespace idc {

// The 8 elements of the subspace spanned by three independent words.
std::array<Word, 8> subspace_strings(const Word& a, const Word& b, const Word& c);

struct LcsPair {
    int value = 0;
    int first = 0;
    int second = 0;
};
LcsPair max_pairwise_lcs(const std::vector<Word>& strings);

// Column-type counts of the 3 x n matrix with rows x, y, z. When z = x^y only
// the four even-weight types occur.
struct ColumnHistogram {
    int c000 = 0;
    int c011 = 0;  // type a
    int c101 = 0;  // type b
    int c110 = 0;  // type c
    int others = 0;
    int total() const { return c000 + c011 + c101 + c110 + others; }
};
ColumnHistogram column_histogram(const Word& x, const Word& y, const Word& z);

// A triple (x, y, x^y) from the subspace whose histogram meets the balance
// window n/4 +- (9/(16 log2 n) + tol) * n, or nullopt with a high-LCS witness
// pair recorded in `witness`.
struct BalancedTriple {
    Word x, y, z;
};
std::optional<BalancedTriple> select_balanced_triple(const Word& a, const Word& b, const Word& c,
                                                     double tol, LcsPair* witness = nullptr);

// Bracket tree over a string on {a=0, b=1, c=2} (d-columns removed).
struct BracketNode {
    int begin = 0;  // half-open span in L
    int end = 0;
    int level = 0;
    int enhanced_level = 0;  // set by enhance()
    int inner_length = 0;    // 2k of the reduced content (set by enhance())
    std::vector<int> children;
};
struct BracketTree {
    std::vector<BracketNode> nodes;
    std::vector<int> roots;
    Word content;  // the parsed string

    std::string render() const;  // bracketed string with level subscripts
};

BracketTree bracket_parse(const Word& L);

// Deletes single-child wrappers and assigns enhanced levels + inner lengths.
BracketTree enhance(const BracketTree& tree);

// AV(node) = max(ceil(inner_length/4), sum of children AVs); returns the sum
// over roots.
int additional_value_bound(const BracketTree& enhanced);

// Longest common subsequence where 1-matches are position-locked.
int restricted_cs(const Word& x, const Word& y);

struct TheoremReport {
    int n = 0;
    bool balanced = false;
    LcsPair witness;      // the pair found when not balanced, else max pairwise
    int max_lcs = 0;      // over the balanced triple (or witness value)
    double threshold = 0; // n/2 + 3n/(16 log2 n)
    int certified_av = 0;
    bool asserted = false;   // n above floor and balanced
    bool holds = true;
};

TheoremReport verify_theorem(const Word& a, const Word& b, const Word& c, double tol = 0.0,
                             int assert_floor = 32);

}  // namespace idc
