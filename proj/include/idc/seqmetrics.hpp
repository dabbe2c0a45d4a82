#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace idc {

// A word over some alphabet; symbols are plain integers and alphabet
// membership is the caller's concern. Used for bits and field elements alike.
using Sym = uint32_t;
using Word = std::vector<Sym>;

// Monotone list of (index-in-x, index-in-y) pairs, 0-based.
struct Alignment {
    std::vector<std::pair<int, int>> pairs;
};

// Length of a longest common subsequence.
int lcs(const Word& x, const Word& y);

// Insdel edit distance; equals |x|+|y|-2*lcs(x,y). Substitution is not a
// primitive (delete + insert costs 2).
int edit_distance(const Word& x, const Word& y);

// Minimum over all substrings w' of text of edit_distance(pattern, w'),
// with one achieving half-open interval [begin, end). One DP pass with free
// prefix/suffix skipping of the text.
struct SubstringMatch {
    int distance;
    int begin;
    int end;
};
SubstringMatch substring_edit_distance(const Word& pattern, const Word& text);

// Min over partitions v = v_1 o ... o v_t and choices u_j from each candidate
// set of sum_j edit_distance(u_j, v_j). Returns the distance, the chosen
// candidate index per block, and the partition cut points (cuts[j] = end of
// v_j, cuts[t-1] = |v|).
struct SplitResult {
    int distance;
    std::vector<int> choice;
    std::vector<int> cuts;
};
SplitResult concat_split_distance(const std::vector<std::vector<Word>>& blocks, const Word& v);

// LCS backtrace; ties broken toward the smaller text (y) index, which makes
// the result deterministic.
Alignment extract_alignment(const Word& x, const Word& y);

}  // namespace idc
