#pragma once

#include <optional>
#include <vector>

#include "idc/codec_common.hpp"

namespace idc {

// Match predicate of the rate-1/3 decoder: some nonzero codeword of code i is
// within floor(d'/2) insdel distance of v. The witness is the
// lexicographically smallest qualifying codeword.
struct R13Match {
    bool hit = false;
    uint32_t witness_msg = 0;
};

struct NonzeroMatch {
    int block = 0;   // 0-based code index
    int begin = 0;   // half-open interval in y
    int end = 0;
    uint32_t witness_msg = 0;
};

struct R13AlignResult {
    std::vector<std::vector<int>> f;  // (n+1) x (|y|+1)
    std::vector<NonzeroMatch> matches;
};

Word r13_encode(const CodeSpec& code, const std::vector<uint32_t>& message);

R13Match r13_g(const CodeSpec& code, int block, const Word& v);

R13AlignResult r13_alignment_dp(const CodeSpec& code, const Word& y);

struct R13DecodeReport {
    int f_final = 0;
    std::vector<NonzeroMatch> matches;
    std::vector<uint32_t> z_tilde;  // recovered outer symbols
    std::optional<int> hamming_to_truth;
};

std::optional<std::vector<uint32_t>> r13_decode(const CodeSpec& code, const Word& y,
                                                R13DecodeReport* report = nullptr);

}  // namespace idc
