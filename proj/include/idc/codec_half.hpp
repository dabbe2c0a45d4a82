#pragma once

#include <optional>
#include <vector>

#include "idc/codec_common.hpp"

namespace idc {

// Segment-match predicate of the rate-1/2 decoder: some candidate in the
// concatenation product of codes [block, block+t) is strictly within d'/2 of
// v. Computed by the concatenation-split DP, which is identical to the
// product minimum by the split identity.
struct R12Match {
    bool hit = false;
    std::vector<uint32_t> witness;  // t messages
};

struct SegmentMatch {
    int start_block = 0;  // 0-based, multiple of t
    int begin = 0;        // half-open interval in y
    int end = 0;
    std::vector<uint32_t> witness;
};

struct R12AlignResult {
    std::vector<std::vector<int>> f;  // (n/t + 1) x (|y|+1); row w = first w*t blocks
    std::vector<SegmentMatch> matches;
};

Word r12_encode(const CodeSpec& code, const std::vector<uint32_t>& message);

R12Match r12_g(const CodeSpec& code, int start_block, const Word& v);

R12AlignResult r12_segment_dp(const CodeSpec& code, const Word& y);

struct R12DecodeReport {
    int f_final = 0;
    std::vector<SegmentMatch> segments;
    std::vector<int> unmatched_blocks;
    std::vector<uint32_t> z_tilde;
    size_t list_size = 0;
};

std::optional<std::vector<uint32_t>> r12_decode(const CodeSpec& code, const Word& y,
                                                R12DecodeReport* report = nullptr);

}  // namespace idc
