#pragma once

#include <optional>
#include <vector>

#include "idc/codec_common.hpp"

namespace idc {

// Partition DP over a y of length |y|: f[i][j] = min over partitions of
// y[0..j) into i+1 pieces of the summed nearest-codeword insdel distances.
struct HnPartition {
    std::vector<std::vector<int>> f;   // (n) x (|y|+1)
    std::vector<int> cuts;             // cuts[i] = end of piece i (cuts[n-1] = |y|)
    std::vector<uint32_t> recovered;   // message per block
    int delta = 0;
};

Word hn_encode(const CodeSpec& code, const std::vector<uint32_t>& message);

// Options: the banded window restricts transitions to j - j' <= n' + band
// (opt-in; must agree with the full DP when no piece exceeds the budget).
struct HnOptions {
    std::optional<int> band;
    bool bruteforce_list = false;  // substitute the brute-force list oracle
};

HnPartition hn_partition_dp(const CodeSpec& code, const Word& y, const HnOptions& opts = {});

struct HnDecodeReport {
    int delta = 0;
    size_t list_size = 0;
    int chosen_index = -1;  // index into the list, -1 on failure
    std::optional<double> beta;
};

std::optional<std::vector<uint32_t>> hn_decode(const CodeSpec& code, const Word& y,
                                               const HnOptions& opts = {},
                                               HnDecodeReport* report = nullptr);

// Fraction of outer positions where the DP-recovered symbol equals the truth.
double hn_symbol_recovery_rate(const CodeSpec& code, const Word& y,
                               const std::vector<uint32_t>& truth_message,
                               const HnOptions& opts = {});

struct DistanceProbe {
    int min_distance = 0;
    int threshold = 0;
    std::vector<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>> violations;
};

// Samples distinct message pairs and checks the full-codeword edit distance
// exceeds 2(1-6*gamma)N.
DistanceProbe hn_pairwise_distance_probe(const CodeSpec& code, int trials, uint64_t rng_seed);

}  // namespace idc
