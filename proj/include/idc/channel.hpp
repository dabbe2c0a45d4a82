#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idc/seqmetrics.hpp"

namespace idc {

// One insertion or deletion; positions refer to the string state at
// application time (0-based; Insert places the symbol before index pos,
// pos == current length appends).
struct EditOp {
    enum Kind : uint8_t { kDelete, kInsert };
    Kind kind;
    int pos;
    Sym sym = 0;  // inserted symbol
};

struct EditTrace {
    std::vector<EditOp> ops;
    int source_len = 0;
    uint64_t rng_seed = 0;
    std::string pattern;

    int size() const { return static_cast<int>(ops.size()); }
};

enum class ChannelPattern { kUniform, kBurst, kPerBlockCapped };

struct ChannelConfig {
    ChannelPattern pattern = ChannelPattern::kUniform;
    int budget = 0;
    double insert_fraction = 0.5;
    uint64_t rng_seed = 0;
    // per-block-capped mode
    std::optional<int> per_block_cap;
    std::optional<int> blocks_affected_cap;
    int block_length = 0;       // n' (required for per-block-capped)
    uint32_t alphabet_size = 2; // inserted symbols drawn uniformly from it
};

// Deterministic replay; throws on an invalid position, naming the step.
Word apply_trace(const Word& source, const EditTrace& trace);

// Draws a trace honoring the pattern and caps, returns the corrupted word
// and the replayable trace.
std::pair<Word, EditTrace> corrupt(const Word& source, const ChannelConfig& config);

// Partition of the trace into per-block groups plus the canonical
// segmentation of the output: segment i holds the surviving/inserted symbols
// attributed to source block i. Boundary insertions attach to the left block.
struct BlockAttribution {
    std::vector<int> group_sizes;     // per-block edit counts, sums to |trace|
    std::vector<Word> segments;       // concatenates to the output word
};
BlockAttribution attribute_to_blocks(const Word& source, const EditTrace& trace, int block_length,
                                     int n_blocks);

}  // namespace idc
