#include "idc/channel.hpp"

#include <random>
#include <stdexcept>

namespace idc {

Word apply_trace(const Word& source, const EditTrace& trace) {
    Word w = source;
    for (size_t step = 0; step < trace.ops.size(); ++step) {
        const EditOp& op = trace.ops[step];
        if (op.kind == EditOp::kDelete) {
            if (op.pos < 0 || op.pos >= static_cast<int>(w.size()))
                throw std::invalid_argument("invalid delete position at step " + std::to_string(step));
            w.erase(w.begin() + op.pos);
        } else {
            if (op.pos < 0 || op.pos > static_cast<int>(w.size()))
                throw std::invalid_argument("invalid insert position at step " + std::to_string(step));
            w.insert(w.begin() + op.pos, op.sym);
        }
    }
    return w;
}

namespace {

// Explicit draw helpers: uniform_int_distribution is not bit-reproducible
// across standard libraries, and traces must replay byte-exactly.
uint64_t draw_below(std::mt19937_64& rng, uint64_t n) {
    if (n == 0) throw std::invalid_argument("draw_below(0)");
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = rng();
    } while (v >= lim);
    return v % n;
}

EditOp draw_op(std::mt19937_64& rng, int cur_len, double insert_fraction, uint32_t alphabet) {
    bool ins = cur_len == 0;
    if (!ins) {
        double u = static_cast<double>(draw_below(rng, 1u << 24)) / (1u << 24);
        ins = u < insert_fraction;
    }
    EditOp op;
    if (ins) {
        op.kind = EditOp::kInsert;
        op.pos = static_cast<int>(draw_below(rng, cur_len + 1));
        op.sym = static_cast<Sym>(draw_below(rng, alphabet));
    } else {
        op.kind = EditOp::kDelete;
        op.pos = static_cast<int>(draw_below(rng, cur_len));
    }
    return op;
}

}  // namespace

std::pair<Word, EditTrace> corrupt(const Word& source, const ChannelConfig& config) {
    EditTrace trace;
    trace.source_len = static_cast<int>(source.size());
    trace.rng_seed = config.rng_seed;
    std::mt19937_64 rng(config.rng_seed);
    Word w = source;

    switch (config.pattern) {
        case ChannelPattern::kUniform: {
            trace.pattern = "uniform";
            for (int t = 0; t < config.budget; ++t) {
                EditOp op = draw_op(rng, static_cast<int>(w.size()), config.insert_fraction,
                                    config.alphabet_size);
                trace.ops.push_back(op);
                w = apply_trace(w, EditTrace{{op}, 0, 0, ""});
            }
            break;
        }
        case ChannelPattern::kBurst: {
            trace.pattern = "burst";
            // One contiguous burst: deletions remove a run, insertions add a run.
            int dels = static_cast<int>((1.0 - config.insert_fraction) * config.budget + 0.5);
            dels = std::min(dels, static_cast<int>(w.size()));
            int inss = config.budget - dels;
            if (!w.empty() || dels == 0) {
                int start = w.empty() ? 0 : static_cast<int>(draw_below(rng, w.size() - dels + 1));
                for (int t = 0; t < dels; ++t)
                    trace.ops.push_back(EditOp{EditOp::kDelete, start, 0});
                for (int t = 0; t < inss; ++t)
                    trace.ops.push_back(EditOp{EditOp::kInsert, start + t,
                                               static_cast<Sym>(draw_below(rng, config.alphabet_size))});
            }
            w = apply_trace(source, trace);
            break;
        }
        case ChannelPattern::kPerBlockCapped: {
            trace.pattern = "per-block-capped";
            if (config.block_length <= 0) throw std::invalid_argument("per-block-capped needs block_length");
            const int n_blocks = static_cast<int>(source.size()) / config.block_length;
            const int cap = config.per_block_cap.value_or(config.budget);
            const int bcap = config.blocks_affected_cap.value_or(n_blocks);
            if (cap * bcap < config.budget)
                throw std::invalid_argument("caps are unsatisfiable for the requested budget");
            // choose affected blocks
            std::vector<int> blocks(n_blocks);
            for (int i = 0; i < n_blocks; ++i) blocks[i] = i;
            for (int i = n_blocks - 1; i > 0; --i)
                std::swap(blocks[i], blocks[draw_below(rng, i + 1)]);
            blocks.resize(std::min(bcap, n_blocks));
            std::vector<int> per_block(n_blocks, 0);
            int placed = 0;
            for (size_t bi = 0; bi < blocks.size() && placed < config.budget; ++bi) {
                int take = std::min(cap, config.budget - placed);
                per_block[blocks[bi]] = take;
                placed += take;
            }
            if (placed < config.budget) throw std::invalid_argument("caps are unsatisfiable for the requested budget");
            // Apply edits block by block, tracking each block's current span.
            std::vector<int> start(n_blocks + 1);
            for (int b = 0; b <= n_blocks; ++b) start[b] = b * config.block_length;
            for (int b = 0; b < n_blocks; ++b) {
                for (int t = 0; t < per_block[b]; ++t) {
                    int len = start[b + 1] - start[b];
                    if (len == 0) break;  // block fully erased; further edits would attribute left
                    double u = static_cast<double>(draw_below(rng, 1u << 24)) / (1u << 24);
                    bool ins = u < config.insert_fraction;
                    EditOp op;
                    if (ins) {
                        op.kind = EditOp::kInsert;
                        // insert after the block's first position so attribution stays in-block
                        op.pos = start[b] + 1 + static_cast<int>(draw_below(rng, len));
                        op.sym = static_cast<Sym>(draw_below(rng, config.alphabet_size));
                        for (int b2 = b + 1; b2 <= n_blocks; ++b2) ++start[b2];
                    } else {
                        op.kind = EditOp::kDelete;
                        op.pos = start[b] + static_cast<int>(draw_below(rng, len));
                        for (int b2 = b + 1; b2 <= n_blocks; ++b2) --start[b2];
                    }
                    trace.ops.push_back(op);
                    w = apply_trace(w, EditTrace{{op}, 0, 0, ""});
                }
            }
            break;
        }
    }
    return {w, trace};
}

BlockAttribution attribute_to_blocks(const Word& source, const EditTrace& trace, int block_length,
                                     int n_blocks) {
    if (static_cast<int>(source.size()) != block_length * n_blocks)
        throw std::invalid_argument("trace source length != n * n'");
    BlockAttribution out;
    out.group_sizes.assign(n_blocks, 0);
    // provenance[i] = source block of the symbol currently at position i
    std::vector<int> prov(source.size());
    for (size_t i = 0; i < source.size(); ++i) prov[i] = static_cast<int>(i) / block_length;
    Word w = source;
    for (size_t step = 0; step < trace.ops.size(); ++step) {
        const EditOp& op = trace.ops[step];
        if (op.kind == EditOp::kDelete) {
            if (op.pos < 0 || op.pos >= static_cast<int>(w.size()))
                throw std::invalid_argument("invalid delete position at step " + std::to_string(step));
            ++out.group_sizes[prov[op.pos]];
            w.erase(w.begin() + op.pos);
            prov.erase(prov.begin() + op.pos);
        } else {
            if (op.pos < 0 || op.pos > static_cast<int>(w.size()))
                throw std::invalid_argument("invalid insert position at step " + std::to_string(step));
            // boundary insertions attach to the left block
            int blk = op.pos > 0 ? prov[op.pos - 1]
                                 : (w.empty() ? 0 : prov[0]);
            if (op.pos > 0 && op.pos < static_cast<int>(w.size()) && prov[op.pos] == prov[op.pos - 1])
                blk = prov[op.pos];
            ++out.group_sizes[blk];
            w.insert(w.begin() + op.pos, op.sym);
            prov.insert(prov.begin() + op.pos, blk);
        }
    }
    out.segments.assign(n_blocks, {});
    for (size_t i = 0; i < w.size(); ++i) out.segments[prov[i]].push_back(w[i]);
    return out;
}

}  // namespace idc
