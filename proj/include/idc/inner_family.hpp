#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idc/field.hpp"
#include "idc/seqmetrics.hpp"
#include "idc/smallbias.hpp"

namespace idc {

enum class Variant { kHN, kR13, kR12 };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

// Parameters of one family of n position-dependent inner linear codes.
// The binary variants fix q_in = 2 (inner_degree = 1).
struct InnerParams {
    Variant variant = Variant::kHN;
    int n = 0;            // number of inner codes
    int inner_degree = 1; // log2 of the inner alphabet size
    int k_prime = 0;
    int n_prime = 0;
    int d_prime = 0;      // unused by HN
    double gamma = 0.0;   // HN property threshold LCS <= gamma * n'
    int sigma_out = 0;    // outer alphabet size = codebook size
    int t = 0;            // R12 segment width
    int s = 0;            // R12 unique-block threshold

    uint32_t q_in() const { return 1u << inner_degree; }
    // seed bits consumed: code index, then row, then column, then bit-within-symbol
    uint64_t total_bits() const {
        return static_cast<uint64_t>(n) * k_prime * n_prime * inner_degree;
    }
    void validate() const;
};

struct Violation {
    // Layout by property:
    //  P-HN:  {i, j, msg_x, msg_y}, value = LCS(x, y)
    //  P-13:  {i, j, msg_w, msg_u, msg_v}, value = substring edit distance
    //  P-12:  {i, j, w_msgs..., u_msgs...} (t then t+1 entries), value = distance
    std::vector<uint32_t> ids;
    int value = 0;
};

struct PropertyReport {
    std::string property;  // "P-HN" | "P-13" | "P-12"
    std::string mode;      // "exhaustive" | "sampled"
    uint64_t trials = 0;
    std::vector<Violation> violations;
    bool passed = false;
};

struct InnerFamily {
    InnerParams params;
    std::shared_ptr<const FieldSpec> inner_field;           // degree = params.inner_degree
    std::vector<std::vector<std::vector<uint32_t>>> matrices;  // [code][row][col]
    std::vector<std::vector<Word>> codebooks;                // [code][message] -> codeword
    std::optional<Seed> seed;                                // absent for explicit/uniform families
    std::optional<uint64_t> rng_seed;                        // uniform-rng provenance
    std::optional<PropertyReport> verified;

    // message value -> k' inner-field digits, little-endian
    std::vector<uint32_t> embed_message(uint32_t value) const;
    Word encode_message(int code_index, uint32_t value) const;
    // codeword -> message value, or nullopt
    std::optional<uint32_t> lookup_codeword(int code_index, const Word& cw) const;
};

// Abstract bit source so uniform RNG and the small-bias generator sample
// identically structured families.
class BitSource {
public:
    virtual ~BitSource() = default;
    virtual uint8_t next_bit() = 0;
};
class UniformBitSource : public BitSource {
public:
    explicit UniformBitSource(uint64_t seed) : state_(seed) {}
    uint8_t next_bit() override;

private:
    uint64_t state_;
    uint64_t buf_ = 0;
    int left_ = 0;
};
class StreamBitSource : public BitSource {
public:
    explicit StreamBitSource(BitStream stream) : stream_(std::move(stream)) {}
    uint8_t next_bit() override { return stream_.next_bit(); }

private:
    BitStream stream_;
};

// Fills matrices in the documented order, materializes codebooks, checks
// rank. Returns nullopt for a rank-deficient sample (caller tries the next
// seed).
std::optional<InnerFamily> sample_family(const InnerParams& params, BitSource& source);

struct CheckOptions {
    std::optional<bool> force_exhaustive;  // default: gate by instance count
    uint64_t trials = 20000;               // sampled mode
    uint64_t rng_seed = 1;
};

PropertyReport check_property_hn(const InnerFamily& family, const CheckOptions& opts = {});
PropertyReport check_property_13(const InnerFamily& family, const CheckOptions& opts = {});
PropertyReport check_property_12(const InnerFamily& family, uint64_t trials, const CheckOptions& opts = {});

PropertyReport check_property(const InnerFamily& family, const CheckOptions& opts = {});

// Unique blocks per Property 6.1: a nonzero block with no block of the other
// window that is the same codeword in the same inner code.
std::pair<int, int> count_unique_blocks(const std::vector<std::pair<int, uint32_t>>& w_blocks,
                                        const std::vector<std::pair<int, uint32_t>>& u_blocks);

struct SearchOutcome {
    bool found = false;
    std::optional<InnerFamily> family;     // verified family (found) or best candidate
    uint64_t seeds_tried = 0;
    uint64_t rank_rejects = 0;
    uint64_t best_violations = 0;          // on the best candidate
    std::optional<uint64_t> best_seed;
};

// Iterates seeds of the small-bias space (full enumeration when 2^s fits the
// budget, else `budget` sampled seeds), returns the first verified family
// with its seed recorded. Lowest seed wins under enumeration.
SearchOutcome search_family(const InnerParams& params, const BiasSpec& bias, uint64_t budget,
                            const CheckOptions& opts = {}, uint64_t sample_rng_seed = 0);

}  // namespace idc
