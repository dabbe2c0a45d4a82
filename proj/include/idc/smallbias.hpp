#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "idc/field.hpp"

namespace idc {

// Epsilon-biased generator (powering construction): the seed names a pair
// (x, y) in GF(2^m)^2 and output bit i (1-based) is <x^i, y>, the GF(2) inner
// product of bit representations. Every nonempty parity of output bits equals
// <p_S(x), y> for the polynomial p_S(X) = sum_{i in S} X^i, so its bias is at
// most deg(p_S)/2^(m+1) <= (n_bits-1)/2^m.
struct BiasSpec {
    uint64_t n_bits = 0;
    double epsilon = 0.0;   // requested bound
    int m = 0;              // seed half-length; seed_length = 2m
    int seed_length() const { return 2 * m; }

    // m chosen as the smallest integer with (n_bits - 1)/2^m <= epsilon.
    static BiasSpec for_output(uint64_t n_bits, double epsilon);
    // Spec with an explicit seed-bit budget s = 2m; epsilon is the implied
    // bound (n_bits - 1)/2^m.
    static BiasSpec with_seed_bits(uint64_t n_bits, int seed_bits);
};

struct Seed {
    std::vector<uint8_t> bits;  // length = spec.seed_length()

    uint64_t as_index() const;  // little-endian integer value
    static Seed from_index(uint64_t v, int seed_length);
    std::string to_hex() const;
    static Seed from_hex(const std::string& hex, int seed_length);
};

// Deterministic expansion of (spec, seed) to n_bits bits.
std::vector<uint8_t> generate(const BiasSpec& spec, const Seed& seed);

// Streaming view over the generated bits, consumed in a fixed documented
// order by the family samplers.
class BitStream {
public:
    explicit BitStream(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}
    uint8_t next_bit();
    uint32_t next_bits(int k);  // little-endian: first bit is the LSB
    size_t consumed() const { return pos_; }

private:
    std::vector<uint8_t> bits_;
    size_t pos_ = 0;
};

// All 2^s seeds in lexicographic (index) order. Enumeration beyond the budget
// is refused so callers switch to random sampling.
class SeedEnumerator {
public:
    SeedEnumerator(const BiasSpec& spec, uint64_t budget = 1ull << 24);
    bool next(Seed& out);
    uint64_t total() const { return total_; }

private:
    int seed_length_;
    uint64_t total_;
    uint64_t next_ = 0;
};

// Empirical statistical distance of w-bit windows from uniform, given one
// sampled bit string per source draw (one window position per draw).
double window_statistical_distance(const std::vector<std::vector<uint8_t>>& draws, int window);

// Empirical statistical distance of w-bit windows of the generator output
// from uniform, averaged over `samples` sampled seeds (exhaustive when 2^s
// fits). The XOR lemma bounds the true value by epsilon * 2^(w/2).
double estimate_statistical_distance(int window, const BiasSpec& spec, int samples, uint64_t rng_seed);

// Exact bias of one output-position subset, over all 2^s seeds.
double exact_subset_bias(const BiasSpec& spec, const std::vector<uint64_t>& subset);

// Bias of one subset estimated from `samples` random seeds.
double sampled_subset_bias(const BiasSpec& spec, const std::vector<uint64_t>& subset, int samples,
                           uint64_t rng_seed);

}  // namespace idc
