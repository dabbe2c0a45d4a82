#include "idc/smallbias.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace idc {

BiasSpec BiasSpec::for_output(uint64_t n_bits, double epsilon) {
    if (epsilon <= 0.0 || epsilon >= 1.0) throw std::invalid_argument("epsilon must be in (0,1)");
    BiasSpec s;
    s.n_bits = n_bits;
    s.epsilon = epsilon;
    s.m = 1;
    while (s.m < 63 && static_cast<double>(n_bits > 0 ? n_bits - 1 : 0) / std::ldexp(1.0, s.m) > epsilon) ++s.m;
    return s;
}

BiasSpec BiasSpec::with_seed_bits(uint64_t n_bits, int seed_bits) {
    if (seed_bits < 2 || seed_bits % 2 != 0) throw std::invalid_argument("seed_bits must be even and >= 2");
    BiasSpec s;
    s.n_bits = n_bits;
    s.m = seed_bits / 2;
    s.epsilon = static_cast<double>(n_bits > 0 ? n_bits - 1 : 0) / std::ldexp(1.0, s.m);
    return s;
}

uint64_t Seed::as_index() const {
    uint64_t v = 0;
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v |= 1ull << i;
    return v;
}

Seed Seed::from_index(uint64_t v, int seed_length) {
    Seed s;
    s.bits.assign(seed_length, 0);
    for (int i = 0; i < seed_length; ++i) s.bits[i] = (v >> i) & 1;
    return s;
}

std::string Seed::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (size_t i = 0; i < bits.size(); i += 4) {
        int nib = 0;
        for (size_t j = 0; j < 4 && i + j < bits.size(); ++j) nib |= bits[i + j] << j;
        out.push_back(digits[nib]);
    }
    return out;
}

Seed Seed::from_hex(const std::string& hex, int seed_length) {
    Seed s;
    s.bits.assign(seed_length, 0);
    for (int i = 0; i < seed_length; ++i) {
        size_t nidx = i / 4;
        if (nidx >= hex.size()) break;
        char c = hex[nidx];
        int nib = c >= 'a' ? c - 'a' + 10 : (c >= 'A' ? c - 'A' + 10 : c - '0');
        s.bits[i] = (nib >> (i % 4)) & 1;
    }
    return s;
}

std::vector<uint8_t> generate(const BiasSpec& spec, const Seed& seed) {
    if (static_cast<int>(seed.bits.size()) != spec.seed_length())
        throw std::invalid_argument("seed length does not match spec");
    std::vector<uint8_t> out(spec.n_bits, 0);
    if (spec.n_bits == 0) return out;
    auto field = FieldSpec::with_degree(spec.m);
    uint64_t idx = seed.as_index();
    uint32_t x = static_cast<uint32_t>(idx & ((1ull << spec.m) - 1));
    uint32_t y = static_cast<uint32_t>(idx >> spec.m);
    uint32_t xp = 1;
    for (uint64_t i = 0; i < spec.n_bits; ++i) {
        xp = field->mul(xp, x);  // x^(i+1)
        out[i] = static_cast<uint8_t>(std::popcount(xp & y) & 1);
    }
    return out;
}

uint8_t BitStream::next_bit() {
    if (pos_ >= bits_.size()) throw std::out_of_range("bit stream exhausted");
    return bits_[pos_++];
}

uint32_t BitStream::next_bits(int k) {
    uint32_t v = 0;
    for (int i = 0; i < k; ++i) v |= static_cast<uint32_t>(next_bit()) << i;
    return v;
}

SeedEnumerator::SeedEnumerator(const BiasSpec& spec, uint64_t budget) : seed_length_(spec.seed_length()) {
    if (seed_length_ >= 63) throw std::invalid_argument("seed space too large to enumerate");
    total_ = 1ull << seed_length_;
    if (total_ > budget)
        throw std::invalid_argument("seed enumeration budget exceeded; use random-sampling mode");
}

bool SeedEnumerator::next(Seed& out) {
    if (next_ >= total_) return false;
    out = Seed::from_index(next_++, seed_length_);
    return true;
}

double exact_subset_bias(const BiasSpec& spec, const std::vector<uint64_t>& subset) {
    auto field = FieldSpec::with_degree(spec.m);
    const uint64_t half = 1ull << spec.m;
    uint64_t ones = 0;
    for (uint64_t xi = 0; xi < half; ++xi) {
        // p_S(x) = sum_{i in S} x^(i+1); parity over y of <p, y> is 0 when p = 0,
        // else exactly half. Counting directly keeps this oracle-independent.
        uint32_t p = 0;
        for (uint64_t i : subset) p ^= field->pow(static_cast<uint32_t>(xi), i + 1);
        if (p == 0)
            ;  // parity 0 for every y: contributes no ones
        else
            ones += half / 2;
    }
    double pr = static_cast<double>(ones) / (static_cast<double>(half) * half);
    return std::abs(pr - 0.5);
}

double sampled_subset_bias(const BiasSpec& spec, const std::vector<uint64_t>& subset, int samples,
                           uint64_t rng_seed) {
    auto field = FieldSpec::with_degree(spec.m);
    std::mt19937_64 rng(rng_seed);
    const uint64_t mask = (1ull << spec.m) - 1;
    uint64_t ones = 0;
    for (int s = 0; s < samples; ++s) {
        uint32_t x = static_cast<uint32_t>(rng() & mask);
        uint32_t y = static_cast<uint32_t>(rng() & mask);
        uint32_t p = 0;
        for (uint64_t i : subset) p ^= field->pow(x, i + 1);
        ones += std::popcount(p & y) & 1;
    }
    return std::abs(static_cast<double>(ones) / samples - 0.5);
}

double window_statistical_distance(const std::vector<std::vector<uint8_t>>& draws, int window) {
    if (window < 1 || window > 16) throw std::invalid_argument("window must be in [1,16]");
    std::vector<uint64_t> counts(1ull << window, 0);
    uint64_t total = 0;
    uint64_t t = 0;
    for (const auto& bits : draws) {
        if (bits.size() < static_cast<size_t>(window)) throw std::invalid_argument("draw shorter than window");
        uint64_t start = (t++ * 2654435761u) % (bits.size() - window + 1);
        uint32_t v = 0;
        for (int j = 0; j < window; ++j) v |= static_cast<uint32_t>(bits[start + j]) << j;
        ++counts[v];
        ++total;
    }
    double dist = 0.0;
    const double uniform = 1.0 / static_cast<double>(1ull << window);
    for (uint64_t v = 0; v < (1ull << window); ++v)
        dist += std::abs(static_cast<double>(counts[v]) / total - uniform);
    return dist / 2.0;
}

double estimate_statistical_distance(int window, const BiasSpec& spec, int samples, uint64_t rng_seed) {
    if (window < 1 || window > 16) throw std::invalid_argument("window must be in [1,16]");
    if (spec.n_bits < static_cast<uint64_t>(window)) throw std::invalid_argument("window longer than output");
    std::mt19937_64 rng(rng_seed);
    const int s = spec.seed_length();
    const uint64_t space = s < 63 ? (1ull << s) : 0;
    std::vector<uint64_t> counts(1ull << window, 0);
    uint64_t total = 0;
    const bool exhaustive = space != 0 && static_cast<uint64_t>(samples) >= space;
    const uint64_t n_seeds = exhaustive ? space : static_cast<uint64_t>(samples);
    for (uint64_t t = 0; t < n_seeds; ++t) {
        uint64_t idx = exhaustive ? t : rng() & (space - 1);
        Seed seed = Seed::from_index(idx, s);
        auto bits = generate(spec, seed);
        // one window position per seed, cycling deterministically
        uint64_t start = (t * 2654435761u) % (spec.n_bits - window + 1);
        uint32_t v = 0;
        for (int j = 0; j < window; ++j) v |= static_cast<uint32_t>(bits[start + j]) << j;
        ++counts[v];
        ++total;
    }
    double dist = 0.0;
    const double uniform = 1.0 / static_cast<double>(1ull << window);
    for (uint64_t v = 0; v < (1ull << window); ++v)
        dist += std::abs(static_cast<double>(counts[v]) / total - uniform);
    return dist / 2.0;
}

}  // namespace idc
