#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "idc/field.hpp"

namespace idc {

// Outer Reed-Solomon code: messages are the k coefficients of a degree < k
// polynomial, codewords its evaluations at n distinct points.
struct RsSpec {
    std::shared_ptr<const FieldSpec> field;
    int n = 0;
    int k = 0;
    std::vector<uint32_t> eval_points;

    int d() const { return n - k + 1; }

    // Evaluation points are the first n of [alpha^0, ..., alpha^(q-2), 0], so
    // n = q-1 uses exactly the nonzero elements in antilog order.
    static RsSpec make(std::shared_ptr<const FieldSpec> field, int n, int k);
};

struct OuterWord {
    std::vector<uint32_t> symbols;
    std::vector<uint8_t> erased;  // empty means no erasures

    bool has_erasures() const;
};

OuterWord rs_encode(const RsSpec& spec, const std::vector<uint32_t>& message);

// Berlekamp-Welch with the standard erasures-and-errors extension: succeeds
// whenever 2*errors + erasures < d. Failure is a value.
std::optional<std::vector<uint32_t>> rs_unique_decode(const RsSpec& spec, const OuterWord& received);

// Guruswami-Sudan list decoding: returns every message whose codeword agrees
// with `received` in at least `agreement` positions. Interpolation
// multiplicity is chosen minimally for the requested agreement.
// Pre: agreement >= ceil(sqrt(k*n)).
std::vector<std::vector<uint32_t>> rs_list_decode(const RsSpec& spec, const OuterWord& received,
                                                  int agreement);

// Exhaustive scan of all q^k codewords; ground truth for list decoding.
// Pre: q^k <= 2^20.
std::vector<std::vector<uint32_t>> rs_bruteforce_list(const RsSpec& spec, const OuterWord& received,
                                                      int agreement);

// Ceiling of C(n,w) * q^(w-d+1) (real-valued when the exponent is negative),
// saturated at UINT64_MAX. Dominates the exhaustive weight-w codeword count.
uint64_t count_weight_bound(const RsSpec& spec, int w);

// Exhaustive number of weight-w codewords (test companion; q^k <= 2^20).
uint64_t count_weight_exhaustive(const RsSpec& spec, int w);

// Cuts two distinct codewords into floor(n/chunk) chunks and reports the
// fraction of chunks with Hamming distance >= (d/2n)*chunk, plus per-chunk
// distances. `ok` is the d/(2n) lower bound on that fraction.
struct DenseReport {
    double fraction = 0.0;
    std::vector<int> chunk_distances;
    bool ok = false;
};
DenseReport check_dense(const RsSpec& spec, const OuterWord& y, const OuterWord& y2, int chunk);

}  // namespace idc
