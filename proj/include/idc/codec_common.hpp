#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idc/inner_family.hpp"
#include "idc/reed_solomon.hpp"
#include "idc/seqmetrics.hpp"

namespace idc {

// One concatenated code: outer RS over GF(2^l), a verified inner family, and
// the codec variant. For R12 the outer length is padded with zero symbols to
// a multiple of t; `pad` records how many.
struct CodeSpec {
    Variant variant = Variant::kHN;
    RsSpec rs;
    InnerFamily family;
    int pad = 0;

    int n_blocks() const { return family.params.n; }
    int N() const { return family.params.n * family.params.n_prime; }
    double gamma() const { return family.params.gamma; }

    void validate() const;
};

// Outer encode plus per-position inner encode; shared by all variants.
Word concat_encode(const CodeSpec& code, const std::vector<uint32_t>& message);

// Outer symbols (padded length) for a message.
std::vector<uint32_t> outer_symbols(const CodeSpec& code, const std::vector<uint32_t>& message);

namespace detail {

// out[j0][j] = edit distance between cw and y[j0..j). With a band only
// windows with j - j0 <= |cw| + band are filled (others untouched). When
// `minimize` is set, cells keep the minimum with their previous content.
void all_window_distances(const Word& cw, const Word& y, std::optional<int> band,
                          std::vector<std::vector<int>>& out, bool minimize);

}  // namespace detail

}  // namespace idc
