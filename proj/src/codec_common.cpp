#include "idc/codec_common.hpp"

#include <algorithm>
#include <stdexcept>

namespace idc {
namespace detail {

void all_window_distances(const Word& cw, const Word& y, std::optional<int> band,
                          std::vector<std::vector<int>>& out, bool minimize) {
    const int N = static_cast<int>(y.size());
    const int m = static_cast<int>(cw.size());
    std::vector<int> prev(N + 1), cur(N + 1);
    for (int j0 = 0; j0 <= N; ++j0) {
        const int jmax = band ? std::min(N, j0 + m + *band) : N;
        for (int j = j0; j <= jmax; ++j) prev[j] = j - j0;
        for (int i = 1; i <= m; ++i) {
            cur[j0] = i;
            for (int j = j0 + 1; j <= jmax; ++j) {
                int best = prev[j] + 1;
                int diag = prev[j - 1] + (cw[i - 1] == y[j - 1] ? 0 : 2);
                if (diag < best) best = diag;
                int ins = cur[j - 1] + 1;
                if (ins < best) best = ins;
                cur[j] = best;
            }
            std::swap(prev, cur);
        }
        for (int j = j0; j <= jmax; ++j) {
            if (minimize)
                out[j0][j] = std::min(out[j0][j], prev[j]);
            else
                out[j0][j] = prev[j];
        }
    }
}

}  // namespace detail

void CodeSpec::validate() const {
    family.params.validate();
    if (rs.n + pad != family.params.n)
        throw std::invalid_argument("outer length + pad must equal the number of inner codes");
    if (static_cast<uint32_t>(family.params.sigma_out) != rs.field->order())
        throw std::invalid_argument("inner codebook size must equal the outer alphabet");
    if (variant == Variant::kR12) {
        if (family.params.t <= 0 || family.params.n % family.params.t != 0)
            throw std::invalid_argument("R12 needs n divisible by t after padding");
    } else if (pad != 0) {
        throw std::invalid_argument("only R12 uses padding");
    }
    if (variant != family.params.variant) throw std::invalid_argument("variant mismatch");
}

std::vector<uint32_t> outer_symbols(const CodeSpec& code, const std::vector<uint32_t>& message) {
    OuterWord ow = rs_encode(code.rs, message);
    std::vector<uint32_t> syms = ow.symbols;
    syms.resize(code.family.params.n, 0);  // zero padding
    return syms;
}

Word concat_encode(const CodeSpec& code, const std::vector<uint32_t>& message) {
    auto syms = outer_symbols(code, message);
    Word out;
    out.reserve(code.N());
    for (int i = 0; i < code.n_blocks(); ++i) {
        Word blk = code.family.encode_message(i, syms[i]);
        out.insert(out.end(), blk.begin(), blk.end());
    }
    return out;
}

}  // namespace idc
