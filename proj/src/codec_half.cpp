#include "idc/codec_half.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace idc {
namespace {

constexpr int kBig = std::numeric_limits<int>::max() / 4;

}  // namespace

Word r12_encode(const CodeSpec& code, const std::vector<uint32_t>& message) {
    code.validate();
    if (code.variant != Variant::kR12) throw std::invalid_argument("not an R12 code");
    return concat_encode(code, message);
}

R12Match r12_g(const CodeSpec& code, int start_block, const Word& v) {
    const int t = code.family.params.t;
    if (start_block < 0 || start_block + t > code.n_blocks())
        throw std::invalid_argument("segment window out of range");
    const int dp = code.family.params.d_prime;
    const int limit = (dp + 1) / 2 - 1;  // strict < d'/2
    R12Match match;
    if (limit < 0) return match;
    const int total = t * code.family.params.n_prime;
    if (std::abs(static_cast<int>(v.size()) - total) > limit) return match;
    std::vector<std::vector<Word>> blocks;
    for (int l = 0; l < t; ++l) blocks.push_back(code.family.codebooks[start_block + l]);
    SplitResult sr = concat_split_distance(blocks, v);
    if (sr.distance <= limit) {
        match.hit = true;
        match.witness.assign(sr.choice.begin(), sr.choice.end());
    }
    return match;
}

R12AlignResult r12_segment_dp(const CodeSpec& code, const Word& y) {
    code.validate();
    const int t = code.family.params.t;
    const int n = code.n_blocks();
    const int rows = n / t;
    const int N = static_cast<int>(y.size());
    const int total = t * code.family.params.n_prime;
    const int dp = code.family.params.d_prime;
    const int limit = (dp + 1) / 2 - 1;

    R12AlignResult res;
    res.f.assign(rows + 1, std::vector<int>(N + 1, 0));
    // decision: -1 carry, -2 skip window, else interval start j0
    std::vector<std::vector<int>> decision(rows + 1, std::vector<int>(N + 1, -2));
    std::vector<std::vector<std::vector<uint32_t>>> wit(rows + 1,
                                                        std::vector<std::vector<uint32_t>>(N + 1));

    for (int w = 1; w <= rows; ++w) {
        const int sb = (w - 1) * t;
        for (int j = 0; j <= N; ++j) {
            int best = j > 0 ? res.f[w][j - 1] : -1;
            int dec = -1;
            std::vector<uint32_t> bwit;
            // skip the window entirely (paper repair: the transition rule
            // needs this and the carry to compute the true maximum matching)
            if (res.f[w - 1][j] > best) {
                best = res.f[w - 1][j];
                dec = -2;
            }
            if (limit >= 0) {
                const int lo = std::max(0, j - total - limit);
                const int hi = j - std::max(1, total - limit);
                for (int j0 = lo; j0 <= hi; ++j0) {
                    Word v(y.begin() + j0, y.begin() + j);
                    R12Match m = r12_g(code, sb, v);
                    if (!m.hit) continue;
                    int val = res.f[w - 1][j0] + 1;
                    if (val > best) {
                        best = val;
                        dec = j0;
                        bwit = m.witness;
                    }
                }
            }
            res.f[w][j] = best;
            decision[w][j] = dec;
            wit[w][j] = std::move(bwit);
        }
    }

    int w = rows, j = N;
    while (w > 0) {
        int dec = decision[w][j];
        if (dec == -1) {
            --j;
        } else if (dec == -2) {
            --w;
        } else {
            res.matches.push_back(SegmentMatch{(w - 1) * t, dec, j, wit[w][j]});
            j = dec;
            --w;
        }
    }
    std::reverse(res.matches.begin(), res.matches.end());
    return res;
}

std::optional<std::vector<uint32_t>> r12_decode(const CodeSpec& code, const Word& y,
                                                R12DecodeReport* report) {
    auto align = r12_segment_dp(code, y);
    const int n = code.n_blocks();
    const int t = code.family.params.t;
    std::vector<uint32_t> z_tilde(n, 0);
    std::vector<uint8_t> matched(n, 0);
    for (const auto& m : align.matches)
        for (int l = 0; l < t; ++l) {
            z_tilde[m.start_block + l] = m.witness[l];
            matched[m.start_block + l] = 1;
        }
    if (report) {
        report->f_final = align.f[n / t][y.size()];
        report->segments = align.matches;
        report->z_tilde = z_tilde;
        report->unmatched_blocks.clear();
        for (int i = 0; i < n; ++i)
            if (!matched[i]) report->unmatched_blocks.push_back(i);
    }
    OuterWord ow;
    ow.symbols.assign(z_tilde.begin(), z_tilde.begin() + code.rs.n);  // strip padding

    const int nr = code.rs.n;
    const double delta = static_cast<double>(code.rs.d()) / nr;
    int agreement = static_cast<int>(std::ceil(nr * std::sqrt(1.0 - delta) - 1e-9));
    const int gs_floor = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(code.rs.k) * nr)));
    agreement = std::max(agreement, gs_floor);
    auto list = rs_list_decode(code.rs, ow, agreement);
    if (report) report->list_size = list.size();
    if (list.empty()) return std::nullopt;

    // minimum full-codeword edit distance selects among list entries
    std::optional<std::vector<uint32_t>> best;
    int best_d = kBig;
    for (const auto& msg : list) {
        int d = edit_distance(concat_encode(code, msg), y);
        if (d < best_d) {
            best_d = d;
            best = msg;
        }
    }
    return best;
}

}  // namespace idc
