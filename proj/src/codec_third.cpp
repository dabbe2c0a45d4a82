#include "idc/codec_third.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace idc {
namespace {

constexpr int kBig = std::numeric_limits<int>::max() / 4;
using detail::all_window_distances;

bool word_is_zero(const Word& w) {
    for (Sym s : w)
        if (s) return false;
    return true;
}

}  // namespace

Word r13_encode(const CodeSpec& code, const std::vector<uint32_t>& message) {
    code.validate();
    if (code.variant != Variant::kR13) throw std::invalid_argument("not an R13 code");
    return concat_encode(code, message);
}

R13Match r13_g(const CodeSpec& code, int block, const Word& v) {
    const auto& book = code.family.codebooks[block];
    const int half = code.family.params.d_prime / 2;  // <= d'/2 with integer floor
    const int np = code.family.params.n_prime;
    R13Match best;
    if (std::abs(static_cast<int>(v.size()) - np) > half) return best;  // length gap alone exceeds d'/2
    for (uint32_t m = 1; m < book.size(); ++m) {
        if (word_is_zero(book[m])) continue;
        if (edit_distance(book[m], v) <= half) {
            if (!best.hit || book[m] < book[best.witness_msg]) {
                best.hit = true;
                best.witness_msg = m;
            }
        }
    }
    return best;
}

R13AlignResult r13_alignment_dp(const CodeSpec& code, const Word& y) {
    code.validate();
    const int n = code.n_blocks();
    const int N = static_cast<int>(y.size());
    const int np = code.family.params.n_prime;
    const int half = code.family.params.d_prime / 2;

    // Precompute per block the nearest nonzero-codeword distance over the
    // banded windows (the only ones that can satisfy <= floor(d'/2); longer
    // or shorter windows lose on length alone). hit[i][j0*(W)+w] covers the
    // window y[j0 .. j0+minlen+w).
    const int minlen = std::max(0, np - half);
    const int W = 2 * half + 1;  // window lengths minlen .. np+half
    std::vector<std::vector<int>> dist(N + 1, std::vector<int>(N + 1, 0));
    std::vector<std::vector<int>> best_dist(n);
    std::vector<std::vector<uint32_t>> best_msg(n);
    for (int i = 0; i < n; ++i) {
        best_dist[i].assign(static_cast<size_t>(N + 1) * W, kBig);
        best_msg[i].assign(static_cast<size_t>(N + 1) * W, 0);
        const auto& book = code.family.codebooks[i];
        for (uint32_t m = 1; m < book.size(); ++m) {
            if (word_is_zero(book[m])) continue;
            all_window_distances(book[m], y, half, dist, false);
            for (int j0 = 0; j0 <= N; ++j0) {
                for (int w = 0; w < W; ++w) {
                    int j = j0 + minlen + w;
                    if (j > N || j > j0 + np + half) break;
                    int d = dist[j0][j];
                    size_t idx = static_cast<size_t>(j0) * W + w;
                    if (d < best_dist[i][idx] ||
                        (d == best_dist[i][idx] && book[m] < book[best_msg[i][idx]])) {
                        best_dist[i][idx] = d;
                        best_msg[i][idx] = m;
                    }
                }
            }
        }
    }
    auto window_hit = [&](int i, int j0, int j, uint32_t& msg) {
        int len = j - j0;
        if (len < minlen || len > np + half) return false;
        size_t idx = static_cast<size_t>(j0) * W + (len - minlen);
        if (best_dist[i][idx] > half) return false;
        msg = best_msg[i][idx];
        return true;
    };

    R13AlignResult res;
    res.f.assign(n + 1, std::vector<int>(N + 1, 0));
    // decision[i][j]: -1 carry from f[i][j-1]; -2 skip block (from f[i-1][j]);
    // else j0 (interval [j0, j)).
    std::vector<std::vector<int>> decision(n + 1, std::vector<int>(N + 1, -2));
    std::vector<std::vector<uint32_t>> hitmsg(n + 1, std::vector<uint32_t>(N + 1, 0));
    std::vector<std::vector<uint8_t>> hitflag(n + 1, std::vector<uint8_t>(N + 1, 0));

    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j <= N; ++j) {
            // carry has first preference (canonical rule)
            int best = j > 0 ? res.f[i][j - 1] : -1;
            int dec = -1;
            uint8_t hflag = 0;
            uint32_t hmsg = 0;
            {
                // empty interval (j' = j); g = 0 transitions from any j' are
                // dominated by this because f[i-1][.] is monotone.
                uint32_t m0;
                bool h0 = window_hit(i - 1, j, j, m0);
                int v = res.f[i - 1][j] + (h0 ? 1 : 0);
                if (v > best) {
                    best = v;
                    dec = h0 ? j : -2;
                    hflag = h0;
                    hmsg = h0 ? m0 : 0;
                }
            }
            const int lo = std::max(0, j - np - half);
            const int hi = j - std::max(1, minlen);
            for (int j0 = lo; j0 <= hi; ++j0) {
                uint32_t m;
                if (!window_hit(i - 1, j0, j, m)) continue;
                int val = res.f[i - 1][j0] + 1;
                if (val > best) {
                    best = val;
                    dec = j0;
                    hflag = 1;
                    hmsg = m;
                }
            }
            res.f[i][j] = best;
            decision[i][j] = dec;
            hitflag[i][j] = hflag;
            hitmsg[i][j] = hmsg;
        }
    }

    // Backtrace the canonical alignment.
    int i = n, j = N;
    while (i > 0) {
        int dec = decision[i][j];
        if (dec == -1) {
            --j;
        } else if (dec == -2) {
            --i;
        } else {
            if (hitflag[i][j]) res.matches.push_back(NonzeroMatch{i - 1, dec, j, hitmsg[i][j]});
            j = dec;
            --i;
        }
    }
    std::reverse(res.matches.begin(), res.matches.end());
    return res;
}

std::optional<std::vector<uint32_t>> r13_decode(const CodeSpec& code, const Word& y,
                                                R13DecodeReport* report) {
    auto align = r13_alignment_dp(code, y);
    const int n = code.n_blocks();
    std::vector<uint32_t> z_tilde(n, 0);  // unmatched blocks stay zero
    for (const auto& m : align.matches) z_tilde[m.block] = m.witness_msg;
    if (report) {
        report->f_final = align.f[n][y.size()];
        report->matches = align.matches;
        report->z_tilde = z_tilde;
    }
    OuterWord ow;
    ow.symbols = z_tilde;
    return rs_unique_decode(code.rs, ow);
}

}  // namespace idc
