#include "idc/seqmetrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace idc {

int lcs(const Word& x, const Word& y) {
    const size_t m = x.size(), n = y.size();
    if (m == 0 || n == 0) return 0;
    // Two-row DP; full table only where a backtrace is needed.
    std::vector<int> prev(n + 1, 0), cur(n + 1, 0);
    for (size_t i = 1; i <= m; ++i) {
        const Sym xi = x[i - 1];
        for (size_t j = 1; j <= n; ++j) {
            if (xi == y[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

int edit_distance(const Word& x, const Word& y) {
    return static_cast<int>(x.size() + y.size()) - 2 * lcs(x, y);
}

SubstringMatch substring_edit_distance(const Word& pattern, const Word& text) {
    const size_t m = pattern.size(), n = text.size();
    // dp[j] = min edit distance between pattern[0..i) and a suffix of text[0..j)
    // starting anywhere (free prefix skip via row-0 zeros).
    std::vector<int> prev(n + 1, 0), cur(n + 1, 0);
    // start[j] tracks the begin index of the matched substring.
    std::vector<int> pstart(n + 1), cstart(n + 1);
    for (size_t j = 0; j <= n; ++j) pstart[j] = static_cast<int>(j);
    for (size_t i = 1; i <= m; ++i) {
        cur[0] = static_cast<int>(i);
        cstart[0] = 0;
        const Sym pi = pattern[i - 1];
        for (size_t j = 1; j <= n; ++j) {
            int best = prev[j] + 1;  // delete pattern symbol
            int bs = pstart[j];
            int diag = prev[j - 1] + (pi == text[j - 1] ? 0 : 2);
            if (diag < best || (diag == best && pstart[j - 1] < bs)) {
                best = diag;
                bs = pstart[j - 1];
            }
            int ins = cur[j - 1] + 1;  // skip text symbol inside the match
            if (ins < best || (ins == best && cstart[j - 1] < bs)) {
                best = ins;
                bs = cstart[j - 1];
            }
            cur[j] = best;
            cstart[j] = bs;
        }
        std::swap(prev, cur);
        std::swap(pstart, cstart);
    }
    SubstringMatch r{std::numeric_limits<int>::max(), 0, 0};
    for (size_t j = 0; j <= n; ++j) {
        if (prev[j] < r.distance) {
            r.distance = prev[j];
            r.begin = pstart[j];
            r.end = static_cast<int>(j);
        }
    }
    return r;
}

SplitResult concat_split_distance(const std::vector<std::vector<Word>>& blocks, const Word& v) {
    const int t = static_cast<int>(blocks.size());
    const int n = static_cast<int>(v.size());
    for (const auto& set : blocks)
        if (set.empty()) throw std::invalid_argument("empty candidate set");
    constexpr int kInf = std::numeric_limits<int>::max() / 2;

    // bestseg[b][p][q] = min over candidates u of block b of edit_distance(u, v[p..q)).
    // Computed per (b, candidate, p) in one forward pass over q.
    // f[b][q] = best cost covering v[0..q) with blocks 0..b.
    std::vector<std::vector<int>> f(t + 1, std::vector<int>(n + 1, kInf));
    std::vector<std::vector<int>> from(t + 1, std::vector<int>(n + 1, -1));
    std::vector<std::vector<int>> pick(t + 1, std::vector<int>(n + 1, -1));
    f[0][0] = 0;
    std::vector<int> row(n + 1);
    for (int b = 0; b < t; ++b) {
        for (int p = 0; p <= n; ++p) {
            if (f[b][p] >= kInf) continue;
            for (int c = 0; c < static_cast<int>(blocks[b].size()); ++c) {
                const Word& u = blocks[b][c];
                const int m = static_cast<int>(u.size());
                // row[q] = edit_distance(u, v[p..q))
                std::vector<int> prev(n - p + 1), cur(n - p + 1);
                for (int q = 0; q <= n - p; ++q) prev[q] = q;
                for (int i = 1; i <= m; ++i) {
                    cur[0] = i;
                    for (int q = 1; q <= n - p; ++q) {
                        int best = prev[q] + 1;
                        int diag = prev[q - 1] + (u[i - 1] == v[p + q - 1] ? 0 : 2);
                        best = std::min(best, diag);
                        best = std::min(best, cur[q - 1] + 1);
                        cur[q] = best;
                    }
                    std::swap(prev, cur);
                }
                for (int q = p; q <= n; ++q) {
                    int cost = f[b][p] + prev[q - p];
                    if (cost < f[b + 1][q]) {
                        f[b + 1][q] = cost;
                        from[b + 1][q] = p;
                        pick[b + 1][q] = c;
                    }
                }
            }
        }
    }
    SplitResult r;
    r.distance = f[t][n];
    r.choice.assign(t, 0);
    r.cuts.assign(t, 0);
    int q = n;
    for (int b = t; b >= 1; --b) {
        r.cuts[b - 1] = q;
        r.choice[b - 1] = pick[b][q];
        q = from[b][q];
    }
    return r;
}

Alignment extract_alignment(const Word& x, const Word& y) {
    const size_t m = x.size(), n = y.size();
    std::vector<std::vector<int>> dp(m + 1, std::vector<int>(n + 1, 0));
    for (size_t i = 1; i <= m; ++i)
        for (size_t j = 1; j <= n; ++j)
            dp[i][j] = x[i - 1] == y[j - 1] ? dp[i - 1][j - 1] + 1
                                            : std::max(dp[i - 1][j], dp[i][j - 1]);
    Alignment a;
    size_t i = m, j = n;
    while (i > 0 && j > 0) {
        if (x[i - 1] == y[j - 1] && dp[i][j] == dp[i - 1][j - 1] + 1) {
            // Leftmost tie-break: only take the match if skipping y instead
            // cannot reach the same LCS with a smaller y index.
            if (dp[i][j - 1] == dp[i][j]) {
                --j;
                continue;
            }
            a.pairs.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
            --i;
            --j;
        } else if (dp[i][j - 1] >= dp[i - 1][j]) {
            --j;
        } else {
            --i;
        }
    }
    std::reverse(a.pairs.begin(), a.pairs.end());
    return a;
}

}  // namespace idc
