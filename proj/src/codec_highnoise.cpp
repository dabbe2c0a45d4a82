#include "idc/codec_highnoise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace idc {
namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;
using detail::all_window_distances;

}  // namespace

Word hn_encode(const CodeSpec& code, const std::vector<uint32_t>& message) {
    code.validate();
    return concat_encode(code, message);
}

HnPartition hn_partition_dp(const CodeSpec& code, const Word& y, const HnOptions& opts) {
    const int n = code.n_blocks();
    const int N = static_cast<int>(y.size());
    const auto& books = code.family.codebooks;

    // g[i][j'][j] = distance of the nearest codeword of code i to y[j'..j),
    // with the argmin codeword (lexicographically smallest word on ties).
    // Computed per codeword via one all-windows pass.
    std::vector<std::vector<int>> g(N + 1, std::vector<int>(N + 1, kInf));
    std::vector<std::vector<int>> dist(N + 1, std::vector<int>(N + 1, kInf));
    std::vector<std::vector<std::vector<int>>> gi(n);
    std::vector<std::vector<std::vector<uint32_t>>> garg(n);
    for (int i = 0; i < n; ++i) {
        for (auto& row : g) std::fill(row.begin(), row.end(), kInf);
        std::vector<std::vector<uint32_t>> arg(N + 1, std::vector<uint32_t>(N + 1, 0));
        for (uint32_t m = 0; m < books[i].size(); ++m) {
            all_window_distances(books[i][m], y, opts.band, dist, false);
            const int jcap = N;
            for (int j0 = 0; j0 <= N; ++j0) {
                const int jmax = opts.band
                                     ? std::min(jcap, j0 + code.family.params.n_prime + *opts.band)
                                     : jcap;
                for (int j = j0; j <= jmax; ++j) {
                    int d = dist[j0][j];
                    if (d < g[j0][j] ||
                        (d == g[j0][j] && books[i][m] < books[i][arg[j0][j]])) {
                        g[j0][j] = d;
                        arg[j0][j] = m;
                    }
                }
            }
        }
        gi[i] = g;
        garg[i] = std::move(arg);
    }

    HnPartition part;
    part.f.assign(n, std::vector<int>(N + 1, kInf));
    std::vector<std::vector<int>> from(n, std::vector<int>(N + 1, -1));
    for (int j = 0; j <= N; ++j) part.f[0][j] = gi[0][0][j];
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j <= N; ++j) {
            int best = kInf, bestj = -1;
            for (int j0 = 0; j0 <= j; ++j0) {
                if (part.f[i - 1][j0] >= kInf || gi[i][j0][j] >= kInf) continue;
                int v = part.f[i - 1][j0] + gi[i][j0][j];
                if (v < best || (v == best && j0 > bestj)) {  // ties toward largest j'
                    best = v;
                    bestj = j0;
                }
            }
            part.f[i][j] = best;
            from[i][j] = bestj;
        }
    }
    part.delta = part.f[n - 1][N];
    part.cuts.assign(n, 0);
    part.recovered.assign(n, 0);
    int j = N;
    for (int i = n - 1; i >= 0; --i) {
        part.cuts[i] = j;
        int j0 = i == 0 ? 0 : from[i][j];
        part.recovered[i] = garg[i][j0][j];
        j = j0;
    }
    return part;
}

std::optional<std::vector<uint32_t>> hn_decode(const CodeSpec& code, const Word& y,
                                               const HnOptions& opts, HnDecodeReport* report) {
    code.validate();
    HnPartition part = hn_partition_dp(code, y, opts);
    if (report) report->delta = part.delta;

    OuterWord recovered;
    recovered.symbols.assign(part.recovered.begin(), part.recovered.end());

    const double gamma = code.gamma();
    const int n = code.rs.n;
    int agreement = static_cast<int>(std::ceil(std::sqrt(gamma) * n - 1e-9));
    const int gs_floor = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(code.rs.k) * n)));
    agreement = std::max(agreement, gs_floor);

    auto list = opts.bruteforce_list ? rs_bruteforce_list(code.rs, recovered, agreement)
                                     : rs_list_decode(code.rs, recovered, agreement);
    if (report) report->list_size = list.size();

    const double threshold = (1.0 - 6.0 * gamma) * code.N();
    std::optional<std::vector<uint32_t>> chosen;
    int chosen_idx = -1;
    for (size_t li = 0; li < list.size(); ++li) {
        Word enc = concat_encode(code, list[li]);
        int d = edit_distance(enc, y);
        if (static_cast<double>(d) < threshold) {
            if (chosen)
                throw std::runtime_error(
                    "multiple list entries under the distance threshold: pairwise-distance invariant breach");
            chosen = list[li];
            chosen_idx = static_cast<int>(li);
        }
    }
    if (report) report->chosen_index = chosen_idx;
    return chosen;
}

double hn_symbol_recovery_rate(const CodeSpec& code, const Word& y,
                               const std::vector<uint32_t>& truth_message, const HnOptions& opts) {
    HnPartition part = hn_partition_dp(code, y, opts);
    auto truth = outer_symbols(code, truth_message);
    int eq = 0;
    for (int i = 0; i < code.n_blocks(); ++i)
        if (part.recovered[i] == truth[i]) ++eq;
    return static_cast<double>(eq) / code.n_blocks();
}

DistanceProbe hn_pairwise_distance_probe(const CodeSpec& code, int trials, uint64_t rng_seed) {
    code.validate();
    std::mt19937_64 rng(rng_seed);
    const uint32_t q = code.rs.field->order();
    DistanceProbe probe;
    probe.threshold = static_cast<int>(std::floor(2.0 * (1.0 - 6.0 * code.gamma()) * code.N()));
    probe.min_distance = std::numeric_limits<int>::max();
    for (int t = 0; t < trials; ++t) {
        std::vector<uint32_t> m1(code.rs.k), m2(code.rs.k);
        do {
            for (auto& v : m1) v = static_cast<uint32_t>(rng() % q);
            for (auto& v : m2) v = static_cast<uint32_t>(rng() % q);
        } while (m1 == m2);
        int d = edit_distance(concat_encode(code, m1), concat_encode(code, m2));
        probe.min_distance = std::min(probe.min_distance, d);
        if (d <= probe.threshold) probe.violations.emplace_back(m1, m2);
    }
    return probe;
}

}  // namespace idc
