#include "idc/inner_family.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace idc {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::kHN: return "hn";
        case Variant::kR13: return "r13";
        case Variant::kR12: return "r12";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "hn") return Variant::kHN;
    if (name == "r13") return Variant::kR13;
    if (name == "r12") return Variant::kR12;
    throw std::invalid_argument("unknown variant: " + name);
}

void InnerParams::validate() const {
    if (n <= 0 || k_prime <= 0 || n_prime <= 0) throw std::invalid_argument("n, k', n' must be positive");
    if (inner_degree < 1 || inner_degree > 16) throw std::invalid_argument("inner degree out of [1,16]");
    if (variant != Variant::kHN && inner_degree != 1)
        throw std::invalid_argument("binary variants need inner alphabet 2");
    if (sigma_out <= 1) throw std::invalid_argument("outer alphabet must have >= 2 symbols");
    // message embedding must fit: q_in^k' >= sigma_out
    double cap = std::pow(static_cast<double>(q_in()), k_prime);
    if (cap < sigma_out) throw std::invalid_argument("q_in^k' < |Sigma_out|: outer symbols do not fit");
    if (variant == Variant::kR12) {
        if (t < 1 || s < 1) throw std::invalid_argument("R12 needs t >= 1 and s >= 1");
        if (t + 1 > n) throw std::invalid_argument("R12 needs at least t+1 codes");
    }
    if (variant != Variant::kHN && sigma_out != (1 << k_prime))
        throw std::invalid_argument("binary variants need |Sigma_out| = 2^k'");
}

std::vector<uint32_t> InnerFamily::embed_message(uint32_t value) const {
    std::vector<uint32_t> digits(params.k_prime, 0);
    const uint32_t q = params.q_in();
    for (int i = 0; i < params.k_prime; ++i) {
        digits[i] = value % q;
        value /= q;
    }
    return digits;
}

Word InnerFamily::encode_message(int code_index, uint32_t value) const {
    const auto digits = embed_message(value);
    const auto& mat = matrices[code_index];
    Word cw(params.n_prime, 0);
    for (int r = 0; r < params.k_prime; ++r) {
        if (!digits[r]) continue;
        for (int c = 0; c < params.n_prime; ++c)
            cw[c] = inner_field->add(cw[c], inner_field->mul(digits[r], mat[r][c]));
    }
    return cw;
}

std::optional<uint32_t> InnerFamily::lookup_codeword(int code_index, const Word& cw) const {
    const auto& book = codebooks[code_index];
    for (uint32_t m = 0; m < book.size(); ++m)
        if (book[m] == cw) return m;
    return std::nullopt;
}

uint8_t UniformBitSource::next_bit() {
    if (left_ == 0) {
        // splitmix64 stream; stable across platforms
        state_ += 0x9E3779B97f4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        buf_ = z ^ (z >> 31);
        left_ = 64;
    }
    uint8_t b = buf_ & 1;
    buf_ >>= 1;
    --left_;
    return b;
}

namespace {

int matrix_rank(const FieldSpec& f, std::vector<std::vector<uint32_t>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c]) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[rank], m[sel]);
        uint32_t inv = f.inv(m[rank][c]);
        for (int j = c; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || !m[r][c]) continue;
            uint32_t fac = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] = f.add(m[r][j], f.mul(fac, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

bool word_is_zero(const Word& w) {
    for (Sym s : w)
        if (s) return false;
    return true;
}

}  // namespace

std::optional<InnerFamily> sample_family(const InnerParams& params, BitSource& source) {
    params.validate();
    InnerFamily fam;
    fam.params = params;
    fam.inner_field = FieldSpec::with_degree(params.inner_degree);
    fam.matrices.assign(params.n, {});
    for (int i = 0; i < params.n; ++i) {
        auto& mat = fam.matrices[i];
        mat.assign(params.k_prime, std::vector<uint32_t>(params.n_prime, 0));
        for (int r = 0; r < params.k_prime; ++r)
            for (int c = 0; c < params.n_prime; ++c) {
                uint32_t v = 0;
                for (int b = 0; b < params.inner_degree; ++b)
                    v |= static_cast<uint32_t>(source.next_bit()) << b;
                mat[r][c] = v;
            }
    }
    for (int i = 0; i < params.n; ++i)
        if (matrix_rank(*fam.inner_field, fam.matrices[i]) != params.k_prime) return std::nullopt;
    fam.codebooks.assign(params.n, {});
    for (int i = 0; i < params.n; ++i) {
        fam.codebooks[i].reserve(params.sigma_out);
        for (int m = 0; m < params.sigma_out; ++m) fam.codebooks[i].push_back(fam.encode_message(i, m));
    }
    return fam;
}

PropertyReport check_property_hn(const InnerFamily& family, const CheckOptions& opts) {
    if (family.params.variant != Variant::kHN) throw std::invalid_argument("variant is not HN");
    const int n = family.params.n;
    const int book = family.params.sigma_out;
    const int thresh = static_cast<int>(std::floor(family.params.gamma * family.params.n_prime + 1e-9));
    PropertyReport rep;
    rep.property = "P-HN";
    bool exhaustive = opts.force_exhaustive.value_or(static_cast<uint64_t>(n) * book <= (1ull << 12));
    rep.mode = exhaustive ? "exhaustive" : "sampled";

    auto check_pair = [&](int i, uint32_t mi, int j, uint32_t mj) {
        const Word& x = family.codebooks[i][mi];
        const Word& y = family.codebooks[j][mj];
        if (i == j) {
            if (mi == mj) return;
        } else {
            if (word_is_zero(x) && word_is_zero(y)) return;
        }
        int v = lcs(x, y);
        ++rep.trials;
        if (v > thresh) rep.violations.push_back(Violation{{static_cast<uint32_t>(i), static_cast<uint32_t>(j), mi, mj}, v});
    };

    if (exhaustive) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (uint32_t mi = 0; mi < static_cast<uint32_t>(book); ++mi)
                    for (uint32_t mj = (i == j ? mi + 1 : 0); mj < static_cast<uint32_t>(book); ++mj)
                        check_pair(i, mi, j, mj);
    } else {
        std::mt19937_64 rng(opts.rng_seed);
        for (uint64_t t = 0; t < opts.trials; ++t)
            check_pair(static_cast<int>(rng() % n), static_cast<uint32_t>(rng() % book),
                       static_cast<int>(rng() % n), static_cast<uint32_t>(rng() % book));
    }
    rep.passed = rep.violations.empty();
    return rep;
}

PropertyReport check_property_13(const InnerFamily& family, const CheckOptions& opts) {
    if (family.params.variant != Variant::kR13) throw std::invalid_argument("variant is not R13");
    const int n = family.params.n;
    const int book = family.params.sigma_out;
    const int dp = family.params.d_prime;
    PropertyReport rep;
    rep.property = "P-13";
    // full work ~ n * (n-1) * book^3 substring DPs
    uint64_t full = static_cast<uint64_t>(n) * (n - 1) * book * book * book;
    bool exhaustive = opts.force_exhaustive.value_or(full <= 2'000'000ull);
    rep.mode = exhaustive ? "exhaustive" : "sampled";

    auto check_one = [&](int i, uint32_t mw, int j, uint32_t mu, uint32_t mv) {
        const Word& w = family.codebooks[i][mw];
        if (word_is_zero(w)) return;
        const Word& u = family.codebooks[j][mu];
        const Word& v = family.codebooks[j + 1][mv];
        if (w == u || w == v) return;
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        ++rep.trials;
        auto sm = substring_edit_distance(w, uv);
        if (sm.distance < dp)
            rep.violations.push_back(Violation{{static_cast<uint32_t>(i), static_cast<uint32_t>(j), mw, mu, mv}, sm.distance});
    };

    if (exhaustive) {
        for (int i = 0; i < n; ++i)
            for (uint32_t mw = 1; mw < static_cast<uint32_t>(book); ++mw)
                for (int j = 0; j + 1 < n; ++j)
                    for (uint32_t mu = 0; mu < static_cast<uint32_t>(book); ++mu)
                        for (uint32_t mv = 0; mv < static_cast<uint32_t>(book); ++mv)
                            check_one(i, mw, j, mu, mv);
    } else {
        std::mt19937_64 rng(opts.rng_seed);
        for (uint64_t t = 0; t < opts.trials; ++t)
            check_one(static_cast<int>(rng() % n), 1 + static_cast<uint32_t>(rng() % (book - 1)),
                      static_cast<int>(rng() % (n - 1)), static_cast<uint32_t>(rng() % book),
                      static_cast<uint32_t>(rng() % book));
    }
    rep.passed = rep.violations.empty();
    return rep;
}

std::pair<int, int> count_unique_blocks(const std::vector<std::pair<int, uint32_t>>& w_blocks,
                                        const std::vector<std::pair<int, uint32_t>>& u_blocks) {
    auto unique_count = [](const std::vector<std::pair<int, uint32_t>>& a,
                           const std::vector<std::pair<int, uint32_t>>& b) {
        int cnt = 0;
        for (const auto& [ci, m] : a) {
            if (m == 0) continue;  // zero block is never unique
            bool matched = false;
            for (const auto& [cj, m2] : b)
                if (cj == ci && m2 == m) {
                    matched = true;
                    break;
                }
            if (!matched) ++cnt;
        }
        return cnt;
    };
    return {unique_count(w_blocks, u_blocks), unique_count(u_blocks, w_blocks)};
}

PropertyReport check_property_12(const InnerFamily& family, uint64_t trials, const CheckOptions& opts) {
    if (family.params.variant != Variant::kR12) throw std::invalid_argument("variant is not R12");
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    const int n = family.params.n;
    const int t = family.params.t;
    const int s = family.params.s;
    const int book = family.params.sigma_out;
    const int dp = family.params.d_prime;
    PropertyReport rep;
    rep.property = "P-12";
    double combos = std::pow(static_cast<double>(book), 2 * t + 1);
    bool exhaustive = opts.force_exhaustive.value_or(combos <= static_cast<double>(1 << 20) &&
                                                     combos * (n - t + 1) * (n - t) <= 4'000'000.0);
    rep.mode = exhaustive ? "exhaustive" : "sampled";

    auto check_one = [&](int i, int j, const std::vector<uint32_t>& wm, const std::vector<uint32_t>& um) {
        std::vector<std::pair<int, uint32_t>> wb, ub;
        for (int l = 0; l < t; ++l) wb.emplace_back(i + l, wm[l]);
        for (int l = 0; l < t + 1; ++l) ub.emplace_back(j + l, um[l]);
        auto [uw, uu] = count_unique_blocks(wb, ub);
        if (std::max(uw, uu) < s) return;  // trigger is "in w or u"
        Word w, u;
        for (int l = 0; l < t; ++l) {
            const Word& blk = family.codebooks[i + l][wm[l]];
            w.insert(w.end(), blk.begin(), blk.end());
        }
        for (int l = 0; l < t + 1; ++l) {
            const Word& blk = family.codebooks[j + l][um[l]];
            u.insert(u.end(), blk.begin(), blk.end());
        }
        ++rep.trials;
        auto sm = substring_edit_distance(w, u);
        if (sm.distance < dp) {
            Violation viol;
            viol.ids = {static_cast<uint32_t>(i), static_cast<uint32_t>(j)};
            viol.ids.insert(viol.ids.end(), wm.begin(), wm.end());
            viol.ids.insert(viol.ids.end(), um.begin(), um.end());
            viol.value = sm.distance;
            rep.violations.push_back(std::move(viol));
        }
    };

    if (exhaustive) {
        std::vector<uint32_t> wm(t), um(t + 1);
        for (int i = 0; i + t - 1 < n; ++i) {
            for (int j = 0; j + t < n; ++j) {
                uint64_t wtot = 1, utot = 1;
                for (int l = 0; l < t; ++l) wtot *= book;
                for (int l = 0; l < t + 1; ++l) utot *= book;
                for (uint64_t wi = 0; wi < wtot; ++wi) {
                    uint64_t v = wi;
                    for (int l = 0; l < t; ++l) {
                        wm[l] = static_cast<uint32_t>(v % book);
                        v /= book;
                    }
                    for (uint64_t ui = 0; ui < utot; ++ui) {
                        uint64_t v2 = ui;
                        for (int l = 0; l < t + 1; ++l) {
                            um[l] = static_cast<uint32_t>(v2 % book);
                            v2 /= book;
                        }
                        check_one(i, j, wm, um);
                    }
                }
            }
        }
    } else {
        std::mt19937_64 rng(opts.rng_seed);
        std::vector<uint32_t> wm(t), um(t + 1);
        for (uint64_t tr = 0; tr < trials; ++tr) {
            int i = static_cast<int>(rng() % (n - t + 1));
            int j = static_cast<int>(rng() % (n - t));
            for (int l = 0; l < t; ++l) wm[l] = static_cast<uint32_t>(rng() % book);
            for (int l = 0; l < t + 1; ++l) um[l] = static_cast<uint32_t>(rng() % book);
            check_one(i, j, wm, um);
        }
    }
    rep.passed = rep.violations.empty();
    return rep;
}

PropertyReport check_property(const InnerFamily& family, const CheckOptions& opts) {
    switch (family.params.variant) {
        case Variant::kHN: return check_property_hn(family, opts);
        case Variant::kR13: return check_property_13(family, opts);
        case Variant::kR12: return check_property_12(family, opts.trials, opts);
    }
    throw std::logic_error("unreachable");
}

SearchOutcome search_family(const InnerParams& params, const BiasSpec& bias, uint64_t budget,
                            const CheckOptions& opts, uint64_t sample_rng_seed) {
    params.validate();
    if (bias.n_bits < params.total_bits())
        throw std::invalid_argument("bias spec output shorter than the family needs");
    SearchOutcome out;
    const int s = bias.seed_length();
    const bool enumerate = s < 63 && (1ull << s) <= budget;
    const uint64_t iters = enumerate ? (1ull << s) : budget;
    std::mt19937_64 sampler(sample_rng_seed);

    for (uint64_t it = 0; it < iters; ++it) {
        uint64_t idx = enumerate ? it : (sampler() & ((1ull << s) - 1));
        Seed seed = Seed::from_index(idx, s);
        StreamBitSource src{BitStream(generate(bias, seed))};
        auto fam = sample_family(params, src);
        ++out.seeds_tried;
        if (!fam) {
            ++out.rank_rejects;
            continue;
        }
        fam->seed = seed;
        PropertyReport rep = check_property(*fam, opts);
        if (rep.passed) {
            fam->verified = rep;
            out.found = true;
            out.family = std::move(fam);
            out.best_seed = idx;
            out.best_violations = 0;
            return out;
        }
        if (!out.family || rep.violations.size() < out.best_violations) {
            out.best_violations = rep.violations.size();
            out.best_seed = idx;
            fam->verified = rep;
            out.family = std::move(fam);
        }
    }
    return out;
}

}  // namespace idc
