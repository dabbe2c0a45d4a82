#include "idc/reed_solomon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace idc {
namespace {

using Poly = std::vector<uint32_t>;  // coefficient i = degree i

int poly_deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i]) return i;
    return -1;
}

uint32_t poly_eval(const FieldSpec& f, const Poly& p, uint32_t x) {
    uint32_t acc = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = f.add(f.mul(acc, x), p[i]);
    return acc;
}

// Quotient of a/b, remainder must be checked by the caller if it matters.
std::pair<Poly, Poly> poly_divmod(const FieldSpec& f, Poly a, const Poly& b) {
    int db = poly_deg(b);
    if (db < 0) throw std::invalid_argument("division by zero polynomial");
    Poly q(a.size(), 0);
    uint32_t lead_inv = f.inv(b[db]);
    for (int i = poly_deg(a); i >= db; --i) {
        if (!a[i]) continue;
        uint32_t c = f.mul(a[i], lead_inv);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] = f.add(a[i - db + j], f.mul(c, b[j]));
    }
    return {q, a};
}

// One nonzero kernel vector of the homogeneous system M v = 0 (rows x cols),
// or empty when the kernel is trivial.
std::vector<uint32_t> kernel_vector(const FieldSpec& f, std::vector<std::vector<uint32_t>> m, int cols) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        uint32_t inv = f.inv(m[r][c]);
        for (int j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !m[i][c]) continue;
            uint32_t fac = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = f.add(m[i][j], f.mul(fac, m[r][j]));
        }
        pivot_col[r] = c;
        ++r;
    }
    std::vector<uint8_t> is_pivot(cols, 0);
    for (int i = 0; i < r; ++i) is_pivot[pivot_col[i]] = 1;
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col < 0) return {};
    std::vector<uint32_t> v(cols, 0);
    v[free_col] = 1;
    for (int i = r - 1; i >= 0; --i) {
        uint32_t acc = 0;
        for (int j = pivot_col[i] + 1; j < cols; ++j) acc = f.add(acc, f.mul(m[i][j], v[j]));
        v[pivot_col[i]] = acc;  // pivot normalized to 1; -acc == acc in char 2
    }
    return v;
}

}  // namespace

RsSpec RsSpec::make(std::shared_ptr<const FieldSpec> field, int n, int k) {
    if (n <= 0 || k <= 0 || k > n) throw std::invalid_argument("need 0 < k <= n");
    if (static_cast<uint32_t>(n) > field->order()) throw std::invalid_argument("RS needs n <= q");
    RsSpec s;
    s.field = std::move(field);
    s.n = n;
    s.k = k;
    s.eval_points.reserve(n);
    const uint32_t q = s.field->order();
    for (int i = 0; i < n; ++i)
        s.eval_points.push_back(static_cast<uint32_t>(i) < q - 1 ? s.field->antilog(i) : 0);
    return s;
}

bool OuterWord::has_erasures() const {
    for (uint8_t e : erased)
        if (e) return true;
    return false;
}

OuterWord rs_encode(const RsSpec& spec, const std::vector<uint32_t>& message) {
    if (static_cast<int>(message.size()) != spec.k) throw std::invalid_argument("message length != k");
    OuterWord w;
    w.symbols.reserve(spec.n);
    for (int i = 0; i < spec.n; ++i) w.symbols.push_back(poly_eval(*spec.field, message, spec.eval_points[i]));
    return w;
}

std::optional<std::vector<uint32_t>> rs_unique_decode(const RsSpec& spec, const OuterWord& received) {
    const FieldSpec& f = *spec.field;
    if (static_cast<int>(received.symbols.size()) != spec.n) throw std::invalid_argument("received length != n");
    std::vector<int> usable;
    for (int i = 0; i < spec.n; ++i)
        if (received.erased.empty() || !received.erased[i]) usable.push_back(i);
    const int n_eras = spec.n - static_cast<int>(usable.size());
    int e = (spec.d() - 1 - n_eras) / 2;
    if (e < 0) return std::nullopt;
    // Berlekamp-Welch: E(x) * r_i = N(x) at usable points, deg E <= e,
    // deg N <= e + k - 1, E not identically zero.
    const int ecols = e + 1, ncols = e + spec.k;
    std::vector<std::vector<uint32_t>> m;
    for (int i : usable) {
        std::vector<uint32_t> row(ecols + ncols, 0);
        uint32_t xp = 1;
        for (int j = 0; j < ecols; ++j) {
            row[j] = f.mul(xp, received.symbols[i]);
            xp = f.mul(xp, spec.eval_points[i]);
        }
        xp = 1;
        for (int j = 0; j < ncols; ++j) {
            row[ecols + j] = xp;
            xp = f.mul(xp, spec.eval_points[i]);
        }
        m.push_back(std::move(row));
    }
    auto v = kernel_vector(f, std::move(m), ecols + ncols);
    if (v.empty()) return std::nullopt;
    Poly E(v.begin(), v.begin() + ecols), N(v.begin() + ecols, v.end());
    if (poly_deg(E) < 0) return std::nullopt;
    auto [q, rem] = poly_divmod(f, N, E);
    if (poly_deg(rem) >= 0) return std::nullopt;
    if (poly_deg(q) >= spec.k) return std::nullopt;
    std::vector<uint32_t> msg(q.begin(), q.begin() + spec.k);
    // Confirm the decoded codeword is within the radius on usable positions.
    int errs = 0;
    for (int i : usable)
        if (poly_eval(f, msg, spec.eval_points[i]) != received.symbols[i]) ++errs;
    if (2 * errs + n_eras >= spec.d()) return std::nullopt;
    return msg;
}

std::vector<std::vector<uint32_t>> rs_bruteforce_list(const RsSpec& spec, const OuterWord& received,
                                                      int agreement) {
    const FieldSpec& f = *spec.field;
    double total = std::pow(static_cast<double>(f.order()), spec.k);
    if (total > static_cast<double>(1 << 20)) throw std::invalid_argument("q^k too large for brute force");
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> msg(spec.k, 0);
    const uint64_t count = static_cast<uint64_t>(total);
    for (uint64_t idx = 0; idx < count; ++idx) {
        uint64_t v = idx;
        for (int j = 0; j < spec.k; ++j) {
            msg[j] = static_cast<uint32_t>(v % f.order());
            v /= f.order();
        }
        int agree = 0;
        for (int i = 0; i < spec.n; ++i)
            if (poly_eval(f, msg, spec.eval_points[i]) == received.symbols[i]) ++agree;
        if (agree >= agreement) out.push_back(msg);
    }
    return out;
}

namespace {

// C(a, b) mod 2 via Lucas.
inline uint32_t binom_mod2(int a, int b) { return (b & ~a) == 0 ? 1u : 0u; }

// Bivariate polynomial as coeff[a][b] (X-degree a, Y-degree b).
struct BiPoly {
    std::vector<std::vector<uint32_t>> c;  // c[a][b]

    bool zero() const {
        for (const auto& col : c)
            for (uint32_t v : col)
                if (v) return false;
        return true;
    }
};

// Q(0, Y) as a univariate polynomial in Y.
Poly eval_x0(const BiPoly& q) {
    if (q.c.empty()) return {};
    return Poly(q.c[0]);
}

// Largest s with X^s | Q; divide it out in place.
void strip_x(BiPoly& q) {
    size_t s = 0;
    while (s < q.c.size()) {
        bool all0 = true;
        for (uint32_t v : q.c[s])
            if (v) {
                all0 = false;
                break;
            }
        if (!all0) break;
        ++s;
    }
    if (s > 0 && s < q.c.size()) q.c.erase(q.c.begin(), q.c.begin() + s);
}

// Q(X, X*Y + g)
BiPoly shift_y(const FieldSpec& f, const BiPoly& q, uint32_t g) {
    size_t max_a = q.c.size();
    size_t max_b = 0;
    for (const auto& col : q.c) max_b = std::max(max_b, col.size());
    BiPoly r;
    r.c.assign(max_a + max_b, std::vector<uint32_t>(max_b, 0));
    std::vector<uint32_t> gpow(max_b, 1);
    for (size_t i = 1; i < max_b; ++i) gpow[i] = f.mul(gpow[i - 1], g);
    for (size_t a = 0; a < q.c.size(); ++a) {
        for (size_t b = 0; b < q.c[a].size(); ++b) {
            uint32_t coef = q.c[a][b];
            if (!coef) continue;
            // Y^b -> sum_j C(b,j) (XY)^j g^(b-j)
            for (size_t j = 0; j <= b; ++j) {
                if (!binom_mod2(static_cast<int>(b), static_cast<int>(j))) continue;
                uint32_t add = f.mul(coef, gpow[b - j]);
                r.c[a + j][j] = f.add(r.c[a + j][j], add);
            }
        }
    }
    return r;
}

void rr_roots(const FieldSpec& f, const BiPoly& q_in, int k, int depth, Poly prefix,
              std::vector<Poly>& out) {
    BiPoly q = q_in;
    strip_x(q);
    if (q.zero()) {
        // Every completion is a root; collect the zero-padded prefix.
        prefix.resize(k, 0);
        out.push_back(prefix);
        return;
    }
    if (depth >= k) return;
    Poly r = eval_x0(q);
    for (uint32_t g = 0; g < f.order(); ++g) {
        if (poly_eval(f, r, g) != 0) continue;
        Poly cand = prefix;
        cand.resize(depth + 1, 0);
        cand[depth] = g;
        BiPoly next = shift_y(f, q, g);
        // After substituting Y -> X*Y + g, the X-free part must vanish for
        // the candidate branch to stay alive; recurse regardless, the strip
        // plus zero test handles it.
        rr_roots(f, next, k, depth + 1, cand, out);
    }
}

int monomial_count(int dx_bound_y_weight, int D, int k1) {
    // number of (a,b) with a + k1*b < D, a,b >= 0 (k1 >= 1)
    int cnt = 0;
    for (int b = 0; k1 * b < D; ++b) cnt += D - k1 * b;
    (void)dx_bound_y_weight;
    return cnt;
}

}  // namespace

std::vector<std::vector<uint32_t>> rs_list_decode(const RsSpec& spec, const OuterWord& received,
                                                  int agreement) {
    const FieldSpec& f = *spec.field;
    if (static_cast<int>(received.symbols.size()) != spec.n) throw std::invalid_argument("received length != n");
    const int min_agree = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(spec.k) * spec.n)));
    if (agreement < min_agree)
        throw std::invalid_argument("agreement below the Guruswami-Sudan guarantee ceil(sqrt(kn)) = " +
                                    std::to_string(min_agree));
    if (agreement > spec.n) agreement = spec.n;

    auto finish = [&](std::vector<std::vector<uint32_t>> cands) {
        std::set<std::vector<uint32_t>> uniq;
        std::vector<std::vector<uint32_t>> out;
        for (auto& msg : cands) {
            if (static_cast<int>(msg.size()) != spec.k) continue;
            if (uniq.count(msg)) continue;
            int agree = 0;
            for (int i = 0; i < spec.n; ++i)
                if (poly_eval(f, msg, spec.eval_points[i]) == received.symbols[i]) ++agree;
            if (agree >= agreement) {
                uniq.insert(msg);
                out.push_back(msg);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    if (spec.k == 1) {
        // Constant polynomials: every field element is a candidate.
        std::vector<std::vector<uint32_t>> cands;
        for (uint32_t c = 0; c < f.order(); ++c) cands.push_back({c});
        return finish(std::move(cands));
    }

    const int k1 = spec.k - 1;
    // smallest multiplicity r with more monomials than constraints
    int r = 0;
    int D = 0;
    for (r = 1; r <= 64; ++r) {
        D = r * agreement;  // weighted degree bound: wdeg Q < r*t
        long constraints = static_cast<long>(spec.n) * r * (r + 1) / 2;
        if (monomial_count(0, D, k1) > constraints) break;
    }
    if (r > 64) throw std::invalid_argument("no feasible interpolation multiplicity; agreement too small");

    // monomials (a, b) with a + k1*b < D
    std::vector<std::pair<int, int>> mono;
    for (int b = 0; k1 * b < D; ++b)
        for (int a = 0; a + k1 * b < D; ++a) mono.emplace_back(a, b);

    std::vector<std::vector<uint32_t>> m;
    for (int i = 0; i < spec.n; ++i) {
        const uint32_t xi = spec.eval_points[i], yi = received.symbols[i];
        std::vector<uint32_t> xpow(D + 1, 1), ypow(D / k1 + 2, 1);
        for (int p = 1; p <= D; ++p) xpow[p] = f.mul(xpow[p - 1], xi);
        for (int p = 1; p < static_cast<int>(ypow.size()); ++p) ypow[p] = f.mul(ypow[p - 1], yi);
        for (int u = 0; u < r; ++u) {
            for (int v = 0; v + u < r; ++v) {
                std::vector<uint32_t> row(mono.size(), 0);
                for (size_t t = 0; t < mono.size(); ++t) {
                    auto [a, b] = mono[t];
                    if (a < u || b < v) continue;
                    if (!binom_mod2(a, u) || !binom_mod2(b, v)) continue;
                    row[t] = f.mul(xpow[a - u], ypow[b - v]);
                }
                m.push_back(std::move(row));
            }
        }
    }
    auto coeffs = kernel_vector(f, std::move(m), static_cast<int>(mono.size()));
    if (coeffs.empty()) throw std::runtime_error("interpolation failed to produce a nonzero polynomial");

    BiPoly q;
    int max_a = 0, max_b = 0;
    for (auto [a, b] : mono) {
        max_a = std::max(max_a, a);
        max_b = std::max(max_b, b);
    }
    q.c.assign(max_a + 1, std::vector<uint32_t>(max_b + 1, 0));
    for (size_t t = 0; t < mono.size(); ++t) q.c[mono[t].first][mono[t].second] = coeffs[t];

    std::vector<Poly> roots;
    rr_roots(f, q, spec.k, 0, {}, roots);
    return finish(std::move(roots));
}

uint64_t count_weight_bound(const RsSpec& spec, int w) {
    if (w < 0 || w > spec.n) throw std::invalid_argument("w out of [0,n]");
    // C(n,w) computed exactly; multiply/divide by q^(w-d+1) in long double and
    // take the ceiling, saturating on overflow.
    long double binom = 1.0L;
    for (int i = 0; i < w; ++i) binom = binom * (spec.n - i) / (i + 1);
    int expo = w - spec.d() + 1;
    long double val = binom;
    for (int i = 0; i < std::abs(expo); ++i) {
        if (expo > 0)
            val *= spec.field->order();
        else
            val /= spec.field->order();
        if (val > 1e30L) return std::numeric_limits<uint64_t>::max();
    }
    long double c = std::ceil(val);
    if (c > static_cast<long double>(std::numeric_limits<uint64_t>::max()))
        return std::numeric_limits<uint64_t>::max();
    return static_cast<uint64_t>(c);
}

uint64_t count_weight_exhaustive(const RsSpec& spec, int w) {
    const FieldSpec& f = *spec.field;
    double total = std::pow(static_cast<double>(f.order()), spec.k);
    if (total > static_cast<double>(1 << 20)) throw std::invalid_argument("q^k too large");
    uint64_t cnt = 0;
    std::vector<uint32_t> msg(spec.k, 0);
    for (uint64_t idx = 0; idx < static_cast<uint64_t>(total); ++idx) {
        uint64_t v = idx;
        for (int j = 0; j < spec.k; ++j) {
            msg[j] = static_cast<uint32_t>(v % f.order());
            v /= f.order();
        }
        int weight = 0;
        for (int i = 0; i < spec.n; ++i)
            if (poly_eval(f, msg, spec.eval_points[i]) != 0) ++weight;
        if (weight == w) ++cnt;
    }
    return cnt;
}

DenseReport check_dense(const RsSpec& spec, const OuterWord& y, const OuterWord& y2, int chunk) {
    if (chunk < 1 || chunk > spec.n) throw std::invalid_argument("chunk length out of range");
    if (y.symbols == y2.symbols) throw std::invalid_argument("check_dense requires distinct codewords");
    const int chunks = spec.n / chunk;
    DenseReport rep;
    rep.chunk_distances.reserve(chunks);
    const double thresh = static_cast<double>(spec.d()) / (2.0 * spec.n) * chunk;
    int good = 0;
    for (int t = 0; t < chunks; ++t) {
        int dist = 0;
        for (int i = t * chunk; i < (t + 1) * chunk; ++i)
            if (y.symbols[i] != y2.symbols[i]) ++dist;
        rep.chunk_distances.push_back(dist);
        if (dist >= thresh) ++good;
    }
    rep.fraction = static_cast<double>(good) / chunks;
    rep.ok = rep.fraction >= static_cast<double>(spec.d()) / (2.0 * spec.n);
    return rep;
}

}  // namespace idc
