#include "idc/subspace_lcs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace idc {

std::array<Word, 8> subspace_strings(const Word& a, const Word& b, const Word& c) {
    const size_t n = a.size();
    if (b.size() != n || c.size() != n) throw std::invalid_argument("subspace strings need equal lengths");
    // independence over GF(2) via elimination on the three rows
    std::vector<Word> rows = {a, b, c};
    {
        std::vector<Word> m = rows;
        int rank = 0;
        for (size_t col = 0; col < n && rank < 3; ++col) {
            int sel = -1;
            for (int r = rank; r < 3; ++r)
                if (m[r][col]) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(m[rank], m[sel]);
            for (int r = 0; r < 3; ++r)
                if (r != rank && m[r][col])
                    for (size_t j = 0; j < n; ++j) m[r][j] ^= m[rank][j];
            ++rank;
        }
        if (rank < 3) {
            const char* names[3] = {"a", "b", "c"};
            // find the dependent combination for the error message
            for (int mask = 1; mask < 8; ++mask) {
                Word acc(n, 0);
                for (int r = 0; r < 3; ++r)
                    if (mask >> r & 1)
                        for (size_t j = 0; j < n; ++j) acc[j] ^= rows[r][j];
                bool zero = true;
                for (Sym s : acc)
                    if (s) zero = false;
                if (zero) {
                    std::string msg = "dependent inputs:";
                    for (int r = 0; r < 3; ++r)
                        if (mask >> r & 1) msg += std::string(" ") + names[r];
                    msg += " xor to zero";
                    throw std::invalid_argument(msg);
                }
            }
            throw std::invalid_argument("dependent inputs");
        }
    }
    std::array<Word, 8> out;
    for (int mask = 0; mask < 8; ++mask) {
        Word w(n, 0);
        for (int r = 0; r < 3; ++r)
            if (mask >> r & 1)
                for (size_t j = 0; j < n; ++j) w[j] ^= rows[r][j];
        out[mask] = std::move(w);
    }
    // order: 0, a, b, c, a+b, a+c, b+c, a+b+c
    std::array<Word, 8> ordered = {out[0], out[1], out[2], out[4],
                                   out[3], out[5], out[6], out[7]};
    return ordered;
}

LcsPair max_pairwise_lcs(const std::vector<Word>& strings) {
    if (strings.size() < 2) throw std::invalid_argument("need at least 2 strings");
    LcsPair best{-1, 0, 1};
    for (size_t i = 0; i < strings.size(); ++i)
        for (size_t j = i + 1; j < strings.size(); ++j) {
            int v = lcs(strings[i], strings[j]);
            if (v > best.value) best = LcsPair{v, static_cast<int>(i), static_cast<int>(j)};
        }
    return best;
}

ColumnHistogram column_histogram(const Word& x, const Word& y, const Word& z) {
    if (x.size() != y.size() || y.size() != z.size())
        throw std::invalid_argument("column histogram needs equal lengths");
    ColumnHistogram h;
    for (size_t i = 0; i < x.size(); ++i) {
        int col = (x[i] & 1) << 2 | (y[i] & 1) << 1 | (z[i] & 1);
        switch (col) {
            case 0b000: ++h.c000; break;
            case 0b011: ++h.c011; break;
            case 0b101: ++h.c101; break;
            case 0b110: ++h.c110; break;
            default: ++h.others; break;
        }
    }
    return h;
}

std::optional<BalancedTriple> select_balanced_triple(const Word& a, const Word& b, const Word& c,
                                                     double tol, LcsPair* witness) {
    auto strings = subspace_strings(a, b, c);
    const int n = static_cast<int>(a.size());
    const double w = (9.0 / (16.0 * std::log2(std::max(2, n))) + tol) * n;
    const double lo = n / 4.0 - w, hi = n / 4.0 + w;
    auto balanced = [&](const Word& x, const Word& y, const Word& z) {
        ColumnHistogram h = column_histogram(x, y, z);
        if (h.others) return false;
        for (int cnt : {h.c000, h.c011, h.c101, h.c110})
            if (cnt < lo || cnt > hi) return false;
        return true;
    };
    // triples (x, y, x^y) from the subspace; the b,c,b+c specialization is
    // tried first, then the remaining two-dimensional subspaces.
    std::map<Word, int> index;
    for (int i = 0; i < 8; ++i) index[strings[i]] = i;
    std::vector<std::array<int, 3>> triples = {{2, 3, 6}};
    for (int i = 1; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            Word x(strings[i]);
            for (size_t p = 0; p < x.size(); ++p) x[p] ^= strings[j][p];
            int k = index.at(x);
            if (k == 0) continue;
            std::array<int, 3> t = {i, j, k};
            if (t[0] == 2 && t[1] == 3) continue;  // already first
            if (t[1] > t[2]) continue;             // canonical: i < j < k not required, dedupe by i<j and k>j
            triples.push_back(t);
        }
    for (const auto& t : triples) {
        if (balanced(strings[t[0]], strings[t[1]], strings[t[2]]))
            return BalancedTriple{strings[t[0]], strings[t[1]], strings[t[2]]};
    }
    if (witness) {
        std::vector<Word> all(strings.begin(), strings.end());
        *witness = max_pairwise_lcs(all);
    }
    return std::nullopt;
}

namespace {

char letter(Sym s) { return s == 0 ? 'a' : (s == 1 ? 'b' : 'c'); }

struct RawBracket {
    int begin;
    int end;
};

// Transcription of the while-loop bracket inserter, with three repairs needed
// for well-formedness (validated by reproducing the worked examples):
//  1. when `next` is set and the current character recurs, a balanced bracket
//     closes exactly as in the new-character break branch;
//  2. the open bracket is flushed at end of input;
//  3. k = 0 empty brackets are never emitted.
// Run positions are tracked explicitly because after a splice the reduced
// run is no longer contiguous in the original string, so left-bracket
// positions cannot be derived from counters alone.
std::vector<RawBracket> raw_brackets(const Word& L) {
    std::vector<RawBracket> out;
    if (L.empty()) return out;
    std::vector<int> cur = {0};  // original indices of the current run
    Sym cur_char = L[0];
    std::vector<int> nxt;
    bool has_next = false;
    Sym next_char = 0;

    for (int p = 1; p < static_cast<int>(L.size()); ++p) {
        Sym m = L[p];
        if (has_next && cur.size() == nxt.size()) {
            out.push_back(RawBracket{cur.front(), p});
            cur.clear();
            nxt.clear();
            has_next = false;
            cur_char = m;
            cur.push_back(p);
            continue;
        }
        if (!has_next) {
            if (m == cur_char) {
                cur.push_back(p);
            } else {
                has_next = true;
                next_char = m;
                nxt.push_back(p);
            }
            continue;
        }
        if (m == next_char) {
            nxt.push_back(p);
            continue;
        }
        // pattern break (m == cur_char or a third character): close the
        // balanced chunk made of the last |nxt| current-run symbols plus the
        // next run
        const size_t keep = cur.size() - nxt.size();  // strictly positive here
        out.push_back(RawBracket{cur[keep], p});
        cur.resize(keep);
        nxt.clear();
        if (m == cur_char) {
            has_next = false;
            cur.push_back(p);
        } else {
            next_char = m;
            nxt.push_back(p);
        }
    }
    if (has_next && !nxt.empty()) {
        const size_t keep = cur.size() - nxt.size();
        out.push_back(RawBracket{cur[keep], static_cast<int>(L.size())});
    }
    return out;
}

}  // namespace

BracketTree bracket_parse(const Word& L) {
    BracketTree tree;
    tree.content = L;
    auto raw = raw_brackets(L);
    // containment forest: sort by (begin asc, end desc), then stack-nest
    std::sort(raw.begin(), raw.end(), [](const RawBracket& a, const RawBracket& b) {
        return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
    });
    std::vector<int> stack;
    for (const auto& rb : raw) {
        while (!stack.empty() && tree.nodes[stack.back()].end <= rb.begin) stack.pop_back();
        if (!stack.empty() && tree.nodes[stack.back()].end < rb.end)
            throw std::logic_error("crossing brackets");
        BracketNode node;
        node.begin = rb.begin;
        node.end = rb.end;
        int id = static_cast<int>(tree.nodes.size());
        if (stack.empty())
            tree.roots.push_back(id);
        else
            tree.nodes[stack.back()].children.push_back(id);
        tree.nodes.push_back(node);
        stack.push_back(id);
    }
    // levels, post-order (children were appended after parents; iterate reversed)
    for (int id = static_cast<int>(tree.nodes.size()) - 1; id >= 0; --id) {
        auto& node = tree.nodes[id];
        int m = 0;
        for (int c : node.children) m = std::max(m, tree.nodes[c].level);
        node.level = m + 1;
    }
    return tree;
}

std::string BracketTree::render(bool enhanced) const {
    std::string out;
    // events: open brackets at begin, close at end; nodes sorted structurally
    std::vector<std::pair<int, int>> opens, closes;  // (pos, id)
    for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
        opens.emplace_back(nodes[id].begin, id);
        closes.emplace_back(nodes[id].end, id);
    }
    for (int p = 0; p <= static_cast<int>(content.size()); ++p) {
        // closes first (inner before outer: larger begin closes first)
        std::vector<int> cl;
        for (auto& [pos, id] : closes)
            if (pos == p) cl.push_back(id);
        std::sort(cl.begin(), cl.end(), [&](int x, int y) { return nodes[x].begin > nodes[y].begin; });
        for (int id : cl) {
            out.push_back('>');
            out += std::to_string(enhanced ? nodes[id].enhanced_level : nodes[id].level);
        }
        std::vector<int> op;
        for (auto& [pos, id] : opens)
            if (pos == p) op.push_back(id);
        std::sort(op.begin(), op.end(), [&](int x, int y) { return nodes[x].end > nodes[y].end; });
        for (int id : op) out.push_back('<');
        if (p < static_cast<int>(content.size())) out.push_back(letter(content[p]));
    }
    return out;
}

namespace {

// reduced content of a node (or the whole string for id = -1): characters in
// its span not covered by children, with a flag for a child sitting directly
// before the character
struct ReducedChar {
    Sym ch;
    bool child_before;
};

std::vector<ReducedChar> reduced_content(const BracketTree& tree, int begin, int end,
                                         const std::vector<int>& children) {
    std::vector<ReducedChar> out;
    size_t ci = 0;
    std::vector<std::pair<int, int>> spans;
    for (int c : children) spans.emplace_back(tree.nodes[c].begin, tree.nodes[c].end);
    std::sort(spans.begin(), spans.end());
    bool pending_child = false;
    for (int p = begin; p < end; ++p) {
        if (ci < spans.size() && p == spans[ci].first) {
            p = spans[ci].second - 1;
            ++ci;
            pending_child = true;
            continue;
        }
        out.push_back(ReducedChar{tree.content[p], pending_child});
        pending_child = false;
    }
    return out;
}

// inner length 2k when the reduced content has the exact y.z shape (y all a,
// z over {b,c} with no child gaps inside z, |y| == |z|); 0 otherwise.
int inner_length_of(const std::vector<ReducedChar>& red) {
    int zlen = 0;
    int i = static_cast<int>(red.size()) - 1;
    for (; i >= 0; --i) {
        if (red[i].ch == 0) break;
        if (zlen > 0 && red[i + 1].child_before) break;  // child inside z
        ++zlen;
    }
    int alen = 0;
    for (; i >= 0; --i) {
        if (red[i].ch != 0) return 0;  // not y.z shaped
        ++alen;
    }
    if (alen != zlen) return 0;
    return 2 * zlen;
}

}  // namespace

BracketTree enhance(const BracketTree& tree) {
    BracketTree t = tree;
    // delete single-child wrappers: whenever a node has exactly one direct
    // child that contains all other brackets inside it, remove that child
    auto splice = [&](auto&& self, int id) -> void {
        auto& node = t.nodes[id];
        while (node.children.size() == 1) {
            int c = node.children[0];
            node.children = t.nodes[c].children;
            t.nodes[c].children.clear();
            t.nodes[c].begin = t.nodes[c].end = -1;  // detached
        }
        for (int c : node.children) self(self, c);
    };
    std::vector<int> fixed_roots = t.roots;
    for (int r : fixed_roots) splice(splice, r);

    // compact: rebuild without detached nodes
    BracketTree out;
    out.content = t.content;
    auto rebuild = [&](auto&& self, int id) -> int {
        const auto& node = t.nodes[id];
        BracketNode copy;
        copy.begin = node.begin;
        copy.end = node.end;
        int nid = static_cast<int>(out.nodes.size());
        out.nodes.push_back(copy);
        std::vector<int> kids;
        for (int c : node.children) kids.push_back(self(self, c));
        out.nodes[nid].children = kids;
        return nid;
    };
    for (int r : t.roots) out.roots.push_back(rebuild(rebuild, r));

    // enhanced levels and inner lengths, bottom-up
    auto assign = [&](auto&& self, int id) -> void {
        auto& node = out.nodes[id];
        for (int c : node.children) self(self, c);
        auto red = reduced_content(out, node.begin, node.end, node.children);
        node.inner_length = inner_length_of(red);
        if (node.children.empty()) {
            node.enhanced_level = 1;
            node.level = 1;
        } else {
            int mx = 0, cnt = 0;
            for (int c : node.children) {
                int l = out.nodes[c].enhanced_level;
                if (l > mx) {
                    mx = l;
                    cnt = 1;
                } else if (l == mx) {
                    ++cnt;
                }
            }
            node.enhanced_level = cnt >= 2 ? mx + 1 : mx;
            node.level = node.enhanced_level;
        }
    };
    for (int r : out.roots) assign(assign, r);
    return out;
}

int additional_value_bound(const BracketTree& enhanced) {
    auto av = [&](auto&& self, int id) -> int {
        const auto& node = enhanced.nodes[id];
        int sum = 0;
        for (int c : node.children) sum += self(self, c);
        int quarter = (node.inner_length + 3) / 4;
        return std::max(quarter, sum);
    };
    int total = 0;
    for (int r : enhanced.roots) total += av(av, r);
    return total;
}

int restricted_cs(const Word& x, const Word& y) {
    if (x.size() != y.size()) throw std::invalid_argument("restricted_cs needs equal lengths");
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int best = std::max(dp[i - 1][j], dp[i][j - 1]);
            if (x[i - 1] == y[j - 1]) {
                bool allowed = x[i - 1] == 0 || i == j;  // 1-matches are position-locked
                if (allowed) best = std::max(best, dp[i - 1][j - 1] + 1);
            }
            dp[i][j] = best;
        }
    return dp[n][n];
}

TheoremReport verify_theorem(const Word& a, const Word& b, const Word& c, double tol,
                             int assert_floor) {
    TheoremReport rep;
    rep.n = static_cast<int>(a.size());
    rep.threshold = rep.n / 2.0 + 3.0 * rep.n / (16.0 * std::log2(std::max(2, rep.n)));
    LcsPair witness;
    auto triple = select_balanced_triple(a, b, c, tol, &witness);
    rep.balanced = triple.has_value();
    if (!triple) {
        rep.witness = witness;
        rep.max_lcs = witness.value;
        rep.asserted = rep.n >= assert_floor;
        rep.holds = !rep.asserted || rep.max_lcs > rep.threshold;
        return rep;
    }
    // L: drop the (0,0,0) columns, map a=(0,1,1), b=(1,0,1), c=(1,1,0)
    Word L;
    for (size_t i = 0; i < triple->x.size(); ++i) {
        int col = (triple->x[i] & 1) << 2 | (triple->y[i] & 1) << 1 | (triple->z[i] & 1);
        if (col == 0b000) continue;
        L.push_back(col == 0b011 ? 0 : (col == 0b101 ? 1 : 2));
    }
    auto parsed = bracket_parse(L);
    auto enh = enhance(parsed);
    rep.certified_av = additional_value_bound(enh);
    std::vector<Word> tr = {triple->x, triple->y, triple->z};
    rep.witness = max_pairwise_lcs(tr);
    rep.max_lcs = rep.witness.value;
    rep.asserted = rep.n >= assert_floor;
    rep.holds = !rep.asserted || rep.max_lcs > rep.threshold;
    return rep;
}

}  // namespace idc
