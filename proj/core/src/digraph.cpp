#include "twistspec/digraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace twistspec {

const char* orientation_label(Orientation o) {
    return o == Orientation::ColumnsAsImages ? "columns" : "rows";
}

Digraph from_matrix(const LinearMap& m, Orientation o) {
    if (!nonnegative(m))
        throw std::invalid_argument("digraph requires a nonnegative matrix");
    Digraph g;
    g.n = m.n;
    g.orientation = o;
    g.adj = o == Orientation::ColumnsAsImages ? transpose(m) : m;
    g.names.reserve(m.n);
    for (int i = 0; i < m.n; ++i) g.names.push_back("v" + std::to_string(i));
    return g;
}

Digraph from_matrix(const CurveSystem& sys, const LinearMap& m, Orientation o) {
    if (m.n != sys.dim())
        throw std::invalid_argument("matrix dimension does not match curve system");
    Digraph g = from_matrix(m, o);
    for (int i = 0; i < g.n; ++i) g.names[i] = curve_name(sys.curve_at(i));
    return g;
}

std::map<int, Int> self_loop_census(const Digraph& g) {
    std::map<int, Int> census;
    for (int i = 0; i < g.n; ++i) {
        if (g.adj.at(i, i) != 0) census[i] = g.adj.at(i, i);
    }
    return census;
}

std::vector<Int> path_counts(const Digraph& g, int j) {
    if (j < 0) throw std::invalid_argument("path length must be nonnegative");
    std::vector<Int> w(g.n, 1);
    for (int step = 0; step < j; ++step) w = twistspec::apply(g.adj, w);
    return w;
}

std::vector<int> exact_length_cover(const Digraph& g, int v, int k) {
    if (v < 0 || v >= g.n) throw std::out_of_range("vertex out of range");
    if (k < 0) throw std::invalid_argument("path length must be nonnegative");
    std::vector<char> cur(g.n, 0), nxt(g.n, 0);
    cur[v] = 1;
    for (int step = 0; step < k; ++step) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (int u = 0; u < g.n; ++u) {
            if (!cur[u]) continue;
            for (int w = 0; w < g.n; ++w) {
                if (g.adj.at(u, w) != 0) nxt[w] = 1;
            }
        }
        std::swap(cur, nxt);
    }
    std::vector<int> out;
    for (int i = 0; i < g.n; ++i) {
        if (cur[i]) out.push_back(i);
    }
    return out;
}

namespace {

// rows of a boolean matrix packed into 64-bit words
struct BoolMat {
    int n = 0, words = 0;
    std::vector<uint64_t> bits;

    explicit BoolMat(int dim) : n(dim), words((dim + 63) / 64), bits(static_cast<size_t>(dim) * words) {}

    uint64_t* row(int i) { return &bits[static_cast<size_t>(i) * words]; }
    const uint64_t* row(int i) const { return &bits[static_cast<size_t>(i) * words]; }
    void set(int i, int j) { row(i)[j / 64] |= 1ull << (j % 64); }

    bool all_ones() const {
        const int rem = n % 64;
        const uint64_t lastmask = rem == 0 ? ~0ull : (~0ull >> (64 - rem));
        for (int i = 0; i < n; ++i) {
            const uint64_t* r = row(i);
            for (int w = 0; w < words; ++w) {
                const uint64_t want = w == words - 1 ? lastmask : ~0ull;
                if ((r[w] & want) != want) return false;
            }
        }
        return true;
    }
};

BoolMat bool_mul(const BoolMat& x, const BoolMat& y) {
    BoolMat z(x.n);
    for (int i = 0; i < x.n; ++i) {
        const uint64_t* xr = x.row(i);
        uint64_t* zr = z.row(i);
        for (int w = 0; w < x.words; ++w) {
            uint64_t bitsw = xr[w];
            while (bitsw) {
                const int k = w * 64 + std::countr_zero(bitsw);
                bitsw &= bitsw - 1;
                const uint64_t* yr = y.row(k);
                for (int t = 0; t < x.words; ++t) zr[t] |= yr[t];
            }
        }
    }
    return z;
}

BoolMat support(const LinearMap& m) {
    BoolMat b(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) != 0) b.set(i, j);
    return b;
}

}  // namespace

std::optional<int> primitivity_exponent(const LinearMap& m, int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    if (!nonnegative(m))
        throw std::invalid_argument("primitivity requires a nonnegative matrix");
    const BoolMat base = support(m);
    BoolMat p = base;
    for (int r = 1; r <= cap; ++r) {
        if (p.all_ones()) return r;
        if (r < cap) p = bool_mul(p, base);
    }
    return std::nullopt;
}

namespace {

void scc_dfs1(const std::vector<std::vector<int>>& adj, int u,
              std::vector<char>& seen, std::vector<int>& order) {
    // iterative DFS, post-order
    std::vector<std::pair<int, size_t>> stack{{u, 0}};
    seen[u] = 1;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < adj[v].size()) {
            const int w = adj[v][next++];
            if (!seen[w]) {
                seen[w] = 1;
                stack.emplace_back(w, 0);
            }
        } else {
            order.push_back(v);
            stack.pop_back();
        }
    }
}

}  // namespace

bool is_strongly_connected(const LinearMap& m) {
    const int n = m.n;
    if (n == 0) return true;
    std::vector<std::vector<int>> fwd(n), rev(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != 0) {
                fwd[i].push_back(j);
                rev[j].push_back(i);
            }
    // Kosaraju restricted to the question "is everything one component":
    // one forward sweep must reach all vertices, then one reverse sweep.
    for (const auto* adj : {&fwd, &rev}) {
        std::vector<char> seen(n, 0);
        std::vector<int> order;
        scc_dfs1(*adj, 0, seen, order);
        if (static_cast<int>(order.size()) != n) return false;
    }
    return true;
}

bool is_strongly_connected(const Digraph& g) {
    return is_strongly_connected(g.adj);
}

int graph_period(const LinearMap& m) {
    if (!is_strongly_connected(m))
        throw std::invalid_argument("graph period requires strong connectivity");
    const int n = m.n;
    std::vector<int> level(n, -1);
    std::vector<int> queue{0};
    level[0] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
        const int u = queue[h];
        for (int v = 0; v < n; ++v) {
            if (m.at(u, v) != 0 && level[v] < 0) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    int g = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (m.at(u, v) != 0) g = std::gcd(g, level[u] + 1 - level[v]);
    return g == 0 ? 1 : std::abs(g);
}

std::string to_edge_list(const Digraph& g) {
    std::ostringstream os;
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) {
            const Int& mult = g.adj.at(u, v);
            if (mult != 0)
                os << g.names[u] << ' ' << g.names[v] << ' ' << mult.get_str() << '\n';
        }
    return os.str();
}

}  // namespace twistspec
