#include "bei/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bei {

Graph::Graph(int nverts) : n(nverts) {
    if (nverts < 0) throw std::invalid_argument("negative vertex count");
    if (nverts > kMaxVertices) throw std::invalid_argument("vertex count above supported bound");
    adj_.assign(n + 1, 0);
}

void Graph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("loops are not allowed");
    if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("edge endpoint out of range");
    if (i > j) std::swap(i, j);
    if (has_edge(i, j)) return;
    edges.emplace_back(i, j);
    std::sort(edges.begin(), edges.end());
    adj_[i] |= (1ULL << (j - 1));
    adj_[j] |= (1ULL << (i - 1));
}

bool Graph::has_edge(int i, int j) const {
    if (i < 1 || j < 1 || i > n || j > n || i == j) return false;
    return (adj_[i] >> (j - 1)) & 1ULL;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 1; w <= n; ++w)
        if (has_edge(v, w)) out.push_back(w);
    return out;
}

int Graph::degree(int v) const {
    return static_cast<int>(__builtin_popcountll(adj_[v]));
}

static void check_subset(const VertexSet& s, int n) {
    int prev = 0;
    for (int v : s) {
        if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
        if (v <= prev) throw std::invalid_argument("vertex set must be sorted and duplicate-free");
        prev = v;
    }
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
    check_subset(removed, g.n);
    std::uint64_t removed_mask = 0;
    for (int v : removed) removed_mask |= (1ULL << (v - 1));

    std::vector<VertexSet> out;
    std::uint64_t seen = removed_mask;
    for (int v = 1; v <= g.n; ++v) {
        if ((seen >> (v - 1)) & 1ULL) continue;
        // BFS over the surviving vertices
        VertexSet comp;
        std::deque<int> queue{v};
        seen |= (1ULL << (v - 1));
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            std::uint64_t next = g.adj_mask(u) & ~seen;
            while (next) {
                int w = __builtin_ctzll(next) + 1;
                next &= next - 1;
                seen |= (1ULL << (w - 1));
                queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    // BFS starts at increasing v, so components already come sorted by minimum
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return connected_components(g, {}).size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_subset(s, g.n);
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(s.size()));
    out.old_to_new.assign(g.n + 1, 0);
    out.new_to_old.assign(s.size() + 1, 0);
    int next = 1;
    for (int v : s) {
        out.old_to_new[v] = next;
        out.new_to_old[next] = v;
        ++next;
    }
    for (auto [i, j] : g.edges)
        if (out.old_to_new[i] && out.old_to_new[j])
            out.graph.add_edge(out.old_to_new[i], out.old_to_new[j]);
    return out;
}

int distance(const Graph& g, int v, int w) {
    if (v < 1 || w < 1 || v > g.n || w > g.n) throw std::invalid_argument("vertex out of range");
    if (v == w) return 0;
    std::vector<int> dist(g.n + 1, -1);
    dist[v] = 0;
    std::deque<int> queue{v};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int t = 1; t <= g.n; ++t) {
            if (g.has_edge(u, t) && dist[t] < 0) {
                dist[t] = dist[u] + 1;
                if (t == w) return dist[t];
                queue.push_back(t);
            }
        }
    }
    return kInfiniteDistance;
}

Graph clique_join_vertex(const Graph& g, int v, int t) {
    if (v < 1 || v > g.n) throw std::invalid_argument("join vertex not in graph");
    if (t < 2) throw std::invalid_argument("vertex clique join needs t >= 2");
    Graph out(g.n + t - 1);
    for (auto [a, b] : g.edges) out.add_edge(a, b);
    for (int k = 1; k < t; ++k) {
        out.add_edge(v, g.n + k);
        for (int l = k + 1; l < t; ++l) out.add_edge(g.n + k, g.n + l);
    }
    return out;
}

Graph clique_join_edge(const Graph& g, std::pair<int, int> e, int t) {
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("join edge not in graph");
    if (t < 3) throw std::invalid_argument("edge clique join needs t >= 3");
    Graph out(g.n + t - 2);
    for (auto [a, b] : g.edges) out.add_edge(a, b);
    for (int k = 1; k <= t - 2; ++k) {
        out.add_edge(e.first, g.n + k);
        out.add_edge(e.second, g.n + k);
        for (int l = k + 1; l <= t - 2; ++l) out.add_edge(g.n + k, g.n + l);
    }
    return out;
}

Graph net_graph() {
    Graph g(6);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    g.add_edge(3, 6);
    return g;
}

namespace {

// Degree sequence of the net inside its 6 vertices is 1,1,1,3,3,3.
bool induces_net(const Graph& g, const std::vector<int>& sub) {
    int deg[6] = {0, 0, 0, 0, 0, 0};
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (g.has_edge(sub[a], sub[b])) {
                ++deg[a];
                ++deg[b];
            }
    std::vector<int> tri, pend;
    for (int a = 0; a < 6; ++a) {
        if (deg[a] == 3)
            tri.push_back(a);
        else if (deg[a] == 1)
            pend.push_back(a);
        else
            return false;
    }
    if (tri.size() != 3) return false;
    // the three degree-3 vertices must form a triangle
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (!g.has_edge(sub[tri[a]], sub[tri[b]])) return false;
    // each pendant attaches to a distinct triangle vertex
    std::uint64_t used = 0;
    for (int p : pend) {
        int attach = -1;
        for (int a : tri)
            if (g.has_edge(sub[p], sub[a])) attach = a;
        if (attach < 0 || ((used >> attach) & 1ULL)) return false;
        used |= (1ULL << attach);
    }
    return true;
}

}  // namespace

std::optional<std::vector<int>> find_induced_net(const Graph& g) {
    if (g.n < 6) return std::nullopt;
    std::vector<int> sub(6);
    // all 6-subsets in lexicographic order so the witness is deterministic
    std::function<std::optional<std::vector<int>>(int, int)> rec =
        [&](int pos, int start) -> std::optional<std::vector<int>> {
        if (pos == 6) {
            if (induces_net(g, sub)) return sub;
            return std::nullopt;
        }
        for (int v = start; v <= g.n - (5 - pos); ++v) {
            sub[pos] = v;
            if (auto r = rec(pos + 1, v + 1)) return r;
        }
        return std::nullopt;
    };
    return rec(0, 1);
}

bool contains_induced_net(const Graph& g) { return find_induced_net(g).has_value(); }

bool is_closed_wrt(const Graph& g, const Labeling& sigma) {
    if (static_cast<int>(sigma.size()) != g.n + 1) throw std::invalid_argument("labeling size mismatch");
    std::vector<int> seen(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) {
        if (sigma[v] < 1 || sigma[v] > g.n || seen[sigma[v]]) throw std::invalid_argument("labeling not bijective");
        seen[sigma[v]] = 1;
    }
    // relabeled edge set
    Graph h(g.n);
    for (auto [a, b] : g.edges) h.add_edge(sigma[a], sigma[b]);
    for (auto [i, j] : h.edges) {
        for (auto [k, l] : h.edges) {
            if (i == k && j != l && !h.has_edge(j, l)) return false;
            if (j == l && i != k && !h.has_edge(i, k)) return false;
        }
    }
    return true;
}

namespace {

bool closed_search(const Graph& g, Labeling& sigma, std::vector<int>& inv, int next_label) {
    int n = g.n;
    if (next_label > n) return true;
    for (int v = 1; v <= n; ++v) {
        if (sigma[v]) continue;
        sigma[v] = next_label;
        inv[next_label] = v;
        // check the closedness condition on the part already labeled
        bool ok = true;
        for (int a = 1; ok && a <= next_label; ++a) {
            for (int b = a + 1; ok && b <= next_label; ++b) {
                for (int c = b + 1; ok && c <= next_label; ++c) {
                    // edges {a,b} & {a,c} (shared smaller) need {b,c};
                    // edges {a,c} & {b,c} (shared larger) need {a,b}
                    bool ab = g.has_edge(inv[a], inv[b]);
                    bool ac = g.has_edge(inv[a], inv[c]);
                    bool bc = g.has_edge(inv[b], inv[c]);
                    if (ab && ac && !bc) ok = false;
                    if (ac && bc && !ab) ok = false;
                }
            }
        }
        if (ok && closed_search(g, sigma, inv, next_label + 1)) return true;
        sigma[v] = 0;
        inv[next_label] = 0;
    }
    return false;
}

}  // namespace

ClosedSearchResult is_closed(const Graph& g, int max_n) {
    if (g.n > max_n) return {ClosedSearchStatus::unknown, std::nullopt};
    Labeling sigma(g.n + 1, 0);
    std::vector<int> inv(g.n + 1, 0);
    if (closed_search(g, sigma, inv, 1)) {
        if (!is_closed_wrt(g, sigma)) throw std::logic_error("closed search produced an invalid labeling");
        return {ClosedSearchStatus::found, sigma};
    }
    return {ClosedSearchStatus::none, std::nullopt};
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, stack;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> out_blocks;
    std::vector<int> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(graph.n + 1, 0), low(graph.n + 1, 0), is_cut(graph.n + 1, 0) {}

    void pop_block(std::pair<int, int> until) {
        VertexSet verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out_blocks.push_back(std::move(verts));
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (int v = 1; v <= g.n; ++v) {
            if (!g.has_edge(u, v)) continue;
            if (!disc[v]) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != 0 || children > 1) is_cut[u] = 1;
                    pop_block({u, v});
                }
            } else if (v != parent && disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }

    void run() {
        for (int v = 1; v <= g.n; ++v) {
            if (!disc[v]) {
                dfs(v, 0);
                // isolated vertex forms its own (edgeless) block
                bool in_any = false;
                for (const auto& b : out_blocks)
                    if (std::binary_search(b.begin(), b.end(), v)) in_any = true;
                if (!in_any) out_blocks.push_back({v});
            }
        }
        std::sort(out_blocks.begin(), out_blocks.end());
    }
};

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
    BlockFinder bf(g);
    bf.run();
    std::vector<int> out;
    for (int v = 1; v <= g.n; ++v)
        if (bf.is_cut[v]) out.push_back(v);
    return out;
}

std::vector<VertexSet> blocks(const Graph& g) {
    BlockFinder bf(g);
    bf.run();
    return bf.out_blocks;
}

bool is_block_graph(const Graph& g) {
    for (const auto& b : blocks(g)) {
        for (std::size_t a = 0; a < b.size(); ++a)
            for (std::size_t c = a + 1; c < b.size(); ++c)
                if (!g.has_edge(b[a], b[c])) return false;
    }
    return true;
}

bool is_complete(const Graph& g) {
    return g.edge_count() == g.n * (g.n - 1) / 2;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace bei
