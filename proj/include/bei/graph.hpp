#ifndef BEI_GRAPH_HPP
#define BEI_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bei {

// Vertices are 1..n. Sorted ascending, no duplicates.
using VertexSet = std::vector<int>;

// sigma[v] for v = 1..n; index 0 unused.
using Labeling = std::vector<int>;

constexpr int kMaxVertices = 64;

// Simple undirected graph on 1..n. Edge list is kept canonical
// (i < j, sorted), so graph equality is plain comparison.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    explicit Graph(int nverts);

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    std::uint64_t adj_mask(int v) const { return adj_[v]; }

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }

private:
    std::vector<std::uint64_t> adj_;  // adj_[v] bit (w-1) set iff {v,w} edge
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // size n+1, 0 where removed
    std::vector<int> new_to_old;  // size |S|+1
};

constexpr int kInfiniteDistance = -1;

// Connected components of the induced subgraph on 1..n minus `removed`,
// sorted by minimum element.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed);

bool is_connected(const Graph& g);

// Induced subgraph on S with the order-preserving relabeling to 1..|S|.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Shortest-path edge count, kInfiniteDistance when disconnected.
int distance(const Graph& g, int v, int w);

// Attach K_t to g at vertex v (t >= 2): t-1 fresh vertices adjacent to v
// and to each other.
Graph clique_join_vertex(const Graph& g, int v, int t);

// Attach K_t to g along edge e (t >= 3): t-2 fresh vertices adjacent to
// both endpoints and to each other.
Graph clique_join_edge(const Graph& g, std::pair<int, int> e, int t);

// The net: a triangle with one pendant vertex on each corner.
Graph net_graph();

// Finds a 6-subset inducing a net, if any.
std::optional<std::vector<int>> find_induced_net(const Graph& g);
bool contains_induced_net(const Graph& g);

// Closedness of G with respect to a labeling: for edges {i<j}, {k<l},
// i=k forces {j,l} in E and j=l forces {i,k} in E.
bool is_closed_wrt(const Graph& g, const Labeling& sigma);

enum class ClosedSearchStatus { found, none, unknown };

struct ClosedSearchResult {
    ClosedSearchStatus status;
    std::optional<Labeling> labeling;
};

// Exhaustive search for a closed labeling, capped by vertex count;
// beyond the cap the result is `unknown`.
ClosedSearchResult is_closed(const Graph& g, int max_n = 10);

// Cut vertices and biconnected components (blocks), as vertex sets.
std::vector<int> cut_vertices(const Graph& g);
std::vector<VertexSet> blocks(const Graph& g);

// Every block induces a complete subgraph.
bool is_block_graph(const Graph& g);

bool is_complete(const Graph& g);
Graph path_graph(int n);
Graph complete_graph(int n);

}  // namespace bei

#endif
