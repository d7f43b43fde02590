#include "bei/families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace bei {

std::string family_name(Family f) {
    switch (f) {
        case Family::pendant_cliques: return "pendant-cliques";
        case Family::generalized_pendant_cliques: return "generalized-pendant-cliques";
        case Family::generalized_caterpillar: return "generalized-caterpillar";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "pendant-cliques") return Family::pendant_cliques;
    if (t == "generalized-pendant-cliques") return Family::generalized_pendant_cliques;
    if (t == "generalized-caterpillar") return Family::generalized_caterpillar;
    return std::nullopt;
}

GraphRecipe GraphRecipe::folded() const {
    GraphRecipe r = *this;
    for (int pos : r.whiskers) r.vertex_joins[pos].push_back(2);
    r.whiskers.clear();
    return r;
}

int GraphRecipe::total_vertices() const {
    GraphRecipe r = folded();
    int n = r.path_len;
    for (const auto& [pos, sizes] : r.vertex_joins) {
        (void)pos;
        for (int t : sizes) n += t - 1;
    }
    for (const auto& [e, t] : r.edge_joins) {
        (void)e;
        n += t - 2;
    }
    n += static_cast<int>(r.clique_whiskers.size());
    return n;
}

bool GraphRecipe::operator==(const GraphRecipe& o) const {
    return path_len == o.path_len && vertex_joins == o.vertex_joins && edge_joins == o.edge_joins &&
           whiskers == o.whiskers && clique_whiskers == o.clique_whiskers;
}

void validate_recipe(const GraphRecipe& recipe, Family family) {
    const GraphRecipe r = recipe.folded();
    if (r.path_len < 1) throw std::invalid_argument("recipe path must have at least one vertex");
    for (const auto& [pos, sizes] : r.vertex_joins) {
        if (pos < 1 || pos > r.path_len) throw std::invalid_argument("vertex join position off the path");
        if (sizes.empty()) throw std::invalid_argument("empty clique list at a path position");
        for (int t : sizes)
            if (t < 2) throw std::invalid_argument("vertex clique join needs size >= 2");
    }
    for (const auto& [e, t] : r.edge_joins) {
        if (e < 1 || e >= r.path_len) throw std::invalid_argument("edge join index off the path");
        if (t < 3) throw std::invalid_argument("edge clique join needs size >= 3");
    }
    for (const auto& [e, ord] : r.clique_whiskers) {
        auto it = r.edge_joins.find(e);
        if (it == r.edge_joins.end()) throw std::invalid_argument("clique whisker on an edge without a join");
        if (ord < 1 || ord > it->second - 2) throw std::invalid_argument("clique whisker ordinal out of range");
    }
    switch (family) {
        case Family::pendant_cliques:
            if (!r.edge_joins.empty()) throw std::invalid_argument("pendant cliques recipes have no edge joins");
            if (!r.clique_whiskers.empty()) throw std::invalid_argument("pendant cliques recipes have no clique whiskers");
            for (const auto& [pos, sizes] : r.vertex_joins) {
                (void)pos;
                if (sizes.size() > 1)
                    throw std::invalid_argument("pendant cliques join vertices are pairwise distinct");
            }
            break;
        case Family::generalized_pendant_cliques:
            if (!r.clique_whiskers.empty())
                throw std::invalid_argument("generalized pendant cliques recipes have no clique whiskers");
            break;
        case Family::generalized_caterpillar:
            for (const auto& [pos, sizes] : r.vertex_joins) {
                (void)pos;
                for (int t : sizes)
                    if (t != 2)
                        throw std::invalid_argument("caterpillar vertex attachments are whiskers only");
            }
            break;
    }
    if (r.total_vertices() > kMaxVertices) throw std::invalid_argument("recipe too large");
}

bool recipe_is_end_extendable(const GraphRecipe& recipe, Family family) {
    const GraphRecipe r = recipe.folded();
    auto has_join = [&](int pos, bool whisker_only) {
        auto it = r.vertex_joins.find(pos);
        if (it == r.vertex_joins.end()) return false;
        if (!whisker_only) return true;
        return std::any_of(it->second.begin(), it->second.end(), [](int t) { return t == 2; });
    };
    bool whisker_only = (family != Family::generalized_pendant_cliques);
    return has_join(1, whisker_only) || has_join(r.path_len, whisker_only);
}

GraphRecipe normalize_gpc(const GraphRecipe& recipe) {
    GraphRecipe r = recipe.folded();
    if (!r.clique_whiskers.empty())
        throw std::invalid_argument("clique whiskers are not representable as generalized pendant cliques");

    auto take_smallest = [](std::vector<int>& sizes) {
        auto it = std::min_element(sizes.begin(), sizes.end());
        int t = *it;
        sizes.erase(it);
        return t;
    };

    // absorb a join at the front by routing the path into it
    if (r.vertex_joins.count(1)) {
        auto sizes = r.vertex_joins[1];
        int t = take_smallest(sizes);
        GraphRecipe shifted;
        shifted.path_len = r.path_len + 1;
        for (const auto& [pos, v] : r.vertex_joins) {
            if (pos == 1) {
                if (!sizes.empty()) shifted.vertex_joins[2] = sizes;
            } else {
                shifted.vertex_joins[pos + 1] = v;
            }
        }
        for (const auto& [e, sz] : r.edge_joins) shifted.edge_joins[e + 1] = sz;
        if (t >= 3) shifted.edge_joins[1] = t;
        r = std::move(shifted);
    }
    if (r.vertex_joins.count(r.path_len)) {
        int last = r.path_len;
        auto sizes = r.vertex_joins[last];
        int t = take_smallest(sizes);
        if (sizes.empty())
            r.vertex_joins.erase(last);
        else
            r.vertex_joins[last] = sizes;
        r.path_len += 1;
        if (t >= 3) r.edge_joins[last] = t;
    }
    validate_recipe(r, Family::generalized_pendant_cliques);
    if (recipe_is_end_extendable(r, Family::generalized_pendant_cliques))
        throw std::logic_error("normalization left an extendable end");
    return r;
}

int LabelLayout::joins_at(int pos) const {
    return static_cast<int>(vertex_extras[pos].size());
}

int LabelLayout::gamma(int pos) const {
    int g = 0;
    for (auto [t, first] : vertex_extras[pos]) {
        (void)first;
        g += t - 1;
    }
    return g;
}

int LabelLayout::position_of_label(int label) const {
    for (int pos = 1; pos <= path_len; ++pos)
        if (path_label[pos] == label) return pos;
    return 0;
}

namespace {

LabelLayout compute_layout(const GraphRecipe& recipe, LabelingStyle style) {
    const int r = recipe.path_len;
    LabelLayout lay;
    lay.path_len = r;
    lay.path_label.assign(r + 1, 0);
    lay.vertex_extras.assign(r + 1, {});
    lay.edge_extras.assign(r, {0, 0});
    lay.whisker_leaf_label.assign(recipe.clique_whiskers.size(), 0);

    int cursor = 1;
    auto place_vertex_cliques = [&](int pos) {
        auto it = recipe.vertex_joins.find(pos);
        if (it == recipe.vertex_joins.end()) return;
        for (int t : it->second) {
            lay.vertex_extras[pos].push_back({t, cursor});
            cursor += t - 1;
        }
    };

    for (int pos = 1; pos <= r; ++pos) {
        if (pos == 1 && style == LabelingStyle::pendant_low_first) {
            place_vertex_cliques(1);
            lay.path_label[1] = cursor++;
        } else {
            lay.path_label[pos] = cursor++;
            place_vertex_cliques(pos);
        }
        if (pos < r) {
            auto it = recipe.edge_joins.find(pos);
            if (it != recipe.edge_joins.end()) {
                lay.edge_extras[pos] = {it->second, cursor};
                cursor += it->second - 2;
            }
            for (std::size_t w = 0; w < recipe.clique_whiskers.size(); ++w)
                if (recipe.clique_whiskers[w].first == pos) lay.whisker_leaf_label[w] = cursor++;
        }
    }
    lay.n = cursor - 1;
    return lay;
}

}  // namespace

BuiltGraph build(const GraphRecipe& input, LabelingStyle style) {
    GraphRecipe recipe = input.folded();
    if (recipe.path_len < 1) throw std::invalid_argument("recipe path must have at least one vertex");
    if (style == LabelingStyle::pendant_low_first)
        validate_recipe(recipe, Family::pendant_cliques);
    else if (recipe.clique_whiskers.empty())
        validate_recipe(recipe, Family::generalized_pendant_cliques);
    else
        validate_recipe(recipe, Family::generalized_caterpillar);

    const int r = recipe.path_len;
    Graph g = path_graph(r);

    // construction ids in op order; remember where each clique's extras land
    std::vector<std::vector<int>> vertex_extra_base(r + 1);
    std::vector<int> edge_extra_base(r, 0);
    for (int pos = 1; pos <= r; ++pos) {
        auto it = recipe.vertex_joins.find(pos);
        if (it == recipe.vertex_joins.end()) continue;
        for (int t : it->second) {
            vertex_extra_base[pos].push_back(g.n + 1);
            g = clique_join_vertex(g, pos, t);
        }
    }
    for (int e = 1; e < r; ++e) {
        auto it = recipe.edge_joins.find(e);
        if (it == recipe.edge_joins.end()) continue;
        edge_extra_base[e] = g.n + 1;
        g = clique_join_edge(g, {e, e + 1}, it->second);
    }
    std::vector<int> whisker_leaf_id(recipe.clique_whiskers.size(), 0);
    for (std::size_t w = 0; w < recipe.clique_whiskers.size(); ++w) {
        auto [e, ord] = recipe.clique_whiskers[w];
        int target = edge_extra_base[e] + ord - 1;
        whisker_leaf_id[w] = g.n + 1;
        g = clique_join_vertex(g, target, 2);
    }

    LabelLayout lay = compute_layout(recipe, style);
    if (lay.n != g.n) throw std::logic_error("layout size mismatch");

    Labeling sigma(g.n + 1, 0);
    for (int pos = 1; pos <= r; ++pos) {
        sigma[pos] = lay.path_label[pos];
        for (std::size_t c = 0; c < vertex_extra_base[pos].size(); ++c) {
            auto [t, first] = lay.vertex_extras[pos][c];
            for (int k = 0; k < t - 1; ++k) sigma[vertex_extra_base[pos][c] + k] = first + k;
        }
    }
    for (int e = 1; e < r; ++e) {
        if (!edge_extra_base[e]) continue;
        auto [t, first] = lay.edge_extras[e];
        for (int k = 0; k < t - 2; ++k) sigma[edge_extra_base[e] + k] = first + k;
    }
    for (std::size_t w = 0; w < recipe.clique_whiskers.size(); ++w)
        sigma[whisker_leaf_id[w]] = lay.whisker_leaf_label[w];

    BuiltGraph out;
    out.graph = Graph(g.n);
    for (auto [a, b] : g.edges) out.graph.add_edge(sigma[a], sigma[b]);
    out.path.resize(r);
    for (int pos = 1; pos <= r; ++pos) out.path[pos - 1] = lay.path_label[pos];
    out.sigma = sigma;
    out.layout = lay;
    return out;
}

BuiltGraph build_pendant_labeled(const GraphRecipe& recipe) {
    return build(recipe, LabelingStyle::pendant_low_first);
}

namespace {

struct PathSearch {
    const Graph& g;
    Family family;
    std::vector<VertexSet> blks;
    std::vector<std::vector<int>> vertex_blocks;  // block ids per vertex
    std::vector<int> block_count;
    std::vector<char> on_path;
    std::vector<int> path;
    std::set<std::vector<int>> found;
    int best_len = 0;

    PathSearch(const Graph& graph, Family fam) : g(graph), family(fam) {
        blks = blocks(g);
        vertex_blocks.assign(g.n + 1, {});
        for (std::size_t b = 0; b < blks.size(); ++b)
            for (int v : blks[b]) vertex_blocks[v].push_back(static_cast<int>(b));
        block_count.assign(blks.size(), 0);
        on_path.assign(g.n + 1, 0);
    }

    bool block_has(int b, int v) const {
        return std::binary_search(blks[b].begin(), blks[b].end(), v);
    }

    bool full_check() const {
        for (std::size_t b = 0; b < blks.size(); ++b) {
            int c = block_count[b];
            int size = static_cast<int>(blks[b].size());
            switch (family) {
                case Family::pendant_cliques:
                    if (c == 0) return false;
                    if (c == 2 && size != 2) return false;
                    break;
                case Family::generalized_pendant_cliques:
                    if (c == 0) return false;
                    break;
                case Family::generalized_caterpillar:
                    if (c == 1 && size != 2) return false;
                    if (c == 0) {
                        if (size != 2) return false;
                        int u = blks[b][0], w = blks[b][1];
                        // one endpoint is a fresh leaf, the other sits in an edge-join clique
                        auto is_leaf = [&](int z) { return vertex_blocks[z].size() == 1; };
                        auto in_edge_clique = [&](int z) {
                            for (int b2 : vertex_blocks[z])
                                if (block_count[b2] == 2 && blks[b2].size() >= 3) return true;
                            return false;
                        };
                        bool ok = (is_leaf(w) && in_edge_clique(u)) || (is_leaf(u) && in_edge_clique(w));
                        if (!ok) return false;
                    }
                    break;
            }
        }
        if (family == Family::pendant_cliques) {
            // at most one attached clique per path vertex
            for (int v : path) {
                int attached = 0;
                for (int b : vertex_blocks[v])
                    if (block_count[b] == 1) ++attached;
                if (attached > 1) return false;
            }
        }
        return true;
    }

    void record() {
        std::vector<int> rev(path.rbegin(), path.rend());
        const std::vector<int>& canon = (rev < path) ? rev : path;
        int len = static_cast<int>(path.size());
        if (len > best_len) {
            best_len = len;
            found.clear();
        }
        if (len == best_len) found.insert(canon);
    }

    // true if u can be appended while keeping per-block validity
    bool try_push(int u) {
        int prev = path.empty() ? 0 : path.back();
        for (int b : vertex_blocks[u]) {
            if (block_count[b] == 2) return false;
            if (block_count[b] == 1 && (prev == 0 || !block_has(b, prev))) return false;
        }
        for (int b : vertex_blocks[u]) ++block_count[b];
        on_path[u] = 1;
        path.push_back(u);
        return true;
    }

    void pop() {
        int u = path.back();
        path.pop_back();
        on_path[u] = 0;
        for (int b : vertex_blocks[u]) --block_count[b];
    }

    void dfs() {
        if (static_cast<int>(path.size()) >= best_len && full_check()) record();
        int tail = path.back();
        for (int u = 1; u <= g.n; ++u) {
            if (on_path[u] || !g.has_edge(tail, u)) continue;
            if (try_push(u)) {
                dfs();
                pop();
            }
        }
    }

    void run() {
        for (int v = 1; v <= g.n; ++v) {
            if (try_push(v)) {
                dfs();
                pop();
            }
        }
    }
};

struct PathDecomposition {
    GraphRecipe recipe;
    std::vector<int> built_to_input;
};

// Reads the recipe off a valid path, together with the explicit map
// from canonical built labels to input vertices.
std::optional<PathDecomposition> decompose_along_path(const Graph& g, Family family,
                                                      const CentralPath& p) {
    const int r = static_cast<int>(p.size());
    std::vector<int> pos(g.n + 1, 0);
    for (int k = 0; k < r; ++k) pos[p[k]] = k + 1;

    GraphRecipe recipe;
    recipe.path_len = r;

    // per position, (size, sorted extras); per edge, extras
    std::map<int, std::vector<std::pair<int, VertexSet>>> vjoins;
    std::map<int, VertexSet> ejoins;
    struct Whisker {
        int edge = 0;
        int attach = 0;
        int leaf = 0;
    };
    std::vector<Whisker> whisks;

    auto all_blocks = blocks(g);
    std::vector<std::vector<int>> vertex_blocks(g.n + 1);
    for (std::size_t b = 0; b < all_blocks.size(); ++b)
        for (int v : all_blocks[b]) vertex_blocks[v].push_back(static_cast<int>(b));

    for (const auto& blk : all_blocks) {
        std::vector<int> members;
        for (int v : blk)
            if (pos[v]) members.push_back(v);
        if (members.size() > 2) return std::nullopt;
        if (members.size() == 2) {
            int a = pos[members[0]], b = pos[members[1]];
            if (std::abs(a - b) != 1) return std::nullopt;
            if (blk.size() == 2) continue;  // plain path edge
            VertexSet extras;
            for (int v : blk)
                if (!pos[v]) extras.push_back(v);
            int e = std::min(a, b);
            if (ejoins.count(e)) return std::nullopt;
            ejoins[e] = extras;
        } else if (members.size() == 1) {
            VertexSet extras;
            for (int v : blk)
                if (v != members[0]) extras.push_back(v);
            vjoins[pos[members[0]]].push_back({static_cast<int>(blk.size()), extras});
        } else {
            // off-path whisker; only the caterpillar family admits these
            if (family != Family::generalized_caterpillar || blk.size() != 2) return std::nullopt;
            Whisker w;
            int u = blk[0], z = blk[1];
            if (vertex_blocks[z].size() == 1 && vertex_blocks[u].size() > 1) {
                w.attach = u;
                w.leaf = z;
            } else if (vertex_blocks[u].size() == 1 && vertex_blocks[z].size() > 1) {
                w.attach = z;
                w.leaf = u;
            } else {
                return std::nullopt;
            }
            whisks.push_back(w);
        }
    }

    // resolve whisker attachment points against the edge joins
    for (auto& w : whisks) {
        bool placed = false;
        for (auto& [e, extras] : ejoins) {
            auto it = std::find(extras.begin(), extras.end(), w.attach);
            if (it != extras.end()) {
                w.edge = e;
                placed = true;
                break;
            }
        }
        if (!placed) return std::nullopt;
    }

    for (auto& [p_, cliques] : vjoins)
        std::sort(cliques.begin(), cliques.end(),
                  [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return a.second < b.second;
                  });

    for (const auto& [pp, cliques] : vjoins) {
        std::vector<int>& sizes = recipe.vertex_joins[pp];
        for (const auto& [sz, extras] : cliques) {
            (void)extras;
            sizes.push_back(sz);
        }
    }
    for (const auto& [e, extras] : ejoins) recipe.edge_joins[e] = static_cast<int>(extras.size()) + 2;
    std::sort(whisks.begin(), whisks.end(), [&](const Whisker& a, const Whisker& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        if (a.attach != b.attach) return a.attach < b.attach;
        return a.leaf < b.leaf;
    });
    for (const auto& w : whisks) {
        const auto& extras = ejoins[w.edge];
        int ord = static_cast<int>(std::find(extras.begin(), extras.end(), w.attach) - extras.begin()) + 1;
        recipe.clique_whiskers.push_back({w.edge, ord});
    }

    try {
        validate_recipe(recipe, family);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }

    // explicit isomorphism: canonical built label -> input vertex
    BuiltGraph built = build(recipe);
    std::vector<int> to_input(built.graph.n + 1, 0);
    for (int k = 1; k <= r; ++k) to_input[built.layout.path_label[k]] = p[k - 1];
    for (const auto& [pp, cliques] : vjoins) {
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            auto [t, first] = built.layout.vertex_extras[pp][c];
            (void)t;
            const VertexSet& extras = cliques[c].second;
            for (std::size_t k = 0; k < extras.size(); ++k) to_input[first + static_cast<int>(k)] = extras[k];
        }
    }
    for (const auto& [e, extras] : ejoins) {
        auto [t, first] = built.layout.edge_extras[e];
        (void)t;
        for (std::size_t k = 0; k < extras.size(); ++k) to_input[first + static_cast<int>(k)] = extras[k];
    }
    for (std::size_t w = 0; w < whisks.size(); ++w)
        to_input[built.layout.whisker_leaf_label[w]] = whisks[w].leaf;

    if (built.graph.n != g.n) return std::nullopt;
    for (int v = 1; v <= g.n; ++v)
        if (!to_input[v]) return std::nullopt;

    Graph mapped(g.n);
    for (auto [a, b] : built.graph.edges) mapped.add_edge(to_input[a], to_input[b]);
    if (!(mapped == g)) return std::nullopt;

    return PathDecomposition{recipe, to_input};
}

}  // namespace

std::vector<CentralPath> central_paths(const Graph& g, Family family) {
    if (g.n == 0 || !is_connected(g) || !is_block_graph(g)) return {};
    PathSearch search(g, family);
    search.run();
    return {search.found.begin(), search.found.end()};
}

std::optional<Recognition> recognize(const Graph& g, Family family) {
    auto paths = central_paths(g, family);
    for (const auto& p : paths) {
        if (auto dec = decompose_along_path(g, family, p))
            return Recognition{dec->recipe, p, dec->built_to_input};
    }
    return std::nullopt;
}

bool is_net_free_generalized_caterpillar(const Graph& g) {
    return !contains_induced_net(g) && recognize(g, Family::generalized_caterpillar).has_value();
}

GraphRecipe to_central_gpc(const GraphRecipe& recipe) {
    GraphRecipe folded = recipe.folded();
    if (folded.clique_whiskers.empty()) return normalize_gpc(folded);
    Graph g = build(folded).graph;
    auto rec = recognize(g, Family::generalized_pendant_cliques);
    if (!rec)
        throw std::invalid_argument("graph is not a generalized pendant cliques graph");
    return rec->recipe;
}

namespace {

// non-decreasing clique size lists at one position, each size >= 2,
// total extra-vertex cost <= budget
void vertex_multisets(int budget, int min_size, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& emit) {
    emit(cur);
    for (int t = min_size; t - 1 <= budget; ++t) {
        cur.push_back(t);
        vertex_multisets(budget - (t - 1), t, cur, emit);
        cur.pop_back();
    }
}

void enumerate_gpc_rec(int r, int slot, int budget, GraphRecipe& cur,
                       std::vector<GraphRecipe>& out) {
    // slots: interior positions 2..r-1 first, then edges 1..r-1
    const int interior = std::max(0, r - 2);
    if (slot == interior + (r - 1)) {
        out.push_back(cur);
        return;
    }
    if (slot < interior) {
        int pos = slot + 2;
        std::vector<int> sizes;
        vertex_multisets(budget, 2, sizes, [&](const std::vector<int>& s) {
            int cost = 0;
            for (int t : s) cost += t - 1;
            if (!s.empty())
                cur.vertex_joins[pos] = s;
            else
                cur.vertex_joins.erase(pos);
            enumerate_gpc_rec(r, slot + 1, budget - cost, cur, out);
        });
        cur.vertex_joins.erase(pos);
    } else {
        int e = slot - interior + 1;
        enumerate_gpc_rec(r, slot + 1, budget, cur, out);  // no join on this edge
        for (int t = 3; t - 2 <= budget; ++t) {
            cur.edge_joins[e] = t;
            enumerate_gpc_rec(r, slot + 1, budget - (t - 2), cur, out);
        }
        cur.edge_joins.erase(e);
    }
}

void enumerate_caterpillar_whiskers(const GraphRecipe& base, int budget,
                                    std::vector<GraphRecipe>& out) {
    // path whiskers: multiset over interior positions; clique whiskers:
    // multiset over (edge, ordinal) pairs of the edge joins
    std::vector<int> interior_pos;
    for (int pos = 2; pos < base.path_len; ++pos) interior_pos.push_back(pos);
    std::vector<std::pair<int, int>> cw_slots;
    for (const auto& [e, t] : base.edge_joins)
        for (int ord = 1; ord <= t - 2; ++ord) cw_slots.push_back({e, ord});

    std::function<void(std::size_t, int, GraphRecipe&)> rec_cw = [&](std::size_t k, int left,
                                                                     GraphRecipe& cur) {
        if (k == cw_slots.size()) {
            out.push_back(cur);
            return;
        }
        rec_cw(k + 1, left, cur);
        for (int cnt = 1; cnt <= left; ++cnt) {
            for (int c = 0; c < cnt; ++c) cur.clique_whiskers.push_back(cw_slots[k]);
            rec_cw(k + 1, left - cnt, cur);
            for (int c = 0; c < cnt; ++c) cur.clique_whiskers.pop_back();
        }
    };

    std::function<void(std::size_t, int, GraphRecipe&)> rec_pw = [&](std::size_t k, int left,
                                                                     GraphRecipe& cur) {
        if (k == interior_pos.size()) {
            rec_cw(0, left, cur);
            return;
        }
        rec_pw(k + 1, left, cur);
        for (int cnt = 1; cnt <= left; ++cnt) {
            for (int c = 0; c < cnt; ++c) cur.whiskers.push_back(interior_pos[k]);
            rec_pw(k + 1, left - cnt, cur);
            for (int c = 0; c < cnt; ++c) cur.whiskers.pop_back();
        }
    };

    GraphRecipe cur = base;
    rec_pw(0, budget, cur);
}

}  // namespace

std::vector<GraphRecipe> enumerate_recipes(Family family, const SweepLimits& lim) {
    std::vector<GraphRecipe> out;
    switch (family) {
        case Family::pendant_cliques: {
            // at most one clique per position; whiskers never at the ends
            for (int r = 1; r <= lim.max_path; ++r) {
                std::vector<int> choice(r + 1, 0);
                std::function<void(int, int)> rec = [&](int pos, int budget) {
                    if (pos > r) {
                        GraphRecipe rc;
                        rc.path_len = r;
                        for (int p = 1; p <= r; ++p)
                            if (choice[p]) rc.vertex_joins[p] = {choice[p]};
                        if (rc.total_vertices() >= 1) out.push_back(rc);
                        return;
                    }
                    rec(pos + 1, budget);
                    bool end = (pos == 1 || pos == r);
                    for (int t = end ? 3 : 2; t <= lim.max_clique && t - 1 <= budget; ++t) {
                        choice[pos] = t;
                        rec(pos + 1, budget - (t - 1));
                        choice[pos] = 0;
                    }
                };
                rec(1, lim.max_n - r);
            }
            break;
        }
        case Family::generalized_pendant_cliques: {
            for (int r = 2; r <= lim.max_n; ++r) {
                GraphRecipe cur;
                cur.path_len = r;
                enumerate_gpc_rec(r, 0, lim.max_n - r, cur, out);
            }
            break;
        }
        case Family::generalized_caterpillar: {
            for (int r = 2; r <= lim.max_n; ++r) {
                // first the edge joins, then whiskers on what they leave
                std::vector<GraphRecipe> bases;
                std::function<void(int, int, GraphRecipe&)> rec_e = [&](int e, int budget,
                                                                        GraphRecipe& cur) {
                    if (e == r) {
                        bases.push_back(cur);
                        return;
                    }
                    rec_e(e + 1, budget, cur);
                    for (int t = 3; t - 2 <= budget; ++t) {
                        cur.edge_joins[e] = t;
                        rec_e(e + 1, budget - (t - 2), cur);
                        cur.edge_joins.erase(e);
                    }
                };
                GraphRecipe cur;
                cur.path_len = r;
                rec_e(1, lim.max_n - r, cur);
                for (const auto& base : bases) {
                    int used = base.total_vertices();
                    enumerate_caterpillar_whiskers(base, lim.max_n - used, out);
                }
            }
            break;
        }
    }
    std::vector<GraphRecipe> kept;
    for (const auto& rc : out) {
        if (rc.total_vertices() > lim.max_n) continue;
        if (recipe_is_end_extendable(rc, family)) continue;
        kept.push_back(rc);
    }
    return kept;
}

}  // namespace bei
