#ifndef BEI_FAMILIES_HPP
#define BEI_FAMILIES_HPP

#include "bei/graph.hpp"

#include <map>
#include <optional>
#include <string>

namespace bei {

enum class Family {
    pendant_cliques,
    generalized_pendant_cliques,
    generalized_caterpillar,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// Constructive description of a family member: a path v_1..v_r with
// cliques attached via path vertices and path edges. Whiskers are
// size-2 vertex joins; the `whiskers` field is input sugar for them.
// `clique_whiskers` holds whiskers hanging off an edge-join clique
// vertex (present in some generalized caterpillar graphs): entries are
// (edge index, ordinal of the clique extra the leaf attaches to).
struct GraphRecipe {
    int path_len = 1;
    std::map<int, std::vector<int>> vertex_joins;
    std::map<int, int> edge_joins;
    std::vector<int> whiskers;
    std::vector<std::pair<int, int>> clique_whiskers;

    // whiskers merged into vertex_joins as size-2 entries
    GraphRecipe folded() const;
    int total_vertices() const;

    bool operator==(const GraphRecipe& o) const;
};

using CentralPath = std::vector<int>;

// Where every vertex of the built graph landed in the canonical labels.
struct LabelLayout {
    int n = 0;
    int path_len = 0;
    std::vector<int> path_label;                                // [path_len+1], 1-based positions
    std::vector<std::vector<std::pair<int, int>>> vertex_extras;  // per position: (size, first extra label)
    std::vector<std::pair<int, int>> edge_extras;                 // per edge index: (size, first extra label) or (0,0)
    std::vector<int> whisker_leaf_label;                          // parallel to clique_whiskers

    int joins_at(int pos) const;   // number of vertex-join cliques at position
    int gamma(int pos) const;      // number of vertex-join extras at position
    int position_of_label(int label) const;  // path position of a label, 0 if off-path
};

enum class LabelingStyle {
    standard,           // path vertex first, clique extras after it
    pendant_low_first,  // extras of cliques at the first path vertex come before it
};

struct BuiltGraph {
    Graph graph;        // vertices carry the canonical labels
    CentralPath path;   // labels of v_1..v_r
    Labeling sigma;     // construction order -> canonical label
    LabelLayout layout;
};

void validate_recipe(const GraphRecipe& recipe, Family family);

// No join that would let the path be extended within the family:
// vertex joins at the path ends are rejected for the generalized
// family, whiskers at the ends for the other two.
bool recipe_is_end_extendable(const GraphRecipe& recipe, Family family);

// Rewrites a pendant-cliques or caterpillar-style recipe as a
// generalized pendant cliques recipe whose path cannot be extended:
// whiskers become size-2 vertex joins, and a join sitting at a path end
// is absorbed by routing the path into it.
GraphRecipe normalize_gpc(const GraphRecipe& recipe);

BuiltGraph build(const GraphRecipe& recipe, LabelingStyle style = LabelingStyle::standard);

// Layout for the pendant-cliques labeling (first-vertex cliques get the
// lowest labels); rejects recipes outside that family.
BuiltGraph build_pendant_labeled(const GraphRecipe& recipe);

struct Recognition {
    GraphRecipe recipe;
    CentralPath path;                 // vertices of the input graph
    std::vector<int> built_to_input;  // explicit isomorphism, canonical label -> input vertex
};

std::optional<Recognition> recognize(const Graph& g, Family family);

// All maximum-length valid construction paths, one orientation each.
std::vector<CentralPath> central_paths(const Graph& g, Family family);

bool is_net_free_generalized_caterpillar(const Graph& g);

// Central generalized pendant cliques form of a recipe: direct rewrite
// when possible, otherwise re-recognition of the built graph (needed
// for caterpillar whiskers hanging off clique vertices).
GraphRecipe to_central_gpc(const GraphRecipe& recipe);

struct SweepLimits {
    int max_n = 8;
    int max_path = 5;    // pendant sweeps cap the path length
    int max_clique = 4;  // pendant sweeps cap the clique size
};

// Every recipe of the family within the limits whose path is not
// end-extendable; deterministic order.
std::vector<GraphRecipe> enumerate_recipes(Family family, const SweepLimits& lim);

}  // namespace bei

#endif
