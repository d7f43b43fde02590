#ifndef BEI_PRIMES_HPP
#define BEI_PRIMES_HPP

#include "bei/families.hpp"
#include "bei/graph.hpp"
#include "bei/poly.hpp"

namespace bei {

struct PrimeComponent {
    VertexSet U;
    std::vector<VertexSet> components;  // components of the graph minus U
    int c = 0;                          // component count
    int height = 0;                     // |U| + n - c
};

// Generators of p_U: the variables x_s, y_s for s in U plus the edge
// binomials of the completed components.
struct PrimeIdeal {
    PrimeComponent comp;
    std::vector<Polynomial> gens;
};

PrimeIdeal prime_pU(const Graph& g, const VertexSet& u, Domain dom = Domain::rationals());

// Cut-set criterion: U is empty, or removing any single element of U
// strictly decreases the component count of the complement.
bool is_minimal_prime(const Graph& g, const VertexSet& u);

int height(const Graph& g, const VertexSet& u);

enum class PrimeEnumeration {
    full_subsets,
    // For block graphs only: candidates restricted to cut-vertex
    // subsets (provably sufficient there); falls back to full subsets
    // otherwise. The restriction is wrong for general graphs: on the
    // 4-cycle, {1,3} is a minimal cut set but has no cut vertices.
    restricted,
};

std::vector<PrimeComponent> minimal_primes(const Graph& g,
                                           PrimeEnumeration mode = PrimeEnumeration::restricted);

// Per-cut-vertex tallies behind the component-count formula
// c(S) = sum alpha_i + sum p(s_i) for S = {1 < s_1 < ... < s_m < n}
// on the central path of a built generalized pendant cliques graph.
struct CutLedger {
    std::vector<int> s;             // cut labels, ascending
    std::vector<int> cliques_at;    // p(s_i): number of cliques joined via s_i
    std::vector<int> attached_at;   // gamma_i: vertices attached via those cliques
    std::vector<int> alpha;         // alpha_0..alpha_m
    int formula_count = 0;
};

CutLedger count_components_formula(const GraphRecipe& recipe, const VertexSet& s);

enum class ComponentKind { prefix_interval, gap_interval, clique_remnant, suffix_interval };

std::string component_kind_name(ComponentKind k);

struct TaggedComponent {
    ComponentKind kind;
    VertexSet vertices;
    int cut_label = 0;  // for gap/clique entries, the s_i they follow
};

std::vector<TaggedComponent> components_by_kind(const GraphRecipe& recipe, const VertexSet& s);

}  // namespace bei

#endif
