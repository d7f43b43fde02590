#ifndef BEI_SYMBOLIC_HPP
#define BEI_SYMBOLIC_HPP

#include "bei/families.hpp"
#include "bei/monomial_ideal.hpp"

#include <optional>

namespace bei {

// Facets are supports of the minimal generators of a squarefree
// monomial ideal, as sorted variable indices.
struct FacetComplex {
    int nvars = 0;
    std::vector<std::vector<int>> facets;
};

// Alternating sequence v_1, F_1, ..., v_s, F_s, v_{s+1} = v_1 with
// v_i, v_{i+1} in F_i, all vertices and facets distinct.
struct ComplexCycle {
    std::vector<int> vertices;   // v_1..v_s (variable indices)
    std::vector<int> facet_ids;  // F_1..F_s
    int length() const { return static_cast<int>(vertices.size()); }
};

FacetComplex facet_complex(const MonomialIdeal& ideal);

// Smallest special odd cycle (length >= 3), searched in increasing
// length with vertices tried in index order; exhaustive.
std::optional<ComplexCycle> find_special_odd_cycle(const FacetComplex& fc);

// Minimal vertex covers of the facet complex: the minimal monomial
// primes of a squarefree monomial ideal.
std::vector<std::vector<int>> monomial_minimal_primes(const MonomialIdeal& ideal);

// Intersection of the m-th powers of all minimal monomial primes.
MonomialIdeal symbolic_power_monomial(const MonomialIdeal& ideal, int m);

struct PowerCheck {
    bool ok = true;
    int first_failure_t = 0;
    std::optional<Monomial> witness;  // in the symbolic but not the ordinary power
};

PowerCheck powers_equal_monomial(const MonomialIdeal& ideal, int t_max);

struct PowerPipelineReport {
    int n = 0;
    MonomialIdeal initial;
    bool squarefree = false;
    std::optional<ComplexCycle> cycle;
    PowerCheck powers;
    bool ok() const { return squarefree && !cycle.has_value() && powers.ok; }
};

// Builds the pendant cliques graph with its dedicated labeling, takes
// the lex initial ideal and checks: squarefree generators, no special
// odd cycle, and symbolic = ordinary powers up to t_max.
PowerPipelineReport power_equality_pipeline(const GraphRecipe& recipe, int t_max = 3);

// Same checks for an arbitrary squarefree monomial ideal.
PowerPipelineReport power_equality_report(const MonomialIdeal& ideal, int t_max = 3);

}  // namespace bei

#endif
