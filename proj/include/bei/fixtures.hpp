#ifndef BEI_FIXTURES_HPP
#define BEI_FIXTURES_HPP

#include "bei/families.hpp"
#include "bei/monomial_ideal.hpp"

namespace bei {
namespace fixtures {

// Built-in example graphs, numbered 1..4:
//   1: generalized caterpillar (two edge cliques, whiskers incl. one on a clique vertex)
//   2: pendant cliques (6-path, K3 at the first vertex, a whisker, a K4)
//   3: generalized pendant cliques (two cliques at one vertex, two edge cliques)
//   4: the net
Graph figure_graph(int k);

// Recipes behind figures 1..3 (figure 3's given path is deliberately
// not a longest one).
GraphRecipe figure_recipe(int k);

// (x1*x2, x1*x3, x2*x3): the classical ideal whose symbolic square
// strictly exceeds its ordinary square, witnessed by x1*x2*x3.
MonomialIdeal triangle_edge_ideal();

}  // namespace fixtures
}  // namespace bei

#endif
