#include "bei/fixtures.hpp"

#include <stdexcept>

namespace bei {
namespace fixtures {

GraphRecipe figure_recipe(int k) {
    GraphRecipe r;
    switch (k) {
        case 1:
            r.path_len = 6;
            r.edge_joins = {{2, 4}, {4, 3}};
            r.whiskers = {2, 4, 4};
            r.clique_whiskers = {{2, 1}};
            return r;
        case 2:
            r.path_len = 6;
            r.vertex_joins = {{1, {3}}, {3, {2}}, {4, {4}}};
            return r;
        case 3:
            r.path_len = 5;
            r.vertex_joins = {{1, {3, 4}}, {3, {3, 3}}};
            r.edge_joins = {{1, 4}, {3, 3}};
            return r;
        default:
            throw std::invalid_argument("no recipe for this figure");
    }
}

Graph figure_graph(int k) {
    if (k == 4) return net_graph();
    if (k < 1 || k > 4) throw std::invalid_argument("figure number must be 1..4");
    return build(figure_recipe(k)).graph;
}

MonomialIdeal triangle_edge_ideal() {
    const int n = 3;
    std::vector<Monomial> gens;
    gens.push_back(Monomial::var_x(n, 1).mul(Monomial::var_x(n, 2)));
    gens.push_back(Monomial::var_x(n, 1).mul(Monomial::var_x(n, 3)));
    gens.push_back(Monomial::var_x(n, 2).mul(Monomial::var_x(n, 3)));
    return MonomialIdeal(2 * n, std::move(gens));
}

}  // namespace fixtures
}  // namespace bei
