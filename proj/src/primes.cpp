#include "bei/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace bei {

PrimeIdeal prime_pU(const Graph& g, const VertexSet& u, Domain dom) {
    PrimeIdeal out;
    out.comp.U = u;
    out.comp.components = connected_components(g, u);
    out.comp.c = static_cast<int>(out.comp.components.size());
    out.comp.height = static_cast<int>(u.size()) + g.n - out.comp.c;
    for (int s : u) {
        out.gens.push_back(Polynomial::from_term(dom, Monomial::var_x(g.n, s), 1));
        out.gens.push_back(Polynomial::from_term(dom, Monomial::var_y(g.n, s), 1));
    }
    for (const auto& comp : out.comp.components)
        for (std::size_t a = 0; a < comp.size(); ++a)
            for (std::size_t b = a + 1; b < comp.size(); ++b)
                out.gens.push_back(EdgeBinomial(comp[a], comp[b]).to_poly(g.n, dom));
    return out;
}

bool is_minimal_prime(const Graph& g, const VertexSet& u) {
    if (!is_connected(g)) throw std::invalid_argument("minimality criterion needs a connected graph");
    if (u.empty()) return true;
    int c = static_cast<int>(connected_components(g, u).size());
    for (int drop : u) {
        VertexSet rest;
        for (int v : u)
            if (v != drop) rest.push_back(v);
        int c2 = static_cast<int>(connected_components(g, rest).size());
        if (c2 >= c) return false;
    }
    return true;
}

int height(const Graph& g, const VertexSet& u) {
    return static_cast<int>(u.size()) + g.n - static_cast<int>(connected_components(g, u).size());
}

std::vector<PrimeComponent> minimal_primes(const Graph& g, PrimeEnumeration mode) {
    if (!is_connected(g)) throw std::invalid_argument("minimal primes need a connected graph");
    std::vector<int> candidates;
    if (mode == PrimeEnumeration::restricted && is_block_graph(g)) {
        candidates = cut_vertices(g);
    } else {
        for (int v = 1; v <= g.n; ++v) candidates.push_back(v);
    }
    std::vector<PrimeComponent> out;
    const std::size_t k = candidates.size();
    if (k > 30) throw std::invalid_argument("too many candidate vertices for subset enumeration");
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
        VertexSet u;
        for (std::size_t b = 0; b < k; ++b)
            if ((mask >> b) & 1ULL) u.push_back(candidates[b]);
        std::sort(u.begin(), u.end());
        if (!is_minimal_prime(g, u)) continue;
        PrimeComponent pc;
        pc.U = u;
        pc.components = connected_components(g, u);
        pc.c = static_cast<int>(pc.components.size());
        pc.height = static_cast<int>(u.size()) + g.n - pc.c;
        out.push_back(std::move(pc));
    }
    std::sort(out.begin(), out.end(), [](const PrimeComponent& a, const PrimeComponent& b) {
        if (a.U.size() != b.U.size()) return a.U.size() < b.U.size();
        return a.U < b.U;
    });
    return out;
}

std::string component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::prefix_interval: return "prefix-interval";
        case ComponentKind::gap_interval: return "gap-interval";
        case ComponentKind::clique_remnant: return "clique-remnant";
        case ComponentKind::suffix_interval: return "suffix-interval";
    }
    return "?";
}

namespace {

struct CutView {
    BuiltGraph built;
    std::vector<int> positions;  // path positions of the cut labels
};

CutView prepare_cut(const GraphRecipe& recipe, const VertexSet& s) {
    validate_recipe(recipe, Family::generalized_pendant_cliques);
    if (recipe_is_end_extendable(recipe, Family::generalized_pendant_cliques))
        throw std::invalid_argument("recipe path is extendable; joins sit at a path end");
    CutView cv{build(recipe), {}};
    const int n = cv.built.graph.n;
    if (s.empty()) throw std::invalid_argument("cut set must be non-empty");
    int prev = 0;
    for (int label : s) {
        if (label <= prev) throw std::invalid_argument("cut set must be strictly increasing");
        prev = label;
        if (label <= 1 || label >= n)
            throw std::invalid_argument("cut labels must be interior: 1 < s < n");
        int pos = cv.built.layout.position_of_label(label);
        if (pos == 0) throw std::invalid_argument("cut label off the central path");
        cv.positions.push_back(pos);
    }
    return cv;
}

}  // namespace

CutLedger count_components_formula(const GraphRecipe& recipe, const VertexSet& s) {
    CutView cv = prepare_cut(recipe, s);
    const auto& lay = cv.built.layout;
    const int m = static_cast<int>(s.size());

    CutLedger led;
    led.s = s;
    led.alpha.assign(m + 1, 0);
    led.alpha[0] = led.alpha[m] = 1;
    for (int i = 0; i < m; ++i) {
        led.cliques_at.push_back(lay.joins_at(cv.positions[i]));
        led.attached_at.push_back(lay.gamma(cv.positions[i]));
    }
    for (int i = 1; i < m; ++i) {
        int lo = s[i - 1] + led.attached_at[i - 1] + 1;
        int hi = s[i] - 1;
        led.alpha[i] = (lo <= hi) ? 1 : 0;
    }
    int total = 0;
    for (int a : led.alpha) total += a;
    for (int p : led.cliques_at) total += p;
    led.formula_count = total;

    int direct = static_cast<int>(connected_components(cv.built.graph, s).size());
    if (direct != led.formula_count)
        throw std::logic_error("component-count formula disagrees with direct search");
    return led;
}

std::vector<TaggedComponent> components_by_kind(const GraphRecipe& recipe, const VertexSet& s) {
    CutView cv = prepare_cut(recipe, s);
    const auto& lay = cv.built.layout;
    const int n = cv.built.graph.n;
    const int m = static_cast<int>(s.size());

    auto interval = [](int lo, int hi) {
        VertexSet v;
        for (int x = lo; x <= hi; ++x) v.push_back(x);
        return v;
    };

    std::vector<TaggedComponent> out;
    out.push_back({ComponentKind::prefix_interval, interval(1, s[0] - 1), 0});
    for (int i = 0; i < m; ++i) {
        int gamma_i = lay.gamma(cv.positions[i]);
        if (i + 1 < m) {
            int lo = s[i] + gamma_i + 1, hi = s[i + 1] - 1;
            if (lo <= hi) out.push_back({ComponentKind::gap_interval, interval(lo, hi), s[i]});
        }
        for (auto [t, first] : lay.vertex_extras[cv.positions[i]])
            out.push_back({ComponentKind::clique_remnant, interval(first, first + t - 2), s[i]});
    }
    out.push_back({ComponentKind::suffix_interval, interval(s[m - 1] + lay.gamma(cv.positions[m - 1]) + 1, n),
                   s[m - 1]});

    // cross-check the tagging against plain component search
    std::vector<VertexSet> tagged;
    for (const auto& tc : out) tagged.push_back(tc.vertices);
    std::sort(tagged.begin(), tagged.end());
    std::vector<VertexSet> direct = connected_components(cv.built.graph, s);
    std::sort(direct.begin(), direct.end());
    if (tagged != direct) throw std::logic_error("tagged components disagree with direct search");
    return out;
}

}  // namespace bei
