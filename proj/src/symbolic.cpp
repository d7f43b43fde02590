#include "bei/symbolic.hpp"

#include "bei/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bei {

FacetComplex facet_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw std::invalid_argument("facet complex needs a squarefree ideal");
    FacetComplex fc;
    fc.nvars = ideal.nvars();
    for (const auto& g : ideal.gens()) fc.facets.push_back(g.support());
    // supports of minimal squarefree generators are incomparable
    for (std::size_t a = 0; a < fc.facets.size(); ++a)
        for (std::size_t b = 0; b < fc.facets.size(); ++b)
            if (a != b && std::includes(fc.facets[b].begin(), fc.facets[b].end(), fc.facets[a].begin(),
                                        fc.facets[a].end()))
                throw std::logic_error("facet contained in another facet");
    return fc;
}

namespace {

struct CycleSearch {
    const FacetComplex& fc;
    std::vector<int> vertices;                  // all complex vertices, ascending
    std::vector<std::vector<int>> facets_of;    // facet ids per vertex (dense index)
    std::vector<int> dense;                     // variable index -> dense vertex id (-1 outside)
    std::vector<int> facet_count;               // chosen cycle vertices per facet
    std::vector<char> facet_used, vertex_used;
    std::vector<int> cyc_v, cyc_f;
    int target_len = 0;

    explicit CycleSearch(const FacetComplex& complex) : fc(complex) {
        std::set<int> vs;
        for (const auto& f : fc.facets) vs.insert(f.begin(), f.end());
        vertices.assign(vs.begin(), vs.end());
        dense.assign(fc.nvars, -1);
        for (std::size_t k = 0; k < vertices.size(); ++k) dense[vertices[k]] = static_cast<int>(k);
        facets_of.assign(vertices.size(), {});
        for (std::size_t f = 0; f < fc.facets.size(); ++f)
            for (int v : fc.facets[f]) facets_of[dense[v]].push_back(static_cast<int>(f));
        facet_count.assign(fc.facets.size(), 0);
        facet_used.assign(fc.facets.size(), 0);
        vertex_used.assign(vertices.size(), 0);
    }

    // a cycle is special when no facet of the complex holds three of its vertices
    bool place_vertex(int dv) {
        for (int f : facets_of[dv])
            if (facet_count[f] == 2) return false;
        for (int f : facets_of[dv]) ++facet_count[f];
        vertex_used[dv] = 1;
        return true;
    }
    void unplace_vertex(int dv) {
        for (int f : facets_of[dv]) --facet_count[f];
        vertex_used[dv] = 0;
    }

    bool facet_has(int f, int var) const {
        const auto& fv = fc.facets[f];
        return std::binary_search(fv.begin(), fv.end(), var);
    }

    bool extend() {
        int k = static_cast<int>(cyc_v.size());
        if (k == target_len) {
            // close with a fresh facet containing the last and first vertices
            for (int f : facets_of[dense[cyc_v.back()]]) {
                if (facet_used[f] || !facet_has(f, cyc_v.front())) continue;
                cyc_f.push_back(f);
                return true;
            }
            return false;
        }
        int last = cyc_v.back();
        for (int f : facets_of[dense[last]]) {
            if (facet_used[f]) continue;
            facet_used[f] = 1;
            for (int w : fc.facets[f]) {
                int dw = dense[w];
                if (vertex_used[dw]) continue;
                if (!place_vertex(dw)) continue;
                cyc_v.push_back(w);
                cyc_f.push_back(f);
                if (extend()) return true;
                cyc_f.pop_back();
                cyc_v.pop_back();
                unplace_vertex(dw);
            }
            facet_used[f] = 0;
        }
        return false;
    }

    std::optional<ComplexCycle> run() {
        int max_len = static_cast<int>(std::min(vertices.size(), fc.facets.size()));
        for (int s = 3; s <= max_len; s += 2) {
            target_len = s;
            for (int v : vertices) {
                int dv = dense[v];
                if (!place_vertex(dv)) continue;
                cyc_v.push_back(v);
                if (extend()) {
                    ComplexCycle out{cyc_v, cyc_f};
                    return out;
                }
                cyc_v.pop_back();
                unplace_vertex(dv);
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<ComplexCycle> find_special_odd_cycle(const FacetComplex& fc) {
    if (fc.facets.size() < 3) return std::nullopt;
    CycleSearch search(fc);
    return search.run();
}

namespace {

void cover_search(const std::vector<std::vector<int>>& facets, std::vector<int>& chosen,
                  std::set<std::vector<int>>& out) {
    // first facet not met by the current choice
    const std::vector<int>* open = nullptr;
    for (const auto& f : facets) {
        bool hit = false;
        for (int v : f)
            if (std::binary_search(chosen.begin(), chosen.end(), v)) {
                hit = true;
                break;
            }
        if (!hit) {
            open = &f;
            break;
        }
    }
    if (!open) {
        out.insert(chosen);
        return;
    }
    for (int v : *open) {
        auto it = std::lower_bound(chosen.begin(), chosen.end(), v);
        chosen.insert(it, v);
        cover_search(facets, chosen, out);
        chosen.erase(std::find(chosen.begin(), chosen.end(), v));
    }
}

}  // namespace

std::vector<std::vector<int>> monomial_minimal_primes(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw std::invalid_argument("minimal primes need a squarefree ideal");
    if (ideal.gens().empty()) return {};
    FacetComplex fc = facet_complex(ideal);
    std::set<std::vector<int>> covers;
    std::vector<int> chosen;
    cover_search(fc.facets, chosen, covers);
    // drop non-minimal covers
    std::vector<std::vector<int>> out;
    for (const auto& c : covers) {
        bool minimal = true;
        for (const auto& d : covers) {
            if (d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

// u * (all monomials of degree d in the given variables)
void expand_by_degree(const Monomial& u, const std::vector<int>& vars, int d,
                      std::vector<Monomial>& out) {
    if (d == 0) {
        out.push_back(u);
        return;
    }
    std::function<void(Monomial&, std::size_t, int)> rec = [&](Monomial& cur, std::size_t k, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (k == vars.size()) return;
        if (k + 1 == vars.size()) {
            Monomial next = cur;
            next.e[vars[k]] += left;
            out.push_back(next);
            return;
        }
        for (int take = 0; take <= left; ++take) {
            Monomial next = cur;
            next.e[vars[k]] += take;
            rec(next, k + 1, left - take);
        }
    };
    Monomial start = u;
    rec(start, 0, d);
}

int degree_in(const Monomial& u, const std::vector<int>& vars) {
    int d = 0;
    for (int v : vars) d += u.e[v];
    return d;
}

MonomialIdeal intersect_with_prime_power(const MonomialIdeal& J, const std::vector<int>& vars, int m) {
    std::vector<Monomial> cand;
    for (const auto& u : J.gens()) {
        int d = m - degree_in(u, vars);
        if (d <= 0)
            cand.push_back(u);
        else
            expand_by_degree(u, vars, d, cand);
    }
    return MonomialIdeal(J.nvars(), std::move(cand));
}

}  // namespace

MonomialIdeal symbolic_power_monomial(const MonomialIdeal& ideal, int m) {
    if (!ideal.is_squarefree()) throw std::invalid_argument("symbolic power needs a squarefree ideal");
    if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
    if (ideal.gens().empty()) return ideal;
    if (m == 1) return ideal;
    auto primes = monomial_minimal_primes(ideal);
    // start from the prime with fewest variables to keep intermediates small
    std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Monomial> first;
    expand_by_degree(Monomial::one(ideal.nvars()), primes[0], m, first);
    MonomialIdeal acc(ideal.nvars(), std::move(first));
    for (std::size_t k = 1; k < primes.size(); ++k) acc = intersect_with_prime_power(acc, primes[k], m);
    return acc;
}

PowerCheck powers_equal_monomial(const MonomialIdeal& ideal, int t_max) {
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    for (int t = 1; t <= t_max; ++t) {
        MonomialIdeal ordinary = (t == 1) ? ideal : monomial_ideal_power(ideal, t);
        MonomialIdeal symbolic = symbolic_power_monomial(ideal, t);
        if (ordinary == symbolic) continue;
        PowerCheck out;
        out.ok = false;
        out.first_failure_t = t;
        for (const auto& g : symbolic.gens()) {
            if (!ordinary.contains(g)) {
                out.witness = g;
                break;
            }
        }
        if (!out.witness.has_value())
            throw std::logic_error("power mismatch without witness; containment direction broken");
        return out;
    }
    return {};
}

PowerPipelineReport power_equality_report(const MonomialIdeal& ideal, int t_max) {
    PowerPipelineReport rep;
    rep.n = ideal.nvars() / 2;
    rep.initial = ideal;
    rep.squarefree = ideal.is_squarefree();
    if (!rep.squarefree) return rep;
    rep.cycle = find_special_odd_cycle(facet_complex(ideal));
    rep.powers = powers_equal_monomial(ideal, t_max);
    return rep;
}

PowerPipelineReport power_equality_pipeline(const GraphRecipe& recipe, int t_max) {
    BuiltGraph built = build_pendant_labeled(recipe);
    PowerPipelineReport rep = power_equality_report(initial_ideal(built.graph), t_max);
    rep.n = built.graph.n;
    return rep;
}

}  // namespace bei
