#include "bei/groebner.hpp"

#include <algorithm>
#include <functional>

namespace bei {

std::vector<int> AdmissiblePath::vertices() const {
    std::vector<int> v;
    v.push_back(from);
    v.insert(v.end(), interior.begin(), interior.end());
    v.push_back(to);
    return v;
}

bool AdmissiblePath::operator<(const AdmissiblePath& o) const {
    if (from != o.from) return from < o.from;
    if (to != o.to) return to < o.to;
    if (interior.size() != o.interior.size()) return interior.size() < o.interior.size();
    return interior < o.interior;
}

std::vector<Polynomial> binomial_edge_ideal(const Graph& g, Domain dom) {
    std::vector<Polynomial> gens;
    gens.reserve(g.edges.size());
    for (auto [i, j] : g.edges) gens.push_back(EdgeBinomial(i, j).to_poly(g.n, dom));
    return gens;
}

namespace {

bool is_path_in_graph(const Graph& g, const std::vector<int>& seq) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (!g.has_edge(seq[k], seq[k + 1])) return false;
    return true;
}

// condition (2): no proper subsequence of the interior joins the endpoints
bool has_shortcut(const Graph& g, int from, int to, const std::vector<int>& interior) {
    int m = static_cast<int>(interior.size());
    for (std::uint64_t mask = 0; mask + 1 < (1ULL << m); ++mask) {
        std::vector<int> seq{from};
        for (int k = 0; k < m; ++k)
            if ((mask >> k) & 1ULL) seq.push_back(interior[k]);
        seq.push_back(to);
        if (is_path_in_graph(g, seq)) return true;
    }
    return false;
}

}  // namespace

std::vector<AdmissiblePath> enumerate_admissible_paths(const Graph& g) {
    std::vector<AdmissiblePath> out;
    for (int i = 1; i <= g.n; ++i) {
        for (int j = i + 1; j <= g.n; ++j) {
            // DFS over simple paths from i to j with interior outside [i, j]
            std::vector<int> interior;
            std::vector<char> used(g.n + 1, 0);
            used[i] = used[j] = 1;
            std::function<void(int)> extend = [&](int last) {
                if (g.has_edge(last, j)) {
                    if (interior.empty()) {
                        out.push_back({i, j, {}});
                    } else if (!has_shortcut(g, i, j, interior)) {
                        out.push_back({i, j, interior});
                    }
                }
                for (int v = 1; v <= g.n; ++v) {
                    if (used[v] || (v > i && v < j)) continue;
                    if (!g.has_edge(last, v)) continue;
                    used[v] = 1;
                    interior.push_back(v);
                    extend(v);
                    interior.pop_back();
                    used[v] = 0;
                }
            };
            extend(i);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Monomial u_pi(const AdmissiblePath& path, int nverts) {
    Monomial m = Monomial::one(2 * nverts);
    for (int v : path.interior) {
        if (v > path.to)
            m = m.mul(Monomial::var_x(nverts, v));
        else if (v < path.from)
            m = m.mul(Monomial::var_y(nverts, v));
        else
            throw std::invalid_argument("interior vertex inside the endpoint interval");
    }
    return m;
}

std::vector<Polynomial> sort_basis(std::vector<Polynomial> polys) {
    std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
        return deg_lex_less(a.leading_monomial(), b.leading_monomial());
    });
    return polys;
}

GroebnerBasis groebner_basis_edge(const Graph& g) {
    std::vector<Polynomial> elems;
    for (const auto& p : enumerate_admissible_paths(g)) {
        Polynomial f = EdgeBinomial(p.from, p.to).to_poly(g.n, Domain::rationals());
        Polynomial el = f.mul_term(u_pi(p, g.n), 1);
        if (std::find(elems.begin(), elems.end(), el) == elems.end()) elems.push_back(el);
    }
    return {sort_basis(std::move(elems)), true};
}

MonomialIdeal initial_ideal(const Graph& g) {
    std::vector<Monomial> lts;
    GroebnerBasis basis = groebner_basis_edge(g);
    lts.reserve(basis.elements.size());
    for (const auto& f : basis.elements) lts.push_back(f.leading_monomial());
    std::size_t before = lts.size();
    MonomialIdeal ideal(2 * g.n, std::move(lts));
    if (ideal.gens().size() != before)
        throw std::logic_error("reduced basis produced non-minimal leading terms");
    return ideal;
}

Polynomial division_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    if (!f.dom().is_rational()) throw std::invalid_argument("division works over the rationals");
    Polynomial rem(f.nvars(), f.dom());
    Polynomial cur = f;
    while (!cur.is_zero()) {
        const Monomial& lm = cur.leading_monomial();
        const Polynomial* div = nullptr;
        for (const auto& d : divisors) {
            if (!d.is_zero() && d.leading_monomial().divides(lm)) {
                div = &d;
                break;
            }
        }
        if (div) {
            Monomial q = lm.divide(div->leading_monomial());
            Rational c = cur.leading_coeff() / div->leading_coeff();
            cur = cur - div->mul_term(q, c);
        } else {
            rem.add_term(lm, cur.leading_coeff());
            Polynomial lead = Polynomial::from_term(cur.dom(), lm, cur.leading_coeff());
            cur = cur - lead;
        }
    }
    return rem;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    return division_remainder(f, basis.elements);
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.mul_term(l.divide(f.leading_monomial()), Rational(1) / f.leading_coeff());
    Polynomial b = g.mul_term(l.divide(g.leading_monomial()), Rational(1) / g.leading_coeff());
    return a - b;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, OracleBudget budget) {
    std::vector<Polynomial> basis;
    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        if (!f.dom().is_rational()) throw std::invalid_argument("buchberger oracle works over the rationals");
        basis.push_back(f.make_monic());
    }
    if (basis.empty()) return {{}, true};

    struct Pair {
        std::size_t a, b;
        Monomial lcm;
    };
    auto pair_less = [](const Pair& x, const Pair& y) {
        return deg_lex_less(x.lcm, y.lcm);
    };

    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t idx) {
        for (std::size_t k = 0; k < idx; ++k) {
            Monomial l = Monomial::lcm(basis[k].leading_monomial(), basis[idx].leading_monomial());
            // skip coprime leading terms
            if (l.deg() == basis[k].leading_monomial().deg() + basis[idx].leading_monomial().deg()) continue;
            queue.push_back({k, idx, l});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t i = 0; i < basis.size(); ++i) push_pairs(i);

    std::size_t reductions = 0;
    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.erase(queue.begin());
        if (++reductions > budget.max_pair_reductions)
            throw OracleBudgetExhausted("oracle budget exhausted: too many S-pair reductions");
        Polynomial s = s_polynomial(basis[pr.a], basis[pr.b]);
        Polynomial r = division_remainder(s, basis);
        if (r.is_zero()) continue;
        basis.push_back(r.make_monic());
        if (basis.size() > budget.max_basis)
            throw OracleBudgetExhausted("oracle budget exhausted: basis too large");
        push_pairs(basis.size() - 1);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t k = 0; k < basis.size() && keep; ++k) {
            if (i == k) continue;
            const Monomial& a = basis[k].leading_monomial();
            const Monomial& b = basis[i].leading_monomial();
            if (!a.divides(b)) continue;
            if (a == b ? k < i : true) keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }

    // tail-reduce each element against the others until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t k = 0; k < minimal.size(); ++k)
                if (k != i) others.push_back(minimal[k]);
            Polynomial r = division_remainder(minimal[i], others);
            if (r.is_zero()) {
                minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            r = r.make_monic();
            if (!(r == minimal[i])) {
                minimal[i] = r;
                changed = true;
            }
        }
    }

    return {sort_basis(std::move(minimal)), true};
}

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, OracleBudget budget) {
    if (f.is_zero()) return true;
    GroebnerBasis basis = buchberger(gens, budget);
    return normal_form(f, basis).is_zero();
}

}  // namespace bei
