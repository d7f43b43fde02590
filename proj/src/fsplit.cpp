#include "bei/fsplit.hpp"

#include <algorithm>
#include <set>

namespace bei {

Polynomial build_f(int n, Domain dom) {
    if (n < 2) throw std::invalid_argument("build_f needs n >= 2");
    Polynomial f = Polynomial::from_term(dom, Monomial::var_y(n, 1), 1);
    for (int i = 1; i < n; ++i) f = f * EdgeBinomial(i, i + 1).to_poly(n, dom);
    return f.mul_term(Monomial::var_x(n, n), 1);
}

std::vector<GFactor> build_g(const GraphRecipe& recipe, const VertexSet& u) {
    std::vector<GFactor> out;
    for (int s : u) {
        out.push_back({EdgeBinomial(s - 1, s), FactorRole::boundary, s, {}});
        out.push_back({EdgeBinomial(s, s + 1), FactorRole::boundary, s, {}});
    }
    for (const auto& tc : components_by_kind(recipe, u)) {
        const VertexSet& t = tc.vertices;
        for (std::size_t k = 0; k + 1 < t.size(); ++k)
            if (t[k + 1] == t[k] + 1)
                out.push_back({EdgeBinomial(t[k], t[k] + 1), FactorRole::component, 0, t});
    }
    return out;
}

ExponentLedger exponent_ledger(const GraphRecipe& recipe, const VertexSet& u) {
    CutLedger cl = count_components_formula(recipe, u);
    const int m = static_cast<int>(u.size());
    BuiltGraph built = build(recipe);
    const int n = built.graph.n;

    ExponentLedger led;
    led.breakdown.boundary_pairs = 2 * m;
    for (const auto& tc : components_by_kind(recipe, u)) {
        int part = static_cast<int>(tc.vertices.size()) - 1;
        switch (tc.kind) {
            case ComponentKind::prefix_interval: led.breakdown.prefix_part += part; break;
            case ComponentKind::gap_interval: led.breakdown.gap_part += part; break;
            case ComponentKind::clique_remnant: led.breakdown.clique_part += part; break;
            case ComponentKind::suffix_interval: led.breakdown.suffix_part += part; break;
        }
    }
    int alpha_sum = 0, p_sum = 0;
    for (int a : cl.alpha) alpha_sum += a;
    for (int p : cl.cliques_at) p_sum += p;
    led.closed_form = m + n - alpha_sum - p_sum;
    led.b = led.breakdown.total();
    if (led.b != led.closed_form)
        throw std::logic_error("exponent breakdown disagrees with its closed form");
    if (led.b != height(built.graph, u))
        throw std::logic_error("exponent ledger disagrees with the height formula");
    return led;
}

namespace {

void multiset_products(const std::vector<Polynomial>& gens, int h, std::size_t max_products,
                       std::vector<Polynomial>& out) {
    const std::size_t k = gens.size();
    if (k == 0) return;
    // count C(k+h-1, h) first so we can refuse oversized expansions
    double count = 1.0;
    for (int t = 1; t <= h; ++t) count = count * (static_cast<double>(k) + h - t) / t;
    if (count > static_cast<double>(max_products))
        throw OracleBudgetExhausted("oracle budget exhausted: too many h-fold products");

    std::vector<int> idx(h, 0);
    while (true) {
        Polynomial prod = gens[idx[0]];
        for (int t = 1; t < h; ++t) prod = prod * gens[idx[t]];
        out.push_back(std::move(prod));
        int t = h - 1;
        while (t >= 0 && idx[t] == static_cast<int>(k) - 1) --t;
        if (t < 0) break;
        int v = idx[t] + 1;
        for (int s = t; s < h; ++s) idx[s] = v;
    }
}

}  // namespace

bool verify_membership_oracle(const Polynomial& f, const std::vector<Polynomial>& pu_gens, int h,
                              const MembershipOracleOptions& opts) {
    if (!f.dom().is_rational()) throw std::invalid_argument("membership oracle works over the rationals");
    if (h == 0) return true;
    std::vector<Polynomial> products;
    multiset_products(pu_gens, h, opts.max_products, products);
    if (products.empty()) return f.is_zero();
    if (division_remainder(f, products).is_zero()) return true;
    // the products need not be a Groebner basis; only a full basis can refute
    GroebnerBasis basis = buchberger(products, opts.groebner_budget);
    return normal_form(f, basis).is_zero();
}

FedderResult fedder_check(int n, std::uint64_t p, long long np_bound) {
    if (n < 2) throw std::invalid_argument("fedder_check needs n >= 2");
    if (!is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime");
    if (static_cast<long long>(n) * static_cast<long long>(p) > np_bound)
        throw std::invalid_argument("n*p above the configured resource bound");

    const Domain dom = Domain::mod(p);
    const int e = static_cast<int>(p) - 1;
    Monomial seed = Monomial::one(2 * n);
    seed.e[n] = e;          // y_1^{p-1}
    seed.e[n - 1] = e;      // x_n^{p-1}
    Polynomial acc = Polynomial::from_term(dom, seed, 1);
    for (int i = 1; i < n; ++i) {
        Polynomial factor = EdgeBinomial(i, i + 1).to_poly(n, dom);
        for (int rep = 0; rep < e; ++rep) acc = reduce_mod_frobenius(acc * factor, p);
    }

    FedderResult out;
    out.nonzero = !acc.is_zero();
    out.surviving_terms = acc.term_count();
    Monomial u_power(2 * n);
    for (int k = 0; k < 2 * n; ++k) u_power.e[k] = e;
    auto it = acc.terms().find(u_power);
    out.u_coefficient = (it == acc.terms().end()) ? "0" : it->second.str();
    return out;
}

namespace {

bool factor_in_variable_ideal(const Polynomial& fac, int s) {
    // every term must carry x_s or y_s
    const int n = fac.nverts();
    for (const auto& [m, c] : fac.terms()) {
        (void)c;
        if (m.e[s - 1] == 0 && m.e[n + s - 1] == 0) return false;
    }
    return true;
}

PrimeCertEntry certify_prime(const GraphRecipe& normalized, const BuiltGraph& built,
                             const PrimeComponent& pc) {
    PrimeCertEntry entry;
    entry.U = pc.U;
    entry.h = pc.height;
    const int n = built.graph.n;

    if (pc.U.empty()) {
        entry.empty_cut = true;
        // f carries the n-1 consecutive edge binomials of the one completed component
        entry.ledger.b = n - 1;
        entry.ledger.closed_form = n - 1;
        entry.divides_f = true;
        entry.factors_verified = (pc.c == 1);
        entry.b_equals_height = (entry.h == n - 1);
        entry.ok = entry.factors_verified && entry.b_equals_height;
        if (!entry.ok) entry.note = "empty cut entry inconsistent";
        return entry;
    }

    for (int s : pc.U) {
        if (s <= 1 || s >= n || built.layout.position_of_label(s) == 0) {
            entry.on_path_form = false;
            entry.note = "minimal prime cut set is not interior to the central path";
            return entry;
        }
    }

    entry.g_factors = build_g(normalized, pc.U);
    entry.ledger = exponent_ledger(normalized, pc.U);
    entry.b_equals_height = (entry.ledger.b == entry.h);

    // g | f: factors are consecutive-index binomials, pairwise distinct
    std::set<std::pair<int, int>> seen;
    entry.divides_f = true;
    for (const auto& gf : entry.g_factors) {
        if (gf.factor.j != gf.factor.i + 1 || gf.factor.i < 1 || gf.factor.j > n) entry.divides_f = false;
        if (!seen.insert({gf.factor.i, gf.factor.j}).second) entry.divides_f = false;
    }
    if (static_cast<int>(entry.g_factors.size()) != entry.ledger.b) entry.divides_f = false;

    // per-factor membership, checked combinatorially
    entry.factors_verified = true;
    std::set<VertexSet> component_set(pc.components.begin(), pc.components.end());
    for (const auto& gf : entry.g_factors) {
        if (gf.role == FactorRole::boundary) {
            bool s_in_u = std::binary_search(pc.U.begin(), pc.U.end(), gf.cut_label);
            Polynomial fac = gf.factor.to_poly(n, Domain::rationals());
            if (!s_in_u || !factor_in_variable_ideal(fac, gf.cut_label)) entry.factors_verified = false;
        } else {
            bool t_is_component = component_set.count(gf.component) > 0;
            bool inside = std::binary_search(gf.component.begin(), gf.component.end(), gf.factor.i) &&
                          std::binary_search(gf.component.begin(), gf.component.end(), gf.factor.j);
            if (!t_is_component || !inside) entry.factors_verified = false;
        }
    }

    entry.ok = entry.divides_f && entry.factors_verified && entry.b_equals_height;
    if (!entry.ok && entry.note.empty()) entry.note = "certificate checks failed";
    return entry;
}

}  // namespace

FsplitReport verify_symbolic_fsplit(const GraphRecipe& recipe, std::uint64_t p,
                                    const FsplitOptions& opts) {
    FsplitReport rep;
    rep.normalized = to_central_gpc(recipe);
    BuiltGraph built = build(rep.normalized);
    rep.n = built.graph.n;
    rep.p = p;
    if (rep.n < 2) throw std::invalid_argument("graph too small; need n >= 2");
    if (!is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime");

    auto primes = minimal_primes(built.graph);
    bool all_ok = true;
    for (const auto& pc : primes) {
        rep.entries.push_back(certify_prime(rep.normalized, built, pc));
        all_ok = all_ok && rep.entries.back().ok;
    }

    rep.fedder = fedder_check(rep.n, p);
    all_ok = all_ok && rep.fedder.nonzero;

    if (opts.run_oracle && rep.n <= opts.oracle_bound) {
        Polynomial f = build_f(rep.n);
        for (const auto& pc : primes) {
            OracleOutcome oc;
            oc.U = pc.U;
            try {
                PrimeIdeal pu = prime_pU(built.graph, pc.U);
                bool member = verify_membership_oracle(f, pu.gens, pc.height, opts.oracle);
                oc.status = member ? OracleStatus::confirmed : OracleStatus::refuted;
            } catch (const OracleBudgetExhausted&) {
                oc.status = OracleStatus::budget_exhausted;
            }
            if (oc.status == OracleStatus::refuted) all_ok = false;
            rep.oracle.push_back(oc);
        }
    }

    rep.ok = all_ok;
    return rep;
}

SfrReport verify_sfr_conditions(const GraphRecipe& recipe, std::uint64_t p,
                                const FsplitOptions& opts) {
    (void)opts;
    SfrReport rep;

    bool pendant_ok = true;
    try {
        validate_recipe(recipe, Family::pendant_cliques);
    } catch (const std::invalid_argument&) {
        pendant_ok = false;
    }
    if (pendant_ok) {
        rep.family = Family::pendant_cliques;
    } else {
        bool cat_ok = true;
        try {
            validate_recipe(recipe, Family::generalized_caterpillar);
        } catch (const std::invalid_argument&) {
            cat_ok = false;
        }
        if (!cat_ok)
            throw std::invalid_argument(
                "recipe is neither pendant cliques nor a generalized caterpillar");
        BuiltGraph probe = build(recipe.folded());
        if (contains_induced_net(probe.graph))
            throw std::invalid_argument("caterpillar input must be net-free");
        rep.family = Family::generalized_caterpillar;
    }

    rep.normalized = to_central_gpc(recipe);
    BuiltGraph built = build(rep.normalized);
    rep.n = built.graph.n;
    rep.p = p;
    if (rep.n < 2) throw std::invalid_argument("graph too small; need n >= 2");
    if (!is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime");
    rep.edge_1_2_present = built.graph.has_edge(1, 2);

    bool all_ok = true;
    for (const auto& pc : minimal_primes(built.graph)) {
        SfrPrimeEntry entry;
        entry.U = pc.U;
        entry.h = pc.height;
        if (pc.U.empty()) {
            entry.branch = "empty-cut";
            entry.exponent_after_removal = rep.n - 2;  // f's n-1 factors minus f_{1,2}
            entry.ok = (entry.exponent_after_removal >= entry.h - 1);
        } else {
            PrimeCertEntry cert = certify_prime(rep.normalized, built, pc);
            if (!cert.on_path_form || !cert.ok) {
                entry.branch = "invalid";
                entry.ok = false;
            } else {
                int s1 = pc.U.front();
                entry.branch = (s1 == 2) ? "s1=2" : "s1>2";
                // g contains exactly one copy of f_{1,2}: as the boundary factor
                // f_{s_1-1,s_1} when s_1 = 2, inside the prefix component when s_1 > 2
                int copies = 0;
                for (const auto& gf : cert.g_factors)
                    if (gf.factor.i == 1 && gf.factor.j == 2) ++copies;
                entry.exponent_after_removal = cert.ledger.b - 1;
                entry.ok = (copies == 1) && (entry.exponent_after_removal >= entry.h - 1);
            }
        }
        all_ok = all_ok && entry.ok;
        rep.condition1.push_back(entry);
    }

    rep.condition2 = fedder_check(rep.n, p);
    all_ok = all_ok && rep.condition2.nonzero;

    rep.ok = all_ok;
    return rep;
}

}  // namespace bei
