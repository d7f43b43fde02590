#include "bei/io.hpp"

#include "bei/groebner.hpp"

#include <sstream>

namespace bei {

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n;
    Json edges = Json::array();
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("edges")) throw std::invalid_argument("graph json needs n and edges");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

Json recipe_to_json(const GraphRecipe& r) {
    Json j;
    j["path_len"] = r.path_len;
    Json vj = Json::object();
    for (const auto& [pos, sizes] : r.vertex_joins) vj[std::to_string(pos)] = sizes;
    j["vertex_joins"] = vj;
    Json ej = Json::object();
    for (const auto& [e, t] : r.edge_joins) ej[std::to_string(e)] = t;
    j["edge_joins"] = ej;
    if (!r.whiskers.empty()) j["whiskers"] = r.whiskers;
    if (!r.clique_whiskers.empty()) {
        Json cw = Json::array();
        for (auto [e, ord] : r.clique_whiskers) cw.push_back({e, ord});
        j["clique_whiskers"] = cw;
    }
    return j;
}

GraphRecipe recipe_from_json(const Json& j) {
    GraphRecipe r;
    if (!j.contains("path_len")) throw std::invalid_argument("recipe json needs path_len");
    r.path_len = j.at("path_len").get<int>();
    if (j.contains("vertex_joins"))
        for (const auto& [key, val] : j.at("vertex_joins").items())
            r.vertex_joins[std::stoi(key)] = val.get<std::vector<int>>();
    if (j.contains("edge_joins"))
        for (const auto& [key, val] : j.at("edge_joins").items())
            r.edge_joins[std::stoi(key)] = val.get<int>();
    if (j.contains("whiskers")) r.whiskers = j.at("whiskers").get<std::vector<int>>();
    if (j.contains("clique_whiskers"))
        for (const auto& e : j.at("clique_whiskers"))
            r.clique_whiskers.push_back({e[0].get<int>(), e[1].get<int>()});
    return r;
}

Json monomial_ideal_to_json(const MonomialIdeal& ideal) {
    Json j;
    j["n"] = ideal.nvars() / 2;
    Json gens = Json::array();
    for (const auto& g : ideal.gens()) gens.push_back(monomial_to_string(g));
    j["generators"] = gens;
    return j;
}

MonomialIdeal monomial_ideal_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("generators"))
        throw std::invalid_argument("ideal json needs n and generators");
    int n = j.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& s : j.at("generators")) gens.push_back(parse_monomial(n, s.get<std::string>()));
    return MonomialIdeal(2 * n, std::move(gens));
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 1; v <= g.n; ++v) os << "  " << v << ";\n";
    for (auto [a, b] : g.edges) os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
}

Json gbasis_report(const Graph& g) {
    Json j;
    Json paths = Json::array();
    for (const auto& p : enumerate_admissible_paths(g)) paths.push_back(p.vertices());
    j["paths"] = paths;
    Json basis = Json::array();
    for (const auto& f : groebner_basis_edge(g).elements) basis.push_back(f.to_string());
    j["basis"] = basis;
    Json initial = Json::array();
    for (const auto& m : initial_ideal(g).gens()) initial.push_back(monomial_to_string(m));
    j["initial"] = initial;
    return j;
}

Json primes_report(const Graph& g) {
    Json j;
    j["n"] = g.n;
    Json primes = Json::array();
    for (const auto& pc : minimal_primes(g)) {
        Json entry;
        entry["U"] = pc.U;
        entry["components"] = pc.components;
        entry["height"] = pc.height;
        primes.push_back(entry);
    }
    j["count"] = primes.size();
    j["primes"] = primes;
    return j;
}

namespace {

Json cycle_to_json(const ComplexCycle& cyc, const FacetComplex& fc) {
    Json j;
    j["length"] = cyc.length();
    Json verts = Json::array();
    for (int v : cyc.vertices) verts.push_back(var_name(fc.nvars / 2, v));
    j["vertices"] = verts;
    Json facets = Json::array();
    for (int f : cyc.facet_ids) {
        Json fv = Json::array();
        for (int v : fc.facets[f]) fv.push_back(var_name(fc.nvars / 2, v));
        facets.push_back(fv);
    }
    j["facets"] = facets;
    return j;
}

}  // namespace

Json socp_report(const MonomialIdeal& ideal) {
    Json j;
    j["squarefree"] = ideal.is_squarefree();
    if (!ideal.is_squarefree()) {
        j["special_odd_cycle"] = nullptr;
        return j;
    }
    FacetComplex fc = facet_complex(ideal);
    auto cyc = find_special_odd_cycle(fc);
    j["special_odd_cycle"] = cyc ? cycle_to_json(*cyc, fc) : Json(nullptr);
    return j;
}

Json powers_report(const PowerPipelineReport& rep) {
    Json j;
    j["n"] = rep.n;
    Json initial = Json::array();
    for (const auto& m : rep.initial.gens()) initial.push_back(monomial_to_string(m));
    j["initial"] = initial;
    j["squarefree"] = rep.squarefree;
    if (rep.cycle.has_value() && rep.squarefree)
        j["special_odd_cycle"] = cycle_to_json(*rep.cycle, facet_complex(rep.initial));
    else
        j["special_odd_cycle"] = nullptr;
    Json pe;
    pe["ok"] = rep.powers.ok;
    pe["first_failure_t"] = rep.powers.ok ? Json(nullptr) : Json(rep.powers.first_failure_t);
    pe["witness"] = rep.powers.witness ? Json(monomial_to_string(*rep.powers.witness)) : Json(nullptr);
    j["power_equality"] = pe;
    j["ok"] = rep.ok();
    return j;
}

namespace {

Json factor_to_json(const GFactor& gf) {
    Json j;
    j["edge"] = {gf.factor.i, gf.factor.j};
    if (gf.role == FactorRole::boundary) {
        j["role"] = "boundary";
        j["cut"] = gf.cut_label;
    } else {
        j["role"] = "component";
        j["component"] = gf.component;
    }
    return j;
}

Json fedder_to_json(const FedderResult& f) {
    Json j;
    j["nonzero"] = f.nonzero;
    j["surviving_terms"] = f.surviving_terms;
    j["u_coefficient"] = f.u_coefficient;
    return j;
}

}  // namespace

Json fsplit_report_to_json(const FsplitReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["normalized_recipe"] = recipe_to_json(rep.normalized);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["U"] = e.U;
        je["height"] = e.h;
        je["branch"] = e.empty_cut ? "empty-cut" : "interior-cut";
        if (!e.empty_cut) {
            Json factors = Json::array();
            for (const auto& gf : e.g_factors) factors.push_back(factor_to_json(gf));
            je["g_factors"] = factors;
            Json led;
            led["boundary_pairs"] = e.ledger.breakdown.boundary_pairs;
            led["prefix"] = e.ledger.breakdown.prefix_part;
            led["gaps"] = e.ledger.breakdown.gap_part;
            led["cliques"] = e.ledger.breakdown.clique_part;
            led["suffix"] = e.ledger.breakdown.suffix_part;
            led["b"] = e.ledger.b;
            led["closed_form"] = e.ledger.closed_form;
            je["ledger"] = led;
        } else {
            je["b"] = e.ledger.b;
        }
        Json checks;
        checks["divides_f"] = e.divides_f;
        checks["factors_verified"] = e.factors_verified;
        checks["b_equals_height"] = e.b_equals_height;
        checks["on_path_form"] = e.on_path_form;
        je["checks"] = checks;
        je["ok"] = e.ok;
        if (!e.note.empty()) je["note"] = e.note;
        entries.push_back(je);
    }
    j["primes"] = entries;
    j["fedder"] = fedder_to_json(rep.fedder);
    Json oracle = Json::array();
    for (const auto& oc : rep.oracle) {
        Json jo;
        jo["U"] = oc.U;
        switch (oc.status) {
            case OracleStatus::confirmed: jo["status"] = "confirmed"; break;
            case OracleStatus::refuted: jo["status"] = "refuted"; break;
            case OracleStatus::skipped: jo["status"] = "skipped"; break;
            case OracleStatus::budget_exhausted: jo["status"] = "budget-exhausted"; break;
        }
        oracle.push_back(jo);
    }
    j["oracle"] = oracle;
    j["ok"] = rep.ok;
    return j;
}

Json sfr_report_to_json(const SfrReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["family"] = family_name(rep.family);
    j["normalized_recipe"] = recipe_to_json(rep.normalized);
    j["edge_1_2_present"] = rep.edge_1_2_present;
    Json c1 = Json::array();
    for (const auto& e : rep.condition1) {
        Json je;
        je["U"] = e.U;
        je["height"] = e.h;
        je["branch"] = e.branch;
        je["exponent_after_removal"] = e.exponent_after_removal;
        je["ok"] = e.ok;
        c1.push_back(je);
    }
    j["condition1"] = c1;
    j["condition2"] = fedder_to_json(rep.condition2);
    j["condition3"] = rep.condition3;
    j["condition4"] = rep.condition4;
    j["ok"] = rep.ok;
    return j;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

Json run_report(const std::string& command, const std::string& input_bytes, Json payload,
                long long timing_ms) {
    Json j;
    j["command"] = command;
    j["input_hash"] = fnv1a_hex(input_bytes);
    j["report"] = std::move(payload);
    if (timing_ms >= 0) j["timing_ms"] = timing_ms;
    return j;
}

}  // namespace bei
