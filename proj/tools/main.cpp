#include "bei/fixtures.hpp"
#include "bei/fsplit.hpp"
#include "bei/groebner.hpp"
#include "bei/io.hpp"
#include "bei/primes.hpp"
#include "bei/symbolic.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text << "\n";
}

int worker_count() {
    const char* env = std::getenv("BEI_WORKERS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

// Runs tasks over a small pool; results land in input order.
template <typename Task>
std::vector<bei::Json> run_pool(const std::vector<Task>& tasks) {
    std::vector<bei::Json> results(tasks.size());
    int workers = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
    if (workers <= 1) {
        for (std::size_t k = 0; k < tasks.size(); ++k) results[k] = tasks[k]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t k = next.fetch_add(1);
                if (k >= tasks.size()) break;
                results[k] = tasks[k]();
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

struct CommonOpts {
    std::string out;
    bool timing = false;
};

void attach_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "output file (default stdout)");
    cmd->add_flag("--timing", opts.timing, "include wall time in the report");
}

long long elapsed_ms(std::chrono::steady_clock::time_point start, bool enabled) {
    if (!enabled) return -1;
    auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
}

bei::GraphRecipe recipe_from_flags(int path_len, const std::vector<std::string>& joins,
                                   const std::vector<int>& whiskers) {
    bei::GraphRecipe r;
    r.path_len = path_len;
    for (const auto& spec : joins) {
        // "v2:K3" attaches a K3 via vertex 2; "e1:K4" attaches a K4 via edge 1
        auto colon = spec.find(':');
        if (colon == std::string::npos || spec.size() < 4 || (spec[0] != 'v' && spec[0] != 'e') ||
            spec[colon + 1] != 'K')
            throw std::invalid_argument("join spec must look like v2:K3 or e1:K4");
        int idx = std::stoi(spec.substr(1, colon - 1));
        int size = std::stoi(spec.substr(colon + 2));
        if (spec[0] == 'v')
            r.vertex_joins[idx].push_back(size);
        else
            r.edge_joins[idx] = size;
    }
    r.whiskers = whiskers;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binomial edge ideal toolkit: combinatorial bases, minimal primes, "
                 "symbolic powers and F-split certificates for block-graph families"};
    app.require_subcommand(1);

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "build a graph from a recipe, flags, or a fixture");
    CommonOpts gen_opts;
    std::string gen_recipe_file, gen_family = "generalized-pendant-cliques";
    int gen_path_len = 0, gen_figure = 0, gen_max_n = 0;
    std::vector<std::string> gen_joins;
    std::vector<int> gen_whiskers;
    bool gen_dot = false, gen_all = false, gen_emit_recipe = false;
    gen->add_option("--recipe", gen_recipe_file, "recipe json file");
    gen->add_option("--family", gen_family, "family for --path-len/--all");
    gen->add_option("--path-len", gen_path_len, "central path length");
    gen->add_option("--join", gen_joins, "clique join, e.g. v2:K3 or e1:K4");
    gen->add_option("--whisker", gen_whiskers, "whisker at a path position");
    gen->add_option("--figure", gen_figure, "built-in fixture number 1..4");
    gen->add_flag("--all", gen_all, "enumerate all family recipes up to --max-n");
    gen->add_option("--max-n", gen_max_n, "vertex bound for --all");
    gen->add_flag("--dot", gen_dot, "emit DOT instead of JSON");
    gen->add_flag("--emit-recipe", gen_emit_recipe, "emit the recipe instead of the graph");
    attach_common(gen, gen_opts);

    // ---- analysis commands ----
    struct AnalyzeArgs {
        CommonOpts common;
        std::string graph_file, ideal_file, recipe_file, recipes_file;
        int tmax = 3;
        std::uint64_t p = 2;
        int oracle_bound = 6;
        bool no_oracle = false;
    };

    auto add_graph_cmd = [&](const char* name, const char* desc, AnalyzeArgs& args) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--graph", args.graph_file, "graph json file");
        attach_common(cmd, args.common);
        return cmd;
    };

    AnalyzeArgs gb_args, init_args, primes_args, socp_args, powers_args, fsplit_args, sfr_args;
    auto* gb = add_graph_cmd("gbasis", "admissible paths, basis and initial ideal", gb_args);
    auto* init = add_graph_cmd("initial", "minimal generators of the lex initial ideal", init_args);
    auto* primes_cmd = add_graph_cmd("primes", "minimal primes with components and heights", primes_args);
    auto* socp = add_graph_cmd("socp", "special odd cycle search on the facet complex", socp_args);
    socp->add_option("--ideal", socp_args.ideal_file, "squarefree monomial ideal json");

    auto* powers = app.add_subcommand("powers", "symbolic vs ordinary power comparison");
    powers->add_option("--ideal", powers_args.ideal_file, "squarefree monomial ideal json");
    powers->add_option("--graph", powers_args.graph_file, "graph json (uses its initial ideal)");
    powers->add_option("--recipe", powers_args.recipe_file, "pendant cliques recipe json");
    powers->add_option("--tmax", powers_args.tmax, "largest power to compare");
    attach_common(powers, powers_args.common);

    auto* fsplit = app.add_subcommand("fsplit", "symbolic F-split certificate verification");
    fsplit->add_option("--recipe", fsplit_args.recipe_file, "recipe json file");
    fsplit->add_option("--recipes", fsplit_args.recipes_file, "json array of recipes (batch)");
    fsplit->add_option("--p", fsplit_args.p, "prime characteristic");
    fsplit->add_option("--oracle-bound", fsplit_args.oracle_bound, "largest n for the membership oracle");
    fsplit->add_flag("--no-oracle", fsplit_args.no_oracle, "skip the membership oracle");
    attach_common(fsplit, fsplit_args.common);

    auto* sfr = app.add_subcommand("sfr", "strong F-regularity premises (conditions 1-2)");
    sfr->add_option("--recipe", sfr_args.recipe_file, "recipe json file");
    sfr->add_option("--recipes", sfr_args.recipes_file, "json array of recipes (batch)");
    sfr->add_option("--p", sfr_args.p, "prime characteristic");
    attach_common(sfr, sfr_args.common);

    CLI11_PARSE(app, argc, argv);
    auto start = std::chrono::steady_clock::now();

    try {
        if (gen->parsed()) {
            std::string input_bytes;
            bei::GraphRecipe recipe;
            bool have_recipe = false;
            if (gen_all) {
                auto fam = bei::family_from_name(gen_family);
                if (!fam) throw std::invalid_argument("unknown family: " + gen_family);
                bei::SweepLimits lim;
                if (gen_max_n > 0) lim.max_n = gen_max_n;
                if (*fam != bei::Family::pendant_cliques) lim.max_path = lim.max_n;
                bei::Json arr = bei::Json::array();
                for (const auto& rc : bei::enumerate_recipes(*fam, lim))
                    arr.push_back(bei::recipe_to_json(rc));
                emit(gen_opts.out, arr.dump(2));
                return kExitOk;
            }
            if (gen_figure > 0) {
                if (gen_figure == 4) {
                    emit(gen_opts.out, gen_dot ? bei::to_dot(bei::net_graph())
                                               : bei::graph_to_json(bei::net_graph()).dump(2));
                    return kExitOk;
                }
                recipe = bei::fixtures::figure_recipe(gen_figure);
                have_recipe = true;
                input_bytes = "figure:" + std::to_string(gen_figure);
            } else if (!gen_recipe_file.empty()) {
                input_bytes = slurp(gen_recipe_file);
                recipe = bei::recipe_from_json(bei::Json::parse(input_bytes));
                have_recipe = true;
            } else if (gen_path_len > 0) {
                recipe = recipe_from_flags(gen_path_len, gen_joins, gen_whiskers);
                have_recipe = true;
            }
            if (!have_recipe) throw std::invalid_argument("generate needs --recipe, --figure, --path-len or --all");
            if (gen_emit_recipe) {
                emit(gen_opts.out, bei::recipe_to_json(recipe).dump(2));
                return kExitOk;
            }
            bei::Graph g = bei::build(recipe.folded()).graph;
            emit(gen_opts.out, gen_dot ? bei::to_dot(g) : bei::graph_to_json(g).dump(2));
            return kExitOk;
        }

        auto load_graph = [&](const AnalyzeArgs& args, std::string& bytes) {
            if (args.graph_file.empty()) throw std::invalid_argument("missing --graph");
            bytes = slurp(args.graph_file);
            return bei::graph_from_json(bei::Json::parse(bytes));
        };

        if (gb->parsed() || init->parsed()) {
            AnalyzeArgs& args = gb->parsed() ? gb_args : init_args;
            std::string bytes;
            bei::Graph g = load_graph(args, bytes);
            bei::Json payload;
            std::string name;
            if (gb->parsed()) {
                payload = bei::gbasis_report(g);
                name = "gbasis";
            } else {
                payload = bei::Json::object();
                bei::Json initial = bei::Json::array();
                for (const auto& m : bei::initial_ideal(g).gens())
                    initial.push_back(bei::monomial_to_string(m));
                payload["initial"] = initial;
                name = "initial";
            }
            emit(args.common.out,
                 bei::run_report(name, bytes, payload, elapsed_ms(start, args.common.timing)).dump(2));
            return kExitOk;
        }

        if (primes_cmd->parsed()) {
            std::string bytes;
            bei::Graph g = load_graph(primes_args, bytes);
            bei::Json payload = bei::primes_report(g);
            emit(primes_args.common.out,
                 bei::run_report("primes", bytes, payload, elapsed_ms(start, primes_args.common.timing))
                     .dump(2));
            return kExitOk;
        }

        if (socp->parsed()) {
            std::string bytes;
            bei::MonomialIdeal ideal;
            if (!socp_args.ideal_file.empty()) {
                bytes = slurp(socp_args.ideal_file);
                ideal = bei::monomial_ideal_from_json(bei::Json::parse(bytes));
            } else {
                bei::Graph g = load_graph(socp_args, bytes);
                ideal = bei::initial_ideal(g);
            }
            bei::Json payload = bei::socp_report(ideal);
            emit(socp_args.common.out,
                 bei::run_report("socp", bytes, payload, elapsed_ms(start, socp_args.common.timing)).dump(2));
            return kExitOk;
        }

        if (powers->parsed()) {
            std::string bytes;
            bei::PowerPipelineReport rep;
            if (!powers_args.recipe_file.empty()) {
                bytes = slurp(powers_args.recipe_file);
                rep = bei::power_equality_pipeline(bei::recipe_from_json(bei::Json::parse(bytes)),
                                                   powers_args.tmax);
            } else if (!powers_args.ideal_file.empty()) {
                bytes = slurp(powers_args.ideal_file);
                rep = bei::power_equality_report(bei::monomial_ideal_from_json(bei::Json::parse(bytes)),
                                                 powers_args.tmax);
            } else {
                bei::Graph g = load_graph(powers_args, bytes);
                rep = bei::power_equality_report(bei::initial_ideal(g), powers_args.tmax);
            }
            bei::Json payload = bei::powers_report(rep);
            emit(powers_args.common.out,
                 bei::run_report("powers", bytes, payload, elapsed_ms(start, powers_args.common.timing))
                     .dump(2));
            return rep.ok() ? kExitOk : kExitPropertyFailed;
        }

        if (fsplit->parsed() || sfr->parsed()) {
            AnalyzeArgs& args = fsplit->parsed() ? fsplit_args : sfr_args;
            const bool is_fsplit = fsplit->parsed();
            bei::FsplitOptions opts;
            opts.oracle_bound = args.oracle_bound;
            opts.run_oracle = !args.no_oracle;

            std::vector<bei::GraphRecipe> recipes;
            std::string bytes;
            if (!args.recipes_file.empty()) {
                bytes = slurp(args.recipes_file);
                for (const auto& rj : bei::Json::parse(bytes)) recipes.push_back(bei::recipe_from_json(rj));
            } else if (!args.recipe_file.empty()) {
                bytes = slurp(args.recipe_file);
                recipes.push_back(bei::recipe_from_json(bei::Json::parse(bytes)));
            } else {
                throw std::invalid_argument("missing --recipe or --recipes");
            }

            using TaskFn = std::function<bei::Json()>;
            std::vector<TaskFn> tasks;
            for (const auto& rc : recipes) {
                tasks.push_back([&, rc]() -> bei::Json {
                    if (is_fsplit) return bei::fsplit_report_to_json(bei::verify_symbolic_fsplit(rc, args.p, opts));
                    return bei::sfr_report_to_json(bei::verify_sfr_conditions(rc, args.p, opts));
                });
            }
            std::vector<bei::Json> results = run_pool(tasks);
            bool all_ok = true;
            for (const auto& r : results) all_ok = all_ok && r.at("ok").get<bool>();
            bei::Json payload = (results.size() == 1 && !args.recipe_file.empty())
                                    ? results.front()
                                    : bei::Json(results);
            emit(args.common.out,
                 bei::run_report(is_fsplit ? "fsplit" : "sfr", bytes, payload,
                                 elapsed_ms(start, args.common.timing))
                     .dump(2));
            return all_ok ? kExitOk : kExitPropertyFailed;
        }
    } catch (const bei::OracleBudgetExhausted& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBadInput;
    } catch (const bei::Json::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 10;
    }

    return kExitOk;
}
