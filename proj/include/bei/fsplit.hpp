#ifndef BEI_FSPLIT_HPP
#define BEI_FSPLIT_HPP

#include "bei/families.hpp"
#include "bei/groebner.hpp"
#include "bei/primes.hpp"

#include <optional>

namespace bei {

// f = y_1 * f_{1,2} * f_{2,3} * ... * f_{n-1,n} * x_n
Polynomial build_f(int n, Domain dom = Domain::rationals());

enum class FactorRole { boundary, component };

// One consecutive-index binomial factor of g, with the ideal its
// membership is charged to: boundary factors f_{s-1,s}, f_{s,s+1} land
// in the variable ideal (x_s, y_s); component factors f_{j,j+1} with
// {j,j+1} inside a component T land in the edge ideal of K_T.
struct GFactor {
    EdgeBinomial factor;
    FactorRole role = FactorRole::component;
    int cut_label = 0;
    VertexSet component;
};

std::vector<GFactor> build_g(const GraphRecipe& recipe, const VertexSet& u);

struct ExponentBreakdown {
    int boundary_pairs = 0;  // 2m
    int prefix_part = 0;
    int gap_part = 0;
    int clique_part = 0;
    int suffix_part = 0;
    int total() const { return boundary_pairs + prefix_part + gap_part + clique_part + suffix_part; }
};

// Both the itemized sum and the closed form
// b = m + n - sum(alpha) - sum(p); they must agree and equal the height.
struct ExponentLedger {
    ExponentBreakdown breakdown;
    int closed_form = 0;
    int b = 0;
};

ExponentLedger exponent_ledger(const GraphRecipe& recipe, const VertexSet& u);

struct MembershipOracleOptions {
    std::size_t max_products = 500000;
    OracleBudget groebner_budget;
};

// Decides f in pU^h by expanding the h-fold products of the generators
// and dividing; a zero remainder certifies membership outright, a
// nonzero one falls back to a full basis computation.
bool verify_membership_oracle(const Polynomial& f, const std::vector<Polynomial>& pu_gens, int h,
                              const MembershipOracleOptions& opts = {});

struct FedderResult {
    bool nonzero = false;
    std::size_t surviving_terms = 0;
    std::string u_coefficient;  // coefficient of the squarefree-term power u^{p-1}
};

// Computes f^{p-1} over Z/p, reducing modulo m^{[p]} after every factor.
FedderResult fedder_check(int n, std::uint64_t p, long long np_bound = 4000);

struct PrimeCertEntry {
    VertexSet U;
    int h = 0;
    bool empty_cut = false;
    bool on_path_form = true;
    std::vector<GFactor> g_factors;
    ExponentLedger ledger;
    bool divides_f = false;
    bool factors_verified = false;
    bool b_equals_height = false;
    bool ok = false;
    std::string note;
};

enum class OracleStatus { confirmed, refuted, skipped, budget_exhausted };

struct OracleOutcome {
    VertexSet U;
    OracleStatus status = OracleStatus::skipped;
};

struct FsplitOptions {
    int oracle_bound = 6;   // run the membership oracle up to this vertex count
    bool run_oracle = true;
    MembershipOracleOptions oracle;
};

struct FsplitReport {
    GraphRecipe normalized;
    int n = 0;
    std::uint64_t p = 0;
    std::vector<PrimeCertEntry> entries;
    FedderResult fedder;
    std::vector<OracleOutcome> oracle;
    bool ok = false;
};

FsplitReport verify_symbolic_fsplit(const GraphRecipe& recipe, std::uint64_t p,
                                    const FsplitOptions& opts = {});

struct SfrPrimeEntry {
    VertexSet U;
    int h = 0;
    std::string branch;  // "empty-cut", "s1=2", "s1>2"
    int exponent_after_removal = 0;
    bool ok = false;
};

struct SfrReport {
    GraphRecipe normalized;
    int n = 0;
    std::uint64_t p = 0;
    Family family = Family::pendant_cliques;
    bool edge_1_2_present = false;
    std::vector<SfrPrimeEntry> condition1;
    FedderResult condition2;
    std::string condition3 = "assumed (theoretical)";
    std::string condition4 = "assumed (theoretical)";
    bool ok = false;
};

// Conditions 1 and 2 behind strong F-regularity of the symbolic Rees
// algebra, for pendant cliques and net-free generalized caterpillar
// inputs: q = f/f_{1,2} lies in every minimal prime to the power h-1,
// and the Fedder residue is nonzero.
SfrReport verify_sfr_conditions(const GraphRecipe& recipe, std::uint64_t p,
                                const FsplitOptions& opts = {});

}  // namespace bei

#endif
