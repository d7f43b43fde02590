#ifndef BEI_GROEBNER_HPP
#define BEI_GROEBNER_HPP

#include "bei/graph.hpp"
#include "bei/monomial_ideal.hpp"
#include "bei/poly.hpp"

namespace bei {

// Path i = i_0, i_1, ..., i_r = j with i < j whose interior vertices all
// lie outside [i, j] and which admits no proper shortcut subsequence.
struct AdmissiblePath {
    int from = 0, to = 0;
    std::vector<int> interior;

    std::vector<int> vertices() const;
    bool operator==(const AdmissiblePath& o) const {
        return from == o.from && to == o.to && interior == o.interior;
    }
    bool operator<(const AdmissiblePath& o) const;
};

struct GroebnerBasis {
    std::vector<Polynomial> elements;  // monic, sorted by (degree, lex) of leading term
    bool reduced = false;
};

// One generator per edge of G, normalized i < j.
std::vector<Polynomial> binomial_edge_ideal(const Graph& g, Domain dom = Domain::rationals());

std::vector<AdmissiblePath> enumerate_admissible_paths(const Graph& g);

// prod_{i_k > j} x_{i_k} * prod_{i_l < i} y_{i_l}
Monomial u_pi(const AdmissiblePath& path, int nverts);

// The combinatorial basis { u_pi * f_{i,j} } over all admissible paths.
GroebnerBasis groebner_basis_edge(const Graph& g);

// Minimal generators of the lex initial ideal of the edge ideal.
MonomialIdeal initial_ideal(const Graph& g);

struct OracleBudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleBudget {
    std::size_t max_pair_reductions = 200000;
    std::size_t max_basis = 5000;
};

// Classical Buchberger with normal pair selection and full
// inter-reduction; rationals only, intended for small rings.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, OracleBudget budget = {});

// Remainder of multivariate division by basis.elements (deterministic
// divisor choice: first listed whose leading term divides).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Division against an arbitrary generating set; a zero remainder proves
// membership even when the set is not a Groebner basis.
Polynomial division_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors);

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, OracleBudget budget = {});

std::vector<Polynomial> sort_basis(std::vector<Polynomial> polys);

}  // namespace bei

#endif
