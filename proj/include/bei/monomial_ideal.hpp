#ifndef BEI_MONOMIAL_IDEAL_HPP
#define BEI_MONOMIAL_IDEAL_HPP

#include "bei/poly.hpp"

namespace bei {

// Monomial ideal kept as its unique minimal generating set,
// sorted by (degree, lex) for stable output.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    bool is_zero() const { return gens_.empty(); }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool contains(const Monomial& u) const;  // divisibility by some generator
    bool is_squarefree() const;

    bool operator==(const MonomialIdeal& o) const {
        return nvars_ == o.nvars_ && gens_ == o.gens_;
    }

private:
    int nvars_ = 0;
    std::vector<Monomial> gens_;  // minimal, canonically sorted
};

// Removes duplicates and divisible monomials, sorts by (degree, lex).
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal monomial_ideal_power(const MonomialIdeal& I, int m);
MonomialIdeal monomial_ideal_intersect(const MonomialIdeal& I, const MonomialIdeal& J);
bool monomial_ideal_contains(const MonomialIdeal& I, const Monomial& u);

// Ideal generated by q-th powers of the generators; valid for monomial
// ideals. q must be a prime power.
MonomialIdeal frobenius_power(const MonomialIdeal& I, std::uint64_t q);

}  // namespace bei

#endif
