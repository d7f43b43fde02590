#include "bei/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

namespace bei {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), deg_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        bool divisible = false;
        for (const auto& kept : out) {
            if (kept.deg() > g.deg()) break;  // sorted by degree, nothing larger can divide
            if (kept.divides(g)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(g);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto& g : gens)
        if (g.nvars() != nvars) throw std::invalid_argument("generator in wrong ring");
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& u) const {
    for (const auto& g : gens_)
        if (g.divides(u)) return true;
    return false;
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal monomial_ideal_power(const MonomialIdeal& I, int m) {
    if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
    const auto& g = I.gens();
    if (g.empty()) return MonomialIdeal(I.nvars());
    // all m-element multisets of generators
    std::vector<Monomial> products;
    std::vector<int> idx(m, 0);
    while (true) {
        Monomial prod = g[idx[0]];
        for (int k = 1; k < m; ++k) prod = prod.mul(g[idx[k]]);
        products.push_back(prod);
        int k = m - 1;
        while (k >= 0 && idx[k] == static_cast<int>(g.size()) - 1) --k;
        if (k < 0) break;
        int v = idx[k] + 1;
        for (int t = k; t < m; ++t) idx[t] = v;
    }
    return MonomialIdeal(I.nvars(), std::move(products));
}

MonomialIdeal monomial_ideal_intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) throw std::invalid_argument("ring size mismatch");
    std::vector<Monomial> lcms;
    lcms.reserve(I.gens().size() * J.gens().size());
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) lcms.push_back(Monomial::lcm(a, b));
    return MonomialIdeal(I.nvars(), std::move(lcms));
}

bool monomial_ideal_contains(const MonomialIdeal& I, const Monomial& u) {
    return I.contains(u);
}

MonomialIdeal frobenius_power(const MonomialIdeal& I, std::uint64_t q) {
    // q must be p^e for a prime p
    std::uint64_t base = q;
    if (q < 2) throw std::invalid_argument("frobenius exponent must be a prime power");
    for (std::uint64_t d = 2; d * d <= base; ++d) {
        if (base % d == 0) {
            while (base % d == 0) base /= d;
            if (base != 1) throw std::invalid_argument("frobenius exponent must be a prime power");
            base = d;
            break;
        }
    }
    std::vector<Monomial> out;
    out.reserve(I.gens().size());
    for (const auto& g : I.gens()) {
        Monomial m(g.nvars());
        for (int k = 0; k < g.nvars(); ++k) {
            long long v = static_cast<long long>(g.e[k]) * static_cast<long long>(q);
            if (v > std::numeric_limits<int>::max()) throw std::overflow_error("frobenius exponent overflow");
            m.e[k] = static_cast<int>(v);
        }
        out.push_back(m);
    }
    return MonomialIdeal(I.nvars(), std::move(out));
}

}  // namespace bei
