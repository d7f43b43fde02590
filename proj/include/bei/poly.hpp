#ifndef BEI_POLY_HPP
#define BEI_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bei {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exponent vector over the 2n variables x_1..x_n, y_1..y_n.
// Index k < n holds the exponent of x_{k+1}; index n+k holds y_{k+1}.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int nverts() const { return nvars() / 2; }

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial var_x(int n, int i);  // x_i, 1-based
    static Monomial var_y(int n, int i);  // y_i, 1-based

    int deg() const;
    bool is_one() const;
    bool is_squarefree() const;
    std::vector<int> support() const;  // variable indices with positive exponent

    Monomial mul(const Monomial& o) const;
    bool divides(const Monomial& o) const;         // this | o
    Monomial divide(const Monomial& o) const;      // this / o, requires o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Fixed term order: lexicographic with x1 > ... > xn > y1 > ... > yn.
bool lex_greater(const Monomial& a, const Monomial& b);
// For canonical listings: degree first, then lex ascending.
bool deg_lex_less(const Monomial& a, const Monomial& b);

struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_greater(a, b); }
};

// Variable naming for rendering/parsing: "x3", "y1", ...
std::string var_name(int nverts, int var_index);
std::string monomial_to_string(const Monomial& m);
Monomial parse_monomial(int nverts, const std::string& s);

// Coefficient domain tag. p == 0 means exact rationals, otherwise Z/p.
struct Domain {
    std::uint64_t p = 0;

    static Domain rationals() { return Domain{0}; }
    static Domain mod(std::uint64_t prime) { return Domain{prime}; }
    bool is_rational() const { return p == 0; }
    bool operator==(const Domain& o) const { return p == o.p; }
    bool operator!=(const Domain& o) const { return p != o.p; }
};

// Sparse exact polynomial in the 2n-variable ring, over Q or Z/p.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int nvars, Domain dom) : nvars_(nvars), dom_(dom) {}

    static Polynomial zero(int nvars, Domain dom) { return Polynomial(nvars, dom); }
    static Polynomial constant(int nvars, Domain dom, const Rational& c);
    static Polynomial from_term(Domain dom, const Monomial& m, const Rational& c);

    int nvars() const { return nvars_; }
    int nverts() const { return nvars_ / 2; }
    Domain dom() const { return dom_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const std::map<Monomial, Rational, MonomialLexGreater>& terms() const { return terms_; }

    // leading term under the fixed lex order; polynomial must be nonzero
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(int k) const;

    Polynomial make_monic() const;  // rationals only

    bool operator==(const Polynomial& o) const;

    std::string to_string() const;

private:
    void check_compatible(const Polynomial& o) const;
    Rational reduce_coeff(const Rational& c) const;

    int nvars_ = 0;
    Domain dom_ = Domain::rationals();
    std::map<Monomial, Rational, MonomialLexGreater> terms_;
};

// f_{i,j} = x_i y_j - y_i x_j with i < j.
struct EdgeBinomial {
    int i = 0, j = 0;

    EdgeBinomial() = default;
    EdgeBinomial(int a, int b);

    Polynomial to_poly(int nverts, Domain dom) const;
    bool operator==(const EdgeBinomial& o) const { return i == o.i && j == o.j; }
    bool operator<(const EdgeBinomial& o) const { return i < o.i || (i == o.i && j < o.j); }
};

// Drops every term with some exponent >= p; this is the residue in
// S/m^{[p]} on the monomial basis with all exponents below p.
Polynomial reduce_mod_frobenius(const Polynomial& f, std::uint64_t q);

// Parser for the rendered grammar, e.g. "x1*y2 - y1*x2" or "2/3*x1^2".
Polynomial parse_polynomial(int nverts, Domain dom, const std::string& s);

bool is_prime_u64(std::uint64_t v);

}  // namespace bei

#endif
