#include "bei/monomial_ideal.hpp"
#include "bei/poly.hpp"

#include <doctest.h>

#include <random>

using namespace bei;

namespace {

Polynomial random_poly(std::mt19937& rng, int nverts, Domain dom, int max_terms = 4) {
    Polynomial p(2 * nverts, dom);
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m(2 * nverts);
        for (int k = 0; k < 2 * nverts; ++k) m.e[k] = static_cast<int>(rng() % 3);
        long long c = static_cast<long long>(rng() % 7) - 3;
        p.add_term(m, Rational(c));
    }
    return p;
}

}  // namespace

TEST_CASE("binomial square over Q and over Z/2") {
    Polynomial f12 = EdgeBinomial(1, 2).to_poly(2, Domain::rationals());
    Polynomial sq = f12 * f12;
    Polynomial expect = parse_polynomial(2, Domain::rationals(), "x1^2*y2^2 - 2*x1*y1*x2*y2 + y1^2*x2^2");
    CHECK(sq == expect);

    Polynomial f12p = EdgeBinomial(1, 2).to_poly(2, Domain::mod(2));
    Polynomial sqp = f12p * f12p;
    Polynomial expectp = parse_polynomial(2, Domain::mod(2), "x1^2*y2^2 + y1^2*x2^2");
    CHECK(sqp == expectp);
}

TEST_CASE("pow zero is one") {
    Polynomial f = parse_polynomial(2, Domain::rationals(), "3*x1*y2 - y1");
    CHECK(f.pow(0) == Polynomial::constant(4, Domain::rationals(), 1));
    CHECK(Polynomial::zero(4, Domain::rationals()).pow(0) ==
          Polynomial::constant(4, Domain::rationals(), 1));
}

TEST_CASE("domain mismatch rejected") {
    Polynomial a(4, Domain::rationals());
    Polynomial b(4, Domain::mod(3));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    Polynomial c(6, Domain::rationals());
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("arithmetic laws on random polynomials") {
    std::mt19937 rng(23);
    for (Domain dom : {Domain::rationals(), Domain::mod(5)}) {
        for (int trial = 0; trial < 25; ++trial) {
            Polynomial a = random_poly(rng, 2, dom);
            Polynomial b = random_poly(rng, 2, dom);
            Polynomial c = random_poly(rng, 2, dom);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Polynomial::zero(4, dom));
        }
    }
}

TEST_CASE("pow splits over addition of exponents") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial f = random_poly(rng, 2, Domain::rationals(), 3);
        int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
        CHECK(f.pow(a + b) == f.pow(a) * f.pow(b));
    }
}

TEST_CASE("freshman's dream over Z/p") {
    std::mt19937 rng(31);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        for (int trial = 0; trial < 8; ++trial) {
            Polynomial f = random_poly(rng, 2, Domain::mod(p), 3);
            Polynomial g = random_poly(rng, 2, Domain::mod(p), 3);
            CHECK((f + g).pow(static_cast<int>(p)) ==
                  f.pow(static_cast<int>(p)) + g.pow(static_cast<int>(p)));
        }
    }
}

TEST_CASE("monomial ideal intersection and power") {
    const int n = 3;
    MonomialIdeal ix(2 * n, {Monomial::var_x(n, 1)});
    MonomialIdeal iy(2 * n, {Monomial::var_y(n, 1)});
    MonomialIdeal isect = monomial_ideal_intersect(ix, iy);
    REQUIRE(isect.gens().size() == 1);
    CHECK(monomial_to_string(isect.gens()[0]) == "x1*y1");

    MonomialIdeal i2(2 * n, {parse_monomial(n, "x1*y2"), parse_monomial(n, "x2*y3")});
    MonomialIdeal sq = monomial_ideal_power(i2, 2);
    REQUIRE(sq.gens().size() == 3);
    CHECK(monomial_to_string(sq.gens()[0]) == "x1^2*y2^2");
    CHECK(monomial_to_string(sq.gens()[1]) == "x1*x2*y2*y3");
    CHECK(monomial_to_string(sq.gens()[2]) == "x2^2*y3^2");

    MonomialIdeal principal(2 * n, {parse_monomial(n, "x1*y2")});
    CHECK(monomial_ideal_contains(principal, parse_monomial(n, "x1^2*y2*y3")));
    CHECK_FALSE(monomial_ideal_contains(principal, parse_monomial(n, "x1*y3")));
}

TEST_CASE("power membership agrees with brute force") {
    // u lies in I^m iff a product of m generators divides it
    std::mt19937 rng(37);
    const int n = 2;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Monomial> gens;
        int k = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < k; ++t) {
            Monomial m(2 * n);
            for (int v = 0; v < 2 * n; ++v) m.e[v] = static_cast<int>(rng() % 2);
            if (m.is_one()) m.e[0] = 1;
            gens.push_back(m);
        }
        MonomialIdeal ideal(2 * n, gens);
        for (int m = 1; m <= 3; ++m) {
            MonomialIdeal pw = monomial_ideal_power(ideal, m);
            for (int probe = 0; probe < 25; ++probe) {
                Monomial u(2 * n);
                for (int v = 0; v < 2 * n; ++v) u.e[v] = static_cast<int>(rng() % (m + 2));
                bool brute = false;
                // all m-multisets over the stored minimal generators
                const auto& gg = ideal.gens();
                std::vector<int> idx(m, 0);
                while (!brute) {
                    Monomial prod = gg[idx[0]];
                    for (int t = 1; t < m; ++t) prod = prod.mul(gg[idx[t]]);
                    if (prod.divides(u)) brute = true;
                    int t = m - 1;
                    while (t >= 0 && idx[t] == static_cast<int>(gg.size()) - 1) --t;
                    if (t < 0) break;
                    int v = idx[t] + 1;
                    for (int s = t; s < m; ++s) idx[s] = v;
                }
                CHECK(pw.contains(u) == brute);
            }
        }
    }
}

TEST_CASE("frobenius power") {
    const int n = 2;
    std::vector<Monomial> vars;
    for (int i = 1; i <= n; ++i) {
        vars.push_back(Monomial::var_x(n, i));
        vars.push_back(Monomial::var_y(n, i));
    }
    MonomialIdeal m_ideal(2 * n, vars);
    MonomialIdeal f2 = frobenius_power(m_ideal, 2);
    for (const auto& g : f2.gens()) CHECK(g.deg() == 2);
    CHECK(f2.gens().size() == 4);

    MonomialIdeal one_gen(2 * n, {parse_monomial(n, "x1*y2")});
    CHECK(monomial_to_string(frobenius_power(one_gen, 3).gens()[0]) == "x1^3*y2^3");

    MonomialIdeal two(2 * n, {Monomial::var_x(n, 1), Monomial::var_x(n, 2)});
    MonomialIdeal f4 = frobenius_power(two, 4);
    CHECK(monomial_to_string(f4.gens()[0]) == "x1^4");
    CHECK(monomial_to_string(f4.gens()[1]) == "x2^4");

    CHECK_THROWS_AS(frobenius_power(two, 6), std::invalid_argument);
}

TEST_CASE("frobenius reduction") {
    Polynomial f = parse_polynomial(2, Domain::mod(2), "x1^2*y2^2 + x1*y1*x2*y2");
    Polynomial r = reduce_mod_frobenius(f, 2);
    CHECK(r == parse_polynomial(2, Domain::mod(2), "x1*y1*x2*y2"));

    Polynomial g = parse_polynomial(2, Domain::mod(2), "y1^2*x2^2");
    CHECK(reduce_mod_frobenius(g, 2).is_zero());

    Polynomial f12 = EdgeBinomial(1, 2).to_poly(2, Domain::mod(3));
    CHECK(reduce_mod_frobenius(f12, 3) == f12);
}

TEST_CASE("frobenius reduction is a quotient homomorphism") {
    std::mt19937 rng(41);
    for (std::uint64_t p : {2ULL, 3ULL}) {
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial f = random_poly(rng, 2, Domain::mod(p));
            Polynomial g = random_poly(rng, 2, Domain::mod(p));
            CHECK(reduce_mod_frobenius(f * g, p) ==
                  reduce_mod_frobenius(reduce_mod_frobenius(f, p) * g, p));
        }
    }
}

TEST_CASE("polynomial text round trip") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_poly(rng, 3, Domain::rationals());
        Polynomial back = parse_polynomial(3, Domain::rationals(), f.to_string());
        CHECK(back == f);
    }
    CHECK(parse_polynomial(2, Domain::rationals(), "x1*y2 - y1*x2") ==
          EdgeBinomial(1, 2).to_poly(2, Domain::rationals()));
    CHECK(parse_polynomial(2, Domain::rationals(), "0").is_zero());
    CHECK(parse_polynomial(2, Domain::rationals(), "2/3*x1^2").to_string() == "2/3*x1^2");
}
