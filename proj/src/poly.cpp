#include "bei/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace bei {

Monomial Monomial::var_x(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("x index out of range");
    Monomial m(2 * n);
    m.e[i - 1] = 1;
    return m;
}

Monomial Monomial::var_y(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("y index out of range");
    Monomial m(2 * n);
    m.e[n + i - 1] = 1;
    return m;
}

int Monomial::deg() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; });
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int k = 0; k < nvars(); ++k)
        if (e[k] > 0) s.push_back(k);
    return s;
}

Monomial Monomial::mul(const Monomial& o) const {
    if (o.nvars() != nvars()) throw std::invalid_argument("monomial size mismatch");
    Monomial r(nvars());
    for (int k = 0; k < nvars(); ++k) {
        if (e[k] > std::numeric_limits<int>::max() - o.e[k])
            throw std::overflow_error("monomial exponent overflow");
        r.e[k] = e[k] + o.e[k];
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (o.nvars() != nvars()) throw std::invalid_argument("monomial size mismatch");
    for (int k = 0; k < nvars(); ++k)
        if (e[k] > o.e[k]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("monomial division not exact");
    Monomial r(nvars());
    for (int k = 0; k < nvars(); ++k) r.e[k] = e[k] - o.e[k];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial size mismatch");
    Monomial r(a.nvars());
    for (int k = 0; k < a.nvars(); ++k) r.e[k] = std::max(a.e[k], b.e[k]);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial size mismatch");
    Monomial r(a.nvars());
    for (int k = 0; k < a.nvars(); ++k) r.e[k] = std::min(a.e[k], b.e[k]);
    return r;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial size mismatch");
    for (int k = 0; k < a.nvars(); ++k) {
        if (a.e[k] != b.e[k]) return a.e[k] > b.e[k];
    }
    return false;
}

bool deg_lex_less(const Monomial& a, const Monomial& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    return lex_greater(a, b);  // within a degree, larger terms first
}

std::string var_name(int nverts, int var_index) {
    if (var_index < nverts) return "x" + std::to_string(var_index + 1);
    return "y" + std::to_string(var_index - nverts + 1);
}

std::string monomial_to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    // render vertex by vertex, x before y, so x_i*y_j and y_i*x_j read naturally
    const int n = m.nverts();
    for (int v = 0; v < n; ++v) {
        for (int k : {v, n + v}) {
            if (m.e[k] == 0) continue;
            if (!first) os << "*";
            os << var_name(n, k);
            if (m.e[k] > 1) os << "^" << m.e[k];
            first = false;
        }
    }
    return os.str();
}

Polynomial Polynomial::constant(int nvars, Domain dom, const Rational& c) {
    Polynomial p(nvars, dom);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

Polynomial Polynomial::from_term(Domain dom, const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars(), dom);
    p.add_term(m, c);
    return p;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

Rational Polynomial::reduce_coeff(const Rational& c) const {
    if (dom_.is_rational()) return c;
    if (denominator(c) != 1)
        throw std::invalid_argument("non-integer coefficient in mod-p domain");
    BigInt num = numerator(c);
    BigInt p(dom_.p);
    BigInt r = num % p;
    if (r < 0) r += p;
    return Rational(r);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial size mismatch");
    Rational cc = reduce_coeff(c);
    if (cc == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, cc);
    } else {
        Rational s = reduce_coeff(it->second + cc);
        if (s == 0)
            terms_.erase(it);
        else
            it->second = s;
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial ring size mismatch");
    if (dom_ != o.dom_) throw std::invalid_argument("coefficient domain mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_, dom_);
    for (const auto& [m, c] : terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(nvars_, dom_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1.mul(m2), c1 * c2);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(nvars_, dom_);
    for (const auto& [m1, c1] : terms_) r.add_term(m1.mul(m), c1 * c);
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = Polynomial::constant(nvars_, dom_, 1);
    for (int t = 0; t < k; ++t) r = r * (*this);
    return r;
}

Polynomial Polynomial::make_monic() const {
    if (!dom_.is_rational()) throw std::invalid_argument("make_monic expects rationals");
    if (is_zero()) return *this;
    Rational lc = leading_coeff();
    Polynomial r(nvars_, dom_);
    for (const auto& [m, c] : terms_) r.add_term(m, c / lc);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && dom_ == o.dom_ && terms_ == o.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << monomial_to_string(m);
        }
        first = false;
    }
    return os.str();
}

EdgeBinomial::EdgeBinomial(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("edge binomial needs distinct endpoints");
    if (std::min(a, b) < 1) throw std::invalid_argument("vertex index out of range");
}

Polynomial EdgeBinomial::to_poly(int nverts, Domain dom) const {
    if (j > nverts) throw std::invalid_argument("vertex index out of range");
    Polynomial p(2 * nverts, dom);
    p.add_term(Monomial::var_x(nverts, i).mul(Monomial::var_y(nverts, j)), 1);
    p.add_term(Monomial::var_y(nverts, i).mul(Monomial::var_x(nverts, j)), -1);
    return p;
}

Polynomial reduce_mod_frobenius(const Polynomial& f, std::uint64_t q) {
    if (f.dom().is_rational()) throw std::invalid_argument("reduce_mod_frobenius expects a mod-p domain");
    Polynomial r(f.nvars(), f.dom());
    for (const auto& [m, c] : f.terms()) {
        bool drop = false;
        for (int x : m.e)
            if (static_cast<std::uint64_t>(x) >= q) {
                drop = true;
                break;
            }
        if (!drop) r.add_term(m, c);
    }
    return r;
}

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
    BigInt read_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in polynomial text");
        return BigInt(s.substr(start, pos - start));
    }
};

}  // namespace

Monomial parse_monomial(int nverts, const std::string& s) {
    Polynomial p = parse_polynomial(nverts, Domain::rationals(), s);
    if (p.term_count() != 1 || p.leading_coeff() != 1)
        throw std::invalid_argument("not a monomial: " + s);
    return p.leading_monomial();
}

Polynomial parse_polynomial(int nverts, Domain dom, const std::string& s) {
    Lexer lx(s);
    Polynomial out(2 * nverts, dom);
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            if (c == '-') sign = -1;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        first = false;

        Rational coeff = sign;
        Monomial mono = Monomial::one(2 * nverts);
        bool any_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                BigInt num = lx.read_int();
                if (lx.peek() == '/') {
                    lx.get();
                    BigInt den = lx.read_int();
                    if (den == 0) throw std::invalid_argument("zero denominator");
                    coeff *= Rational(num, den);
                } else {
                    coeff *= Rational(num);
                }
                any_factor = true;
            } else if (f == 'x' || f == 'y') {
                lx.get();
                BigInt idx = lx.read_int();
                int i = static_cast<int>(idx);
                int exp = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    exp = static_cast<int>(lx.read_int());
                    if (exp < 0) throw std::invalid_argument("negative exponent");
                }
                Monomial v = (f == 'x') ? Monomial::var_x(nverts, i) : Monomial::var_y(nverts, i);
                for (int t = 0; t < exp; ++t) mono = mono.mul(v);
                any_factor = true;
            } else {
                throw std::invalid_argument(std::string("unexpected character '") + f + "' in polynomial text");
            }
            if (lx.peek() == '*') {
                lx.get();
            } else {
                expect_factor = false;
            }
        }
        if (!any_factor) throw std::invalid_argument("empty term");
        out.add_term(mono, coeff);
    }
    return out;
}

}  // namespace bei
