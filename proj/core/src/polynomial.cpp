#include "chromaprob/polynomial.hpp"

namespace chromaprob {

namespace {
const Int kZero = 0;

void normalize(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

const Int& UnivariatePolynomial::coefficient(int i) const {
    if (i < 0 || i >= (int)c.size()) return kZero;
    return c[i];
}

Int UnivariatePolynomial::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

Rational UnivariatePolynomial::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Rational(*it);
    return r;
}

UnivariatePolynomial poly_constant(const Int& value) {
    UnivariatePolynomial p;
    if (value != 0) p.c = {value};
    return p;
}

UnivariatePolynomial poly_monomial(int power, const Int& coeff) {
    UnivariatePolynomial p;
    if (coeff != 0) {
        p.c.assign(power + 1, 0);
        p.c[power] = coeff;
    }
    return p;
}

UnivariatePolynomial poly_add(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    normalize(r.c);
    return r;
}

UnivariatePolynomial poly_sub(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    normalize(r.c);
    return r;
}

UnivariatePolynomial poly_mul(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    normalize(r.c);
    return r;
}

UnivariatePolynomial poly_pow(const UnivariatePolynomial& a, unsigned long e) {
    UnivariatePolynomial r = poly_constant(1);
    UnivariatePolynomial base = a;
    while (e) {
        if (e & 1) r = poly_mul(r, base);
        base = poly_mul(base, base);
        e >>= 1;
    }
    return r;
}

UnivariatePolynomial falling_factorial_poly(int n) {
    UnivariatePolynomial r = poly_constant(1);
    for (int i = 0; i < n; ++i) {
        UnivariatePolynomial factor;
        factor.c = {Int(-i), Int(1)};
        r = poly_mul(r, factor);
    }
    return r;
}

}  // namespace chromaprob
