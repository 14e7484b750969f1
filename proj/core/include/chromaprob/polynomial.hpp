#pragma once

#include <vector>

#include "chromaprob/rational.hpp"

namespace chromaprob {

// dense integer polynomial, coefficient of q^i at index i; zero polynomial is {}
struct UnivariatePolynomial {
    std::vector<Int> c;

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const Int& coefficient(int i) const;

    Int eval(const Int& x) const;
    Rational eval(const Rational& x) const;

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;
};

UnivariatePolynomial poly_constant(const Int& value);
UnivariatePolynomial poly_monomial(int power, const Int& coeff = 1);
UnivariatePolynomial poly_add(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial poly_sub(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial poly_mul(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial poly_pow(const UnivariatePolynomial& a, unsigned long e);

// q(q-1)(q-2)...(q-n+1)
UnivariatePolynomial falling_factorial_poly(int n);

}  // namespace chromaprob
