#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "chromaprob/enumerate.hpp"
#include "chromaprob/simplex.hpp"
#include "chromaprob/symfunc.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chromaprob;

namespace {

Distribution dist(std::vector<Rational> entries) { return make_distribution(std::move(entries)); }

const Distribution kProbe2 = dist({Rational(2, 5), Rational(3, 5)});
const Distribution kProbe3 = dist({Rational(1, 2), Rational(1, 3), Rational(1, 6)});

}  // namespace

TEST_CASE("monomial basis elements") {
    SymmetricPolynomial pairs = monomial_basis_element({1, 1}, 2);
    REQUIRE(pairs.terms.size() == 1);
    CHECK(pairs.terms.at({1, 1}) == 1);
    CHECK(evaluate_symmetric(pairs, kProbe2) == Rational(6, 25));

    SymmetricPolynomial vanishing = monomial_basis_element({1, 1, 1}, 2);
    CHECK(vanishing.terms.empty());
}

TEST_CASE("algebra on the monomial basis agrees with pointwise products") {
    SymmetricPolynomial e1 = elementary_power(1, 3);
    SymmetricPolynomial e2 = elementary_power(2, 3);
    SymmetricPolynomial product = sym_mul(e1, e2);
    CHECK(evaluate_symmetric(product, kProbe3) ==
          evaluate_symmetric(e1, kProbe3) * evaluate_symmetric(e2, kProbe3));

    SymmetricPolynomial square = sym_mul(e1, e1);
    CHECK(square.terms.at({2}) == 1);
    CHECK(square.terms.at({1, 1}) == 2);

    SymmetricPolynomial combo = sym_add(square, sym_scale(e2, Rational(-2)));
    CHECK(combo.terms.count({1, 1}) == 0);
    CHECK(combo.terms.at({2}) == 1);

    CHECK(elementary_power(4, 3).terms.empty());
    CHECK(elementary_product({2, 1}, 3).terms ==
          sym_mul(elementary_power(2, 3), elementary_power(1, 3)).terms);
}

TEST_CASE("usage graded coloring polynomial of an edge in three variables") {
    SymmetricPolynomial f = chromatic_symmetric_function(named_graph("path:2"), 3);
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms.at({1, 1}) == 2);
    CHECK(max_degree(f) == 2);
}

TEST_CASE("usage graded coloring polynomial evaluates to the proper probability") {
    for (int n = 1; n <= 4; ++n) {
        for_each_graph_class(n, GraphClassOptions{}, [&](const Graph& g) {
            for (int q = 1; q <= 3; ++q) {
                SymmetricPolynomial f = chromatic_symmetric_function(g, q);
                for (const Distribution& p : oracles::grid_distributions(q, 3))
                    CHECK(evaluate_symmetric(f, p) == oracles::proper_probability(g, p));
            }
        });
    }

    SymmetricPolynomial triangle = chromatic_symmetric_function(named_graph("complete:3"), 3);
    REQUIRE(triangle.terms.size() == 1);
    CHECK(triangle.terms.at({1, 1, 1}) == 6);
}

TEST_CASE("elementary basis expansions of two quadratic forms") {
    SymmetricPolynomial with_cross = sym_zero(2);
    sym_add_term(with_cross, {2}, Rational(1));
    sym_add_term(with_cross, {1, 1}, Rational(4));
    auto coeffs = elementary_basis(with_cross);
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs.at({1, 1}) == 1);
    CHECK(coeffs.at({2}) == 2);
    CHECK(is_e_positive(with_cross));

    SymmetricPolynomial sum_of_squares = sym_zero(2);
    sym_add_term(sum_of_squares, {2}, Rational(1));
    auto coeffs2 = elementary_basis(sum_of_squares);
    CHECK(coeffs2.at({1, 1}) == 1);
    CHECK(coeffs2.at({2}) == -2);
    CHECK_FALSE(is_e_positive(sum_of_squares));
}

TEST_CASE("elementary basis expansion round trips") {
    SymmetricPolynomial f = sym_zero(3);
    sym_add_term(f, {2, 1}, Rational(5, 2));
    sym_add_term(f, {1, 1}, Rational(-3));
    sym_add_term(f, {3}, Rational(1, 7));
    auto coeffs = elementary_basis(f);
    SymmetricPolynomial rebuilt = sym_zero(3);
    for (const auto& [lambda, c] : coeffs)
        rebuilt = sym_add(rebuilt, sym_scale(elementary_product(lambda, 3), c));
    CHECK(rebuilt.terms == f.terms);
}

TEST_CASE("edge coloring polynomial is elementary positive in three variables") {
    SymmetricPolynomial f = chromatic_symmetric_function(named_graph("path:2"), 3);
    auto coeffs = elementary_basis(f);
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.at({2}) == 2);
    CHECK(is_e_positive(f));
}

TEST_CASE("expansion refuses when the variable count cannot carry the degree") {
    SymmetricPolynomial f = chromatic_symmetric_function(named_graph("path:3"), 2);
    CHECK(max_degree(f) == 3);
    CHECK_THROWS_AS((void)elementary_basis(f), std::invalid_argument);
}

TEST_CASE("tableau generated functions") {
    SymmetricPolynomial s11 = schur_function({1, 1}, 2);
    CHECK(s11.terms == elementary_power(2, 2).terms);

    SymmetricPolynomial s2 = schur_function({2}, 2);
    CHECK(s2.terms.at({2}) == 1);
    CHECK(s2.terms.at({1, 1}) == 1);

    SymmetricPolynomial s21 = schur_function({2, 1}, 2);
    REQUIRE(s21.terms.size() == 1);
    CHECK(s21.terms.at({2, 1}) == 1);

    SymmetricPolynomial s51 = schur_function({5, 1}, 2);
    REQUIRE(s51.terms.size() == 3);
    CHECK(s51.terms.at({5, 1}) == 1);
    CHECK(s51.terms.at({4, 2}) == 1);
    CHECK(s51.terms.at({3, 3}) == 1);
}

TEST_CASE("a schur function that grows away from uniform") {
    SymmetricPolynomial s51 = schur_function({5, 1}, 2);
    Rational skew = evaluate_symmetric(s51, dist({Rational(3, 5), Rational(2, 5)}));
    Rational flat = evaluate_symmetric(s51, uniform_distribution(2));
    CHECK(skew == Rational(1266, 15625));
    CHECK(flat == Rational(5, 64));
    CHECK(skew > flat);

    Distribution spread = dist({Rational(1, 5), Rational(4, 5)});
    Distribution tighter = dist({Rational(3, 10), Rational(7, 10)});
    CHECK(majorizes(spread, tighter));
    CHECK(evaluate_symmetric(s51, spread) == Rational(1364, 15625));
    CHECK(evaluate_symmetric(s51, tighter) == Rational(86961, 1000000));
    CHECK(evaluate_symmetric(s51, spread) > evaluate_symmetric(s51, tighter));
}
