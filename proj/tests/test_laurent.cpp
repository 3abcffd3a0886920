#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "perichar/laurent.hpp"

using namespace perichar;

namespace {

LaurentPolynomial from_terms(int nvars, std::initializer_list<std::pair<Exponents, long>> terms) {
    LaurentPolynomial f(nvars);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

const LaurentPolynomial one2 = LaurentPolynomial::constant(2, 1);
const LaurentPolynomial x1 = LaurentPolynomial::variable(2, 0);
const LaurentPolynomial x2 = LaurentPolynomial::variable(2, 1);
const LaurentPolynomial one_minus_x1x2 = from_terms(2, {{{0, 0}, 1}, {{1, 1}, -1}});

} // namespace

TEST_CASE("addition cancels and has an identity") {
    CHECK(add(add(x1, x2), negate(x2)) == x1);
    CHECK(add(x1, LaurentPolynomial(2)) == x1);
    CHECK(add(one_minus_x1x2, from_terms(2, {{{1, 1}, 1}})) == one2);
    CHECK_THROWS_WITH_AS(add(x1, LaurentPolynomial::variable(3, 0)), "variable count mismatch", DomainError);
}

TEST_CASE("multiplication distributes over the term maps") {
    CHECK(mul(add(x1, x2), sub(x1, x2)) == from_terms(2, {{{2, 0}, 1}, {{0, 2}, -1}}));
    CHECK(mul(one_minus_x1x2, one2) == one_minus_x1x2);
    CHECK(mul(one_minus_x1x2, from_terms(2, {{{0, 0}, 1}, {{1, 1}, 1}})) ==
          from_terms(2, {{{0, 0}, 1}, {{2, 2}, -1}}));
}

TEST_CASE("exact division inverts multiplication and rejects non-divisors") {
    const LaurentPolynomial f = mul(one_minus_x1x2, add(x1, x2));
    CHECK(exact_divide(f, one_minus_x1x2) == add(x1, x2));
    CHECK(exact_divide(f, one2) == f);
    CHECK_THROWS_WITH_AS(exact_divide(add(x1, x2), one_minus_x1x2), "not divisible", DomainError);
    CHECK_THROWS_WITH_AS(exact_divide(f, LaurentPolynomial(2)), "division by zero", DomainError);
    // integer coefficients matter: x / 2x has no integral quotient
    CHECK_THROWS_WITH_AS(exact_divide(x1, scalar_mul(2, x1)), "not divisible", DomainError);
    // quotients may have negative exponents even for ordinary operands
    CHECK(exact_divide(add(x1, x2), x1) == from_terms(2, {{{0, 0}, 1}, {{-1, 1}, 1}}));
}

TEST_CASE("division handles coefficients beyond 64 bits") {
    const mpz_class big = mpz_class(1) << 80;
    const LaurentPolynomial q = from_terms(2, {{{3, -2}, 7}, {{0, 0}, 1}});
    const LaurentPolynomial g = add(scalar_mul(big, x1), x2);
    CHECK(exact_divide(mul(q, g), g) == q);
}

TEST_CASE("variable permutation is a group action") {
    const LaurentPolynomial f = from_terms(2, {{{2, 1}, 1}});
    CHECK(permute_variables(f, {1, 0}) == from_terms(2, {{{1, 2}, 1}}));
    CHECK(permute_variables(add(x1, x2), {1, 0}) == add(x1, x2));
    // 3-cycle x1 -> x2 -> x3 -> x1 sends the monomial x1 to x2
    CHECK(permute_variables(LaurentPolynomial::variable(3, 0), {1, 2, 0}) ==
          LaurentPolynomial::variable(3, 1));
    CHECK_THROWS_WITH_AS(permute_variables(f, {0, 0}), "permutation is not a bijection", DomainError);
    CHECK_THROWS_WITH_AS(permute_variables(f, {0}), "permutation is not a bijection", DomainError);
}

TEST_CASE("pair substitution tracks the t exponent") {
    CHECK(pair_substitute(one_minus_x1x2, 0, 1) == LaurentPolynomial(1));
    CHECK(pair_substitute(add(x1, x2), 0, 1) == from_terms(1, {{{1}, 1}, {{-1}, 1}}));
    const LaurentPolynomial m = from_terms(4, {{{1, 1, 1, 1}, 1}});
    CHECK(pair_substitute(m, 2, 3) == from_terms(3, {{{1, 1, 0}, 1}}));
    CHECK_THROWS_WITH_AS(pair_substitute(m, 1, 1), "invalid variable pair", DomainError);
    CHECK_THROWS_WITH_AS(pair_substitute(m, 0, 7), "invalid variable pair", DomainError);
}

TEST_CASE("t-independence splits the final coordinate") {
    const TSplit zero = t_independent_part(LaurentPolynomial(1));
    CHECK(zero.is_independent);
    CHECK(zero.value == LaurentPolynomial(0));

    CHECK_FALSE(t_independent_part(from_terms(1, {{{1}, 1}, {{-1}, 1}})).is_independent);

    const TSplit split = t_independent_part(from_terms(3, {{{1, 1, 0}, 1}}));
    CHECK(split.is_independent);
    CHECK(split.value == from_terms(2, {{{1, 1}, 1}}));
}

TEST_CASE("serial and parallel products agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> exp_dist(-4, 4);
    std::uniform_int_distribution<int> coef_dist(-20, 20);
    for (int rep = 0; rep < 5; ++rep) {
        LaurentPolynomial f(3), g(3);
        for (int t = 0; t < 150; ++t) {
            f.add_term({exp_dist(rng), exp_dist(rng), exp_dist(rng)}, coef_dist(rng));
            g.add_term({exp_dist(rng), exp_dist(rng), exp_dist(rng)}, coef_dist(rng));
        }
        const LaurentPolynomial serial = mul_serial(f, g);
        CHECK(mul_parallel(f, g) == serial);
        CHECK(mul(f, g) == serial);
    }
}

TEST_CASE("ring axioms hold with large coefficients") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> exp_dist(-3, 3);
    auto random_poly = [&](int terms) {
        LaurentPolynomial f(2);
        for (int t = 0; t < terms; ++t) {
            mpz_class c = mpz_class(static_cast<long>(rng() % 1000) - 500);
            c <<= static_cast<unsigned>(rng() % 70); // far past 64 bits
            f.add_term({exp_dist(rng), exp_dist(rng)}, c);
        }
        return f;
    };
    for (int rep = 0; rep < 10; ++rep) {
        const auto f = random_poly(5), g = random_poly(5), h = random_poly(4);
        CHECK(mul(f, g) == mul(g, f));
        CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
        CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
    }
}

TEST_CASE("rank zero models integer constants") {
    const LaurentPolynomial c = LaurentPolynomial::constant(0, 5);
    CHECK(c.is_constant());
    CHECK(c.constant_value() == 5);
    CHECK(mul(c, c).constant_value() == 25);
    CHECK(LaurentPolynomial(0).is_zero());
}
