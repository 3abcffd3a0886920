#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perichar/schur.hpp"

using namespace perichar;

namespace {

LaurentPolynomial from_terms(int nvars, std::initializer_list<std::pair<Exponents, long>> terms) {
    LaurentPolynomial f(nvars);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

std::vector<Weight> dominant_weights(int n, std::int64_t lo, std::int64_t hi) {
    std::vector<Weight> out;
    Weight cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = cur.empty() ? hi : cur.back(); v >= lo; --v) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

} // namespace

TEST_CASE("alternants vanish on repeats and expand the Vandermonde orbit") {
    CHECK(alternant({1, 0}) == from_terms(2, {{{1, 0}, 1}, {{0, 1}, -1}}));
    CHECK(alternant({1, 1}) == LaurentPolynomial(2));
    CHECK(alternant({2, 1, 0}) == from_terms(3, {{{2, 1, 0}, 1},
                                                 {{2, 0, 1}, -1},
                                                 {{1, 2, 0}, -1},
                                                 {{0, 2, 1}, 1},
                                                 {{1, 0, 2}, 1},
                                                 {{0, 1, 2}, -1}}));
}

TEST_CASE("schur polynomials via the alternant ratio") {
    CHECK(schur_laurent({1, 0}) == from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK(schur_laurent({0, -1}) == from_terms(2, {{{-1, 0}, 1}, {{0, -1}, 1}}));
    CHECK(schur_laurent({2, 0}) == from_terms(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
    CHECK(schur_laurent({}) == LaurentPolynomial::constant(0, 1));
    CHECK_THROWS_WITH_AS(schur_laurent({0, 1}), "weight not dominant", DomainError);
}

TEST_CASE("tableau oracle on small shapes") {
    CHECK(schur_ssyt_oracle({1, 1}) == from_terms(2, {{{1, 1}, 1}}));
    CHECK(schur_ssyt_oracle({2, 0}) == from_terms(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
    const LaurentPolynomial s210 = schur_ssyt_oracle({2, 1, 0});
    CHECK(s210.term_count() == 8);
    CHECK(s210.coeff({1, 1, 1}) == 2);
    CHECK_THROWS_WITH_AS(schur_ssyt_oracle({30, 0}), "oracle size guard exceeded", DomainError);
}

TEST_CASE("both schur routes agree, including negative entries") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : dominant_weights(n, -3, 3))
            CHECK(schur_laurent(lambda) == schur_ssyt_oracle(lambda));
}

TEST_CASE("alternant(rho) always divides alternant(lambda+rho)") {
    for (int n = 2; n <= 4; ++n) {
        const Weight r = rho(n);
        for (const auto& lambda : dominant_weights(n, -2, 2)) {
            std::vector<std::int64_t> shifted(lambda.size());
            for (std::size_t i = 0; i < lambda.size(); ++i) shifted[i] = lambda[i] + r[i];
            CHECK_NOTHROW(exact_divide(alternant(shifted), alternant(r)));
        }
    }
}

TEST_CASE("translation by the determinant monomial") {
    for (std::int64_t c = -2; c <= 2; ++c) {
        Weight shifted{2, 0};
        for (auto& x : shifted) x += c;
        LaurentPolynomial expected = schur_laurent({2, 0});
        LaurentPolynomial det(2);
        det.add_term({c, c}, 1);
        CHECK(schur_laurent(shifted) == mul(det, expected));
    }
}

TEST_CASE("symmetry detection") {
    CHECK(is_symmetric(from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}})));
    CHECK_FALSE(is_symmetric(from_terms(2, {{{1, 0}, 1}, {{0, 1}, -1}})));
    CHECK(is_symmetric(from_terms(2, {{{0, 0}, 1}, {{1, 1}, -1}})));
    CHECK(is_symmetric(LaurentPolynomial(3)));
}

TEST_CASE("schur decomposition recovers expansions") {
    const LaurentPolynomial square = mul(schur_laurent({1, 0}), schur_laurent({1, 0}));
    const SchurExpansion expansion = schur_decompose(square);
    CHECK(expansion == SchurExpansion{{{2, 0}, 1}, {{1, 1}, 1}});

    CHECK(schur_decompose(schur_laurent({3, 1})) == SchurExpansion{{{3, 1}, 1}});
    CHECK(schur_decompose(LaurentPolynomial(2)).empty());
    CHECK_THROWS_WITH_AS(schur_decompose(from_terms(2, {{{1, 0}, 1}})), "not symmetric", DomainError);

    for (const auto& lambda : dominant_weights(3, -2, 2))
        CHECK(schur_decompose(schur_laurent(lambda)) == SchurExpansion{{lambda, 1}});
}

TEST_CASE("littlewood-richardson coefficients stay nonnegative") {
    const std::vector<Weight> samples{{2, 0, 0}, {1, 1, 0}, {2, 1, -1}, {0, -1, -2}};
    for (const auto& a : samples)
        for (const auto& b : samples)
            for (const auto& [lambda, c] : schur_decompose(mul(schur_laurent(a), schur_laurent(b))))
                CHECK(c > 0);
}

TEST_CASE("serial and parallel alternants agree") {
    const std::vector<std::int64_t> mu{9, 6, 4, 3, 2, 1, 0};
    CHECK(alternant_parallel(mu) == alternant_serial(mu));
    CHECK(alternant(mu) == alternant_serial(mu));
    CHECK(alternant_parallel({2, 2, 1}) == LaurentPolynomial(3));
}

TEST_CASE("permutation unranking matches lex enumeration") {
    std::vector<int> p{0, 1, 2, 3};
    std::uint64_t rank = 0;
    do {
        CHECK(unrank_permutation(4, rank) == p);
        ++rank;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(rank == factorial(4));
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
}
