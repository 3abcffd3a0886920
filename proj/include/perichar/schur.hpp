#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "perichar/laurent.hpp"
#include "perichar/weights.hpp"

namespace perichar {

/// Integer combination of Schur Laurent polynomials, keyed by dominant weight.
using SchurExpansion = std::map<Weight, mpz_class>;

/// Antisymmetrized monomial sum over S_n: sum_w sgn(w) x^{w(mu)}.
/// Zero iff mu has a repeated entry. Dispatches to the OpenMP kernel for
/// large n; alternant_serial is the reference implementation.
LaurentPolynomial alternant(const std::vector<std::int64_t>& mu);
LaurentPolynomial alternant_serial(const std::vector<std::int64_t>& mu);
LaurentPolynomial alternant_parallel(const std::vector<std::int64_t>& mu);

/// Schur Laurent polynomial s_lambda = alternant(lambda + rho) / alternant(rho),
/// the character of the irreducible gl(n)-module V(lambda). Handles negative
/// entries: s_{lambda + c*(1,..,1)} = (x1...xn)^c s_lambda.
LaurentPolynomial schur_laurent(const Weight& lambda);

/// Independent cross-check: semistandard-tableau generating function after
/// shifting lambda to a partition; agrees with schur_laurent on its domain.
/// Deliberately shares no code with the alternant route.
LaurentPolynomial schur_ssyt_oracle(const Weight& lambda);

/// Largest shifted partition size the SSYT oracle accepts.
inline constexpr std::int64_t kSsytOracleMaxBoxes = 18;

/// True iff f is fixed by the adjacent transpositions (which generate S_n).
bool is_symmetric(const LaurentPolynomial& f);

/// Unique expansion of a symmetric f as sum a_lambda s_lambda, by repeated
/// subtraction of the lex-leading Schur term.
SchurExpansion schur_decompose(const LaurentPolynomial& f);

/// Materialize sum a_lambda s_lambda.
LaurentPolynomial schur_expansion_to_poly(int nvars, const SchurExpansion& expansion);

/// Permutations of {0..n-1} in lex order, with sign; used by the parallel
/// alternant kernel and by symmetrization oracles in the test suites.
std::vector<int> unrank_permutation(int n, std::uint64_t rank);
int permutation_sign(const std::vector<int>& p);
std::uint64_t factorial(int n);

namespace detail {
/// schur_laurent memoizes internally; the benchmark clears it between runs.
void clear_schur_cache();
} // namespace detail

} // namespace perichar
