#pragma once

#include <cstdint>
#include <vector>

#include "perichar/cancel.hpp"
#include "perichar/superchar.hpp"

namespace perichar {

/// Odd root s*(eps_{i+1} + eps_{j+1}) with s in {+1,-1} and 0-based i <= j.
struct SignedOddRoot {
    int sign;
    int i;
    int j;

    friend bool operator==(const SignedOddRoot&, const SignedOddRoot&) = default;
};

/// Odd roots alpha with (alpha, gamma) > 0:
///   { +(eps_i+eps_j), i <= j : gamma_i + gamma_j > 0 } u
///   { -(eps_i+eps_j), i <  j : gamma_i + gamma_j < 0 },
/// ordered by (sign, i, j) with + first.
std::vector<SignedOddRoot> delta1_r(const std::vector<std::int64_t>& gamma);

/// Even-root part of the Levi condition: lambda_i == lambda_j whenever
/// gamma_i == gamma_j.
bool validate_levi_weight(const Weight& lambda, const std::vector<std::int64_t>& gamma);

/// Full Levi condition: the even-root part plus lambda_i == lambda_j whenever
/// gamma_i + gamma_j == 0 for i < j (both odd roots +-(eps_i+eps_j) then lie
/// in the Levi and their bracket meets the Cartan).
bool levi_weight_admissible(const Weight& lambda, const std::vector<std::int64_t>& gamma);

/// True iff the parabolic attached to gamma contains the Borel b_0 + g_{-1}:
/// gamma weakly decreasing and gamma_1 + gamma_2 <= 0.
bool parabolic_contains_borel(const std::vector<std::int64_t>& gamma);

/// Parabolic Euler characteristic
///   E(lambda) = (e^rho R_0)^{-1} sum_w sgn(w) w(e^{lambda+rho} prod_{alpha in
///   Delta_1(r)} (1 - e^{-alpha})),
/// computed by expanding the product over subsets and reducing each exponent
/// to a signed Schur term. Dispatches to the OpenMP subset kernel when the
/// subset count is large; the serial variant is the reference.
SupercharElement euler_characteristic(const Weight& lambda, const std::vector<std::int64_t>& gamma,
                                      const CancelToken* cancel = nullptr);
SupercharElement euler_characteristic_serial(const Weight& lambda, const std::vector<std::int64_t>& gamma,
                                             const CancelToken* cancel = nullptr);

/// Subset-count guard (2^20 by default); override with PERICHAR_MAX_SUBSETS.
std::uint64_t max_parabolic_subsets();

/// The explicit preimage family for the surjectivity probe:
///   gamma = (0^{2k}, (-1)^{n-2k}), lambda = (a^{2k}, 0^{n-2k}).
/// Requires k >= 1 and n > 2k.
SupercharElement prop43_candidate(int n, int k, std::int64_t a, const CancelToken* cancel = nullptr);

struct ProbeRow {
    std::int64_t a = 0;
    SupercharElement ds_value; // ds_iterate(prop43_candidate(n,k,a), k)
    bool equals_plus = false;  // ds_value == sch_thin_kac(0) of rank n-2k
    bool equals_minus = false; // ds_value == -sch_thin_kac(0)
};

struct ProbeReport {
    int n = 0;
    int k = 0;
    std::vector<ProbeRow> rows;

    bool any_hit() const;
};

/// Scan a in [a_min, a_max], reporting the ds-iterate of each candidate and
/// whether it matches +-sch_thin_kac(0) of rank n-2k. Asserts nothing about
/// which a succeeds.
ProbeReport surjectivity_probe(int n, int k, std::int64_t a_min, std::int64_t a_max,
                               const CancelToken* cancel = nullptr);

} // namespace perichar
