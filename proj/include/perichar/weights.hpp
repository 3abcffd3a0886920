#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perichar/laurent.hpp"

namespace perichar {

/// Integral weight (coefficients of eps_1..eps_n). Dominant = weakly decreasing.
using Weight = std::vector<std::int64_t>;

bool is_dominant(const Weight& lambda);

/// Parity p(lambda) in {0,1}: with s = sum(lambda_i),
///   s even: p = (s/2) mod 2,   s odd: p = ((s+1)/2) mod 2
/// (always the nonnegative residue).
int parity(const Weight& lambda);

/// rho = (n-1, n-2, ..., 1, 0).
Weight rho(int n);

/// Bead positions of a dominant weight: bullets_i = lambda_i + n - i (1-based i),
/// stored strictly decreasing. Bijective with dominant weights.
struct WeightDiagram {
    std::vector<std::int64_t> bullets;

    friend bool operator==(const WeightDiagram&, const WeightDiagram&) = default;
};

WeightDiagram to_diagram(const Weight& lambda);
Weight from_diagram(const WeightDiagram& d);

/// Order convention as used here: lambda <= mu iff lambda_i >= mu_i for all i
/// (note the reversal; each bead of d_lambda lies weakly right of the
/// corresponding bead of d_mu). Do not "fix" the direction.
bool dominance_leq(const Weight& lambda, const Weight& mu);

struct BallMove {
    std::int64_t source;  // bead position lambda_i + n - i being moved
    int direction;        // +1 or -1
    Weight target;        // lambda +- eps_i, dominant

    friend bool operator==(const BallMove&, const BallMove&) = default;
};

/// All single-bead moves lambda -> lambda +- eps_i landing on a dominant
/// weight; equivalently the moves onto an adjacent empty position of the
/// diagram. Ordered by i ascending, +1 before -1.
std::vector<BallMove> ball_moves(const Weight& lambda);

/// ASCII bead line over [lo, hi]: 'b' at bead positions, 'o' elsewhere,
/// with a position-label row.
std::string render_diagram(const Weight& lambda, std::int64_t lo, std::int64_t hi);

namespace testing {
/// Fault injection for the selftest harness: flips every parity value.
/// Also enabled by the environment variable PERICHAR_MUTATE_PARITY=1.
void set_parity_fault(bool enabled);
bool parity_fault();
} // namespace testing

} // namespace perichar
