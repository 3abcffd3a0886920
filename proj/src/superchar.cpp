#include "perichar/superchar.hpp"

#include <algorithm>
#include <string>

namespace perichar {

SupercharElement add(const SupercharElement& f, const SupercharElement& g) {
    if (f.rank() != g.rank()) throw DomainError("rank mismatch");
    return {f.rank(), add(f.poly(), g.poly())};
}

SupercharElement mul(const SupercharElement& f, const SupercharElement& g) {
    if (f.rank() != g.rank()) throw DomainError("rank mismatch");
    return {f.rank(), mul(f.poly(), g.poly())};
}

SupercharElement scalar_mul(const mpz_class& c, const SupercharElement& f) {
    return {f.rank(), scalar_mul(c, f.poly())};
}

SupercharElement r_minus1(int n) {
    if (n < 0) throw DomainError("rank too small");
    LaurentPolynomial p = LaurentPolynomial::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Exponents e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = 1;
            e[static_cast<std::size_t>(j)] = 1;
            LaurentPolynomial factor = LaurentPolynomial::constant(n, 1);
            factor.add_term(e, -1);
            p = mul(p, factor);
        }
    }
    return {n, std::move(p)};
}

SupercharElement sch_thin_kac(const Weight& lambda) {
    if (!is_dominant(lambda)) throw DomainError("weight not dominant");
    const int n = static_cast<int>(lambda.size());
    const mpz_class sign = parity(lambda) ? -1 : 1;
    return {n, scalar_mul(sign, mul(r_minus1(n).poly(), schur_laurent(lambda)))};
}

SupercharElement sch_natural(int n) {
    if (n < 1) throw DomainError("rank too small");
    LaurentPolynomial p(n);
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, 1);
        e[static_cast<std::size_t>(i)] = -1;
        p.add_term(e, -1);
    }
    return {n, std::move(p)};
}

bool jn_membership(const SupercharElement& f) {
    const int n = f.rank();
    if (n < 2) return true;
    return t_independent_part(pair_substitute(f.poly(), n - 2, n - 1)).is_independent;
}

SupercharElement ds_eval(const SupercharElement& f) {
    const int n = f.rank();
    if (n < 2) throw DomainError("rank too small");
    TSplit split = t_independent_part(pair_substitute(f.poly(), n - 2, n - 1));
    if (!split.is_independent) throw DomainError("not supersymmetric at pair (n-1,n)");
    return {n - 2, std::move(split.value)};
}

SupercharElement ds_iterate(const SupercharElement& f, int k) {
    if (k < 0) throw DomainError("negative iteration count");
    if (f.rank() < 2 * k) throw DomainError("rank too small");
    SupercharElement g = f;
    for (int stage = 1; stage <= k; ++stage) {
        try {
            g = ds_eval(g);
        } catch (const DomainError& e) {
            throw DomainError("stage " + std::to_string(stage) + ": " + e.what());
        }
    }
    return g;
}

void ThinKacCombination::add(const Weight& lambda, const mpz_class& c) {
    if (static_cast<int>(lambda.size()) != n) throw DomainError("rank mismatch");
    if (c == 0) return;
    auto [it, inserted] = coeffs.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

SupercharElement thin_kac_to_poly(const ThinKacCombination& c) {
    // sum c_l sch_nabla(l) = r_minus1 * sum c_l (-1)^{p(l)} s_l
    SchurExpansion signed_expansion;
    for (const auto& [lambda, coef] : c.coeffs) {
        if (!is_dominant(lambda)) throw DomainError("weight not dominant");
        signed_expansion[lambda] = parity(lambda) ? -coef : coef;
    }
    LaurentPolynomial sum = schur_expansion_to_poly(c.n, signed_expansion);
    return {c.n, mul(r_minus1(c.n).poly(), sum)};
}

namespace {

// Shared core of kernel_decompose and tensor_V_decompose: divide by R_{-1},
// expand in the Schur basis, attach parity signs. No kernel precondition here
// (rank 0 and 1 have no ds but thin Kac decompositions still make sense).
ThinKacCombination decompose_into_thin_kac(const SupercharElement& f) {
    const int n = f.rank();
    LaurentPolynomial g;
    try {
        g = exact_divide(f.poly(), r_minus1(n).poly());
    } catch (const DomainError&) {
        throw std::logic_error("kernel decomposition: division by R_{-1} failed");
    }
    ThinKacCombination result;
    result.n = n;
    for (const auto& [lambda, a] : schur_decompose(g))
        result.add(lambda, parity(lambda) ? -a : a);
    if (!(thin_kac_to_poly(result) == f))
        throw std::logic_error("kernel decomposition: re-expansion mismatch");
    return result;
}

} // namespace

ThinKacCombination kernel_decompose(const SupercharElement& f) {
    const int n = f.rank();
    if (n < 2) throw DomainError("rank too small");
    // f is in ker ds iff the pair substitution vanishes identically
    // (t-independent with value 0).
    if (!pair_substitute(f.poly(), n - 2, n - 1).is_zero()) throw DomainError("not in kernel");
    return decompose_into_thin_kac(f);
}

ThinKacCombination tensor_V_decompose(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    if (n < 1) throw DomainError("rank too small");
    ThinKacCombination result = decompose_into_thin_kac(mul(sch_thin_kac(lambda), sch_natural(n)));

    // The support must be exactly the ball-move targets with coefficients +-1.
    const auto moves = ball_moves(lambda);
    for (const auto& [mu, c] : result.coeffs) {
        const bool is_target =
            std::any_of(moves.begin(), moves.end(), [&](const BallMove& m) { return m.target == mu; });
        if (!is_target || (c != 1 && c != -1))
            throw std::logic_error("tensor_V_decompose: support outside the ball-move targets");
    }
    return result;
}

ThinKacCombination translate_thin_kac(const Weight& lambda, std::int64_t k) {
    ThinKacCombination full = tensor_V_decompose(lambda);
    ThinKacCombination result;
    result.n = full.n;
    for (const auto& move : ball_moves(lambda)) {
        if (move.source != k) continue;
        auto it = full.coeffs.find(move.target);
        if (it != full.coeffs.end()) result.add(it->first, it->second);
    }
    return result;
}

} // namespace perichar
