#include "perichar/laurent.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace perichar {

namespace {

void require_same_rank(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.nvars() != g.nvars()) throw DomainError("variable count mismatch");
}

// Pairwise f-term x g-term operations above this count go to the OpenMP kernel.
constexpr std::size_t kParallelMulWork = std::size_t{1} << 14;

} // namespace

LaurentPolynomial LaurentPolynomial::constant(int nvars, mpz_class c) {
    LaurentPolynomial p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponents e, mpz_class c) {
    LaurentPolynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(std::move(e), 1);
}

mpz_class LaurentPolynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

bool LaurentPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

mpz_class LaurentPolynomial::constant_value() const {
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.empty() ? mpz_class(0) : terms_.begin()->second;
}

const LaurentPolynomial::TermMap::value_type& LaurentPolynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return *terms_.rbegin();
}

void LaurentPolynomial::add_term(const Exponents& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("variable count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    require_same_rank(f, g);
    LaurentPolynomial r = f;
    for (const auto& [e, c] : g.terms()) r.add_term(e, c);
    return r;
}

LaurentPolynomial sub(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    require_same_rank(f, g);
    LaurentPolynomial r = f;
    for (const auto& [e, c] : g.terms()) r.add_term(e, -c);
    return r;
}

LaurentPolynomial negate(const LaurentPolynomial& f) {
    LaurentPolynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, -c);
    return r;
}

LaurentPolynomial scalar_mul(const mpz_class& c, const LaurentPolynomial& f) {
    LaurentPolynomial r(f.nvars());
    if (c == 0) return r;
    for (const auto& [e, coef] : f.terms()) r.add_term(e, c * coef);
    return r;
}

LaurentPolynomial mul_serial(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    require_same_rank(f, g);
    const std::size_t n = static_cast<std::size_t>(f.nvars());
    LaurentPolynomial r(f.nvars());
    Exponents e(n);
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            for (std::size_t v = 0; v < n; ++v) e[v] = ef[v] + eg[v];
            r.add_term(e, cf * cg);
        }
    }
    return r;
}

LaurentPolynomial mul_parallel(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    require_same_rank(f, g);
#ifndef _OPENMP
    return mul_serial(f, g);
#else
    const std::size_t n = static_cast<std::size_t>(f.nvars());
    std::vector<const LaurentPolynomial::TermMap::value_type*> fterms;
    fterms.reserve(f.term_count());
    for (const auto& term : f.terms()) fterms.push_back(&term);

    const int nthreads = omp_get_max_threads();
    std::vector<LaurentPolynomial::TermMap> partial(static_cast<std::size_t>(nthreads));

#pragma omp parallel
    {
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
        Exponents e(n);
#pragma omp for schedule(static)
        for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(fterms.size()); ++idx) {
            const auto& [ef, cf] = *fterms[static_cast<std::size_t>(idx)];
            for (const auto& [eg, cg] : g.terms()) {
                for (std::size_t v = 0; v < n; ++v) e[v] = ef[v] + eg[v];
                auto [it, inserted] = local.emplace(e, cf * cg);
                if (!inserted) {
                    it->second += cf * cg;
                    if (it->second == 0) local.erase(it);
                }
            }
        }
    }

    // Exact integer sums are order-independent, so the merged result is
    // identical to the serial one regardless of scheduling.
    LaurentPolynomial r(f.nvars());
    for (const auto& m : partial)
        for (const auto& [e2, c] : m) r.add_term(e2, c);
    return r;
#endif
}

LaurentPolynomial mul(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    require_same_rank(f, g);
    if (f.term_count() * g.term_count() >= kParallelMulWork) return mul_parallel(f, g);
    return mul_serial(f, g);
}

LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    require_same_rank(f, g);
    if (g.is_zero()) throw DomainError("division by zero");
    const std::size_t n = static_cast<std::size_t>(f.nvars());
    if (f.is_zero()) return LaurentPolynomial(f.nvars());

    // Per-variable degree window of the quotient. The top/bottom x_i-degree
    // faces of a product never cancel over Z, so when f = q*g these bounds
    // are exact; a candidate quotient term outside the box proves
    // indivisibility and also makes the reduction terminate.
    Exponents qmin(n), qmax(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::int64_t fmin = std::numeric_limits<std::int64_t>::max(), fmax = std::numeric_limits<std::int64_t>::min();
        std::int64_t gmin = fmin, gmax = fmax;
        for (const auto& [e, c] : f.terms()) { fmin = std::min(fmin, e[v]); fmax = std::max(fmax, e[v]); }
        for (const auto& [e, c] : g.terms()) { gmin = std::min(gmin, e[v]); gmax = std::max(gmax, e[v]); }
        qmin[v] = fmin - gmin;
        qmax[v] = fmax - gmax;
        if (qmin[v] > qmax[v]) throw DomainError("not divisible");
    }

    const auto& [lt_g, lc_g] = g.leading_term();
    LaurentPolynomial::TermMap rem = f.terms();
    LaurentPolynomial q(f.nvars());
    Exponents qe(n), pe(n);
    while (!rem.empty()) {
        const auto& [lt_r, lc_r] = *rem.rbegin();
        for (std::size_t v = 0; v < n; ++v) {
            qe[v] = lt_r[v] - lt_g[v];
            if (qe[v] < qmin[v] || qe[v] > qmax[v]) throw DomainError("not divisible");
        }
        if (!mpz_divisible_p(lc_r.get_mpz_t(), lc_g.get_mpz_t())) throw DomainError("not divisible");
        mpz_class qc = lc_r / lc_g;
        q.add_term(qe, qc);
        for (const auto& [eg, cg] : g.terms()) {
            for (std::size_t v = 0; v < n; ++v) pe[v] = qe[v] + eg[v];
            auto [it, inserted] = rem.emplace(pe, -qc * cg);
            if (!inserted) {
                it->second -= qc * cg;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return q;
}

LaurentPolynomial permute_variables(const LaurentPolynomial& f, const std::vector<int>& p) {
    const std::size_t n = static_cast<std::size_t>(f.nvars());
    if (p.size() != n) throw DomainError("permutation is not a bijection");
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
            throw DomainError("permutation is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    LaurentPolynomial r(f.nvars());
    Exponents e(n);
    for (const auto& [ef, c] : f.terms()) {
        for (std::size_t v = 0; v < n; ++v) e[static_cast<std::size_t>(p[v])] = ef[v];
        r.add_term(e, c);
    }
    return r;
}

LaurentPolynomial pair_substitute(const LaurentPolynomial& f, int i, int j) {
    const int n = f.nvars();
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw DomainError("invalid variable pair");
    LaurentPolynomial r(n - 1);
    Exponents e(static_cast<std::size_t>(n - 1));
    for (const auto& [ef, c] : f.terms()) {
        std::size_t out = 0;
        for (int v = 0; v < n; ++v)
            if (v != i && v != j) e[out++] = ef[static_cast<std::size_t>(v)];
        e[out] = ef[static_cast<std::size_t>(i)] - ef[static_cast<std::size_t>(j)];
        r.add_term(e, c);
    }
    return r;
}

TSplit t_independent_part(const LaurentPolynomial& f) {
    if (f.nvars() == 0) return {true, f};
    const std::size_t last = static_cast<std::size_t>(f.nvars()) - 1;
    for (const auto& [e, c] : f.terms())
        if (e[last] != 0) return {false, LaurentPolynomial(f.nvars() - 1)};
    LaurentPolynomial value(f.nvars() - 1);
    for (const auto& [e, c] : f.terms())
        value.add_term(Exponents(e.begin(), e.end() - 1), c);
    return {true, std::move(value)};
}

} // namespace perichar
