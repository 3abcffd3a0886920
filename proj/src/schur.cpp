#include "perichar/schur.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace perichar {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    // Factorial number system, lex order.
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> p;
    p.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = factorial(i - 1);
        const std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        p.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return p;
}

int permutation_sign(const std::vector<int>& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

namespace {

bool has_repeat(const std::vector<std::int64_t>& mu) {
    std::vector<std::int64_t> s = mu;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) != s.end();
}

// n >= this many variables: sum the n! orbit with OpenMP.
constexpr int kParallelAlternantMinRank = 7;

void accumulate_orbit_range(const std::vector<std::int64_t>& mu, std::uint64_t lo, std::uint64_t hi,
                            LaurentPolynomial::TermMap& out) {
    const int n = static_cast<int>(mu.size());
    std::vector<int> p = unrank_permutation(n, lo);
    Exponents e(mu.size());
    for (std::uint64_t r = lo; r < hi; ++r) {
        const int sign = permutation_sign(p);
        for (std::size_t i = 0; i < mu.size(); ++i) e[i] = mu[static_cast<std::size_t>(p[i])];
        auto [it, inserted] = out.emplace(e, sign);
        if (!inserted) {
            it->second += sign;
            if (it->second == 0) out.erase(it);
        }
        if (r + 1 < hi) std::next_permutation(p.begin(), p.end());
    }
}

} // namespace

LaurentPolynomial alternant_serial(const std::vector<std::int64_t>& mu) {
    const int n = static_cast<int>(mu.size());
    LaurentPolynomial r(n);
    if (has_repeat(mu)) return r;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    Exponents e(mu.size());
    do {
        for (std::size_t i = 0; i < mu.size(); ++i) e[i] = mu[static_cast<std::size_t>(p[i])];
        r.add_term(e, permutation_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return r;
}

LaurentPolynomial alternant_parallel(const std::vector<std::int64_t>& mu) {
    const int n = static_cast<int>(mu.size());
    LaurentPolynomial r(n);
    if (has_repeat(mu)) return r;
#ifndef _OPENMP
    return alternant_serial(mu);
#else
    const std::uint64_t total = factorial(n);
    const int nthreads = omp_get_max_threads();
    std::vector<LaurentPolynomial::TermMap> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
        const int t = omp_get_thread_num();
        const std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(nthreads);
        const std::uint64_t hi = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(nthreads);
        if (lo < hi) accumulate_orbit_range(mu, lo, hi, partial[static_cast<std::size_t>(t)]);
    }
    for (const auto& m : partial)
        for (const auto& [e, c] : m) r.add_term(e, c);
    return r;
#endif
}

LaurentPolynomial alternant(const std::vector<std::int64_t>& mu) {
    if (static_cast<int>(mu.size()) >= kParallelAlternantMinRank) return alternant_parallel(mu);
    return alternant_serial(mu);
}

namespace {

std::map<Weight, LaurentPolynomial>& schur_cache() {
    static std::map<Weight, LaurentPolynomial> cache;
    return cache;
}
std::mutex schur_cache_mutex;

LaurentPolynomial schur_uncached(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    const Weight r = rho(n);
    std::vector<std::int64_t> shifted(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) shifted[i] = lambda[i] + r[i];
    return exact_divide(alternant(shifted), alternant(r));
}

} // namespace

namespace detail {
void clear_schur_cache() {
    std::lock_guard<std::mutex> lock(schur_cache_mutex);
    schur_cache().clear();
}
} // namespace detail

LaurentPolynomial schur_laurent(const Weight& lambda) {
    if (!is_dominant(lambda)) throw DomainError("weight not dominant");
    {
        std::lock_guard<std::mutex> lock(schur_cache_mutex);
        auto it = schur_cache().find(lambda);
        if (it != schur_cache().end()) return it->second;
    }
    LaurentPolynomial s = schur_uncached(lambda);
    std::lock_guard<std::mutex> lock(schur_cache_mutex);
    return schur_cache().emplace(lambda, std::move(s)).first->second;
}

bool is_symmetric(const LaurentPolynomial& f) {
    const int n = f.nvars();
    std::vector<int> swap_map(static_cast<std::size_t>(n));
    for (int s = 0; s + 1 < n; ++s) {
        std::iota(swap_map.begin(), swap_map.end(), 0);
        std::swap(swap_map[static_cast<std::size_t>(s)], swap_map[static_cast<std::size_t>(s + 1)]);
        if (!(permute_variables(f, swap_map) == f)) return false;
    }
    return true;
}

SchurExpansion schur_decompose(const LaurentPolynomial& f) {
    if (!is_symmetric(f)) throw DomainError("not symmetric");
    SchurExpansion result;
    LaurentPolynomial rem = f;
    while (!rem.is_zero()) {
        const auto& [e, c] = rem.leading_term();
        Weight lambda(e.begin(), e.end());
        if (!is_dominant(lambda))
            throw std::logic_error("schur_decompose: lex-leading exponent of a symmetric polynomial is not dominant");
        result[lambda] = c;
        rem = sub(rem, scalar_mul(c, schur_laurent(lambda)));
    }
    return result;
}

LaurentPolynomial schur_expansion_to_poly(int nvars, const SchurExpansion& expansion) {
    LaurentPolynomial r(nvars);
    for (const auto& [lambda, c] : expansion) {
        if (static_cast<int>(lambda.size()) != nvars) throw DomainError("variable count mismatch");
        r = add(r, scalar_mul(c, schur_laurent(lambda)));
    }
    return r;
}

} // namespace perichar
