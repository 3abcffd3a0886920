#include "perichar/euler.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace perichar {

std::vector<SignedOddRoot> delta1_r(const std::vector<std::int64_t>& gamma) {
    const int n = static_cast<int>(gamma.size());
    std::vector<SignedOddRoot> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (gamma[static_cast<std::size_t>(i)] + gamma[static_cast<std::size_t>(j)] > 0)
                roots.push_back({+1, i, j});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (gamma[static_cast<std::size_t>(i)] + gamma[static_cast<std::size_t>(j)] < 0)
                roots.push_back({-1, i, j});
    return roots;
}

bool validate_levi_weight(const Weight& lambda, const std::vector<std::int64_t>& gamma) {
    if (lambda.size() != gamma.size()) throw DomainError("rank mismatch");
    for (std::size_t i = 0; i < gamma.size(); ++i)
        for (std::size_t j = i + 1; j < gamma.size(); ++j)
            if (gamma[i] == gamma[j] && lambda[i] != lambda[j]) return false;
    return true;
}

bool levi_weight_admissible(const Weight& lambda, const std::vector<std::int64_t>& gamma) {
    if (!validate_levi_weight(lambda, gamma)) return false;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        for (std::size_t j = i + 1; j < gamma.size(); ++j)
            if (gamma[i] + gamma[j] == 0 && lambda[i] != lambda[j]) return false;
    return true;
}

bool parabolic_contains_borel(const std::vector<std::int64_t>& gamma) {
    for (std::size_t i = 1; i < gamma.size(); ++i)
        if (gamma[i - 1] < gamma[i]) return false;
    return gamma.size() < 2 || gamma[0] + gamma[1] <= 0;
}

std::uint64_t max_parabolic_subsets() {
    if (const char* env = std::getenv("PERICHAR_MAX_SUBSETS")) {
        const long long v = std::atoll(env);
        if (v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{1} << 20;
}

namespace {

// alternant(mu)/alternant(rho) as a signed Schur term: zero on repeated
// entries, otherwise sgn(sorting permutation) * s_{sort(mu) - rho}.
struct SignedSchurTerm {
    bool zero = true;
    int sign = 1;
    Weight lambda;
};

SignedSchurTerm reduce_to_schur(const std::vector<std::int64_t>& mu) {
    const std::size_t n = mu.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return mu[static_cast<std::size_t>(a)] > mu[static_cast<std::size_t>(b)]; });
    SignedSchurTerm term;
    term.lambda.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        term.lambda[i] = mu[static_cast<std::size_t>(order[i])];
        if (i > 0 && term.lambda[i - 1] == term.lambda[i]) return {};
    }
    term.zero = false;
    term.sign = permutation_sign(order);
    const Weight r = rho(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) term.lambda[i] -= r[i];
    return term;
}

struct SubsetSetup {
    std::vector<SignedOddRoot> roots;
    std::vector<std::int64_t> base; // lambda + rho
    std::uint64_t subsets = 0;
};

SubsetSetup prepare(const Weight& lambda, const std::vector<std::int64_t>& gamma) {
    if (lambda.size() != gamma.size()) throw DomainError("rank mismatch");
    if (!validate_levi_weight(lambda, gamma)) throw DomainError("weight not constant on Levi blocks");
    SubsetSetup setup;
    setup.roots = delta1_r(gamma);
    if (setup.roots.size() >= 63 || (std::uint64_t{1} << setup.roots.size()) > max_parabolic_subsets())
        throw DomainError("parabolic too large for desk scale");
    setup.subsets = std::uint64_t{1} << setup.roots.size();
    const Weight r = rho(static_cast<int>(lambda.size()));
    setup.base.resize(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) setup.base[i] = lambda[i] + r[i];
    return setup;
}

// One subset's contribution: mu = base - sum_{chosen alpha} alpha,
// weighted by (-1)^{|S|}.
void accumulate_subset(const SubsetSetup& setup, std::uint64_t mask, SchurExpansion& out) {
    std::vector<std::int64_t> mu = setup.base;
    int size = 0;
    for (std::size_t b = 0; b < setup.roots.size(); ++b) {
        if (!(mask >> b & 1)) continue;
        const auto& root = setup.roots[b];
        mu[static_cast<std::size_t>(root.i)] -= root.sign;
        mu[static_cast<std::size_t>(root.j)] -= root.sign;
        ++size;
    }
    const SignedSchurTerm term = reduce_to_schur(mu);
    if (term.zero) return;
    const int c = (size % 2 ? -1 : 1) * term.sign;
    auto [it, inserted] = out.emplace(term.lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

SupercharElement materialize(int n, const SchurExpansion& expansion) {
    return {n, schur_expansion_to_poly(n, expansion)};
}

constexpr std::uint64_t kParallelSubsetMin = 64;

} // namespace

SupercharElement euler_characteristic_serial(const Weight& lambda, const std::vector<std::int64_t>& gamma,
                                             const CancelToken* cancel) {
    const SubsetSetup setup = prepare(lambda, gamma);
    SchurExpansion expansion;
    for (std::uint64_t mask = 0; mask < setup.subsets; ++mask) {
        if (cancel && (mask & 0xff) == 0) cancel->check();
        accumulate_subset(setup, mask, expansion);
    }
    return materialize(static_cast<int>(lambda.size()), expansion);
}

SupercharElement euler_characteristic(const Weight& lambda, const std::vector<std::int64_t>& gamma,
                                      const CancelToken* cancel) {
    const SubsetSetup setup = prepare(lambda, gamma);
#ifdef _OPENMP
    if (setup.subsets >= kParallelSubsetMin) {
        const int nthreads = omp_get_max_threads();
        std::vector<SchurExpansion> partial(static_cast<std::size_t>(nthreads));
        std::atomic<bool> cancelled{false};
#pragma omp parallel num_threads(nthreads)
        {
            auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(setup.subsets); ++mask) {
                if (cancelled.load(std::memory_order_relaxed)) continue;
                if (cancel && (mask & 0xff) == 0 && cancel->cancelled())
                    cancelled.store(true, std::memory_order_relaxed);
                accumulate_subset(setup, static_cast<std::uint64_t>(mask), local);
            }
        }
        if (cancelled.load()) throw OperationCancelled{};
        SchurExpansion expansion;
        for (const auto& part : partial) {
            for (const auto& [w, c] : part) {
                auto [it, inserted] = expansion.emplace(w, c);
                if (!inserted) {
                    it->second += c;
                    if (it->second == 0) expansion.erase(it);
                }
            }
        }
        return materialize(static_cast<int>(lambda.size()), expansion);
    }
#endif
    return euler_characteristic_serial(lambda, gamma, cancel);
}

SupercharElement prop43_candidate(int n, int k, std::int64_t a, const CancelToken* cancel) {
    if (k < 1 || n <= 2 * k) throw DomainError("invalid parameters: require k >= 1 and n > 2k");
    Weight lambda(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> gamma(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < 2 * k; ++i) lambda[static_cast<std::size_t>(i)] = a;
    for (int i = 2 * k; i < n; ++i) gamma[static_cast<std::size_t>(i)] = -1;

    // The odd radical must carry exactly the pairs {i < j, j > 2k}, i.e. the
    // numerator support prod_{i<j, 2k<j} (1 - x_i x_j).
    const auto roots = delta1_r(gamma);
    std::size_t expected = 0;
    for (int j = 2 * k; j < n; ++j) expected += static_cast<std::size_t>(j);
    if (roots.size() != expected)
        throw std::logic_error("prop43_candidate: unexpected odd radical support");
    for (const auto& root : roots)
        if (root.sign != -1 || root.j < 2 * k || root.i >= root.j)
            throw std::logic_error("prop43_candidate: unexpected odd radical support");

    return euler_characteristic(lambda, gamma, cancel);
}

bool ProbeReport::any_hit() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const ProbeRow& r) { return r.equals_plus || r.equals_minus; });
}

ProbeReport surjectivity_probe(int n, int k, std::int64_t a_min, std::int64_t a_max,
                               const CancelToken* cancel) {
    if (k < 1 || n <= 2 * k) throw DomainError("invalid parameters: require k >= 1 and n > 2k");
    if (a_min > a_max) throw DomainError("empty parameter range");
    const SupercharElement target = sch_thin_kac(Weight(static_cast<std::size_t>(n - 2 * k), 0));
    const SupercharElement minus_target = scalar_mul(-1, target);
    ProbeReport report;
    report.n = n;
    report.k = k;
    for (std::int64_t a = a_min; a <= a_max; ++a) {
        if (cancel) cancel->check();
        ProbeRow row;
        row.a = a;
        row.ds_value = ds_iterate(prop43_candidate(n, k, a, cancel), k);
        row.equals_plus = (row.ds_value == target);
        row.equals_minus = (row.ds_value == minus_target);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace perichar
