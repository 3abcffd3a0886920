#include "perichar/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "perichar/cli.hpp"
#include "perichar/euler.hpp"
#include "perichar/serialize.hpp"
#include "perichar/superchar.hpp"

namespace perichar::selftest {

namespace {

struct Params {
    int c1_rank;
    std::int64_t c1_boxes;
    std::vector<std::int64_t> c1_shifts;
    int c2_rank;
    std::int64_t c2_entry;
    int c3_rank;
    std::int64_t c3_entry;
    int c3_spot_pairs;
    int c4_rank;
    int c4_combos;
    int c5_pairs;
    int c5_indep_members;
    int c6_rank;
    std::int64_t c6_entry;
    int c7_rank;
    std::size_t c7_max_roots;
    std::vector<std::int64_t> c7_block_values;
    std::vector<std::pair<int, int>> c8_configs;
    std::int64_t c8_a_min, c8_a_max;
    bool c9_include_rank6;
    int p_ring_reps;
    int p_weight_rank;
    std::int64_t p_weight_entry;
};

Params params_for(Scale scale) {
    if (scale == Scale::quick) {
        return {3, 6,  {0, -1},    3, 2, 3, 2, 60,  3, 30,  12, 3,
                3, 2,  3, 6, {-2, 0, 1}, {{3, 1}}, -2, 2, false, 40, 4, 3};
    }
    return {4, 8,  {0, -1, 1}, 4, 3, 5, 3, 200, 4, 100, 50, 6,
            4, 2,  4, 8, {-2, 0, 1, 3}, {{3, 1}, {4, 1}, {5, 1}, {5, 2}}, -4, 4, true, 120, 5, 5};
}

std::string weight_str(const Weight& w) { return "(" + format_csv_integers(w) + ")"; }

void enumerate_dominant_rec(int n, std::int64_t lo, std::int64_t hi, Weight& cur, std::vector<Weight>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    const std::int64_t top = cur.empty() ? hi : cur.back();
    for (std::int64_t v = top; v >= lo; --v) {
        cur.push_back(v);
        enumerate_dominant_rec(n, lo, hi, cur, out);
        cur.pop_back();
    }
}

std::vector<Weight> enumerate_dominant(int n, std::int64_t lo, std::int64_t hi) {
    std::vector<Weight> out;
    Weight cur;
    enumerate_dominant_rec(n, lo, hi, cur, out);
    return out;
}

// Parity straight from the case split, bypassing parity() so checks that use
// it stay independent of weights.cpp (and of the fault-injection hook).
int parity_inline(const Weight& lambda) {
    const std::int64_t s = std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
    const std::int64_t h = (s % 2 == 0) ? s / 2 : (s + 1) / 2;
    return static_cast<int>(((h % 2) + 2) % 2);
}

LaurentPolynomial antisymmetrize(const LaurentPolynomial& f) {
    const int n = f.nvars();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    LaurentPolynomial acc(n);
    do {
        acc = add(acc, scalar_mul(permutation_sign(p), permute_variables(f, p)));
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

// Evaluation x_{i+1} = t, x_{j+1} = t^{-1} with survivors renumbered; must be
// t-independent.
LaurentPolynomial eval_at_pair(const LaurentPolynomial& f, int i, int j) {
    const TSplit split = t_independent_part(pair_substitute(f, i, j));
    if (!split.is_independent) throw DomainError("pair evaluation is t-dependent");
    return split.value;
}

mpz_class random_big(std::mt19937_64& rng) {
    mpz_class hi(static_cast<unsigned long>(rng() >> 32));
    mpz_class lo(static_cast<unsigned long>(rng() >> 32));
    mpz_class v = (hi << 32) + lo; // up to ~2^64
    if (rng() & 1) v <<= 20;       // push some coefficients past 64 bits
    if (rng() & 1) v = -v;
    return v == 0 ? mpz_class(1) : v;
}

LaurentPolynomial random_poly(std::mt19937_64& rng, int nvars, int max_terms, std::int64_t max_exp,
                              bool big_coeffs) {
    LaurentPolynomial f(nvars);
    std::uniform_int_distribution<std::int64_t> exp_dist(-max_exp, max_exp);
    std::uniform_int_distribution<int> nterms_dist(1, max_terms);
    std::uniform_int_distribution<int> small_dist(-9, 9);
    const int nterms = nterms_dist(rng);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = exp_dist(rng);
        mpz_class c = big_coeffs ? random_big(rng) : mpz_class(small_dist(rng));
        if (c != 0) f.add_term(e, c);
    }
    return f;
}

struct EulerCase {
    std::vector<std::int64_t> gamma;
    Weight lambda;
    SupercharElement value;
};

struct Ctx {
    Params p;
    const CancelToken* cancel = nullptr;

    // thin Kac classes per rank, shared across criteria 3, 4 and 9
    std::map<int, std::vector<std::pair<Weight, SupercharElement>>> thin;
    std::vector<EulerCase> euler_cases;
    bool euler_ready = false;

    void check_cancel() const {
        if (cancel) cancel->check();
    }

    const std::vector<std::pair<Weight, SupercharElement>>& thin_classes(int n) {
        auto it = thin.find(n);
        if (it != thin.end()) return it->second;
        std::vector<std::pair<Weight, SupercharElement>> classes;
        for (const auto& lambda : enumerate_dominant(n, -p.c3_entry, p.c3_entry)) {
            check_cancel();
            classes.emplace_back(lambda, sch_thin_kac(lambda));
        }
        return thin.emplace(n, std::move(classes)).first->second;
    }

    const std::vector<EulerCase>& euler_enumeration() {
        if (euler_ready) return euler_cases;
        for (int n = 2; n <= p.c7_rank; ++n) {
            // weakly decreasing gamma over [-2,2] with gamma_1+gamma_2 <= 0
            for (const auto& gamma : enumerate_dominant(n, -2, 2)) {
                if (!parabolic_contains_borel(gamma)) continue;
                if (delta1_r(gamma).size() > p.c7_max_roots) continue;
                std::vector<std::int64_t> block_values;
                for (std::int64_t g : gamma)
                    if (block_values.empty() || block_values.back() != g) block_values.push_back(g);
                const std::size_t nblocks = block_values.size();
                // assign each block a value from the configured palette
                std::vector<std::size_t> pick(nblocks, 0);
                std::size_t emitted = 0;
                while (true) {
                    Weight lambda(gamma.size());
                    for (std::size_t i = 0, b = 0; i < gamma.size(); ++i) {
                        if (i > 0 && gamma[i] != gamma[i - 1]) ++b;
                        lambda[i] = p.c7_block_values[pick[b]];
                    }
                    if (levi_weight_admissible(lambda, gamma) && emitted < 4) {
                        check_cancel();
                        euler_cases.push_back({gamma, lambda, euler_characteristic(lambda, gamma, cancel)});
                        ++emitted;
                    }
                    std::size_t d = 0;
                    while (d < nblocks && ++pick[d] == p.c7_block_values.size()) pick[d++] = 0;
                    if (d == nblocks) break;
                }
            }
        }
        euler_ready = true;
        return euler_cases;
    }
};

using CheckFn = CheckResult (*)(Ctx&);

// ---------------------------------------------------------------- criterion 1

CheckResult check_schur_oracle(Ctx& ctx) {
    CheckResult r{"schur-oracle-agreement", true, "", 0};
    std::size_t count = 0;
    for (int n = 1; n <= ctx.p.c1_rank; ++n) {
        for (const auto& base : enumerate_dominant(n, 0, ctx.p.c1_boxes)) {
            if (base.back() != 0) continue;
            if (std::accumulate(base.begin(), base.end(), std::int64_t{0}) > ctx.p.c1_boxes) continue;
            for (std::int64_t shift : ctx.p.c1_shifts) {
                ctx.check_cancel();
                Weight lambda = base;
                for (auto& x : lambda) x += shift;
                if (!(schur_laurent(lambda) == schur_ssyt_oracle(lambda))) {
                    r.pass = false;
                    r.detail = "mismatch at lambda=" + weight_str(lambda);
                    return r;
                }
                ++count;
            }
        }
    }
    r.detail = std::to_string(count) + " weights agree across both routes";
    return r;
}

// ---------------------------------------------------------------- criterion 2

CheckResult check_thin_kac_formula(Ctx& ctx) {
    CheckResult r{"thin-kac-supercharacter-formula", true, "", 0};
    std::size_t count = 0;
    for (int n = 1; n <= ctx.p.c2_rank; ++n) {
        const LaurentPolynomial factor = r_minus1(n).poly();
        for (const auto& lambda : enumerate_dominant(n, -ctx.p.c2_entry, ctx.p.c2_entry)) {
            ctx.check_cancel();
            const mpz_class sign = parity_inline(lambda) ? -1 : 1;
            const LaurentPolynomial expected = scalar_mul(sign, mul(factor, schur_ssyt_oracle(lambda)));
            if (!(sch_thin_kac(lambda).poly() == expected)) {
                r.pass = false;
                r.detail = "mismatch at n=" + std::to_string(n) + " lambda=" + weight_str(lambda);
                return r;
            }
            ++count;
        }
    }
    r.detail = std::to_string(count) + " thin Kac classes match the independent route";
    return r;
}

// ---------------------------------------------------------------- criterion 3

CheckResult check_membership(Ctx& ctx) {
    CheckResult r{"jn-membership-containment", true, "", 0};
    std::size_t classes = 0, products = 0, spot = 0, euler_count = 0;

    for (int n = 1; n <= ctx.p.c3_rank; ++n) {
        const auto& thin = ctx.thin_classes(n);
        for (const auto& [lambda, f] : thin) {
            if (!jn_membership(f)) {
                r.pass = false;
                r.detail = "thin Kac class fails membership: n=" + std::to_string(n) + " lambda=" + weight_str(lambda);
                return r;
            }
            ++classes;
        }
        if (n < 2) continue;

        // Pairwise products. pair_substitute is a ring homomorphism (a tested
        // laurent-core property), so membership of f*g is the t-independence
        // of the product of the substituted factors.
        std::vector<LaurentPolynomial> subbed;
        subbed.reserve(thin.size());
        for (const auto& [lambda, f] : thin) subbed.push_back(pair_substitute(f.poly(), n - 2, n - 1));
        for (std::size_t i = 0; i < subbed.size(); ++i) {
            ctx.check_cancel();
            for (std::size_t j = i; j < subbed.size(); ++j) {
                if (!t_independent_part(mul(subbed[i], subbed[j])).is_independent) {
                    r.pass = false;
                    r.detail = "product fails membership: n=" + std::to_string(n) + " " +
                               weight_str(thin[i].first) + " * " + weight_str(thin[j].first);
                    return r;
                }
                ++products;
            }
        }
    }

    // Spot-check sampled pairs through the full multiply-then-substitute route.
    std::mt19937_64 rng(0x5eedc3u);
    const int spot_rank = std::min(ctx.p.c3_rank, 3);
    for (int s = 0; s < ctx.p.c3_spot_pairs; ++s) {
        ctx.check_cancel();
        const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(spot_rank - 1));
        const auto& thin = ctx.thin_classes(n);
        const auto& a = thin[rng() % thin.size()];
        const auto& b = thin[rng() % thin.size()];
        if (!jn_membership(mul(a.second, b.second))) {
            r.pass = false;
            r.detail = "full-route product fails membership: n=" + std::to_string(n) + " " +
                       weight_str(a.first) + " * " + weight_str(b.first);
            return r;
        }
        ++spot;
    }

    for (const auto& c : ctx.euler_enumeration()) {
        if (!jn_membership(c.value)) {
            r.pass = false;
            r.detail = "Euler characteristic fails membership: gamma=" + weight_str(c.gamma) +
                       " lambda=" + weight_str(c.lambda);
            return r;
        }
        ++euler_count;
    }

    std::ostringstream d;
    d << classes << " classes, " << products << " pair products (" << spot << " re-checked via full product), "
      << euler_count << " Euler characteristics";
    r.detail = d.str();
    return r;
}

// ---------------------------------------------------------------- criterion 4

CheckResult check_kernel_decomposition(Ctx& ctx) {
    CheckResult r{"kernel-decomposition", true, "", 0};
    std::size_t vanish = 0;
    for (int n = 2; n <= ctx.p.c3_rank; ++n) {
        for (const auto& [lambda, f] : ctx.thin_classes(n)) {
            ctx.check_cancel();
            if (!ds_eval(f).poly().is_zero()) {
                r.pass = false;
                r.detail = "ds of thin Kac class is nonzero: n=" + std::to_string(n) + " lambda=" + weight_str(lambda);
                return r;
            }
            ++vanish;
        }
    }

    std::mt19937_64 rng(0x5eedc4u);
    for (int rep = 0; rep < ctx.p.c4_combos; ++rep) {
        ctx.check_cancel();
        const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.p.c4_rank - 1));
        const auto weights = enumerate_dominant(n, -3, 3);
        ThinKacCombination combo;
        combo.n = n;
        const int nweights = 1 + static_cast<int>(rng() % 5);
        for (int w = 0; w < nweights; ++w) {
            const std::int64_t coef = static_cast<std::int64_t>(rng() % 19) - 9;
            combo.add(weights[rng() % weights.size()], coef);
        }
        const ThinKacCombination back = kernel_decompose(thin_kac_to_poly(combo));
        if (!(back == combo)) {
            r.pass = false;
            r.detail = "kernel roundtrip mismatch at rep " + std::to_string(rep);
            return r;
        }
    }

    // rejection of a non-kernel element
    LaurentPolynomial f(2);
    f.add_term({1, 0}, 1);
    f.add_term({0, 1}, 1);
    bool rejected = false;
    try {
        kernel_decompose(SupercharElement(2, f));
    } catch (const DomainError& e) {
        rejected = std::string(e.what()) == "not in kernel";
    }
    if (!rejected) {
        r.pass = false;
        r.detail = "x1+x2 was not rejected with \"not in kernel\"";
        return r;
    }

    r.detail = std::to_string(vanish) + " classes vanish under ds, " + std::to_string(ctx.p.c4_combos) +
               " roundtrips, rejection message verified";
    return r;
}

// ---------------------------------------------------------------- criterion 5

SupercharElement random_j4_member(std::mt19937_64& rng) {
    const int n = 4;
    std::vector<SupercharElement> gens;
    gens.push_back(sch_natural(n));
    {
        Exponents e(4, 1);
        LaurentPolynomial m(n);
        m.add_term(e, 1);
        gens.emplace_back(n, m); // x1 x2 x3 x4
        Exponents einv(4, -1);
        LaurentPolynomial minv(n);
        minv.add_term(einv, 1);
        gens.emplace_back(n, minv);
    }
    for (const auto& lambda : std::vector<Weight>{{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, -1}, {0, 0, -1, -1}})
        gens.push_back(sch_thin_kac(lambda));
    gens.push_back(SupercharElement(n, LaurentPolynomial::constant(n, 3)));

    auto pick_product = [&]() {
        SupercharElement f = gens[rng() % gens.size()];
        if (rng() % 2) f = mul(f, gens[rng() % gens.size()]);
        return f;
    };
    SupercharElement f = pick_product();
    if (rng() % 2) {
        const mpz_class c = static_cast<long>(rng() % 5) - 2;
        f = add(f, scalar_mul(c, pick_product()));
    }
    return f;
}

CheckResult check_ds_homomorphism(Ctx& ctx) {
    CheckResult r{"ds-ring-homomorphism", true, "", 0};
    std::mt19937_64 rng(0x5eedc5u);
    for (int rep = 0; rep < ctx.p.c5_pairs; ++rep) {
        ctx.check_cancel();
        const SupercharElement f = random_j4_member(rng);
        const SupercharElement g = random_j4_member(rng);
        if (!jn_membership(f) || !jn_membership(g)) {
            r.pass = false;
            r.detail = "generated element is unexpectedly outside J_4 at rep " + std::to_string(rep);
            return r;
        }
        if (!(ds_eval(mul(f, g)) == mul(ds_eval(f), ds_eval(g)))) {
            r.pass = false;
            r.detail = "multiplicativity fails at rep " + std::to_string(rep);
            return r;
        }
        if (!(ds_eval(add(f, g)) == add(ds_eval(f), ds_eval(g)))) {
            r.pass = false;
            r.detail = "additivity fails at rep " + std::to_string(rep);
            return r;
        }
    }
    for (int rep = 0; rep < ctx.p.c5_indep_members; ++rep) {
        ctx.check_cancel();
        const SupercharElement f = random_j4_member(rng);
        const LaurentPolynomial expected = ds_eval(f).poly();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!(eval_at_pair(f.poly(), i, j) == expected)) {
                    r.pass = false;
                    r.detail = "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") disagrees with ds at rep " + std::to_string(rep);
                    return r;
                }
    }
    r.detail = std::to_string(ctx.p.c5_pairs) + " pairs, homomorphism and pair-choice independence hold";
    return r;
}

// ---------------------------------------------------------------- criterion 6

CheckResult check_translation(Ctx& ctx) {
    CheckResult r{"translation-pieri-completeness", true, "", 0};
    std::size_t count = 0;
    for (int n = 1; n <= ctx.p.c6_rank; ++n) {
        for (const auto& lambda : enumerate_dominant(n, -ctx.p.c6_entry, ctx.p.c6_entry)) {
            ctx.check_cancel();
            const SupercharElement product = mul(sch_thin_kac(lambda), sch_natural(n));
            const ThinKacCombination tv = tensor_V_decompose(lambda);
            if (!(thin_kac_to_poly(tv) == product)) {
                r.pass = false;
                r.detail = "tensor decomposition does not re-expand at lambda=" + weight_str(lambda);
                return r;
            }
            const auto moves = ball_moves(lambda);
            if (moves.size() != tv.coeffs.size()) {
                r.pass = false;
                r.detail = "support differs from ball moves at lambda=" + weight_str(lambda);
                return r;
            }

            // per-source sub-sums must match the local bead configurations
            const WeightDiagram d = to_diagram(lambda);
            auto occupied = [&](std::int64_t pos) {
                return std::find(d.bullets.begin(), d.bullets.end(), pos) != d.bullets.end();
            };
            std::map<std::int64_t, ThinKacCombination> by_source;
            for (const auto& move : moves) {
                auto it = tv.coeffs.find(move.target);
                if (it == tv.coeffs.end()) {
                    r.pass = false;
                    r.detail = "missing Pieri target at lambda=" + weight_str(lambda);
                    return r;
                }
                auto [slot, inserted] = by_source.emplace(move.source, ThinKacCombination{});
                if (inserted) slot->second.n = n;
                slot->second.add(move.target, it->second);
            }
            for (std::int64_t k = d.bullets.back() - 1; k <= d.bullets.front() + 1; ++k) {
                const std::size_t expected =
                    occupied(k) ? static_cast<std::size_t>(!occupied(k - 1)) + static_cast<std::size_t>(!occupied(k + 1))
                                : 0;
                const auto it = by_source.find(k);
                const std::size_t actual = it == by_source.end() ? 0 : it->second.coeffs.size();
                if (expected != actual) {
                    r.pass = false;
                    r.detail = "bead configuration mismatch at lambda=" + weight_str(lambda) +
                               " k=" + std::to_string(k);
                    return r;
                }
            }
            // exercise the public operation on every source and two empty slots
            for (const auto& [k, part] : by_source) {
                if (!(translate_thin_kac(lambda, k) == part)) {
                    r.pass = false;
                    r.detail = "translate mismatch at lambda=" + weight_str(lambda) + " k=" + std::to_string(k);
                    return r;
                }
            }
            for (std::int64_t k : {d.bullets.front() + 2, d.bullets.back() - 2}) {
                if (!translate_thin_kac(lambda, k).coeffs.empty()) {
                    r.pass = false;
                    r.detail = "translate nonzero away from the diagram at lambda=" + weight_str(lambda);
                    return r;
                }
            }
            ++count;
        }
    }

    // frozen sign table at n=2, lambda=0
    ThinKacCombination k1, k0;
    k1.n = k0.n = 2;
    k1.add({1, 0}, -1);
    k0.add({0, -1}, -1);
    if (!(translate_thin_kac({0, 0}, 1) == k1) || !(translate_thin_kac({0, 0}, 0) == k0)) {
        r.pass = false;
        r.detail = "derived sign table at n=2, lambda=0 differs from the frozen table";
        return r;
    }
    r.detail = std::to_string(count) + " weights: re-expansion, support and sign table all match";
    return r;
}

// ---------------------------------------------------------------- criterion 7

CheckResult check_euler_routes(Ctx& ctx) {
    CheckResult r{"euler-characteristic-routes", true, "", 0};
    std::size_t count = 0;
    for (const auto& c : ctx.euler_enumeration()) {
        ctx.check_cancel();
        const int n = static_cast<int>(c.gamma.size());

        if (!(euler_characteristic_serial(c.lambda, c.gamma, ctx.cancel) == c.value)) {
            r.pass = false;
            r.detail = "serial/parallel mismatch at gamma=" + weight_str(c.gamma) + " lambda=" + weight_str(c.lambda);
            return r;
        }

        // independent route: multiply the factors, antisymmetrize, divide
        const Weight rh = rho(n);
        Exponents base(c.lambda.size());
        for (std::size_t i = 0; i < c.lambda.size(); ++i) base[i] = c.lambda[i] + rh[i];
        LaurentPolynomial numerator = LaurentPolynomial::monomial(base, 1);
        for (const auto& root : delta1_r(c.gamma)) {
            LaurentPolynomial factor = LaurentPolynomial::constant(n, 1);
            Exponents e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(root.i)] -= root.sign;
            e[static_cast<std::size_t>(root.j)] -= root.sign;
            factor.add_term(e, -1);
            numerator = mul(numerator, factor);
        }
        const LaurentPolynomial direct =
            exact_divide(antisymmetrize(numerator), alternant(std::vector<std::int64_t>(rh.begin(), rh.end())));
        if (!(direct == c.value.poly())) {
            r.pass = false;
            r.detail = "subset expansion disagrees with direct multiplication at gamma=" + weight_str(c.gamma) +
                       " lambda=" + weight_str(c.lambda);
            return r;
        }

        // the ds chain never raises on Euler characteristics
        try {
            SupercharElement g = c.value;
            while (g.rank() >= 2) g = ds_eval(g);
        } catch (const DomainError& e) {
            r.pass = false;
            r.detail = std::string("ds chain raised \"") + e.what() + "\" at gamma=" + weight_str(c.gamma) +
                       " lambda=" + weight_str(c.lambda);
            return r;
        }
        ++count;
    }

    // reference case n=2, gamma=(0,-1), lambda=(1,0): with the odd radical
    // {-(e1+e2)} the two subsets give s_{(1,0)} - s_{(2,1)}.
    {
        LaurentPolynomial expected(2);
        expected.add_term({1, 0}, 1);
        expected.add_term({0, 1}, 1);
        expected.add_term({2, 1}, -1);
        expected.add_term({1, 2}, -1);
        if (!(euler_characteristic({1, 0}, {0, -1}).poly() == expected)) {
            r.pass = false;
            r.detail = "reference case n=2, gamma=(0,-1), lambda=(1,0) differs";
            return r;
        }
    }
    // degenerate Levi = g cases
    for (std::int64_t c0 : {0, 2, -1}) {
        const Weight lambda(3, c0);
        LaurentPolynomial expected(3);
        expected.add_term({c0, c0, c0}, 1);
        if (!(euler_characteristic(lambda, {0, 0, 0}).poly() == expected)) {
            r.pass = false;
            r.detail = "degenerate full-Levi case failed at c=" + std::to_string(c0);
            return r;
        }
    }
    r.detail = std::to_string(count) + " parabolic data: subset route == direct route, reference case matches";
    return r;
}

// ---------------------------------------------------------------- criterion 8

CheckResult check_probe(Ctx& ctx) {
    CheckResult r{"surjectivity-probe", true, "", 0};
    std::ostringstream d;
    for (const auto& [n, k] : ctx.p.c8_configs) {
        ctx.check_cancel();
        const ProbeReport report = surjectivity_probe(n, k, ctx.p.c8_a_min, ctx.p.c8_a_max, ctx.cancel);
        std::size_t hits = 0;
        for (const auto& row : report.rows) hits += (row.equals_plus || row.equals_minus) ? 1 : 0;
        if (hits == 0) {
            r.pass = false;
            r.detail = "no a in [" + std::to_string(ctx.p.c8_a_min) + "," + std::to_string(ctx.p.c8_a_max) +
                       "] evaluates to +-sch_thin_kac(0) for (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
            return r;
        }
        d << "(" << n << "," << k << "):" << hits << "/" << report.rows.size() << " ";
    }
    r.detail = "hits per config: " + d.str();
    return r;
}

// ---------------------------------------------------------------- criterion 9

CheckResult check_filtration(Ctx& ctx) {
    CheckResult r{"kernel-filtration-monotonicity", true, "", 0};
    std::vector<std::pair<std::string, SupercharElement>> samples;
    for (int n = 4; n <= ctx.p.c3_rank; ++n)
        for (const auto& [lambda, f] : ctx.thin_classes(n))
            samples.emplace_back("thinkac n=" + std::to_string(n) + " " + weight_str(lambda), f);
    if (ctx.p.c9_include_rank6)
        for (const auto& lambda : enumerate_dominant(6, -1, 1))
            samples.emplace_back("thinkac n=6 " + weight_str(lambda), sch_thin_kac(lambda));
    std::mt19937_64 rng(0x5eedc9u);
    for (int rep = 0; rep < 10; ++rep) {
        ThinKacCombination combo;
        combo.n = 4;
        const auto weights = enumerate_dominant(4, -2, 2);
        for (int w = 0; w < 3; ++w)
            combo.add(weights[rng() % weights.size()], static_cast<std::int64_t>(rng() % 9) - 4);
        samples.emplace_back("combo n=4 rep=" + std::to_string(rep), thin_kac_to_poly(combo));
    }
    if (ctx.p.c9_include_rank6) {
        // elements deeper in the filtration: candidates reach zero only after
        // k+1 evaluations
        samples.emplace_back("candidate (5,1) a=1", prop43_candidate(5, 1, 1, ctx.cancel));
        samples.emplace_back("candidate (5,2) a=0", prop43_candidate(5, 2, 0, ctx.cancel));
    }

    std::size_t instances = 0;
    for (const auto& [name, f] : samples) {
        ctx.check_cancel();
        const int max_k = f.rank() / 2;
        bool seen_zero = false;
        for (int k = 0; k <= max_k; ++k) {
            SupercharElement g;
            try {
                g = ds_iterate(f, k);
            } catch (const DomainError& e) {
                r.pass = false;
                r.detail = "ds_iterate raised \"" + std::string(e.what()) + "\" on " + name;
                return r;
            }
            const bool zero = g.poly().is_zero();
            if (seen_zero && !zero) {
                r.pass = false;
                r.detail = "left the kernel filtration again at k=" + std::to_string(k) + " on " + name;
                return r;
            }
            if (zero) {
                seen_zero = true;
                ++instances;
            }
        }
    }
    r.detail = std::to_string(samples.size()) + " samples, " + std::to_string(instances) +
               " kernel memberships, filtration is monotone";
    return r;
}

// --------------------------------------------------------------- criterion 10

CheckResult check_determinism(Ctx& ctx) {
    CheckResult r{"determinism-serialization", true, "", 0};

    const std::string poly_x1x2 = R"({"nvars":2,"terms":[[[0,0],"1"],[[1,1],"-1"]]})";
    const std::string poly_sum = R"({"nvars":2,"terms":[[[0,1],"1"],[[1,0],"1"]]})";
    const std::string poly_mono4 = R"({"nvars":4,"terms":[[[1,1,1,1],"1"]]})";

    struct Driver {
        std::vector<std::string> args;
        std::string input;
    };
    const std::vector<Driver> drivers = {
        {{"schur", "--weight", "2,0,-1", "--json"}, ""},
        {{"thinkac", "--n", "2", "--weight", "0,0", "--json"}, ""},
        {{"diagram", "--weight", "1,0", "--a-min", "-2", "--a-max", "3"}, ""},
        {{"member", "--stdin"}, poly_sum},
        {{"ds", "--stdin", "--k", "1", "--json"}, poly_mono4},
        {{"translate", "--weight", "0,0", "--k", "1", "--json"}, ""},
        {{"tensorv", "--weight", "0,0", "--json"}, ""},
        {{"kernel", "--stdin", "--json"}, poly_x1x2},
        {{"euler", "--weight", "1,0", "--gamma", "0,-1", "--json"}, ""},
        {{"probe", "--n", "3", "--k", "1", "--a-min", "-2", "--a-max", "2"}, ""},
    };

    for (const auto& driver : drivers) {
        ctx.check_cancel();
        std::string first;
        for (int pass = 0; pass < 2; ++pass) {
            std::istringstream in(driver.input);
            std::ostringstream out, err;
            const int code = cli::run(driver.args, in, out, err);
            if (code != 0) {
                r.pass = false;
                r.detail = "driver " + driver.args[0] + " exited with " + std::to_string(code);
                return r;
            }
            if (pass == 0)
                first = out.str();
            else if (first != out.str()) {
                r.pass = false;
                r.detail = "driver " + driver.args[0] + " output differs between runs";
                return r;
            }
        }
    }

    // JSON roundtrips on intermediates from the other criteria
    std::size_t roundtrips = 0;
    auto roundtrip = [&](const LaurentPolynomial& f) {
        if (!(poly_from_string(poly_to_string(f)) == f)) return false;
        ++roundtrips;
        return true;
    };
    for (int n = 1; n <= ctx.p.c3_rank; ++n)
        for (const auto& [lambda, f] : ctx.thin_classes(n))
            if (!roundtrip(f.poly())) {
                r.pass = false;
                r.detail = "roundtrip mismatch on thin Kac class " + weight_str(lambda);
                return r;
            }
    for (const auto& c : ctx.euler_enumeration())
        if (!roundtrip(c.value.poly())) {
            r.pass = false;
            r.detail = "roundtrip mismatch on Euler characteristic gamma=" + weight_str(c.gamma);
            return r;
        }

    r.detail = std::to_string(drivers.size()) + " drivers byte-identical across two runs, " +
               std::to_string(roundtrips) + " JSON roundtrips";
    return r;
}

// ----------------------------------------------------------- extra properties

CheckResult check_laurent_properties(Ctx& ctx) {
    CheckResult r{"laurent-ring-properties", true, "", 0};
    std::mt19937_64 rng(0x5eedaau);
    const int reps = ctx.p.p_ring_reps;
    for (int rep = 0; rep < reps; ++rep) {
        ctx.check_cancel();
        const int n = 1 + static_cast<int>(rng() % 4);
        const LaurentPolynomial f = random_poly(rng, n, 8, 3, true);
        const LaurentPolynomial g = random_poly(rng, n, 8, 3, true);
        const LaurentPolynomial h = random_poly(rng, n, 6, 3, false);

        if (!(mul(f, g) == mul(g, f)) || !(mul(mul(f, g), h) == mul(f, mul(g, h))) ||
            !(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)))) {
            r.pass = false;
            r.detail = "ring axiom fails at rep " + std::to_string(rep);
            return r;
        }

        // exact division inverts multiplication
        const LaurentPolynomial q = random_poly(rng, n, 20, 3, false);
        if (!g.is_zero() && !(exact_divide(mul(q, g), g) == q)) {
            r.pass = false;
            r.detail = "division roundtrip fails at rep " + std::to_string(rep);
            return r;
        }

        // permutation group action
        std::vector<int> p1(static_cast<std::size_t>(n)), p2(static_cast<std::size_t>(n));
        std::iota(p1.begin(), p1.end(), 0);
        std::iota(p2.begin(), p2.end(), 0);
        std::shuffle(p1.begin(), p1.end(), rng);
        std::shuffle(p2.begin(), p2.end(), rng);
        std::vector<int> composed(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) composed[static_cast<std::size_t>(i)] = p2[static_cast<std::size_t>(p1[static_cast<std::size_t>(i)])];
        if (!(permute_variables(permute_variables(f, p1), p2) == permute_variables(f, composed))) {
            r.pass = false;
            r.detail = "permutation action law fails at rep " + std::to_string(rep);
            return r;
        }

        if (n >= 2) {
            // substitution after swapping (i j) inverts t
            const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            const int j = i + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i - 1));
            std::vector<int> swap_map(static_cast<std::size_t>(n));
            std::iota(swap_map.begin(), swap_map.end(), 0);
            std::swap(swap_map[static_cast<std::size_t>(i)], swap_map[static_cast<std::size_t>(j)]);
            const LaurentPolynomial lhs = pair_substitute(permute_variables(f, swap_map), i, j);
            LaurentPolynomial rhs(lhs.nvars());
            for (const auto& [e, c] : pair_substitute(f, i, j).terms()) {
                Exponents e2 = e;
                e2.back() = -e2.back();
                rhs.add_term(e2, c);
            }
            if (!(lhs == rhs)) {
                r.pass = false;
                r.detail = "pair/permute commutation fails at rep " + std::to_string(rep);
                return r;
            }
            // substitution is a ring homomorphism (used by the membership suite)
            if (!(pair_substitute(mul(f, g), i, j) == mul(pair_substitute(f, i, j), pair_substitute(g, i, j)))) {
                r.pass = false;
                r.detail = "pair substitution is not multiplicative at rep " + std::to_string(rep);
                return r;
            }
        }

        // serialization is a bijection on canonical forms and deterministic
        const std::string s1 = poly_to_string(f);
        if (!(poly_from_string(s1) == f) || s1 != poly_to_string(f)) {
            r.pass = false;
            r.detail = "serialization roundtrip fails at rep " + std::to_string(rep);
            return r;
        }
    }
    r.detail = std::to_string(reps) + " random instances of the ring/action/serialization laws";
    return r;
}

CheckResult check_weight_properties(Ctx& ctx) {
    CheckResult r{"weights-and-diagrams", true, "", 0};
    std::mt19937_64 rng(0x5eedbbu);
    std::size_t count = 0;
    for (int n = 1; n <= ctx.p.p_weight_rank; ++n) {
        const auto weights = enumerate_dominant(n, -ctx.p.p_weight_entry, ctx.p.p_weight_entry);
        for (const auto& lambda : weights) {
            ctx.check_cancel();
            if (!(from_diagram(to_diagram(lambda)) == lambda)) {
                r.pass = false;
                r.detail = "diagram roundtrip fails at " + weight_str(lambda);
                return r;
            }
            Weight shifted = lambda;
            for (auto& x : shifted) x += 2;
            if (parity(shifted) != (parity(lambda) + n) % 2) {
                r.pass = false;
                r.detail = "parity shift relation fails at " + weight_str(lambda);
                return r;
            }
            Weight shuffled = lambda;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            if (parity(shuffled) != parity(lambda)) {
                r.pass = false;
                r.detail = "parity is not permutation-invariant at " + weight_str(lambda);
                return r;
            }

            const WeightDiagram d = to_diagram(lambda);
            auto occupied = [&](std::int64_t pos) {
                return std::find(d.bullets.begin(), d.bullets.end(), pos) != d.bullets.end();
            };
            const auto moves = ball_moves(lambda);
            std::size_t expected_moves = 0;
            for (std::int64_t pos : d.bullets)
                expected_moves += static_cast<std::size_t>(!occupied(pos + 1)) + static_cast<std::size_t>(!occupied(pos - 1));
            if (moves.size() != expected_moves) {
                r.pass = false;
                r.detail = "ball moves disagree with diagram adjacency at " + weight_str(lambda);
                return r;
            }
            for (const auto& move : moves) {
                if (!is_dominant(move.target) || occupied(move.source + move.direction)) {
                    r.pass = false;
                    r.detail = "illegal ball move at " + weight_str(lambda);
                    return r;
                }
                std::int64_t diff = 0;
                for (std::size_t i = 0; i < lambda.size(); ++i) diff += std::abs(move.target[i] - lambda[i]);
                if (diff != 1) {
                    r.pass = false;
                    r.detail = "ball move changes more than one entry at " + weight_str(lambda);
                    return r;
                }
            }
            ++count;
        }
        // dominance is a partial order (sampled)
        for (int rep = 0; rep < 50; ++rep) {
            const Weight& a = weights[rng() % weights.size()];
            const Weight& b = weights[rng() % weights.size()];
            const Weight& c = weights[rng() % weights.size()];
            if (!dominance_leq(a, a) || (dominance_leq(a, b) && dominance_leq(b, a) && !(a == b)) ||
                (dominance_leq(a, b) && dominance_leq(b, c) && !dominance_leq(a, c))) {
                r.pass = false;
                r.detail = "dominance order axiom fails at n=" + std::to_string(n);
                return r;
            }
        }
    }
    r.detail = std::to_string(count) + " weights: diagrams, parity, moves and order laws hold";
    return r;
}

} // namespace

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Report run(Scale scale, const CancelToken* cancel, std::ostream* log) {
    Ctx ctx{params_for(scale), cancel, {}, {}, false};
    const std::vector<CheckFn> checks = {
        check_schur_oracle,   check_thin_kac_formula, check_membership,    check_kernel_decomposition,
        check_ds_homomorphism, check_translation,     check_euler_routes,  check_probe,
        check_filtration,     check_determinism,      check_laurent_properties, check_weight_properties,
    };
    Report report;
    for (const auto& check : checks) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult result = check(ctx);
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (log)
            *log << (result.pass ? "[PASS] " : "[FAIL] ") << result.name << " - " << result.detail << "\n";
        report.checks.push_back(std::move(result));
    }
    return report;
}

} // namespace perichar::selftest
