// Semistandard-tableau route to Schur polynomials. This is the cross-check
// for the alternant/division route in schur.cpp and must stay independent of
// it: no alternants, no division, no shared helpers beyond the polynomial
// container itself.

#include "perichar/schur.hpp"

#include <numeric>

namespace perichar {

namespace {

struct SsytEnumerator {
    int nletters;                        // entries range over 1..nletters
    std::vector<std::int64_t> shape;     // partition rows, weakly decreasing
    std::vector<std::vector<int>> rows;  // filled values
    LaurentPolynomial acc;
    Exponents content;

    explicit SsytEnumerator(int n, std::vector<std::int64_t> mu)
        : nletters(n), shape(std::move(mu)), acc(n), content(static_cast<std::size_t>(n), 0) {
        rows.resize(shape.size());
        for (std::size_t r = 0; r < shape.size(); ++r)
            rows[r].assign(static_cast<std::size_t>(shape[r]), 0);
    }

    void fill(std::size_t r, std::size_t c) {
        if (r == rows.size()) {
            acc.add_term(content, 1);
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc >= rows[r].size()) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);                    // rows weakly increase
        if (r > 0 && c < rows[r - 1].size()) lo = std::max(lo, rows[r - 1][c] + 1); // columns strictly increase
        for (int v = lo; v <= nletters; ++v) {
            rows[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            fill(nr, nc);
            --content[static_cast<std::size_t>(v - 1)];
        }
    }
};

} // namespace

LaurentPolynomial schur_ssyt_oracle(const Weight& lambda) {
    if (!is_dominant(lambda)) throw DomainError("weight not dominant");
    const int n = static_cast<int>(lambda.size());
    if (n == 0) return LaurentPolynomial::constant(0, 1);

    const std::int64_t shift = lambda.back();
    std::vector<std::int64_t> mu(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) mu[i] = lambda[i] - shift;
    const std::int64_t boxes = std::accumulate(mu.begin(), mu.end(), std::int64_t{0});
    if (boxes > kSsytOracleMaxBoxes) throw DomainError("oracle size guard exceeded");
    while (!mu.empty() && mu.back() == 0) mu.pop_back();

    SsytEnumerator enumerator(n, mu);
    if (mu.empty())
        enumerator.acc.add_term(Exponents(static_cast<std::size_t>(n), 0), 1);
    else
        enumerator.fill(0, 0);

    if (shift == 0) return enumerator.acc;
    LaurentPolynomial shifted(n);
    for (const auto& [e, c] : enumerator.acc.terms()) {
        Exponents e2 = e;
        for (auto& x : e2) x += shift;
        shifted.add_term(e2, c);
    }
    return shifted;
}

} // namespace perichar
