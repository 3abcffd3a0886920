#pragma once

#include <cstdint>
#include <map>

#include "perichar/laurent.hpp"
#include "perichar/schur.hpp"
#include "perichar/weights.hpp"

namespace perichar {

/// An S_n-symmetric Laurent polynomial of declared rank n: an element of the
/// span of supercharacters. Symmetry is checked on construction.
class SupercharElement {
public:
    SupercharElement() = default; // rank-0 zero

    SupercharElement(int n, LaurentPolynomial poly) : n_(n), poly_(std::move(poly)) {
        if (poly_.nvars() != n_) throw DomainError("variable count mismatch");
        if (!is_symmetric(poly_)) throw DomainError("not symmetric");
    }

    int rank() const { return n_; }
    const LaurentPolynomial& poly() const { return poly_; }

    friend bool operator==(const SupercharElement&, const SupercharElement&) = default;

private:
    int n_ = 0;
    LaurentPolynomial poly_;
};

SupercharElement add(const SupercharElement& f, const SupercharElement& g);
SupercharElement mul(const SupercharElement& f, const SupercharElement& g);
SupercharElement scalar_mul(const mpz_class& c, const SupercharElement& f);
inline SupercharElement operator+(const SupercharElement& f, const SupercharElement& g) { return add(f, g); }
inline SupercharElement operator*(const SupercharElement& f, const SupercharElement& g) { return mul(f, g); }

/// prod_{1<=i<j<=n} (1 - x_i x_j); equals 1 for n in {0, 1}.
SupercharElement r_minus1(int n);

/// Supercharacter of the thin Kac module:
///   (-1)^{p(lambda)} * r_minus1(n) * s_lambda.
SupercharElement sch_thin_kac(const Weight& lambda);

/// Supercharacter of the natural (n|n)-dimensional module:
///   sum_i x_i - sum_i x_i^{-1}.
SupercharElement sch_natural(int n);

/// The supersymmetry condition: the evaluation x_{n-1} = t, x_n = t^{-1} is
/// independent of t. True vacuously for n < 2. By S_n-invariance this single
/// pair decides all pairs (a tested property, not an assumption).
bool jn_membership(const SupercharElement& f);

/// Evaluation homomorphism to rank n-2: substitute x_{n-1} = t, x_n = t^{-1},
/// drop the (constant) t part and renumber. Requires jn_membership.
SupercharElement ds_eval(const SupercharElement& f);

/// k-fold ds_eval; k = 0 is the identity. Errors are tagged with the failing
/// stage.
SupercharElement ds_iterate(const SupercharElement& f, int k);

/// Z-linear combination of thin Kac classes, keyed by dominant weight.
/// Canonical: no zero coefficients.
struct ThinKacCombination {
    int n = 0;
    std::map<Weight, mpz_class> coeffs;

    void add(const Weight& lambda, const mpz_class& c);

    friend bool operator==(const ThinKacCombination&, const ThinKacCombination&) = default;
};

/// Inverse of kernel_decompose on its image: sum c_lambda sch_thin_kac(lambda).
SupercharElement thin_kac_to_poly(const ThinKacCombination& c);

/// Expresses f in the kernel of ds (i.e. the pair substitution vanishes
/// identically) as a combination of thin Kac supercharacters:
/// g = f / r_minus1, a = schur_decompose(g), c_lambda = (-1)^{p(lambda)} a_lambda.
/// The result is verified by re-expansion before returning.
ThinKacCombination kernel_decompose(const SupercharElement& f);

/// Decomposition of sch_thin_kac(lambda) * sch_natural(n) into thin Kac
/// classes. The support is exactly the ball-move targets of lambda and every
/// coefficient is +1 or -1.
ThinKacCombination tensor_V_decompose(const Weight& lambda);

/// The sub-sum of tensor_V_decompose(lambda) carried by ball moves whose
/// source position is k; empty when the diagram has no movable bead at k.
ThinKacCombination translate_thin_kac(const Weight& lambda, std::int64_t k);

} // namespace perichar
