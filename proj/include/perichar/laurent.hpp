#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace perichar {

/// Error in the mathematical domain of an operation (bad rank, failed
/// division, non-dominant weight, ...). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent vector of a Laurent monomial; entry i is the exponent of x_{i+1}.
/// Compared lexicographically (std::vector's operator<), which is the term
/// order used throughout: leading term = lex-greatest exponent vector.
using Exponents = std::vector<std::int64_t>;

/// Sparse multivariate Laurent polynomial over arbitrary-precision integers.
///
/// Canonical form: no stored coefficient is zero, every exponent vector has
/// length nvars(). nvars() == 0 is legal and models integer constants.
/// Values are immutable in spirit: all operations are pure functions.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponents, mpz_class>;

    LaurentPolynomial() = default; // zero polynomial in 0 variables
    explicit LaurentPolynomial(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw DomainError("negative variable count");
    }

    static LaurentPolynomial constant(int nvars, mpz_class c);
    static LaurentPolynomial monomial(Exponents e, mpz_class c);
    /// x_{index+1} as a polynomial in nvars variables (index is 0-based).
    static LaurentPolynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    mpz_class coeff(const Exponents& e) const;
    bool is_constant() const;
    /// The unique coefficient of a constant polynomial (0 for the zero poly).
    mpz_class constant_value() const;

    /// Lex-greatest term; throws on the zero polynomial.
    const TermMap::value_type& leading_term() const;

    /// Accumulate c * x^e, pruning a resulting zero coefficient.
    void add_term(const Exponents& e, const mpz_class& c);

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    int nvars_ = 0;
    TermMap terms_;
};

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial sub(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial negate(const LaurentPolynomial& f);
LaurentPolynomial scalar_mul(const mpz_class& c, const LaurentPolynomial& f);

/// Product, dispatching to the OpenMP kernel for large operands.
/// Results are identical (bit-deterministic) on every path.
LaurentPolynomial mul(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial mul_serial(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial mul_parallel(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Exact division: returns q with q*g == f, else throws
/// DomainError("not divisible"); g == 0 throws DomainError("division by zero").
LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Relabel variables: the monomial x_{i+1} becomes x_{p[i]+1}. p must be a
/// bijection on {0, ..., nvars-1}. Satisfies
/// permute_variables(permute_variables(f, p), q) == permute_variables(f, q∘p).
LaurentPolynomial permute_variables(const LaurentPolynomial& f, const std::vector<int>& p);

/// Substitute x_{i+1} = t, x_{j+1} = t^{-1} (0-based i != j). The result has
/// nvars-1 variables: the survivors renumbered order-preservingly followed by
/// t as the last variable; each term's t-exponent is e[i] - e[j].
LaurentPolynomial pair_substitute(const LaurentPolynomial& f, int i, int j);

struct TSplit {
    bool is_independent = false;
    LaurentPolynomial value; // meaningful only when is_independent
};

/// For a polynomial whose last variable is designated t: is_independent is
/// true iff every term has t-exponent 0, and then value is f with the t
/// coordinate dropped.
TSplit t_independent_part(const LaurentPolynomial& f);

inline LaurentPolynomial operator+(const LaurentPolynomial& f, const LaurentPolynomial& g) { return add(f, g); }
inline LaurentPolynomial operator-(const LaurentPolynomial& f, const LaurentPolynomial& g) { return sub(f, g); }
inline LaurentPolynomial operator-(const LaurentPolynomial& f) { return negate(f); }
inline LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g) { return mul(f, g); }
inline LaurentPolynomial operator*(const mpz_class& c, const LaurentPolynomial& f) { return scalar_mul(c, f); }

} // namespace perichar
