#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qgordon {

/// Exact Laurent polynomial in the formal variable q: integer coefficients,
/// exponents of either sign.
///
/// Terms live in a sparse exponent -> coefficient map kept in canonical form
/// (no zero coefficient is ever stored), so structural equality of the maps
/// is polynomial equality. Coefficients are GMP integers; all arithmetic is
/// exact and closed. Values are immutable in practice: every operation
/// returns a fresh polynomial.
class LaurentPoly {
public:
    using TermMap = std::map<std::int64_t, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long constant);
    explicit LaurentPoly(mpz_class constant);

    /// coeff * q^exp (canonicalized: zero coeff gives the zero polynomial).
    static LaurentPoly monomial(mpz_class coeff, std::int64_t exp);
    /// The variable q itself.
    static LaurentPoly q();
    static LaurentPoly from_terms(const std::vector<std::pair<std::int64_t, mpz_class>>& terms);

    bool is_zero() const { return terms_.empty(); }
    /// Smallest exponent with nonzero coefficient. Precondition: nonzero.
    std::int64_t min_exponent() const;
    /// Largest exponent with nonzero coefficient. Precondition: nonzero.
    std::int64_t degree() const;
    /// Coefficient of q^exp (zero when absent).
    mpz_class coeff(std::int64_t exp) const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    /// p * q^exp.
    LaurentPoly shifted(std::int64_t exp) const;
    /// p * coeff.
    LaurentPoly scaled(const mpz_class& coeff) const;

    /// p(1/q): every exponent negated. Involutive.
    LaurentPoly substitute_q_inverse() const;

    /// Sum of all coefficients, i.e. p(1).
    mpz_class eval_at_one() const;

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return terms_ != rhs.terms_; }

    /// Canonical text form, ascending exponents: "2*q^-1 - 1 + q^3".
    std::string to_string() const;
    /// Ascending (exponent, decimal coefficient) pairs for machine output.
    std::vector<std::pair<std::int64_t, std::string>> term_list() const;

private:
    TermMap terms_;

    void add_term(std::int64_t exp, const mpz_class& coeff);
    friend LaurentPoly mul_dense(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly mul_sparse(const LaurentPoly& a, const LaurentPoly& b);
};

}  // namespace qgordon
