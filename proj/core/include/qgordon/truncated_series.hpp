#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "qgordon/laurent_poly.hpp"

namespace qgordon {

/// Truncated Laurent series: coefficients are known exactly for exponents in
/// the half-open window [min_exponent, cutoff), are zero below min_exponent,
/// and are unknown at cutoff and beyond.
///
/// Arithmetic shrinks the window so that no unknown coefficient is ever
/// claimed: for a product, cutoff = min(a.cutoff + b.min, b.cutoff + a.min).
class TruncatedLaurentSeries {
public:
    TruncatedLaurentSeries(std::int64_t min_exponent, std::int64_t cutoff);

    /// Polynomials are known everywhere, so the window keeps the requested
    /// cutoff and starts at the polynomial's lowest exponent.
    static TruncatedLaurentSeries from_poly(const LaurentPoly& p, std::int64_t cutoff);
    static TruncatedLaurentSeries one(std::int64_t cutoff);
    /// 1/(1-q^n) = sum_k q^{kn} on [0, cutoff); requires n >= 1.
    static TruncatedLaurentSeries geometric(std::int64_t n, std::int64_t cutoff);

    std::int64_t min_exponent() const { return min_exponent_; }
    std::int64_t cutoff() const { return cutoff_; }
    std::int64_t window_size() const { return cutoff_ - min_exponent_; }
    bool knows(std::int64_t exp) const { return exp >= min_exponent_ && exp < cutoff_; }
    /// Coefficient of q^exp; exp below the window reads as zero, at or above
    /// cutoff it is a domain error.
    mpz_class coeff(std::int64_t exp) const;

    TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& rhs) const;
    TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& rhs) const;
    TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& rhs) const;
    TruncatedLaurentSeries operator*(const LaurentPoly& p) const;
    TruncatedLaurentSeries operator-() const;

    /// Accumulate rhs into this window. rhs must be known (or identically
    /// zero) across the whole window: rhs.cutoff >= cutoff and
    /// rhs.min_exponent >= min_exponent.
    void accumulate(const TruncatedLaurentSeries& rhs);

    /// The known window as an exact polynomial (lossless below cutoff).
    LaurentPoly window_poly() const;

private:
    std::int64_t min_exponent_;
    std::int64_t cutoff_;
    std::vector<mpz_class> coeffs_;  // index e - min_exponent_

    mpz_class& at(std::int64_t exp) { return coeffs_[static_cast<std::size_t>(exp - min_exponent_)]; }
    const mpz_class& at(std::int64_t exp) const {
        return coeffs_[static_cast<std::size_t>(exp - min_exponent_)];
    }
};

/// Outcome of comparing two series on the overlap of their windows.
struct WindowAgreement {
    std::int64_t lo = 0;   // inclusive
    std::int64_t hi = 0;   // exclusive
    bool equal = true;
    std::int64_t first_mismatch = 0;  // meaningful when !equal
};

WindowAgreement agree_on_overlap(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);

/// First exponent in [0, series.cutoff) where the polynomial and the series
/// disagree; nullopt if they agree on the whole window.
std::optional<std::int64_t> first_disagreement(const LaurentPoly& p,
                                               const TruncatedLaurentSeries& s);

}  // namespace qgordon
