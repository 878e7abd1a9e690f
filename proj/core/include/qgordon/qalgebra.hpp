#pragma once

#include <cstdint>
#include <set>

#include "qgordon/laurent_poly.hpp"
#include "qgordon/rational_q.hpp"
#include "qgordon/truncated_series.hpp"

namespace qgordon {

/// p(1/q). Involutive; exponents negated.
LaurentPoly invert_variable(const LaurentPoly& p);
RationalQ invert_variable(const RationalQ& r);

/// Sum of all coefficients, i.e. p(1).
mpz_class eval_at_one(const LaurentPoly& p);

/// q-shifted factorial (q^a; q)_t = prod_{j=0}^{t-1} (1 - q^{a+j}).
/// t = 0 gives 1; negative t is a domain error. a may be negative.
LaurentPoly q_pochhammer(std::int64_t a, std::int64_t t);

/// Gaussian binomial [n+m choose n]_q.
///
/// Returns 0 for m < 0. For n, m >= 0 this is the box-counting polynomial of
/// degree n*m with nonnegative coefficients. n = -1 gives 1 for m = 0 and 0
/// for m >= 1 (the (q^0)_m factor vanishes). n <= -2 is a domain error: the
/// product form stops being a polynomial there and no sum in range needs it.
LaurentPoly q_binomial(std::int64_t n, std::int64_t m);

/// [top choose bottom]_q in the top/bottom notation, i.e.
/// q_binomial(bottom, top - bottom) extended to the vanishing cases:
/// zero when top < bottom or when -(top-bottom) <= bottom <= -1, one when
/// top == bottom. The remaining (non-polynomial) corner is a domain error.
LaurentPoly q_binomial_tb(std::int64_t top, std::int64_t bottom);

/// prod_{n >= 1, n mod modulus in residues} 1/(1 - q^n) truncated below
/// cutoff. Residues must be a nonempty subset of {1, ..., modulus-1}.
TruncatedLaurentSeries series_inverse_product(std::int64_t modulus,
                                              const std::set<std::int64_t>& residues,
                                              std::int64_t cutoff);

/// 1/(q)_inf = prod_{n >= 1} 1/(1 - q^n) truncated below cutoff.
TruncatedLaurentSeries inverse_pochhammer_all(std::int64_t cutoff);

/// 1/(q)_t for t = 0..t_max, each truncated below cutoff.
std::vector<TruncatedLaurentSeries> inverse_pochhammer_tower(std::int64_t t_max,
                                                             std::int64_t cutoff);

}  // namespace qgordon
