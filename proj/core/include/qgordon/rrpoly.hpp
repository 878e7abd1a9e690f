#pragma once

#include <cstdint>
#include <vector>

#include "qgordon/laurent_poly.hpp"
#include "qgordon/report.hpp"

namespace qgordon {

/// The two Rogers-Ramanujan polynomial families.
enum class RRKind { E, D };

/// e_L / d_L as the positive t-sums
///   e_L = sum_t q^{t^2}   [L-t   choose t],
///   d_L = sum_t q^{t^2+t} [L-t-1 choose t].
/// Negative L is defined by reading the recurrence backward:
///   e_{-L} = (-1)^L     q^{binom(L,2)} d_{L-1}(1/q),
///   d_{-L} = (-1)^{L+1} q^{binom(L,2)} e_{L-1}(1/q).
LaurentPoly rr_fermionic(RRKind kind, std::int64_t L);

/// e_L / d_L as the alternating bosonic j-sums. Requires L >= 0.
LaurentPoly rr_bosonic(RRKind kind, std::int64_t L);

/// e_L / d_L by iterating c_L = c_{L-1} + q^{L-1} c_{L-2} from the initial
/// conditions, forward for L >= 0 and backward for L < 0. Cross-check route.
LaurentPoly rr_by_recurrence(RRKind kind, std::int64_t L);

/// f_{s,b}(L,M) = sum_t q^{t^2+st-Mt} [L-t-s-b choose t]; s,b in {0,1},
/// L >= 0, any integer M. Laurent for M > 0.
LaurentPoly f_shifted(int s, int b, std::int64_t L, std::int64_t M);

/// Fermionic = bosonic = recurrence route for 0 <= L <= L_max, both kinds.
std::vector<VerificationReport> verify_rr_representations(std::int64_t L_max);

/// The two-step recurrence for L_min <= L <= L_max (negative indices
/// included), both kinds, fermionic route.
VerificationReport verify_rr_recurrence(std::int64_t L_min, std::int64_t L_max);

/// The finite Garrett-Ismail-Stanton identities: the positive-shift form over
/// 0 <= L <= L_max, 0 <= m <= m_max and the negative-shift form over
/// 0 <= M <= L <= L_max.
std::vector<VerificationReport> verify_gis_finite(std::int64_t L_max, std::int64_t m_max);

/// Both splitting equalities at one parameter point. Preconditions:
/// 0 <= M <= L, M + x >= 0, L - M - x >= 0.
VerificationReport verify_splitting(std::int64_t L, std::int64_t M, std::int64_t x, int s, int b);

/// Splitting over the full grid 0 <= M <= L <= L_max with split points x and
/// endpoint labels restricted to the nondegenerate cells (see note in report).
VerificationReport verify_splitting_grid(std::int64_t L_max);

/// Fibonacci specializations at q = 1: the two-piece identity, the sign rule
/// for negated indices, and the Euler-Cassini form.
std::vector<VerificationReport> fibonacci_checks(std::int64_t L_max);

/// Fi(L) = d_L(1), defined for all integers L through the negative-index
/// extension. Fi(1) = Fi(2) = 1.
mpz_class fibonacci(std::int64_t L);

}  // namespace qgordon
