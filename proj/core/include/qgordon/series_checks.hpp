#pragma once

#include <cstdint>
#include <vector>

#include "qgordon/report.hpp"
#include "qgordon/truncated_series.hpp"

namespace qgordon {

/// The two classical series identities (a = 0, 1): fermionic sum, alternating
/// theta form over the full inverse product, and the modulus-5 product, all
/// truncated below cutoff and compared pairwise.
VerificationReport rr_series_check(int a, std::int64_t cutoff);

/// The shifted series variants: positive shifts m <= m_max and negative
/// shifts M <= M_max, with exact Laurent-polynomial coefficients in front of
/// the two modulus-5 products.
std::vector<VerificationReport> gis_series_check(std::int64_t m_max, std::int64_t M_max,
                                                 std::int64_t cutoff);

/// The modulus-(2nu+3) multisum identities for every s in 1..nu+1: multisum,
/// theta form, product form, compared pairwise below cutoff.
VerificationReport ag_series_check(int nu, std::int64_t cutoff);

/// The shifted multisum limit for one 1-based s: the -M*N_1 multisum against
/// the parity-split bosonic combination of inverse products (M <= M_max),
/// plus the finite-L stabilization record: for each L <= stab_L_max the first
/// exponent where the polynomial stops matching the infinite product.
std::vector<VerificationReport> ag_variant_series_check(int nu, int s, std::int64_t M_max,
                                                        std::int64_t cutoff,
                                                        std::int64_t stab_L_max = 20);

}  // namespace qgordon
