#pragma once

#include <cstdint>
#include <vector>

#include "qgordon/rational_q.hpp"
#include "qgordon/report.hpp"

namespace qgordon {

/// (q; q^2)_m = prod_{j=0}^{m-1} (1 - q^{2j+1}) extended to negative m by
/// (q; q^2)_{-m} = 1 / prod_{j=1}^{m} (1 - q^{1-2j}).
RationalQ odd_pochhammer(std::int64_t m);

/// Andrews-Santos polynomials
///   S_m = sum_t q^{2t^2}    [m choose 2t],
///   T_m = sum_t q^{2t^2+2t} [m choose 2t+1],
/// extended to negative indices by
///   S_{-m} = (-1)^m     q^{m^2}   / (q;q^2)_m * S_m(1/q),
///   T_{-m} = (-1)^{m+1} q^{m^2-1} / (q;q^2)_m * T_m(1/q).
/// Values are polynomials for m >= 0 and genuinely rational below.
RationalQ santos_S(std::int64_t m);
RationalQ santos_T(std::int64_t m);

/// The odd-binomial sum identity with positive shift, over 0 <= L <= L_max,
/// 0 <= m <= m_max. Exact polynomial equality.
VerificationReport verify_p1(std::int64_t L_max, std::int64_t m_max);

/// The negative-shift extension over 0 <= L <= L_max, M_lo <= M <= M_hi,
/// with rational equality decided by cross-multiplication.
VerificationReport verify_p2(std::int64_t L_max, std::int64_t M_lo, std::int64_t M_hi);

}  // namespace qgordon
