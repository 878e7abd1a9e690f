#include "qgordon/santos.hpp"

#include <stdexcept>
#include <string>

#include "qgordon/qalgebra.hpp"
#include "verify_util.hpp"

namespace qgordon {

namespace {

LaurentPoly odd_pochhammer_poly(std::int64_t m) {
    LaurentPoly prod(1);
    for (std::int64_t j = 0; j < m; ++j) {
        prod *= LaurentPoly(1) - LaurentPoly::monomial(1, 2 * j + 1);
    }
    return prod;
}

LaurentPoly santos_S_poly(std::int64_t m) {
    LaurentPoly sum;
    for (std::int64_t t = 0; 2 * t <= m; ++t) {
        sum += q_binomial_tb(m, 2 * t).shifted(2 * t * t);
    }
    return sum;
}

LaurentPoly santos_T_poly(std::int64_t m) {
    LaurentPoly sum;
    for (std::int64_t t = 0; 2 * t + 1 <= m; ++t) {
        sum += q_binomial_tb(m, 2 * t + 1).shifted(2 * t * t + 2 * t);
    }
    return sum;
}

LaurentPoly sign_poly(std::int64_t k) { return LaurentPoly(k % 2 == 0 ? 1 : -1); }

}  // namespace

RationalQ odd_pochhammer(std::int64_t m) {
    if (m >= 0) return RationalQ(odd_pochhammer_poly(m));
    LaurentPoly prod(1);
    for (std::int64_t j = 1; j <= -m; ++j) {
        prod *= LaurentPoly(1) - LaurentPoly::monomial(1, 1 - 2 * j);
    }
    return RationalQ(LaurentPoly(1), prod);
}

RationalQ santos_S(std::int64_t m) {
    if (m >= 0) return RationalQ(santos_S_poly(m));
    const std::int64_t k = -m;
    const RationalQ reflected(invert_variable(santos_S_poly(k)));
    const RationalQ prefactor =
        RationalQ(sign_poly(k).shifted(k * k)) * RationalQ(LaurentPoly(1), odd_pochhammer_poly(k));
    return prefactor * reflected;
}

RationalQ santos_T(std::int64_t m) {
    if (m >= 0) return RationalQ(santos_T_poly(m));
    const std::int64_t k = -m;
    const RationalQ reflected(invert_variable(santos_T_poly(k)));
    const RationalQ prefactor = RationalQ(sign_poly(k + 1).shifted(k * k - 1)) *
                                RationalQ(LaurentPoly(1), odd_pochhammer_poly(k));
    return prefactor * reflected;
}

VerificationReport verify_p1(std::int64_t L_max, std::int64_t m_max) {
    if (L_max < 0 || m_max < 0) throw std::invalid_argument("verify_p1: bounds must be >= 0");
    detail::GridChecker checker("eq-P1", "0<=L<=" + std::to_string(L_max) +
                                             "; 0<=m<=" + std::to_string(m_max));
    for (std::int64_t L = 0; L <= L_max; ++L) {
        for (std::int64_t m = 0; m <= m_max; ++m) {
            LaurentPoly sum;
            for (std::int64_t t = 0; 2 * t + 1 <= L; ++t) {
                sum += q_binomial_tb(L, 2 * t + 1).shifted(2 * t * t + 2 * (m + 1) * t);
            }
            const LaurentPoly lhs = odd_pochhammer_poly(m).shifted(m) * sum;
            const LaurentPoly rhs = santos_S_poly(m) * santos_T_poly(L + m) -
                                    santos_T_poly(m) * santos_S_poly(L + m);
            checker.check("L=" + std::to_string(L) + ",m=" + std::to_string(m), lhs, rhs);
        }
    }
    return checker.finish();
}

VerificationReport verify_p2(std::int64_t L_max, std::int64_t M_lo, std::int64_t M_hi) {
    if (L_max < 0) throw std::invalid_argument("verify_p2: L_max must be >= 0");
    detail::GridChecker checker("eq-P2", "0<=L<=" + std::to_string(L_max) + "; " +
                                             std::to_string(M_lo) + "<=M<=" + std::to_string(M_hi));
    for (std::int64_t L = 0; L <= L_max; ++L) {
        for (std::int64_t M = M_lo; M <= M_hi; ++M) {
            LaurentPoly sum;
            for (std::int64_t t = 0; 2 * t + 1 <= L; ++t) {
                sum += q_binomial_tb(L, 2 * t + 1).shifted(2 * t * t - 2 * M * t);
            }
            const RationalQ lhs(sum);
            const RationalQ rhs =
                RationalQ(LaurentPoly::monomial(1, M + 1)) *
                    invert_variable(santos_S(M + 1)) * santos_T(L - M - 1) +
                RationalQ(LaurentPoly::monomial(1, M)) *
                    invert_variable(santos_T(M + 1)) * santos_S(L - M - 1);
            checker.check("L=" + std::to_string(L) + ",M=" + std::to_string(M), lhs, rhs);
        }
    }
    return checker.finish();
}

}  // namespace qgordon
