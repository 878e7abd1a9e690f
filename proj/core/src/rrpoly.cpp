#include "qgordon/rrpoly.hpp"

#include <stdexcept>
#include <string>

#include "qgordon/qalgebra.hpp"
#include "verify_util.hpp"

namespace qgordon {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

LaurentPoly sign_poly(std::int64_t k) { return LaurentPoly(k % 2 == 0 ? 1 : -1); }

}  // namespace

LaurentPoly rr_fermionic(RRKind kind, std::int64_t L) {
    if (L < 0) {
        // Backward extension; note the kind swap under q -> 1/q.
        const std::int64_t Lp = -L;
        const RRKind other = kind == RRKind::E ? RRKind::D : RRKind::E;
        LaurentPoly base = invert_variable(rr_fermionic(other, Lp - 1));
        const std::int64_t sign = (kind == RRKind::E) ? Lp : Lp + 1;
        return base.shifted(binom2(Lp)) * sign_poly(sign);
    }
    LaurentPoly sum;
    if (kind == RRKind::E) {
        for (std::int64_t t = 0; 2 * t <= L; ++t) {
            sum += q_binomial_tb(L - t, t).shifted(t * t);
        }
    } else {
        for (std::int64_t t = 0; 2 * t <= L - 1; ++t) {
            sum += q_binomial_tb(L - t - 1, t).shifted(t * t + t);
        }
    }
    return sum;
}

LaurentPoly rr_bosonic(RRKind kind, std::int64_t L) {
    if (L < 0) throw std::domain_error("rr_bosonic: L must be nonnegative");
    LaurentPoly sum;
    const std::int64_t jmax = L / 5 + 2;
    for (std::int64_t j = -jmax; j <= jmax; ++j) {
        if (kind == RRKind::E) {
            sum += q_binomial_tb(L, floor_div(L, 2) - 5 * j).shifted(j * (10 * j + 1));
            sum -= q_binomial_tb(L, floor_div(L - 4, 2) - 5 * j).shifted((2 * j + 1) * (5 * j + 2));
        } else {
            sum += q_binomial_tb(L, floor_div(L - 1, 2) - 5 * j).shifted(j * (10 * j + 3));
            sum -= q_binomial_tb(L, floor_div(L - 3, 2) - 5 * j).shifted((2 * j + 1) * (5 * j + 1));
        }
    }
    return sum;
}

LaurentPoly rr_by_recurrence(RRKind kind, std::int64_t L) {
    LaurentPoly prev = kind == RRKind::E ? LaurentPoly(1) : LaurentPoly(0);  // c_0
    LaurentPoly cur(1);                                                      // c_1
    if (L == 0) return prev;
    if (L > 0) {
        for (std::int64_t k = 2; k <= L; ++k) {
            LaurentPoly next = cur + prev.shifted(k - 1);
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    // Backward: c_{k-2} = (c_k - c_{k-1}) * q^{-(k-1)}, starting at k = 1.
    for (std::int64_t k = 1; k - 2 >= L; --k) {
        LaurentPoly below = (cur - prev).shifted(-(k - 1));
        cur = std::move(prev);
        prev = std::move(below);
    }
    return prev;
}

LaurentPoly f_shifted(int s, int b, std::int64_t L, std::int64_t M) {
    if (s != 0 && s != 1) throw std::domain_error("f_shifted: s must be 0 or 1");
    if (b != 0 && b != 1) throw std::domain_error("f_shifted: b must be 0 or 1");
    if (L < 0) throw std::domain_error("f_shifted: L must be nonnegative");
    LaurentPoly sum;
    for (std::int64_t t = 0; 2 * t <= L - s - b; ++t) {
        sum += q_binomial_tb(L - t - s - b, t).shifted(t * t + s * t - M * t);
    }
    return sum;
}

std::vector<VerificationReport> verify_rr_representations(std::int64_t L_max) {
    std::vector<VerificationReport> reports;
    for (RRKind kind : {RRKind::E, RRKind::D}) {
        const char* name = kind == RRKind::E ? "eq-1.3" : "eq-1.4";
        detail::GridChecker checker(name, "0<=L<=" + std::to_string(L_max));
        for (std::int64_t L = 0; L <= L_max; ++L) {
            const LaurentPoly fermionic = rr_fermionic(kind, L);
            checker.check("L=" + std::to_string(L) + " (fermionic vs bosonic)", fermionic,
                          rr_bosonic(kind, L));
            checker.check("L=" + std::to_string(L) + " (fermionic vs recurrence)", fermionic,
                          rr_by_recurrence(kind, L));
        }
        reports.push_back(checker.finish());
    }
    return reports;
}

VerificationReport verify_rr_recurrence(std::int64_t L_min, std::int64_t L_max) {
    detail::GridChecker checker(
        "eq-1.8", std::to_string(L_min) + "<=L<=" + std::to_string(L_max) + "; kinds e,d");
    for (RRKind kind : {RRKind::E, RRKind::D}) {
        for (std::int64_t L = L_min + 2; L <= L_max; ++L) {
            const std::string params =
                std::string("kind=") + (kind == RRKind::E ? "e" : "d") + ",L=" + std::to_string(L);
            checker.check(params, rr_fermionic(kind, L),
                          rr_fermionic(kind, L - 1) + rr_fermionic(kind, L - 2).shifted(L - 1));
        }
    }
    return checker.finish();
}

std::vector<VerificationReport> verify_gis_finite(std::int64_t L_max, std::int64_t m_max) {
    std::vector<VerificationReport> reports;
    {
        detail::GridChecker checker("eq-1.13", "0<=L<=" + std::to_string(L_max) +
                                                   "; 0<=m<=" + std::to_string(m_max));
        for (std::int64_t L = 0; L <= L_max; ++L) {
            for (std::int64_t m = 0; m <= m_max; ++m) {
                LaurentPoly lhs;
                for (std::int64_t t = 0; 2 * t <= L; ++t) {
                    lhs += q_binomial_tb(L - t, t).shifted(t * t + m * t);
                }
                LaurentPoly rhs = rr_fermionic(RRKind::D, m - 1) * rr_fermionic(RRKind::E, L + m) -
                                  rr_fermionic(RRKind::E, m - 1) * rr_fermionic(RRKind::D, L + m);
                rhs = rhs.shifted(-binom2(m)) * sign_poly(m);
                checker.check("L=" + std::to_string(L) + ",m=" + std::to_string(m), lhs, rhs);
            }
        }
        reports.push_back(checker.finish());
    }
    {
        detail::GridChecker checker("eq-1.14", "0<=M<=L<=" + std::to_string(L_max));
        for (std::int64_t L = 0; L <= L_max; ++L) {
            for (std::int64_t M = 0; M <= L; ++M) {
                const LaurentPoly lhs = f_shifted(0, 0, L, M);
                const LaurentPoly rhs =
                    invert_variable(rr_fermionic(RRKind::E, M)) * rr_fermionic(RRKind::E, L - M) +
                    invert_variable(rr_fermionic(RRKind::D, M)) * rr_fermionic(RRKind::D, L - M);
                checker.check("L=" + std::to_string(L) + ",M=" + std::to_string(M), lhs, rhs);
            }
        }
        reports.push_back(checker.finish());
    }
    return reports;
}

namespace {

void check_splitting_point(detail::GridChecker& checker, std::int64_t L, std::int64_t M,
                           std::int64_t x, int s, int b) {
    const LaurentPoly lhs = f_shifted(s, b, L, M);
    LaurentPoly rhs_concat, rhs_reflect;
    for (int sp = 0; sp <= 1; ++sp) {
        const LaurentPoly right = f_shifted(sp, b, L - M - x, -x);
        rhs_concat += f_shifted(s, sp, M + x, M) * right.shifted(sp * x);
        rhs_reflect += invert_variable(f_shifted(sp, s, M + x, x)).shifted(sp * x) * right;
    }
    const std::string params = "L=" + std::to_string(L) + ",M=" + std::to_string(M) +
                               ",x=" + std::to_string(x) + ",s=" + std::to_string(s) +
                               ",b=" + std::to_string(b);
    checker.check(params + " (concatenation form)", lhs, rhs_concat);
    checker.check(params + " (reflection form)", lhs, rhs_reflect);
}

}  // namespace

VerificationReport verify_splitting(std::int64_t L, std::int64_t M, std::int64_t x, int s, int b) {
    if (M < 0 || M > L) throw std::invalid_argument("verify_splitting: need 0 <= M <= L");
    if (M + x < 0 || L - M - x < 0) {
        throw std::invalid_argument("verify_splitting: split point outside the path interval");
    }
    detail::GridChecker checker("eq-2.16", "single point");
    check_splitting_point(checker, L, M, x, s, b);
    return checker.finish();
}

VerificationReport verify_splitting_grid(std::int64_t L_max) {
    detail::GridChecker checker("eq-2.16", "0<=M<=L<=" + std::to_string(L_max) +
                                               "; -M<=x<=L-M; s,b in {0,1}");
    checker.set_note("single-vertex pieces skipped (M+x=0 with s=1, or L-M-x=0 with b=1)");
    for (std::int64_t L = 0; L <= L_max; ++L) {
        for (std::int64_t M = 0; M <= L; ++M) {
            for (std::int64_t x = -M; x <= L - M; ++x) {
                for (int s = 0; s <= 1; ++s) {
                    for (int b = 0; b <= 1; ++b) {
                        if (M + x == 0 && s == 1) continue;
                        if (L - M - x == 0 && b == 1) continue;
                        check_splitting_point(checker, L, M, x, s, b);
                    }
                }
            }
        }
    }
    return checker.finish();
}

mpz_class fibonacci(std::int64_t L) {
    return rr_fermionic(RRKind::D, L).eval_at_one();
}

std::vector<VerificationReport> fibonacci_checks(std::int64_t L_max) {
    if (L_max < 1) throw std::invalid_argument("fibonacci_checks: L_max must be >= 1");
    std::vector<VerificationReport> reports;
    {
        detail::GridChecker checker("eq-2.13", "1<=M<=L<=" + std::to_string(L_max));
        checker.check("Fi(1)", fibonacci(1), mpz_class(1));
        checker.check("Fi(2)", fibonacci(2), mpz_class(1));
        for (std::int64_t L = 3; L <= L_max; ++L) {
            checker.check("recurrence L=" + std::to_string(L), fibonacci(L),
                          mpz_class(fibonacci(L - 1) + fibonacci(L - 2)));
        }
        for (std::int64_t L = 1; L <= L_max; ++L) {
            for (std::int64_t M = 1; M <= L; ++M) {
                checker.check(
                    "L=" + std::to_string(L) + ",M=" + std::to_string(M), fibonacci(L),
                    mpz_class(fibonacci(M) * fibonacci(L - M + 1) + fibonacci(M - 1) * fibonacci(L - M)));
            }
        }
        reports.push_back(checker.finish());
    }
    {
        detail::GridChecker checker("eq-2.14", "1<=M<=" + std::to_string(L_max));
        for (std::int64_t M = 1; M <= L_max; ++M) {
            const mpz_class sign = (M + 1) % 2 == 0 ? 1 : -1;
            checker.check("M=" + std::to_string(M), fibonacci(-M), mpz_class(sign * fibonacci(M)));
        }
        reports.push_back(checker.finish());
    }
    {
        const std::int64_t half = L_max / 2;
        detail::GridChecker checker("eq-2.15", "0<=M,L<=" + std::to_string(half));
        for (std::int64_t L = 0; L <= half; ++L) {
            for (std::int64_t M = 0; M <= half; ++M) {
                const mpz_class sign = M % 2 == 0 ? 1 : -1;
                checker.check(
                    "L=" + std::to_string(L) + ",M=" + std::to_string(M),
                    mpz_class(sign * fibonacci(L)),
                    mpz_class(fibonacci(M + 1) * fibonacci(L + M) - fibonacci(M) * fibonacci(L + M + 1)));
            }
        }
        reports.push_back(checker.finish());
    }
    return reports;
}

}  // namespace qgordon
