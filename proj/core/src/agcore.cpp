#include "qgordon/agcore.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qgordon/qalgebra.hpp"
#include "verify_util.hpp"

namespace qgordon {

namespace {

void validate_params(int nu, int s, int b, std::int64_t L) {
    if (nu < 1) throw std::domain_error("AG multisum: nu must be >= 1");
    if (s < 0 || s > nu || b < 0 || b > nu) {
        throw std::domain_error("AG multisum: s and b must lie in 0..nu");
    }
    if (L < 0) throw std::domain_error("AG multisum: L must be nonnegative");
}

// Depth-first enumeration over weakly decreasing N_1 >= ... >= N_nu >= 0,
// plus the gated N_nu = -1 branch. m_i depends only on the prefix
// N_1..N_i, so a prefix with m_i < -slack is dead: lowering later N's cannot
// raise an earlier m. slack 0 is exact for the plain multisums; the
// telescoping sums run with slack 1 so that the shifted binomials decide
// support themselves.
void enumerate_ag_support(int nu, int s, int b, std::int64_t L, std::int64_t M, std::int64_t slack,
                          const std::function<void(const std::vector<std::int64_t>& N,
                                                   const std::vector<std::int64_t>& m,
                                                   std::int64_t phi)>& fn) {
    std::vector<std::int64_t> N(static_cast<std::size_t>(nu)), m(static_cast<std::size_t>(nu));
    // N_i = -1 is reachable at every level: the chain N_i = ... = N_nu = -1
    // encodes n = (..., 0, -1). Monotonicity then forces N_nu = -1, so the
    // gate on the last component covers the intermediate ones.
    const bool allow_minus_one = (s != nu && b != nu);
    std::function<void(int, std::int64_t)> descend = [&](int i, std::int64_t prefix) {
        // i is 1-based; prefix = N_1 + ... + N_{i-1}.
        const std::int64_t corr = (i > s ? i - s : 0) + (i > b ? i - b : 0);
        const std::int64_t lo = allow_minus_one ? -1 : 0;
        std::int64_t hi = i == 1 ? (L + slack) / 2 : N[static_cast<std::size_t>(i - 2)];
        for (std::int64_t Ni = hi; Ni >= lo; --Ni) {
            const std::int64_t mi = L - 2 * (prefix + Ni) - corr;
            if (mi < -slack) continue;  // grows as Ni shrinks; candidates below are live
            N[static_cast<std::size_t>(i - 1)] = Ni;
            m[static_cast<std::size_t>(i - 1)] = mi;
            if (i == nu) {
                std::int64_t phi = -M * N[0];
                for (int k = 1; k <= nu; ++k) {
                    const std::int64_t Nk = N[static_cast<std::size_t>(k - 1)];
                    phi += Nk * Nk;
                    if (k >= s + 1) phi += Nk;
                }
                fn(N, m, phi);
            } else {
                descend(i + 1, prefix + Ni);
            }
        }
    };
    descend(1, 0);
}

LaurentPoly multisum(int nu, int s, int b, std::int64_t L, std::int64_t M) {
    validate_params(nu, s, b, L);
    LaurentPoly sum;
    enumerate_ag_support(nu, s, b, L, M, 0,
                         [&](const std::vector<std::int64_t>& N, const std::vector<std::int64_t>& m,
                             std::int64_t phi) {
                             LaurentPoly term(1);
                             for (int i = 1; i <= nu; ++i) {
                                 const std::int64_t Nnext =
                                     i == nu ? 0 : N[static_cast<std::size_t>(i)];
                                 const std::int64_t ni = N[static_cast<std::size_t>(i - 1)] - Nnext;
                                 term *= q_binomial(ni, m[static_cast<std::size_t>(i - 1)]);
                                 if (term.is_zero()) return;
                             }
                             sum += term.shifted(phi);
                         });
    return sum;
}

std::int64_t kronecker(std::int64_t a, std::int64_t b) { return a == b ? 1 : 0; }

bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) % 2) == 0; }

}  // namespace

std::vector<AGIndexVector> ag_index_vectors(int nu, int s, int b, std::int64_t L, std::int64_t M) {
    validate_params(nu, s, b, L);
    std::vector<AGIndexVector> out;
    enumerate_ag_support(nu, s, b, L, M, 0,
                         [&](const std::vector<std::int64_t>& N, const std::vector<std::int64_t>& m,
                             std::int64_t phi) {
                             AGIndexVector v;
                             v.N = N;
                             v.m = m;
                             v.n.resize(static_cast<std::size_t>(nu));
                             for (int i = 1; i <= nu; ++i) {
                                 const std::int64_t Nnext =
                                     i == nu ? 0 : N[static_cast<std::size_t>(i)];
                                 v.n[static_cast<std::size_t>(i - 1)] =
                                     N[static_cast<std::size_t>(i - 1)] - Nnext;
                             }
                             v.phi = phi;
                             out.push_back(std::move(v));
                         });
    return out;
}

LaurentPoly f_tilde(int nu, int s, int b, std::int64_t L) {
    return multisum(nu, s, b, L, 0);
}

LaurentPoly big_f(int nu, int s, int b, std::int64_t L, std::int64_t M) {
    return multisum(nu, s, b, L, M);
}

LaurentPoly b_bosonic(int nu, std::int64_t S, std::int64_t B, std::int64_t L) {
    if (nu < 1) throw std::domain_error("b_bosonic: nu must be >= 1");
    const std::int64_t P = 2 * nu + 3;
    if (S < 1 || S > P - 1) throw std::domain_error("b_bosonic: S outside 1..2nu+2");
    if (B < 1 || B > nu + 1) throw std::domain_error("b_bosonic: B outside 1..nu+1");
    if (L < 0) throw std::domain_error("b_bosonic: L must be nonnegative");
    if ((L + S + B) % 2 != 0) {
        throw std::domain_error("b_bosonic: parity violation, L must equal S+B mod 2");
    }
    LaurentPoly sum;
    const std::int64_t jmax = L / P + 1;
    for (std::int64_t j = -jmax; j <= jmax; ++j) {
        sum += q_binomial_tb(L, (L + S - B) / 2 - j * P).shifted(2 * P * j * j + j * (P - 2 * S));
        sum -= q_binomial_tb(L, (L - S - B) / 2 - j * P).shifted((2 * j + 1) * (P * j + S));
    }
    return sum;
}

VerificationReport verify_ag_polynomial(int nu, std::int64_t L_max) {
    detail::GridChecker checker("eq-3.9", "nu=" + std::to_string(nu) + "; 0<=s,b<=" +
                                              std::to_string(nu) + "; 0<=L<=" + std::to_string(L_max));
    for (int s = 0; s <= nu; ++s) {
        for (int b = 0; b <= nu; ++b) {
            for (std::int64_t L = 0; L <= L_max; ++L) {
                const LaurentPoly rhs = same_parity(L, s + b)
                                            ? b_bosonic(nu, s + 1, b + 1, L)
                                            : b_bosonic(nu, (2 * nu + 3) - (s + 1), b + 1, L);
                checker.check("s=" + std::to_string(s) + ",b=" + std::to_string(b) +
                                  ",L=" + std::to_string(L),
                              f_tilde(nu, s, b, L), rhs);
            }
        }
    }
    return checker.finish();
}

std::vector<VerificationReport> verify_recurrences(int nu, std::int64_t L_max,
                                                   const std::vector<std::int64_t>& M_values) {
    if (L_max < 2) throw std::invalid_argument("verify_recurrences: L_max must be >= 2");
    std::vector<VerificationReport> reports;
    auto run = [&](const char* id, const std::vector<std::int64_t>& Ms, const std::string& grid) {
        detail::GridChecker checker(id, grid);
        for (std::int64_t M : Ms) {
            // Local cache: the same big_f value feeds several grid cells.
            std::map<std::tuple<int, int, std::int64_t>, LaurentPoly> memo;
            auto F = [&](int s, int b, std::int64_t L) -> const LaurentPoly& {
                auto key = std::make_tuple(s, b, L);
                auto it = memo.find(key);
                if (it == memo.end()) it = memo.emplace(key, big_f(nu, s, b, L, M)).first;
                return it->second;
            };
            for (int s = 0; s <= nu; ++s) {
                for (std::int64_t L = 1; L <= L_max; ++L) {
                    checker.check("s=" + std::to_string(s) + ",b=0,L=" + std::to_string(L) +
                                      ",M=" + std::to_string(M),
                                  F(s, 0, L), F(s, 1, L - 1));
                }
                for (int b = 1; b <= nu; ++b) {
                    for (std::int64_t L = 2; L <= L_max; ++L) {
                        const LaurentPoly rhs =
                            F(s, b - 1, L - 1) + F(s, b + (b == nu ? 0 : 1), L - 1) +
                            (LaurentPoly::monomial(1, L - M - 1) - LaurentPoly(1)) * F(s, b, L - 2);
                        checker.check("s=" + std::to_string(s) + ",b=" + std::to_string(b) +
                                          ",L=" + std::to_string(L) + ",M=" + std::to_string(M),
                                      F(s, b, L), rhs);
                    }
                }
            }
        }
        reports.push_back(checker.finish());
    };
    run("eq-3.10", {0}, "nu=" + std::to_string(nu) + "; L<=" + std::to_string(L_max) + "; M=0");
    std::string m_list;
    for (std::int64_t M : M_values) m_list += (m_list.empty() ? "" : ",") + std::to_string(M);
    run("eq-3.13", M_values,
        "nu=" + std::to_string(nu) + "; L<=" + std::to_string(L_max) + "; M in {" + m_list + "}");
    return reports;
}

std::vector<std::vector<LaurentPoly>> connection_coefficients(int nu, std::int64_t M) {
    if (M < 0) throw std::domain_error("connection_coefficients: M must be nonnegative");
    std::vector<std::vector<LaurentPoly>> A(static_cast<std::size_t>(nu + 1),
                                            std::vector<LaurentPoly>(static_cast<std::size_t>(nu + 1)));
    for (int s = 0; s <= nu; ++s) {
        for (int sp = 0; sp <= nu; ++sp) {
            A[static_cast<std::size_t>(s)][static_cast<std::size_t>(sp)] = big_f(nu, s, sp, M, M);
            if (A[static_cast<std::size_t>(s)][static_cast<std::size_t>(sp)] !=
                invert_variable(f_tilde(nu, sp, s, M))) {
                throw std::logic_error("connection_coefficients: boundary and inversion routes disagree");
            }
        }
    }
    return A;
}

std::vector<VerificationReport> verify_connection_laws(int nu, std::int64_t M_max) {
    std::vector<VerificationReport> reports;
    {
        detail::GridChecker checker("eq-3.16", "nu=" + std::to_string(nu) + "; M=0");
        for (int s = 0; s <= nu; ++s) {
            for (int b = 0; b <= nu; ++b) {
                checker.check("s=" + std::to_string(s) + ",b=" + std::to_string(b),
                              big_f(nu, s, b, 0, 0), LaurentPoly(kronecker(s, b)));
            }
        }
        reports.push_back(checker.finish());
    }
    {
        detail::GridChecker checker("eq-3.18", "nu=" + std::to_string(nu) +
                                                   "; 0<=M<=" + std::to_string(M_max));
        for (std::int64_t M = 0; M <= M_max; ++M) {
            for (int s = 0; s <= nu; ++s) {
                for (int b = 0; b <= nu; ++b) {
                    checker.check("M=" + std::to_string(M) + ",s=" + std::to_string(s) +
                                      ",b=" + std::to_string(b),
                                  big_f(nu, s, b, M, M), invert_variable(f_tilde(nu, b, s, M)));
                }
            }
        }
        reports.push_back(checker.finish());
    }
    return reports;
}

std::vector<VerificationReport> verify_main_theorem(int nu, std::int64_t L_max) {
    std::vector<VerificationReport> reports;
    // f_tilde values recur across every (s, b, L, M) cell; cache both plain
    // and inverted copies.
    std::map<std::tuple<int, int, std::int64_t>, LaurentPoly> plain, inverted;
    auto ft = [&](int a, int b, std::int64_t L) -> const LaurentPoly& {
        auto key = std::make_tuple(a, b, L);
        auto it = plain.find(key);
        if (it == plain.end()) it = plain.emplace(key, f_tilde(nu, a, b, L)).first;
        return it->second;
    };
    auto ft_inv = [&](int a, int b, std::int64_t L) -> const LaurentPoly& {
        auto key = std::make_tuple(a, b, L);
        auto it = inverted.find(key);
        if (it == inverted.end()) it = inverted.emplace(key, invert_variable(ft(a, b, L))).first;
        return it->second;
    };
    const std::string grid = "nu=" + std::to_string(nu) + "; 0<=M<=L<=" + std::to_string(L_max) +
                             "; 0<=s,b<=" + std::to_string(nu);
    {
        detail::GridChecker checker("eq-3.19", grid);
        for (std::int64_t L = 0; L <= L_max; ++L) {
            for (std::int64_t M = 0; M <= L; ++M) {
                for (int s = 0; s <= nu; ++s) {
                    for (int b = 0; b <= nu; ++b) {
                        LaurentPoly rhs;
                        for (int sp = 0; sp <= nu; ++sp) {
                            rhs += ft_inv(sp, s, M) * ft(sp, b, L - M);
                        }
                        checker.check("L=" + std::to_string(L) + ",M=" + std::to_string(M) +
                                          ",s=" + std::to_string(s) + ",b=" + std::to_string(b),
                                      big_f(nu, s, b, L, M), rhs);
                    }
                }
            }
        }
        reports.push_back(checker.finish());
    }
    {
        detail::GridChecker checker("eq-3.20", grid);
        for (std::int64_t L = 0; L <= L_max; ++L) {
            for (std::int64_t M = 0; M <= L; ++M) {
                for (int s = 0; s <= nu; ++s) {
                    for (int b = 0; b <= nu; ++b) {
                        LaurentPoly rhs;
                        for (int sp = 0; sp <= nu; ++sp) {
                            const LaurentPoly bos =
                                same_parity(s + sp, M)
                                    ? b_bosonic(nu, sp + 1, s + 1, M)
                                    : b_bosonic(nu, (2 * nu + 3) - (sp + 1), s + 1, M);
                            rhs += invert_variable(bos) * ft(sp, b, L - M);
                        }
                        checker.check("L=" + std::to_string(L) + ",M=" + std::to_string(M) +
                                          ",s=" + std::to_string(s) + ",b=" + std::to_string(b),
                                      big_f(nu, s, b, L, M), rhs);
                    }
                }
            }
        }
        reports.push_back(checker.finish());
    }
    return reports;
}

namespace {

using ShiftVec = std::vector<std::int64_t>;

// Unit vector e_i on components 1..nu (zero outside) and the block sum
// E_{a,b} = e_a + ... + e_b.
ShiftVec unit_vec(int nu, int i) {
    ShiftVec v(static_cast<std::size_t>(nu), 0);
    if (i >= 1 && i <= nu) v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

ShiftVec block_vec(int nu, int a, int b) {
    ShiftVec v(static_cast<std::size_t>(nu), 0);
    for (int i = std::max(a, 1); i <= std::min(b, nu); ++i) v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

ShiftVec& operator+=(ShiftVec& lhs, const ShiftVec& rhs) {
    for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] += rhs[k];
    return lhs;
}

ShiftVec& operator-=(ShiftVec& lhs, const ShiftVec& rhs) {
    for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= rhs[k];
    return lhs;
}

struct DerivedVec {
    std::vector<std::int64_t> N, m;
    std::int64_t phi = 0;
};

// Partial sums, binomial entries and exponent for an arbitrary integer vector
// n at parameters (L, s, b, M); the telescoping sums evaluate these at
// shifted arguments.
DerivedVec derive_from_n(int nu, int s, int b, std::int64_t L, std::int64_t M,
                         const std::vector<std::int64_t>& n) {
    DerivedVec d;
    d.N.assign(static_cast<std::size_t>(nu), 0);
    d.m.assign(static_cast<std::size_t>(nu), 0);
    std::int64_t suffix = 0;
    for (int i = nu; i >= 1; --i) {
        suffix += n[static_cast<std::size_t>(i - 1)];
        d.N[static_cast<std::size_t>(i - 1)] = suffix;
    }
    std::int64_t prefix = 0;
    for (int i = 1; i <= nu; ++i) {
        const std::int64_t Ni = d.N[static_cast<std::size_t>(i - 1)];
        prefix += Ni;
        d.m[static_cast<std::size_t>(i - 1)] =
            L - 2 * prefix - (i > s ? i - s : 0) - (i > b ? i - b : 0);
        d.phi += Ni * Ni;
        if (i >= s + 1) d.phi += Ni;
    }
    d.phi -= M * d.N[0];
    return d;
}

std::vector<std::int64_t> n_from_N(int nu, const std::vector<std::int64_t>& N) {
    std::vector<std::int64_t> n(static_cast<std::size_t>(nu));
    for (int i = 1; i <= nu; ++i) {
        n[static_cast<std::size_t>(i - 1)] =
            N[static_cast<std::size_t>(i - 1)] - (i == nu ? 0 : N[static_cast<std::size_t>(i)]);
    }
    return n;
}

// The common summand of the reindexed expansion (term index 1 <= i <= b-1):
//   q^{phi + m_i + m_b - m_{b-1}}
//   * prod_j [ (n + m - E_{1,b-1} + e_{b-1} - e_b - E_{i,b-1})_j
//              choose (n + e_{b-1} - e_b - e_i)_j ]
// with N, m, phi derived from n at the original (L, s, b, M).
LaurentPoly reindexed_summand(int nu, int s, int b, std::int64_t L, std::int64_t M, int i,
                              const std::vector<std::int64_t>& n) {
    const DerivedVec d = derive_from_n(nu, s, b, L, M, n);
    ShiftVec top_shift = block_vec(nu, 1, b - 1);
    top_shift += block_vec(nu, i, b - 1);
    top_shift -= unit_vec(nu, b - 1);
    top_shift += unit_vec(nu, b);
    ShiftVec bottom_shift = unit_vec(nu, i);
    bottom_shift -= unit_vec(nu, b - 1);
    bottom_shift += unit_vec(nu, b);
    LaurentPoly term(1);
    for (std::size_t k = 0; k < static_cast<std::size_t>(nu) && !term.is_zero(); ++k) {
        term *= q_binomial_tb(n[k] + d.m[k] - top_shift[k], n[k] - bottom_shift[k]);
    }
    if (term.is_zero()) return term;
    const std::int64_t expo = d.phi + d.m[static_cast<std::size_t>(i - 1)] +
                              d.m[static_cast<std::size_t>(b - 1)] -
                              d.m[static_cast<std::size_t>(b - 2)];
    return term.shifted(expo);
}

}  // namespace

VerificationReport telescoping_audit(int nu, int s, int b, std::int64_t L, std::int64_t M) {
    validate_params(nu, s, b, L);
    if (b < 1) throw std::domain_error("telescoping_audit: b must be >= 1");
    if (L < 2) throw std::domain_error("telescoping_audit: L must be >= 2");
    const std::string point = "nu=" + std::to_string(nu) + ",s=" + std::to_string(s) +
                              ",b=" + std::to_string(b) + ",L=" + std::to_string(L) +
                              ",M=" + std::to_string(M);
    detail::GridChecker checker("eq-A.6/A.14", point);

    const LaurentPoly diff = big_f(nu, s, b, L, M) -
                             big_f(nu, s, b + (b == nu ? 0 : 1), L - 1, M) -
                             big_f(nu, s, b, L - 2, M).shifted(L - M - 1);

    // Direct expansion: sum over i = 2..b of
    //   q^{phi+m_i} [n + m - E_{1,i} choose n - e_i]
    // over the multisum's own index domain.
    std::vector<LaurentPoly> direct_terms(static_cast<std::size_t>(b + 1));
    LaurentPoly direct;
    for (int i = 2; i <= b; ++i) {
        const ShiftVec top_shift = block_vec(nu, 1, i);
        const ShiftVec bottom_shift = unit_vec(nu, i);
        LaurentPoly sum;
        enumerate_ag_support(
            nu, s, b, L, M, 1,
            [&](const std::vector<std::int64_t>& N, const std::vector<std::int64_t>& m,
                std::int64_t phi) {
                const std::vector<std::int64_t> n = n_from_N(nu, N);
                LaurentPoly term(1);
                for (std::size_t k = 0; k < static_cast<std::size_t>(nu) && !term.is_zero(); ++k) {
                    term *= q_binomial_tb(n[k] + m[k] - top_shift[k], n[k] - bottom_shift[k]);
                }
                if (!term.is_zero()) sum += term.shifted(phi + m[static_cast<std::size_t>(i - 1)]);
            });
        direct_terms[static_cast<std::size_t>(i)] = sum;
        direct += sum;
    }
    checker.check(point + " (difference vs direct expansion)", diff, direct);
    if (b == 1) {
        checker.check(point + " (b=1: expansion is empty)", direct, LaurentPoly(0));
    }

    if (b >= 2) {
        // Reindexing n -> n + (e_i - e_{i-1}) - (e_b - e_{b-1}) turns the
        // direct term i into the common summand at index i-1; check the trade
        // term by term over the image of the original domain.
        LaurentPoly reindexed_from_image;
        for (int i = 2; i <= b; ++i) {
            ShiftVec shift = unit_vec(nu, i - 1);
            shift -= unit_vec(nu, i);
            shift += unit_vec(nu, b);
            shift -= unit_vec(nu, b - 1);
            LaurentPoly sum;
            enumerate_ag_support(
                nu, s, b, L, M, 1,
                [&](const std::vector<std::int64_t>& N, const std::vector<std::int64_t>&,
                    std::int64_t) {
                    std::vector<std::int64_t> np = n_from_N(nu, N);
                    np += shift;
                    sum += reindexed_summand(nu, s, b, L, M, i - 1, np);
                });
            checker.check(point + " (reindex of term i=" + std::to_string(i) + ")",
                          direct_terms[static_cast<std::size_t>(i)], sum);
            reindexed_from_image += sum;
        }
        checker.check(point + " (reindexed form matches)", diff, reindexed_from_image);

        // Companion expansion: the same summands over the domain carried by
        // the lowered-b multisum (n'' in the (s, b-1, L-1) domain maps to
        // n = n'' - e_{b-1} + e_b).
        ShiftVec lower_shift = unit_vec(nu, b);
        lower_shift -= unit_vec(nu, b - 1);
        LaurentPoly companion;
        enumerate_ag_support(
            nu, s, b - 1, L - 1, M, 1,
            [&](const std::vector<std::int64_t>& N, const std::vector<std::int64_t>&,
                std::int64_t) {
                std::vector<std::int64_t> np = n_from_N(nu, N);
                np += lower_shift;
                for (int i = 1; i <= b - 1; ++i) {
                    companion += reindexed_summand(nu, s, b, L, M, i, np);
                }
            });
        checker.check(point + " (companion expansion)",
                      big_f(nu, s, b - 1, L - 1, M) - big_f(nu, s, b, L - 2, M), companion);
    }

    // The assembled two-step recurrence.
    checker.check(point + " (assembled recurrence)", big_f(nu, s, b, L, M),
                  big_f(nu, s, b - 1, L - 1, M) + big_f(nu, s, b + (b == nu ? 0 : 1), L - 1, M) +
                      (LaurentPoly::monomial(1, L - M - 1) - LaurentPoly(1)) *
                          big_f(nu, s, b, L - 2, M));
    return checker.finish();
}

VerificationReport verify_q_pascal(std::int64_t n_max, std::int64_t m_max) {
    detail::GridChecker checker("eq-A.5", "0<=n<=" + std::to_string(n_max) +
                                              "; 0<=m<=" + std::to_string(m_max));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t m = 0; m <= m_max; ++m) {
            checker.check("n=" + std::to_string(n) + ",m=" + std::to_string(m), q_binomial(n, m),
                          q_binomial(n, m - 1) + q_binomial(n - 1, m).shifted(m));
        }
    }
    return checker.finish();
}

std::vector<VerificationReport> verify_appendix(const std::vector<int>& nus, std::int64_t L_max,
                                                const std::vector<std::int64_t>& M_values) {
    std::vector<VerificationReport> reports;
    reports.push_back(verify_q_pascal(20, 20));
    for (int nu : nus) {
        std::string m_list;
        for (std::int64_t M : M_values) m_list += (m_list.empty() ? "" : ",") + std::to_string(M);
        detail::GridChecker checker("eq-A.6/A.14",
                                    "nu=" + std::to_string(nu) + "; 2<=L<=" + std::to_string(L_max) +
                                        "; 0<=s<=nu; 1<=b<=nu; M in {" + m_list + "}");
        for (std::int64_t M : M_values) {
            for (int s = 0; s <= nu; ++s) {
                for (int b = 1; b <= nu; ++b) {
                    for (std::int64_t L = 2; L <= L_max; ++L) {
                        VerificationReport point = telescoping_audit(nu, s, b, L, M);
                        for (const Counterexample& cx : point.counterexamples) {
                            checker.fail(cx.params, cx.lhs, cx.rhs);
                        }
                    }
                }
            }
        }
        reports.push_back(checker.finish());
    }
    return reports;
}

}  // namespace qgordon
