#pragma once

#include <cstdint>
#include <vector>

#include "qgordon/laurent_poly.hpp"
#include "qgordon/report.hpp"

namespace qgordon {

/// One admissible index vector of the Andrews-Gordon multisums: the summation
/// vector n with its partial sums N_i = n_i + ... + n_nu, the derived
/// binomial entries m_i, and the exponent phi = sum N_i^2 + N_{s+1} + ... +
/// N_nu - M*N_1.
struct AGIndexVector {
    std::vector<std::int64_t> n;
    std::vector<std::int64_t> N;
    std::vector<std::int64_t> m;
    std::int64_t phi = 0;
};

/// All index vectors with nonzero weight for the given parameters, in
/// decreasing-N lexicographic order. n_i >= 0 for i < nu; n_nu = -1 is
/// admitted only when s != nu and b != nu (and then only m_nu = 0
/// contributes).
std::vector<AGIndexVector> ag_index_vectors(int nu, int s, int b, std::int64_t L, std::int64_t M);

/// The polynomial multisum with exponent sum N_i^2 + N_{s+1} + ... + N_nu and
/// binomial product prod_i [n_i + m_i choose n_i]. 0 <= s,b <= nu, L >= 0.
LaurentPoly f_tilde(int nu, int s, int b, std::int64_t L);

/// Same multisum with the extra -M*N_1 in the exponent. The support is that
/// of f_tilde; big_f(nu,s,b,L,0) = f_tilde(nu,s,b,L).
LaurentPoly big_f(int nu, int s, int b, std::int64_t L, std::int64_t M);

/// The alternating bosonic sum with modulus 2*nu+3; S and B are the 1-based
/// indices, 1 <= S <= 2*nu+2, 1 <= B <= nu+1. Requires L >= 0 and
/// L = S + B (mod 2) (otherwise the binomial entries are non-integral).
LaurentPoly b_bosonic(int nu, std::int64_t S, std::int64_t B, std::int64_t L);

/// Fermionic = bosonic polynomial identity, branch selected by the parity of
/// L - s - b, for 0 <= s,b <= nu and 0 <= L <= L_max.
VerificationReport verify_ag_polynomial(int nu, std::int64_t L_max);

/// The shifted recurrences: the M = 0 instance and each requested M.
std::vector<VerificationReport> verify_recurrences(int nu, std::int64_t L_max,
                                                   const std::vector<std::int64_t>& M_values);

/// Connection-coefficient matrix A[s][s'] = big_f(nu,s,s',M,M). Throws
/// std::logic_error if the dual route (inverted f_tilde) disagrees.
std::vector<std::vector<LaurentPoly>> connection_coefficients(int nu, std::int64_t M);

/// A(0) = identity and the two computation routes for A(M), M <= M_max.
std::vector<VerificationReport> verify_connection_laws(int nu, std::int64_t M_max);

/// The multisum expansion over the shifted/unshifted basis, plus the same
/// statement with the bosonic substitution split by parity.
std::vector<VerificationReport> verify_main_theorem(int nu, std::int64_t L_max);

/// Telescoping expansion audit at one parameter point (1 <= b <= nu,
/// 0 <= s <= nu, L >= 2): the difference identity, its reindexed form, the
/// companion expansion, and the assembled two-step recurrence.
VerificationReport telescoping_audit(int nu, int s, int b, std::int64_t L, std::int64_t M);

/// q-Pascal rule over 0 <= n <= n_max, 0 <= m <= m_max.
VerificationReport verify_q_pascal(std::int64_t n_max, std::int64_t m_max);

/// q-Pascal plus the telescoping audit over a grid of nu, L <= L_max, all
/// admissible (s, b), and the given M values.
std::vector<VerificationReport> verify_appendix(const std::vector<int>& nus, std::int64_t L_max,
                                                const std::vector<std::int64_t>& M_values);

}  // namespace qgordon
