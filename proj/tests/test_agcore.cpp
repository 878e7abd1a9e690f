#include <doctest.h>

#include "oracles.hpp"
#include "qgordon/agcore.hpp"
#include "qgordon/qalgebra.hpp"
#include "qgordon/rrpoly.hpp"

using namespace qgordon;

TEST_CASE("initial condition: the multisum at L = 0 is a delta") {
    for (int nu = 1; nu <= 3; ++nu) {
        for (int s = 0; s <= nu; ++s) {
            for (int b = 0; b <= nu; ++b) {
                CAPTURE(nu);
                CAPTURE(s);
                CAPTURE(b);
                CHECK(f_tilde(nu, s, b, 0) == LaurentPoly(s == b ? 1 : 0));
            }
        }
    }
}

TEST_CASE("nu = 1 recovers the classical families") {
    for (std::int64_t L = 0; L <= 12; ++L) {
        CAPTURE(L);
        CHECK(f_tilde(1, 1, 1, L) == rr_fermionic(RRKind::E, L));
        CHECK(f_tilde(1, 0, 1, L) == rr_fermionic(RRKind::D, L));
        CHECK(f_tilde(1, 0, 0, L) == rr_fermionic(RRKind::D, L - 1));
        CHECK(f_tilde(1, 1, 0, L) == rr_fermionic(RRKind::E, L - 1));
    }
    for (std::int64_t M = 0; M <= 12; ++M) {
        for (std::int64_t L = M; L <= 12; ++L) {
            CHECK(big_f(1, 1, 1, L, M) == f_shifted(0, 0, L, M));
        }
    }
}

TEST_CASE("multisum equals the unpruned raw-loop oracle") {
    for (int nu = 1; nu <= 2; ++nu) {
        for (int s = 0; s <= nu; ++s) {
            for (int b = 0; b <= nu; ++b) {
                for (std::int64_t L = 0; L <= 6; ++L) {
                    CAPTURE(nu);
                    CAPTURE(s);
                    CAPTURE(b);
                    CAPTURE(L);
                    CHECK(f_tilde(nu, s, b, L) == oracles::naive_multisum(nu, s, b, L, 0));
                    CHECK(big_f(nu, s, b, L, 2) == oracles::naive_multisum(nu, s, b, L, 2));
                }
            }
        }
    }
    // one deeper spot check
    CHECK(f_tilde(3, 1, 2, 5) == oracles::naive_multisum(3, 1, 2, 5, 0));
}

TEST_CASE("index vector structure") {
    for (const auto& v : ag_index_vectors(2, 0, 1, 6, 3)) {
        REQUIRE(v.n.size() == 2);
        CHECK(v.N[1] == v.n[1]);
        CHECK(v.N[0] == v.n[0] + v.n[1]);
        CHECK(v.n[0] >= 0);
        CHECK(v.n[1] >= -1);
        CHECK(v.m[0] == 6 - 2 * v.N[0] - 1);               // i=1 > s=0, i=1 <= b=1
        CHECK(v.m[1] == 6 - 2 * (v.N[0] + v.N[1]) - 2 - 1);  // both characteristic terms fire
        CHECK(v.phi == v.N[0] * v.N[0] + v.N[1] * v.N[1] + v.N[0] + v.N[1] - 3 * v.N[0]);
    }
    // the n_nu = -1 branch is gated away when s or b equals nu
    for (const auto& v : ag_index_vectors(2, 2, 0, 6, 0)) CHECK(v.n[1] >= 0);
    CHECK_THROWS_AS(f_tilde(1, 2, 0, 4), std::domain_error);
    CHECK_THROWS_AS(f_tilde(1, 0, 0, -1), std::domain_error);
}

TEST_CASE("bosonic sum values and parity domain") {
    CHECK(b_bosonic(1, 1, 1, 0) == LaurentPoly(1));
    CHECK(b_bosonic(1, 2, 2, 2) == rr_fermionic(RRKind::E, 2));
    CHECK_THROWS_AS(b_bosonic(1, 1, 2, 2), std::domain_error);
    CHECK_THROWS_AS(b_bosonic(1, 0, 1, 1), std::domain_error);
    CHECK_THROWS_AS(b_bosonic(1, 5, 1, 0), std::domain_error);
    CHECK_THROWS_AS(b_bosonic(2, 1, 4, 1), std::domain_error);
}

TEST_CASE("polynomial identity between the fermionic and bosonic forms") {
    CHECK(verify_ag_polynomial(1, 12).pass);
    CHECK(verify_ag_polynomial(2, 8).pass);
}

TEST_CASE("recurrences") {
    for (const auto& r : verify_recurrences(1, 10, {0, 1, 3})) {
        CAPTURE(r.identity_id);
        CHECK(r.pass);
    }
    for (const auto& r : verify_recurrences(2, 8, {0, 1, 3})) {
        CAPTURE(r.identity_id);
        CHECK(r.pass);
    }
}

TEST_CASE("connection coefficients") {
    const auto A0 = connection_coefficients(2, 0);
    for (int s = 0; s <= 2; ++s) {
        for (int sp = 0; sp <= 2; ++sp) {
            CHECK(A0[static_cast<std::size_t>(s)][static_cast<std::size_t>(sp)] ==
                  LaurentPoly(s == sp ? 1 : 0));
        }
    }
    const auto A = connection_coefficients(1, 2);
    CHECK(A[1][1] == invert_variable(rr_fermionic(RRKind::E, 2)));
    CHECK(A[1][0] == invert_variable(rr_fermionic(RRKind::D, 2)));
    for (const auto& r : verify_connection_laws(2, 6)) {
        CAPTURE(r.identity_id);
        CHECK(r.pass);
    }
}

TEST_CASE("boundary/inversion symmetry chain up to nu = 3") {
    for (int nu = 1; nu <= 3; ++nu) {
        for (std::int64_t L = 0; L <= 8; ++L) {
            for (int s = 0; s <= nu; ++s) {
                for (int b = 0; b <= nu; ++b) {
                    CAPTURE(nu);
                    CAPTURE(L);
                    CHECK(big_f(nu, s, b, L, L) == invert_variable(f_tilde(nu, b, s, L)));
                }
            }
        }
    }
}

TEST_CASE("main theorem, and its nu = 1 slice against the classical identity") {
    const auto reports = verify_main_theorem(1, 12);
    for (const auto& r : reports) {
        CAPTURE(r.identity_id);
        CHECK(r.pass);
    }
    // the nu=1, s=b=1 slice is literally the classical two-piece identity
    for (std::int64_t L = 0; L <= 10; ++L) {
        for (std::int64_t M = 0; M <= L; ++M) {
            const LaurentPoly rhs =
                invert_variable(rr_fermionic(RRKind::E, M)) * rr_fermionic(RRKind::E, L - M) +
                invert_variable(rr_fermionic(RRKind::D, M)) * rr_fermionic(RRKind::D, L - M);
            CHECK(big_f(1, 1, 1, L, M) == rhs);
        }
    }
    for (const auto& r : verify_main_theorem(2, 7)) {
        CAPTURE(r.identity_id);
        CHECK(r.pass);
    }
}

TEST_CASE("telescoping audit points") {
    CHECK(telescoping_audit(2, 0, 1, 6, 0).pass);  // b=1: empty right side
    CHECK(telescoping_audit(2, 1, 2, 8, 2).pass);
    CHECK(telescoping_audit(3, 2, 3, 8, 0).pass);
    CHECK(telescoping_audit(1, 0, 1, 9, 4).pass);
    CHECK_THROWS_AS(telescoping_audit(2, 0, 0, 6, 0), std::domain_error);
    CHECK_THROWS_AS(telescoping_audit(2, 0, 1, 1, 0), std::domain_error);
}

TEST_CASE("q-pascal rule") {
    CHECK(verify_q_pascal(12, 12).pass);
}

TEST_CASE("negative exponents of the shifted multisum stay above the crude bound") {
    for (int nu = 1; nu <= 2; ++nu) {
        for (int s = 0; s <= nu; ++s) {
            for (int b = 0; b <= nu; ++b) {
                for (std::int64_t L = 0; L <= 8; ++L) {
                    for (std::int64_t M = 0; M <= L; ++M) {
                        const LaurentPoly f = big_f(nu, s, b, L, M);
                        if (f.is_zero()) continue;
                        CHECK(f.min_exponent() >= -(M * M / 4) * nu);
                        if (M == 0) CHECK(f.min_exponent() >= 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("coefficients of the plain multisum are nonnegative") {
    for (int nu = 1; nu <= 2; ++nu) {
        for (int s = 0; s <= nu; ++s) {
            for (int b = 0; b <= nu; ++b) {
                for (std::int64_t L = 0; L <= 8; ++L) {
                    const LaurentPoly f = f_tilde(nu, s, b, L);
                    for (const auto& [e, c] : f.terms()) {
                        CHECK(e >= 0);
                        CHECK(c > 0);
                    }
                }
            }
        }
    }
}
