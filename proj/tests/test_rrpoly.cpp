#include <doctest.h>

#include "oracles.hpp"
#include "qgordon/qalgebra.hpp"
#include "qgordon/rrpoly.hpp"

using namespace qgordon;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    std::vector<std::pair<std::int64_t, mpz_class>> t;
    for (const auto& [e, c] : terms) t.emplace_back(e, c);
    return LaurentPoly::from_terms(t);
}

}  // namespace

TEST_CASE("initial conditions and small members") {
    CHECK(rr_fermionic(RRKind::E, 0) == LaurentPoly(1));
    CHECK(rr_fermionic(RRKind::E, 1) == LaurentPoly(1));
    CHECK(rr_fermionic(RRKind::D, 0).is_zero());
    CHECK(rr_fermionic(RRKind::D, 1) == LaurentPoly(1));
    CHECK(rr_fermionic(RRKind::E, 4) == poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}));
    CHECK(rr_fermionic(RRKind::D, 3) == poly({{0, 1}, {2, 1}}));
}

TEST_CASE("negative indices via the backward extension") {
    CHECK(rr_fermionic(RRKind::E, -1).is_zero());
    CHECK(rr_fermionic(RRKind::D, -1) == LaurentPoly(1));
    CHECK(rr_fermionic(RRKind::D, -2) == poly({{1, -1}}));
    // backward recurrence route agrees
    for (std::int64_t L = -10; L <= 0; ++L) {
        for (RRKind kind : {RRKind::E, RRKind::D}) {
            CAPTURE(L);
            CHECK(rr_fermionic(kind, L) == rr_by_recurrence(kind, L));
        }
    }
}

TEST_CASE("three representations agree for 0 <= L <= 30") {
    for (std::int64_t L = 0; L <= 30; ++L) {
        for (RRKind kind : {RRKind::E, RRKind::D}) {
            CAPTURE(L);
            const LaurentPoly f = rr_fermionic(kind, L);
            CHECK(f == rr_bosonic(kind, L));
            CHECK(f == rr_by_recurrence(kind, L));
        }
    }
    CHECK_THROWS_AS(rr_bosonic(RRKind::E, -1), std::domain_error);
}

TEST_CASE("two-step recurrence across the negative extension") {
    for (RRKind kind : {RRKind::E, RRKind::D}) {
        for (std::int64_t L = -8; L <= 30; ++L) {
            CAPTURE(L);
            CHECK(rr_fermionic(kind, L) ==
                  rr_fermionic(kind, L - 1) + rr_fermionic(kind, L - 2).shifted(L - 1));
        }
    }
}

TEST_CASE("f_shifted specializations and frozen value") {
    CHECK(f_shifted(0, 0, 4, 0) == rr_fermionic(RRKind::E, 4));
    CHECK(f_shifted(1, 0, 3, 0) == rr_fermionic(RRKind::D, 3));
    // full expansion of f_{0,0}(4,2) and the two-piece identity value
    const LaurentPoly expected = poly({{-1, 1}, {0, 3}, {1, 1}});
    CHECK(f_shifted(0, 0, 4, 2) == expected);
    const LaurentPoly rhs =
        invert_variable(rr_fermionic(RRKind::E, 2)) * rr_fermionic(RRKind::E, 2) +
        invert_variable(rr_fermionic(RRKind::D, 2)) * rr_fermionic(RRKind::D, 2);
    CHECK(rhs == expected);
    CHECK_THROWS_AS(f_shifted(0, 0, -1, 0), std::domain_error);
    CHECK_THROWS_AS(f_shifted(2, 0, 4, 0), std::domain_error);
}

TEST_CASE("f_shifted minimum exponent bound") {
    for (int s = 0; s <= 1; ++s) {
        for (int b = 0; b <= 1; ++b) {
            for (std::int64_t L = 0; L <= 12; ++L) {
                for (std::int64_t M = 0; M <= L; ++M) {
                    const LaurentPoly f = f_shifted(s, b, L, M);
                    if (f.is_zero()) continue;
                    CHECK(f.min_exponent() >= -(M * M) / 4 - M);
                }
            }
        }
    }
}

TEST_CASE("degrees grow monotonically") {
    for (RRKind kind : {RRKind::E, RRKind::D}) {
        std::int64_t prev = -1;
        for (std::int64_t L = 1; L <= 24; ++L) {
            const LaurentPoly p = rr_fermionic(kind, L);
            REQUIRE_FALSE(p.is_zero());
            CHECK(p.degree() >= prev);
            prev = p.degree();
        }
    }
}

TEST_CASE("gis finite identities") {
    const auto reports = verify_gis_finite(12, 6);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CAPTURE(r.identity_id);
        CHECK(r.pass);
    }
}

TEST_CASE("gis boundary: L_max = m_max = 0") {
    const auto reports = verify_gis_finite(0, 0);
    for (const auto& r : reports) CHECK(r.pass);
}

TEST_CASE("splitting identities") {
    CHECK(verify_splitting(7, 3, 0, 0, 0).pass);
    CHECK(verify_splitting(7, 3, 2, 1, 0).pass);
    CHECK(verify_splitting(6, 6, 0, 1, 0).pass);  // L = M boundary collapse, b = 0
    CHECK(verify_splitting_grid(9).pass);
    CHECK_THROWS_AS(verify_splitting(3, 5, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_splitting(5, 2, 4, 0, 0), std::invalid_argument);
}

TEST_CASE("fibonacci specializations") {
    CHECK(fibonacci(5) == 5);
    CHECK(eval_at_one(rr_fermionic(RRKind::E, 4)) == 5);
    for (std::int64_t L = 0; L <= 25; ++L) {
        CHECK(fibonacci(L) == oracles::fib(L));
        CHECK(eval_at_one(rr_fermionic(RRKind::E, L)) == oracles::fib(L + 1));
    }
    CHECK(fibonacci(-3) == 2);  // sign (+1) at M = 3
    const auto reports = fibonacci_checks(20);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        CAPTURE(r.identity_id);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(fibonacci_checks(0), std::invalid_argument);
}
