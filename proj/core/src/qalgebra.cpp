#include "qgordon/qalgebra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qgordon {

LaurentPoly invert_variable(const LaurentPoly& p) {
    return p.substitute_q_inverse();
}

RationalQ invert_variable(const RationalQ& r) {
    return r.substitute_q_inverse();
}

mpz_class eval_at_one(const LaurentPoly& p) {
    return p.eval_at_one();
}

LaurentPoly q_pochhammer(std::int64_t a, std::int64_t t) {
    if (t < 0) throw std::domain_error("q_pochhammer: negative length");
    LaurentPoly prod(1);
    for (std::int64_t j = 0; j < t; ++j) {
        prod *= LaurentPoly(1) - LaurentPoly::monomial(1, a + j);
    }
    return prod;
}

namespace {

// Exact quotient p / (1 - q^j), j >= 1. From (1 - q^j) * Q = P we get
// Q_i = P_i + Q_{i-j}, ascending in i; the top j coefficients must come out
// zero or P was not divisible.
LaurentPoly exact_div_one_minus_qj(const LaurentPoly& p, std::int64_t j) {
    if (p.is_zero()) return p;
    const std::int64_t lo = p.min_exponent();
    const std::int64_t hi = p.degree();
    std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : p.terms()) dense[static_cast<std::size_t>(e - lo)] = c;
    std::vector<mpz_class> quot(dense.size());
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(dense.size()); ++i) {
        quot[static_cast<std::size_t>(i)] = dense[static_cast<std::size_t>(i)];
        if (i - j >= 0) quot[static_cast<std::size_t>(i)] += quot[static_cast<std::size_t>(i - j)];
    }
    // Quotient degree is deg(P) - j; anything above must have telescoped away.
    for (std::int64_t i = static_cast<std::int64_t>(dense.size()) - j;
         i < static_cast<std::int64_t>(dense.size()); ++i) {
        if (i >= 0 && quot[static_cast<std::size_t>(i)] != 0) {
            throw std::logic_error("exact_div_one_minus_qj: nonzero remainder");
        }
    }
    std::vector<std::pair<std::int64_t, mpz_class>> terms;
    for (std::int64_t i = 0; i + j <= static_cast<std::int64_t>(dense.size()) - 1; ++i) {
        if (quot[static_cast<std::size_t>(i)] != 0) {
            terms.emplace_back(lo + i, quot[static_cast<std::size_t>(i)]);
        }
    }
    return LaurentPoly::from_terms(terms);
}

// [n+m choose n] for n, m >= 0 via the exact ratio recurrence
// B_k = B_{k-1} * (1 - q^{n+k}) / (1 - q^k); every intermediate is itself a
// Gaussian binomial, so each division is exact.
LaurentPoly gaussian_nonneg(std::int64_t n, std::int64_t m) {
    if (m > n) std::swap(n, m);  // symmetry keeps the loop short
    LaurentPoly acc(1);
    for (std::int64_t k = 1; k <= m; ++k) {
        acc *= LaurentPoly(1) - LaurentPoly::monomial(1, n + k);
        acc = exact_div_one_minus_qj(acc, k);
    }
    return acc;
}

// Gaussian binomials recur across every multisum cell; memoize.
const LaurentPoly& gaussian_cached(std::int64_t n, std::int64_t m) {
    static std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> cache;
    static std::mutex mutex;
    if (m > n) std::swap(n, m);
    std::scoped_lock lock(mutex);
    auto it = cache.find({n, m});
    if (it == cache.end()) {
        it = cache.emplace(std::make_pair(n, m), gaussian_nonneg(n, m)).first;
    }
    return it->second;
}

}  // namespace

LaurentPoly q_binomial(std::int64_t n, std::int64_t m) {
    if (n <= -2) throw std::domain_error("q_binomial: n <= -2 is outside the supported domain");
    if (m < 0) return LaurentPoly();
    if (n == -1) return m == 0 ? LaurentPoly(1) : LaurentPoly();
    if (n == 0 || m == 0) return LaurentPoly(1);
    return gaussian_cached(n, m);
}

LaurentPoly q_binomial_tb(std::int64_t top, std::int64_t bottom) {
    const std::int64_t m = top - bottom;
    if (m < 0) return LaurentPoly();
    if (m == 0) return LaurentPoly(1);  // empty products for any bottom
    if (bottom >= -1) return q_binomial(bottom, m);
    if (bottom >= -m) return LaurentPoly();  // numerator carries a (1 - q^0) factor
    throw std::domain_error("q_binomial_tb: non-polynomial corner (bottom < -(top-bottom))");
}

TruncatedLaurentSeries series_inverse_product(std::int64_t modulus,
                                              const std::set<std::int64_t>& residues,
                                              std::int64_t cutoff) {
    if (modulus < 1) throw std::invalid_argument("series_inverse_product: modulus must be positive");
    if (residues.empty()) throw std::invalid_argument("series_inverse_product: empty residue set");
    for (std::int64_t r : residues) {
        if (r < 1 || r >= modulus) {
            throw std::invalid_argument("series_inverse_product: residue outside {1..modulus-1}");
        }
    }
    if (cutoff < 1) throw std::invalid_argument("series_inverse_product: cutoff must be >= 1");
    TruncatedLaurentSeries acc = TruncatedLaurentSeries::one(cutoff);
    for (std::int64_t n = 1; n < cutoff; ++n) {
        if (residues.count(n % modulus)) {
            acc = acc * TruncatedLaurentSeries::geometric(n, cutoff);
        }
    }
    return acc;
}

TruncatedLaurentSeries inverse_pochhammer_all(std::int64_t cutoff) {
    if (cutoff < 1) throw std::invalid_argument("inverse_pochhammer_all: cutoff must be >= 1");
    TruncatedLaurentSeries acc = TruncatedLaurentSeries::one(cutoff);
    for (std::int64_t n = 1; n < cutoff; ++n) {
        acc = acc * TruncatedLaurentSeries::geometric(n, cutoff);
    }
    return acc;
}

std::vector<TruncatedLaurentSeries> inverse_pochhammer_tower(std::int64_t t_max,
                                                             std::int64_t cutoff) {
    std::vector<TruncatedLaurentSeries> tower;
    tower.reserve(static_cast<std::size_t>(t_max + 1));
    tower.push_back(TruncatedLaurentSeries::one(cutoff));
    for (std::int64_t t = 1; t <= t_max; ++t) {
        tower.push_back(tower.back() * TruncatedLaurentSeries::geometric(t, cutoff));
    }
    return tower;
}

}  // namespace qgordon
