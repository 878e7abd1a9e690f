#include "qgordon/truncated_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgordon {

TruncatedLaurentSeries::TruncatedLaurentSeries(std::int64_t min_exponent, std::int64_t cutoff)
    : min_exponent_(min_exponent), cutoff_(cutoff) {
    if (cutoff_ < min_exponent_) {
        throw std::invalid_argument("series window is empty: cutoff < min_exponent");
    }
    coeffs_.resize(static_cast<std::size_t>(cutoff_ - min_exponent_));
}

TruncatedLaurentSeries TruncatedLaurentSeries::from_poly(const LaurentPoly& p, std::int64_t cutoff) {
    const std::int64_t lo = p.is_zero() ? std::min<std::int64_t>(0, cutoff) : std::min(p.min_exponent(), cutoff);
    TruncatedLaurentSeries s(lo, cutoff);
    for (const auto& [exp, coeff] : p.terms()) {
        if (exp < cutoff) s.at(exp) = coeff;
    }
    return s;
}

TruncatedLaurentSeries TruncatedLaurentSeries::one(std::int64_t cutoff) {
    return from_poly(LaurentPoly(1), cutoff);
}

TruncatedLaurentSeries TruncatedLaurentSeries::geometric(std::int64_t n, std::int64_t cutoff) {
    if (n < 1) throw std::domain_error("geometric series requires n >= 1");
    TruncatedLaurentSeries s(0, cutoff);
    for (std::int64_t e = 0; e < cutoff; e += n) s.at(e) = 1;
    return s;
}

mpz_class TruncatedLaurentSeries::coeff(std::int64_t exp) const {
    if (exp < min_exponent_) return 0;
    if (exp >= cutoff_) throw std::domain_error("coefficient beyond series cutoff");
    return at(exp);
}

TruncatedLaurentSeries TruncatedLaurentSeries::operator+(const TruncatedLaurentSeries& rhs) const {
    TruncatedLaurentSeries out(std::min(min_exponent_, rhs.min_exponent_),
                               std::min(cutoff_, rhs.cutoff_));
    for (std::int64_t e = out.min_exponent_; e < out.cutoff_; ++e) {
        out.at(e) = (e >= min_exponent_ ? at(e) : mpz_class(0)) +
                    (e >= rhs.min_exponent_ ? rhs.at(e) : mpz_class(0));
    }
    return out;
}

TruncatedLaurentSeries TruncatedLaurentSeries::operator-(const TruncatedLaurentSeries& rhs) const {
    return *this + (-rhs);
}

TruncatedLaurentSeries TruncatedLaurentSeries::operator-() const {
    TruncatedLaurentSeries out(min_exponent_, cutoff_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

TruncatedLaurentSeries TruncatedLaurentSeries::operator*(const TruncatedLaurentSeries& rhs) const {
    const std::int64_t lo = min_exponent_ + rhs.min_exponent_;
    const std::int64_t hi = std::min(cutoff_ + rhs.min_exponent_, rhs.cutoff_ + min_exponent_);
    TruncatedLaurentSeries out(lo, std::max(lo, hi));
    for (std::int64_t i = min_exponent_; i < cutoff_; ++i) {
        if (at(i) == 0) continue;
        const std::int64_t jmax = std::min(rhs.cutoff_, out.cutoff_ - i);
        for (std::int64_t j = rhs.min_exponent_; j < jmax; ++j) {
            if (rhs.at(j) == 0) continue;
            out.at(i + j) += at(i) * rhs.at(j);
        }
    }
    return out;
}

TruncatedLaurentSeries TruncatedLaurentSeries::operator*(const LaurentPoly& p) const {
    if (p.is_zero()) return TruncatedLaurentSeries(min_exponent_, cutoff_);
    const std::int64_t pmin = p.min_exponent();
    TruncatedLaurentSeries out(min_exponent_ + pmin, cutoff_ + pmin);
    for (const auto& [pe, pc] : p.terms()) {
        for (std::int64_t e = min_exponent_; e < cutoff_ && e + pe < out.cutoff_; ++e) {
            if (at(e) == 0) continue;
            out.at(e + pe) += at(e) * pc;
        }
    }
    return out;
}

void TruncatedLaurentSeries::accumulate(const TruncatedLaurentSeries& rhs) {
    if (rhs.cutoff_ < cutoff_ || rhs.min_exponent_ < min_exponent_) {
        throw std::invalid_argument("accumulate: rhs window does not cover accumulator window");
    }
    for (std::int64_t e = std::max(min_exponent_, rhs.min_exponent_); e < cutoff_; ++e) {
        at(e) += rhs.at(e);
    }
}

LaurentPoly TruncatedLaurentSeries::window_poly() const {
    std::vector<std::pair<std::int64_t, mpz_class>> terms;
    for (std::int64_t e = min_exponent_; e < cutoff_; ++e) {
        if (at(e) != 0) terms.emplace_back(e, at(e));
    }
    return LaurentPoly::from_terms(terms);
}

WindowAgreement agree_on_overlap(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    WindowAgreement w;
    w.lo = std::min(a.min_exponent(), b.min_exponent());
    w.hi = std::min(a.cutoff(), b.cutoff());
    for (std::int64_t e = w.lo; e < w.hi; ++e) {
        const mpz_class ca = e >= a.min_exponent() ? a.coeff(e) : mpz_class(0);
        const mpz_class cb = e >= b.min_exponent() ? b.coeff(e) : mpz_class(0);
        if (ca != cb) {
            w.equal = false;
            w.first_mismatch = e;
            return w;
        }
    }
    return w;
}

std::optional<std::int64_t> first_disagreement(const LaurentPoly& p,
                                               const TruncatedLaurentSeries& s) {
    for (std::int64_t e = std::min<std::int64_t>(0, s.min_exponent()); e < s.cutoff(); ++e) {
        const mpz_class cs = e >= s.min_exponent() ? s.coeff(e) : mpz_class(0);
        if (p.coeff(e) != cs) return e;
    }
    return std::nullopt;
}

}  // namespace qgordon
