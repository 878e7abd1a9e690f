#include "qgordon/laurent_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qgordon {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly::LaurentPoly(mpz_class constant) {
    if (constant != 0) terms_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(mpz_class coeff, std::int64_t exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

LaurentPoly LaurentPoly::q() {
    return monomial(1, 1);
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<std::int64_t, mpz_class>>& terms) {
    LaurentPoly p;
    for (const auto& [exp, coeff] : terms) p.add_term(exp, coeff);
    return p;
}

std::int64_t LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

mpz_class LaurentPoly::coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t exp, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [exp, coeff] : rhs.terms_) add_term(exp, coeff);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [exp, coeff] : rhs.terms_) add_term(exp, -coeff);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [exp, coeff] : terms_) p.terms_[exp] = -coeff;
    return p;
}

LaurentPoly mul_sparse(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    mpz_class prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            prod = ca * cb;
            p.add_term(ea + eb, prod);
        }
    }
    return p;
}

// Dense convolution over the exponent span; pays off once both operands carry
// many terms (Gaussian binomials and series windows are nearly dense).
LaurentPoly mul_dense(const LaurentPoly& a, const LaurentPoly& b) {
    const std::int64_t amin = a.min_exponent(), bmin = b.min_exponent();
    const std::int64_t alen = a.degree() - amin + 1, blen = b.degree() - bmin + 1;
    std::vector<mpz_class> da(static_cast<std::size_t>(alen)), db(static_cast<std::size_t>(blen));
    for (const auto& [exp, coeff] : a.terms()) da[static_cast<std::size_t>(exp - amin)] = coeff;
    for (const auto& [exp, coeff] : b.terms()) db[static_cast<std::size_t>(exp - bmin)] = coeff;
    std::vector<mpz_class> out(static_cast<std::size_t>(alen + blen - 1));
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (da[i] == 0) continue;
        for (std::size_t j = 0; j < db.size(); ++j) {
            if (db[j] == 0) continue;
            out[i + j] += da[i] * db[j];
        }
    }
    LaurentPoly p;
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k] != 0) p.terms_[amin + bmin + static_cast<std::int64_t>(k)] = std::move(out[k]);
    }
    return p;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return LaurentPoly();
    // Dense wins when the term-pair count is large and spans are tight.
    const std::size_t pairs = lhs.term_count() * rhs.term_count();
    if (pairs >= 1024) {
        const std::int64_t span_a = lhs.degree() - lhs.min_exponent() + 1;
        const std::int64_t span_b = rhs.degree() - rhs.min_exponent() + 1;
        if (span_a <= 4 * static_cast<std::int64_t>(lhs.term_count()) &&
            span_b <= 4 * static_cast<std::int64_t>(rhs.term_count())) {
            return mul_dense(lhs, rhs);
        }
    }
    return mul_sparse(lhs, rhs);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::shifted(std::int64_t exp) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[e + exp] = c;
    return p;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& coeff) const {
    LaurentPoly p;
    if (coeff == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_[e] = c * coeff;
    return p;
}

LaurentPoly LaurentPoly::substitute_q_inverse() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[-e] = c;
    return p;
}

mpz_class LaurentPoly::eval_at_one() const {
    mpz_class sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, coeff] : terms_) {
        const bool negative = coeff < 0;
        mpz_class mag = negative ? mpz_class(-coeff) : coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (exp == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "q";
            if (exp != 1) out << "^" << exp;
        }
    }
    return out.str();
}

std::vector<std::pair<std::int64_t, std::string>> LaurentPoly::term_list() const {
    std::vector<std::pair<std::int64_t, std::string>> list;
    list.reserve(terms_.size());
    for (const auto& [exp, coeff] : terms_) list.emplace_back(exp, coeff.get_str());
    return list;
}

}  // namespace qgordon
