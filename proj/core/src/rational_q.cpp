#include "qgordon/rational_q.hpp"

#include <stdexcept>

namespace qgordon {

RationalQ::RationalQ(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("RationalQ: zero denominator");
}

RationalQ RationalQ::operator+(const RationalQ& rhs) const {
    return RationalQ(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalQ RationalQ::operator-(const RationalQ& rhs) const {
    return RationalQ(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalQ RationalQ::operator*(const RationalQ& rhs) const {
    return RationalQ(num_ * rhs.num_, den_ * rhs.den_);
}

RationalQ RationalQ::operator-() const {
    return RationalQ(-num_, den_);
}

RationalQ RationalQ::substitute_q_inverse() const {
    return RationalQ(num_.substitute_q_inverse(), den_.substitute_q_inverse());
}

bool RationalQ::operator==(const RationalQ& rhs) const {
    return num_ * rhs.den_ == rhs.num_ * den_;
}

std::string RationalQ::to_string() const {
    if (den_ == LaurentPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace qgordon
