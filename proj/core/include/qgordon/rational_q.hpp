#pragma once

#include <string>

#include "qgordon/laurent_poly.hpp"

namespace qgordon {

/// Quotient of two Laurent polynomials. No normal form is maintained:
/// equality is decided by cross-multiplication (a/b = c/d iff a*d = c*b),
/// never by cancellation.
class RationalQ {
public:
    RationalQ() : num_(), den_(1) {}
    RationalQ(LaurentPoly numerator) : num_(std::move(numerator)), den_(1) {}
    RationalQ(LaurentPoly numerator, LaurentPoly denominator);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalQ operator+(const RationalQ& rhs) const;
    RationalQ operator-(const RationalQ& rhs) const;
    RationalQ operator*(const RationalQ& rhs) const;
    RationalQ operator-() const;

    RationalQ substitute_q_inverse() const;

    bool operator==(const RationalQ& rhs) const;
    bool operator!=(const RationalQ& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace qgordon
