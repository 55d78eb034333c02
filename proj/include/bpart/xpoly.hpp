#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "bpart/bigint.hpp"

namespace bpart {

/// Polynomial in the weight marker x over arbitrary-precision integers.
/// Kept canonical: no trailing zero coefficients, and the zero polynomial
/// stores an empty coefficient vector, so equality is structural.
class XPoly {
public:
    XPoly() = default;
    XPoly(long long constant);
    explicit XPoly(BigInt constant);
    /// Coefficients by ascending x-degree, e.g. {1, 2, 1} is 1 + 2x + x^2.
    XPoly(std::initializer_list<long long> ascending_coeffs);

    static XPoly x_power(int degree, BigInt coeff = BigInt(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^i; zero outside the stored range.
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Evaluation at x = 1, i.e. the sum of all coefficients.
    BigInt at_one() const;

    XPoly& operator+=(const XPoly& other);
    XPoly& operator-=(const XPoly& other);
    XPoly operator-() const;
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    bool operator==(const XPoly&) const = default;

    /// Compact rendering with ascending powers of x: "6+3x", "1+2x+x^2".
    std::string str() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_; // coeffs_[i] holds the coefficient of x^i
};

} // namespace bpart
