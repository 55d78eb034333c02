#pragma once

#include <string>
#include <vector>

#include "bpart/xpoly.hpp"

namespace bpart {

/// Formal power series in q truncated at a fixed order N: every term q^k
/// with k > N is discarded. Coefficients are XPoly values so weighted
/// counts can ride along; plain counting series just carry constants.
///
/// Arithmetic between two series requires equal orders. Mismatched orders
/// are never aligned silently; call truncated() first.
class QSeries {
public:
    explicit QSeries(int order);
    static QSeries one(int order);
    /// c * q^q_degree, truncated (the zero series when q_degree > order).
    static QSeries monomial(int order, int q_degree, const XPoly& c);

    int order() const { return order_; }
    /// Coefficient of q^k for 0 <= k <= order; out of range is a contract
    /// violation.
    const XPoly& coeff(int k) const;
    bool is_zero() const;

    /// Explicit re-truncation to a lower (or equal) order.
    QSeries truncated(int new_order) const;
    /// Multiplication by q^q_shift, q_shift >= 0.
    QSeries shifted(int q_shift) const;
    /// Multiplication by a single XPoly factor.
    QSeries scaled(const XPoly& c) const;
    /// Every coefficient evaluated at x = 1.
    QSeries at_x_one() const;
    /// Sum of all q-coefficients, i.e. evaluation at q = 1. Exact only
    /// when the order covers the full support.
    XPoly q_coefficient_sum() const;

    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    bool operator==(const QSeries&) const = default;

    /// Canonical monomial expansion, ascending in q then x:
    /// "x^2*q^23 + x^2*q^25", "1 + q^2 - 2*q^4", "0".
    std::string str() const;

private:
    int order_ = 0;
    std::vector<XPoly> coeffs_; // size order_ + 1, indexed by q-degree
};

/// (q^2; q^2)_d = (1 - q^2)(1 - q^4)...(1 - q^{2d}), truncated. d = 0 is
/// the empty product 1.
QSeries q_pochhammer_even(int d, int order);

/// 1 / (q^2; q^2)_d as a truncated series. The coefficient of q^{2k}
/// counts partitions of 2k into even parts of size at most 2d; odd
/// degrees are zero. Multiplying by q_pochhammer_even(d, order) recovers
/// the constant series 1 exactly.
QSeries inv_q_pochhammer_even(int d, int order);

/// Gaussian polynomial [upper; lower] in the variable q^base_exponent,
/// truncated. Zero when lower < 0 or lower > upper. Computed by the
/// Pascal-type recurrence [A;B] = [A-1;B-1] + Q^B [A-1;B], so every
/// intermediate object is a polynomial and no division is performed.
QSeries q_binomial(int upper, int lower, int base_exponent, int order);

} // namespace bpart
