#include "bpart/qseries.hpp"

#include <stdexcept>
#include <utility>

namespace bpart {

QSeries::QSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("QSeries order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, XPoly());
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.coeffs_[0] = XPoly(1);
    return s;
}

QSeries QSeries::monomial(int order, int q_degree, const XPoly& c) {
    if (q_degree < 0) throw std::invalid_argument("QSeries monomial degree must be nonnegative");
    QSeries s(order);
    if (q_degree <= order) s.coeffs_[static_cast<std::size_t>(q_degree)] = c;
    return s;
}

const XPoly& QSeries::coeff(int k) const {
    if (k < 0 || k > order_) {
        throw std::invalid_argument("QSeries coefficient index " + std::to_string(k) +
                                    " outside [0, " + std::to_string(order_) + "]");
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

bool QSeries::is_zero() const {
    for (const XPoly& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

QSeries QSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order_) {
        throw std::invalid_argument("truncation order must lie in [0, current order]");
    }
    QSeries s(new_order);
    for (int k = 0; k <= new_order; ++k) s.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return s;
}

QSeries QSeries::shifted(int q_shift) const {
    if (q_shift < 0) throw std::invalid_argument("q shift must be nonnegative");
    QSeries s(order_);
    for (int k = 0; k + q_shift <= order_; ++k) {
        s.coeffs_[static_cast<std::size_t>(k + q_shift)] = coeffs_[static_cast<std::size_t>(k)];
    }
    return s;
}

QSeries QSeries::scaled(const XPoly& c) const {
    QSeries s(order_);
    if (c.is_zero()) return s;
    for (int k = 0; k <= order_; ++k) {
        if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) {
            s.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)] * c;
        }
    }
    return s;
}

QSeries QSeries::at_x_one() const {
    QSeries s(order_);
    for (int k = 0; k <= order_; ++k) {
        s.coeffs_[static_cast<std::size_t>(k)] = XPoly(coeffs_[static_cast<std::size_t>(k)].at_one());
    }
    return s;
}

XPoly QSeries::q_coefficient_sum() const {
    XPoly total;
    for (const XPoly& c : coeffs_) total += c;
    return total;
}

namespace {

void require_same_order(const QSeries& a, const QSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("QSeries order mismatch (" + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + "); re-truncate explicitly");
    }
}

} // namespace

QSeries& QSeries::operator+=(const QSeries& other) {
    require_same_order(*this, other);
    for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] += other.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
    require_same_order(*this, other);
    for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] -= other.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    require_same_order(a, b);
    QSeries out(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        const XPoly& ca = a.coeffs_[static_cast<std::size_t>(i)];
        if (ca.is_zero()) continue;
        for (int j = 0; i + j <= a.order_; ++j) {
            const XPoly& cb = b.coeffs_[static_cast<std::size_t>(j)];
            if (cb.is_zero()) continue;
            out.coeffs_[static_cast<std::size_t>(i + j)] += ca * cb;
        }
    }
    return out;
}

std::string QSeries::str() const {
    std::string out;
    for (int b = 0; b <= order_; ++b) {
        const XPoly& p = coeffs_[static_cast<std::size_t>(b)];
        for (int a = 0; a <= p.degree(); ++a) {
            const BigInt c = p.coeff(a);
            if (c == 0) continue;
            const bool negative = c < 0;
            const BigInt magnitude = negative ? BigInt(-c) : c;
            std::string term;
            if (magnitude != 1 || (a == 0 && b == 0)) term = magnitude.str();
            if (a > 0) {
                if (!term.empty()) term += "*";
                term += (a == 1) ? "x" : "x^" + std::to_string(a);
            }
            if (b > 0) {
                if (!term.empty()) term += "*";
                term += (b == 1) ? "q" : "q^" + std::to_string(b);
            }
            if (out.empty()) {
                out = (negative ? "-" : "") + term;
            } else {
                out += (negative ? " - " : " + ") + term;
            }
        }
    }
    return out.empty() ? "0" : out;
}

QSeries q_pochhammer_even(int d, int order) {
    if (d < 0) throw std::invalid_argument("q-Pochhammer subscript must be nonnegative");
    QSeries acc = QSeries::one(order);
    for (int j = 1; j <= d; ++j) {
        if (2 * j > order) break; // every remaining factor is 1 after truncation
        acc -= acc.shifted(2 * j);
    }
    return acc;
}

QSeries inv_q_pochhammer_even(int d, int order) {
    if (d < 0) throw std::invalid_argument("q-Pochhammer subscript must be nonnegative");
    QSeries acc = QSeries::one(order);
    for (int j = 1; j <= d; ++j) {
        if (2 * j > order) break;
        // geometric series 1/(1 - q^{2j})
        QSeries factor(order);
        for (int k = 0; 2 * j * k <= order; ++k) {
            factor += QSeries::monomial(order, 2 * j * k, XPoly(1));
        }
        acc = acc * factor;
    }
    return acc;
}

namespace {

// Exact Gaussian polynomial [upper; lower] as coefficients in the base
// variable Q, via [A;B] = [A-1;B-1] + Q^B [A-1;B]. Caller guarantees
// 0 <= lower <= upper.
std::vector<BigInt> gaussian_coeffs(int upper, int lower) {
    using Poly = std::vector<BigInt>;
    const auto add_shifted = [](Poly& dst, const Poly& src, int shift) {
        if (dst.size() < src.size() + static_cast<std::size_t>(shift)) {
            dst.resize(src.size() + static_cast<std::size_t>(shift), BigInt(0));
        }
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + static_cast<std::size_t>(shift)] += src[i];
    };

    std::vector<Poly> prev(1, Poly{BigInt(1)}); // row A = 0
    for (int a = 1; a <= upper; ++a) {
        const int width = std::min(a, lower);
        std::vector<Poly> cur(static_cast<std::size_t>(width) + 1);
        cur[0] = Poly{BigInt(1)};
        for (int b = 1; b <= width; ++b) {
            Poly entry;
            if (b - 1 < static_cast<int>(prev.size())) add_shifted(entry, prev[static_cast<std::size_t>(b - 1)], 0);
            if (b < static_cast<int>(prev.size())) add_shifted(entry, prev[static_cast<std::size_t>(b)], b);
            cur[static_cast<std::size_t>(b)] = std::move(entry);
        }
        prev = std::move(cur);
    }
    return prev.back();
}

} // namespace

QSeries q_binomial(int upper, int lower, int base_exponent, int order) {
    if (base_exponent < 1) throw std::invalid_argument("q-binomial base exponent must be positive");
    QSeries out(order);
    if (lower < 0 || lower > upper) return out; // zero by definition
    const std::vector<BigInt> coeffs = gaussian_coeffs(upper, lower);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const long long degree = static_cast<long long>(base_exponent) * static_cast<long long>(k);
        if (degree > order) break;
        if (coeffs[k] != 0) out += QSeries::monomial(order, static_cast<int>(degree), XPoly(coeffs[k]));
    }
    return out;
}

} // namespace bpart
