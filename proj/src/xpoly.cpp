#include "bpart/xpoly.hpp"

#include <stdexcept>
#include <utility>

namespace bpart {

XPoly::XPoly(long long constant) {
    if (constant != 0) coeffs_.push_back(BigInt(constant));
}

XPoly::XPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

XPoly::XPoly(std::initializer_list<long long> ascending_coeffs) {
    coeffs_.assign(ascending_coeffs.begin(), ascending_coeffs.end());
    normalize();
}

XPoly XPoly::x_power(int degree, BigInt coeff) {
    if (degree < 0) throw std::invalid_argument("x exponent must be nonnegative");
    XPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

BigInt XPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt XPoly::at_one() const {
    BigInt total = 0;
    for (const BigInt& c : coeffs_) total += c;
    return total;
}

void XPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

XPoly& XPoly::operator+=(const XPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

XPoly XPoly::operator-() const {
    XPoly out = *this;
    for (BigInt& c : out.coeffs_) c = -c;
    return out;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly();
    XPoly out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    out.normalize();
    return out;
}

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        std::string term;
        if (i == 0) {
            term = magnitude.str();
        } else {
            if (magnitude != 1) term = magnitude.str();
            term += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? "-" : "+") + term;
        }
    }
    return out;
}

} // namespace bpart
