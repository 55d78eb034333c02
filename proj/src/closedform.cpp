#include "bpart/closedform.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace bpart {

QSeries irreducible_shape_series(int parts, int largest, int order, OddExponent variant) {
    QSeries zero(order);
    if (parts < 1 || largest < 2) return zero;

    const int d = parts;
    if (largest % 2 == 0) {
        const int n = largest / 2;
        const int x_exp = 2 * n - d - 1;
        QSeries binom = q_binomial(n - 1, x_exp, 2, order);
        if (binom.is_zero()) return zero;
        const long long q_exp = 2LL * n * n - 2LL * d * n - n + 1LL * d * d + 2LL * d;
        if (q_exp > order) return zero;
        return binom.shifted(static_cast<int>(q_exp)).scaled(XPoly::x_power(x_exp));
    }

    const int n = (largest - 1) / 2;
    const int x_exp = 2 * n - d;
    QSeries binom = q_binomial(n - 1, x_exp, 2, order);
    if (binom.is_zero()) return zero;
    long long q_exp = 2LL * n * n - 2LL * d * n + 1LL * d * d + 3LL * n;
    if (variant == OddExponent::off_by_n) q_exp -= n;
    if (q_exp > order) return zero;
    return binom.shifted(static_cast<int>(q_exp)).scaled(XPoly::x_power(x_exp));
}

namespace {

const QSeries& recurrence_eval(int parts, int largest, int order,
                               std::map<std::pair<int, int>, QSeries>& memo) {
    const auto key = std::make_pair(parts, largest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    QSeries value(order);
    if (parts >= 1 && largest >= 2) {
        if (parts == 1) {
            if (largest == 2) value = QSeries::monomial(order, 2, XPoly(1));
        } else if (largest % 2 == 0) {
            QSeries inner = recurrence_eval(parts - 1, largest - 1, order, memo) +
                            recurrence_eval(parts - 1, largest - 2, order, memo)
                                .scaled(XPoly::x_power(1));
            value = inner.shifted(largest);
        } else {
            value = recurrence_eval(parts - 1, largest - 1, order, memo).shifted(largest);
        }
    }
    return memo.emplace(key, std::move(value)).first->second;
}

} // namespace

QSeries irreducible_shape_series_recurrence(int parts, int largest, int order) {
    std::map<std::pair<int, int>, QSeries> memo;
    return recurrence_eval(parts, largest, order, memo);
}

QSeries reduced_shape_series(int parts, int largest, int order) {
    QSeries out(order);
    if (parts < 1 || largest < 1) return out;
    if (parts == 1) {
        // single reduced part: only 1 and 2 qualify
        if (largest <= 2) out = QSeries::monomial(order, largest, XPoly(1));
        return out;
    }
    out = irreducible_shape_series(parts, largest, order).at_x_one();
    out += irreducible_shape_series(parts - 1, largest, order).at_x_one().shifted(1);
    return out;
}

QSeries euclid_series(int order, bool weighted, OddExponent variant) {
    QSeries acc = QSeries::one(order);
    // d parts need at least 2 + 3 + ... + (d+1) = d(d+3)/2; shapes with d
    // parts have largest part between d+1 and 2d, so both loops stay tiny.
    for (int d = 1; d * (d + 3) / 2 <= order; ++d) {
        const QSeries inv = inv_q_pochhammer_even(d, order);
        for (int largest = d + 1; largest <= 2 * d; ++largest) {
            const QSeries shape = irreducible_shape_series(d, largest, order, variant);
            if (!shape.is_zero()) acc += shape * inv;
        }
    }
    return weighted ? acc : acc.at_x_one();
}

namespace {

// sum over all lengths of (reduced-shape series) / (q^2; q^2)_length:
// generates every component-class partition, graded by total sum.
QSeries component_class_series(int order) {
    QSeries acc(order);
    for (int len = 1; len * (len + 1) / 2 <= order; ++len) {
        const QSeries inv = inv_q_pochhammer_even(len, order);
        for (int largest = len; largest <= 2 * len; ++largest) {
            const QSeries shape = reduced_shape_series(len, largest, order);
            if (!shape.is_zero()) acc += shape * inv;
        }
    }
    return acc;
}

} // namespace

QSeries pe_series(PEType type, int order) {
    const QSeries euclid_part = euclid_series(order, false) - QSeries::one(order);
    switch (type) {
        case PEType::space:
        case PEType::time: {
            const QSeries free_part = component_class_series(order);
            return QSeries::one(order) + euclid_part * free_part;
        }
        case PEType::light:
            return QSeries::one(order) + euclid_part * euclid_part;
    }
    throw std::invalid_argument("unknown pseudo-Euclidean type");
}

} // namespace bpart
