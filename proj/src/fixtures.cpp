#include "bpart/fixtures.hpp"

namespace bpart::fixtures {

const std::array<int, 16>& euclid_counts() {
    static const std::array<int, 16> table = {1, 0, 1, 0, 1, 1, 2, 1, 2, 3, 3, 4, 4, 6, 6, 9};
    return table;
}

const std::array<int, 16>& euclid_counts_as_printed() {
    static const std::array<int, 16> table = {1, 0, 1, 0, 1, 1, 2, 1, 2, 3, 3, 4, 4, 6, 5, 9};
    return table;
}

const std::array<XPoly, 16>& euclid_weighted() {
    static const std::array<XPoly, 16> table = {
        XPoly{1},          // q^0
        XPoly{},           // q^1
        XPoly{1},          // q^2
        XPoly{},           // q^3
        XPoly{1},          // q^4
        XPoly{1},          // q^5
        XPoly{1, 1},       // q^6:  1+x
        XPoly{1},          // q^7
        XPoly{1, 1},       // q^8:  1+x
        XPoly{3},          // q^9
        XPoly{1, 2},       // q^10: 1+2x
        XPoly{3, 1},       // q^11: 3+x
        XPoly{1, 2, 1},    // q^12: 1+2x+x^2
        XPoly{5, 1},       // q^13: 5+x
        XPoly{2, 3, 1},    // q^14: 2+3x+x^2
        XPoly{6, 3},       // q^15: 6+3x
    };
    return table;
}

const std::vector<Partition>& partitions_of_15() {
    static const std::vector<Partition> table = {
        Partition({13, 2}), Partition({11, 4}),   Partition({10, 3, 2}),
        Partition({9, 6}),  Partition({9, 4, 2}), Partition({8, 5, 2}),
        Partition({7, 6, 2}), Partition({6, 5, 4}), Partition({6, 4, 3, 2}),
    };
    return table;
}

const std::vector<WeightRow>& weight_table_three_parts() {
    static const std::vector<WeightRow> table = {
        {4, {Partition({4, 3, 2})}, {1}},
        {5, {Partition({5, 4, 2})}, {2}},
        {6,
         {Partition({6, 5, 4}), Partition({6, 5, 2}), Partition({6, 4, 2}), Partition({6, 3, 2})},
         {1, 1, 4, 1}},
        {7, {Partition({7, 6, 4}), Partition({7, 6, 2}), Partition({7, 4, 2})}, {2, 2, 2}},
    };
    return table;
}

QSeries shape_5_8(int order) {
    QSeries s(order);
    s += QSeries::monomial(order, 23, XPoly::x_power(2));
    s += QSeries::monomial(order, 25, XPoly::x_power(2));
    s += QSeries::monomial(order, 27, XPoly::x_power(2));
    return s;
}

const Partition& decomposition_input() {
    static const Partition p({9, 4, 2});
    return p;
}

const Partition& decomposition_core() {
    static const Partition p({5, 4, 2});
    return p;
}

const std::vector<int>& decomposition_padding() {
    static const std::vector<int> padding = {4, 0, 0};
    return padding;
}

} // namespace bpart::fixtures
