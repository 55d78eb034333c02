#pragma once

#include <array>
#include <vector>

#include "bpart/partition.hpp"
#include "bpart/qseries.hpp"
#include "bpart/xpoly.hpp"

namespace bpart::fixtures {

// Hand-pinned reference values, independent of both computation routes.

/// Unweighted Euclidean series coefficients for q^0..q^15.
/// The printed table these were copied from lists 5 at q^14; that entry
/// contradicts the weighted row below (2+3x+x^2 evaluates to 6 at x = 1)
/// and exhaustive enumeration (also 6), so 6 is stored here. The verbatim
/// printed row is kept alongside so the discrepancy stays on record.
const std::array<int, 16>& euclid_counts();
const std::array<int, 16>& euclid_counts_as_printed();

/// Weighted Euclidean series coefficients for q^0..q^15.
const std::array<XPoly, 16>& euclid_weighted();

/// The nine Euclidean partitions of 15.
const std::vector<Partition>& partitions_of_15();

struct WeightRow {
    int largest;
    std::vector<Partition> members; // canonical order
    std::vector<long long> phi;     // weights 2^w, aligned with members
};

/// Three-part Euclidean partitions with largest part 4..7 and their
/// weights.
const std::vector<WeightRow>& weight_table_three_parts();

/// The irreducible-shape value for five parts with largest part 8:
/// x^2 q^23 + x^2 q^25 + x^2 q^27.
QSeries shape_5_8(int order);

/// Decomposition example: 9+4+2 = (5+4+2) + (4+0+0).
const Partition& decomposition_input();
const Partition& decomposition_core();
const std::vector<int>& decomposition_padding();

} // namespace bpart::fixtures
