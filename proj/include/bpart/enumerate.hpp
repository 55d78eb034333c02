#pragma once

#include <vector>

#include "bpart/partition.hpp"

namespace bpart {

// Exhaustive generation of the partition classes. Every function returns
// the canonical order: part sequences sorted lexicographically descending.
// The empty partition is never enumerated; the constant term of a
// generating series belongs to the series assembler.

/// All Euclidean billiard partitions of the given total.
std::vector<Partition> euclidean_partitions(int total);

/// All distinct-part partitions of the given total with no two adjacent
/// odd parts and no parity constraint on the smallest part (the
/// pseudo-Euclidean component class).
std::vector<Partition> component_partitions(int total);

/// Irreducible Euclidean partitions with exactly `parts` parts and
/// largest part exactly `largest`.
std::vector<Partition> irreducible_partitions(int parts, int largest);

/// Reduced members of the component class with the given shape: smallest
/// part at most 2 and adjacent differences at most 2.
std::vector<Partition> reduced_partitions(int parts, int largest);

/// Euclidean partitions with exactly `parts` parts and largest part
/// exactly `largest` (no constraint on the sum).
std::vector<Partition> euclidean_partitions_with_shape(int parts, int largest);

/// Euclidean partitions with the given largest part, any length.
std::vector<Partition> euclidean_partitions_with_largest(int largest);

/// Component-class partitions with the given largest part, any length.
std::vector<Partition> component_partitions_with_largest(int largest);

/// All pseudo-Euclidean partitions of the tagged type whose total sum
/// over both components equals `total`.
std::vector<PEPartition> pe_partitions(PEType type, int total);

/// Alternative grouping: members whose two component maxima m1 and n1 sum
/// to `largest_pair`, with no constraint on the total.
std::vector<PEPartition> pe_partitions_by_largest_pair(PEType type, int largest_pair);

} // namespace bpart
