#pragma once

#include <string>
#include <vector>

#include "bpart/bigint.hpp"

namespace bpart {

/// Partition into distinct positive parts, stored largest-first in
/// strictly decreasing order. The default-constructed value is the empty
/// partition. Text form joins parts with "+": "9+4+2".
class Partition {
public:
    Partition() = default;
    /// Throws unless the parts are positive and strictly decreasing.
    explicit Partition(std::vector<int> parts);
    /// Parses "9+4+2"; rejects non-decreasing or non-positive input.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const;
    int smallest() const;
    long long sum() const;
    int odd_part_count() const;
    std::string str() const;

    bool operator==(const Partition&) const = default;
    /// Plain lexicographic comparison of the part vectors.
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// True when no two adjacent parts are both odd. Vacuously true with
/// fewer than two parts.
bool no_adjacent_odds(const Partition& p);

/// Euclidean billiard class membership: smallest part even and no two
/// adjacent parts both odd. Requires a nonempty partition.
bool is_euclidean(const Partition& p);

/// Irreducibility inside the Euclidean class: smallest part exactly 2 and
/// every adjacent difference at most 2. Requires is_euclidean(p).
bool is_irreducible(const Partition& p);

/// Reducedness for the parity-free component class: smallest part at most
/// 2 and every adjacent difference at most 2 (so no part can drop by 2
/// and stay in the class). Requires a nonempty partition.
bool is_reduced(const Partition& p);

/// Weight exponent w with weight 2^w: for d parts of which s are odd,
/// w = d-1-2s when the largest part is even and w = d-2s when odd.
/// Requires is_euclidean(p); nonnegative on that whole class.
int weight_exponent(const Partition& p);

/// The weight itself, 2^weight_exponent.
BigInt phi_weight(const Partition& p);

struct Decomposition {
    Partition irreducible;
    /// Even nonincreasing padding, index-aligned with the parts of the
    /// input (trailing zeros kept).
    std::vector<int> padding;
};

/// Splits a Euclidean partition into its unique irreducible part plus an
/// even padding, elementwise: parts[i] = irreducible[i] + padding[i].
Decomposition decompose(const Partition& p);

/// Elementwise inverse of decompose. Requires is_irreducible(irr) and a
/// nonincreasing even nonnegative padding of the same length.
Partition compose(const Partition& irr, const std::vector<int>& padding);

enum class PEType { space, time, light };

std::string to_string(PEType type);
PEType pe_type_from_string(const std::string& name);

/// Two-component partition (m-list | n-list) with a space/time/light tag.
/// Both components are nonempty; there is no ordering relation between
/// the two lists. Text form: "2+1|4+2".
class PEPartition {
public:
    PEPartition(Partition m, Partition n, PEType type);
    static PEPartition parse(const std::string& text, PEType type);

    const Partition& m_parts() const { return m_; }
    const Partition& n_parts() const { return n_; }
    PEType type() const { return type_; }
    long long total() const { return m_.sum() + n_.sum(); }
    std::string str() const { return m_.str() + "|" + n_.str(); }

    bool operator==(const PEPartition&) const = default;

private:
    Partition m_;
    Partition n_;
    PEType type_;
};

/// Class membership for the tagged type: the no-adjacent-odd condition in
/// each component, plus the parity condition the tag selects (space: the
/// smallest n-part even; time: the smallest m-part even; light: both).
bool is_pe_member(const PEPartition& p);

} // namespace bpart
