#pragma once

#include "bpart/partition.hpp"
#include "bpart/qseries.hpp"

namespace bpart {

/// Selects the q-exponent used for shapes whose largest part is odd.
/// `off_by_n` subtracts an extra (largest-1)/2 from that exponent. It is
/// a deliberate mutation target: the verifier's self-test uses it to
/// prove that an exponent slip is caught by the oracle comparison.
/// Production callers always use `exact`.
enum class OddExponent { exact, off_by_n };

/// Generating polynomial (as a truncated series) of the irreducible
/// Euclidean partitions with `parts` parts and largest part `largest`:
/// each such partition contributes x^w q^sum with w its weight exponent.
/// Evaluated through the closed form
///   even largest 2n:  x^{2n-d-1} q^{2n^2-2dn-n+d^2+2d} [n-1; 2n-d-1]_{q^2}
///   odd largest 2n+1: x^{2n-d}   q^{2n^2-2dn+d^2+3n}   [n-1; 2n-d]_{q^2}
QSeries irreducible_shape_series(int parts, int largest, int order,
                                 OddExponent variant = OddExponent::exact);

/// Same contract, evaluated through the two-term recurrence
///   s(d, 2n)   = q^{2n} (s(d-1, 2n-1) + x s(d-1, 2n-2))
///   s(d, 2n+1) = q^{2n+1} s(d-1, 2n)
/// with base case s(1, 2) = q^2. Memoized per call.
QSeries irreducible_shape_series_recurrence(int parts, int largest, int order);

/// Counting series (x = 1) of the reduced component-class partitions with
/// the given shape. For two parts and more this is
/// s(parts, largest) + q * s(parts-1, largest); a single part is handled
/// by direct enumeration (q for largest 1, q^2 for largest 2, else 0).
QSeries reduced_shape_series(int parts, int largest, int order);

/// The full Euclidean generating function
///   1 + sum_d sum_n s(d, n) / (q^2; q^2)_d
/// truncated at `order`. weighted=false evaluates the weight marker at
/// x = 1, turning weighted coefficients into plain counts.
QSeries euclid_series(int order, bool weighted,
                      OddExponent variant = OddExponent::exact);

/// Pseudo-Euclidean generating functions (always at x = 1): products of
/// the one-component series, the parity-constrained factor for the
/// component the tag pins (space: n-side, time: m-side, light: both) and
/// the parity-free factor for the other.
QSeries pe_series(PEType type, int order);

} // namespace bpart
