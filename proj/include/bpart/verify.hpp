#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bpart/closedform.hpp"

namespace bpart {

struct Mismatch {
    std::string input;
    std::string expected;
    std::string actual;

    bool operator==(const Mismatch&) const = default;
};

/// Machine-readable outcome of one cross-check suite. A suite passes iff
/// it found no mismatches; failures are data, never exceptions.
struct VerificationReport {
    std::string suite;
    long long cells_checked = 0;
    std::vector<Mismatch> mismatches;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;

    bool passed() const { return mismatches.empty(); }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    /// 1 runs the cells serially; 0 uses the OpenMP default; any other
    /// value pins the worker count. Cell results are reduced in input
    /// order, so reports are identical for every setting.
    int threads = 0;
    /// Exponent selection forwarded to the closed form; off_by_n is the
    /// mutation used by the self-test.
    OddExponent variant = OddExponent::exact;
};

/// Three-way check per (parts, largest) cell: closed form, recurrence,
/// and exhaustive enumeration must agree.
VerificationReport verify_shapes(int d_max, int n_max, int order,
                                 const VerifyOptions& options = {});

/// Euclidean generating function against the enumeration oracle degree by
/// degree (weighted and unweighted), against the pinned q^0..q^15 rows,
/// and the x = 1 consistency between the two forms. Requires order >= 15.
VerificationReport verify_euclid_series(int order, const VerifyOptions& options = {});

/// Round-trip, uniqueness, and weight preservation of the irreducible
/// decomposition over every Euclidean partition with sum <= sum_max.
VerificationReport verify_decomposition(int sum_max, const VerifyOptions& options = {});

/// Pseudo-Euclidean series against pair enumeration for every type,
/// plus the degreewise bounds light <= min(space, time) and the
/// space/time mirror symmetry. Requires order >= 4.
VerificationReport verify_pe(int order, const VerifyOptions& options = {});

} // namespace bpart
