// Timing comparison between the serial and the OpenMP execution of the
// verification suites. The suites are cell-parallel with an order-stable
// reduction, so both paths must produce identical reports; this binary
// re-checks that while it measures.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bpart/verify.hpp"

using namespace bpart;

namespace {

double best_of(int repetitions, const std::function<VerificationReport()>& run,
               VerificationReport& last) {
    double best = -1.0;
    for (int i = 0; i < repetitions; ++i) {
        last = run();
        if (best < 0.0 || last.elapsed_ms < best) best = last.elapsed_ms;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    const int repetitions = std::max(1, argc > 1 ? std::atoi(argv[1]) : 3);

    int workers = 1;
#ifdef _OPENMP
    workers = omp_get_max_threads();
#endif
    std::printf("verification suite timings, best of %d (parallel path uses %d thread%s)\n\n",
                repetitions, workers, workers == 1 ? "" : "s");
    std::printf("%-16s %12s %12s %9s\n", "suite", "serial ms", "parallel ms", "speedup");

    struct Row {
        std::string name;
        std::function<VerificationReport(const VerifyOptions&)> run;
    };
    const std::vector<Row> rows = {
        {"shapes", [](const VerifyOptions& o) { return verify_shapes(8, 24, 200, o); }},
        {"euclid", [](const VerifyOptions& o) { return verify_euclid_series(40, o); }},
        {"decomposition", [](const VerifyOptions& o) { return verify_decomposition(40, o); }},
        {"pe", [](const VerifyOptions& o) { return verify_pe(24, o); }},
    };

    bool all_consistent = true;
    for (const Row& row : rows) {
        VerifyOptions serial;
        serial.threads = 1;
        VerifyOptions parallel;
        parallel.threads = 0;

        VerificationReport serial_report;
        VerificationReport parallel_report;
        const double serial_ms = best_of(repetitions, [&] { return row.run(serial); }, serial_report);
        const double parallel_ms =
            best_of(repetitions, [&] { return row.run(parallel); }, parallel_report);

        const bool consistent = serial_report.mismatches == parallel_report.mismatches &&
                                serial_report.cells_checked == parallel_report.cells_checked;
        all_consistent = all_consistent && consistent && serial_report.passed();

        std::printf("%-16s %12.1f %12.1f %8.2fx%s\n", row.name.c_str(), serial_ms, parallel_ms,
                    serial_ms / parallel_ms, consistent ? "" : "  REPORTS DIVERGE");
    }

    return all_consistent ? 0 : 1;
}
