#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpart/closedform.hpp"
#include "bpart/enumerate.hpp"
#include "bpart/verify.hpp"

using namespace bpart;
using nlohmann::json;

namespace {

constexpr const char* kFormatVersion = "1";

json envelope(const std::string& command, json parameters, json result) {
    return json{{"command", command},
                {"parameters", std::move(parameters)},
                {"result", std::move(result)},
                {"format_version", kFormatVersion}};
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json big_to_json(const BigInt& value) {
    if (value >= 0 && value <= BigInt(std::numeric_limits<long long>::max())) {
        return value.convert_to<long long>();
    }
    return value.str(); // too wide for a JSON number; ship the digits
}

std::string padded_list(const std::vector<int>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += "+";
        out += std::to_string(values[i]);
    }
    return out + ")";
}

int usage_error(const std::string& message) {
    std::cerr << "usage error: " << message << "\n";
    return 2;
}

struct EnumerateArgs {
    int sum = 0;
    bool weights = false;
    std::string pe;       // empty, or space|time|light
    std::string pe_stat = "total";
    std::string format = "text";
};

int run_enumerate(const EnumerateArgs& args) {
    if (args.weights && !args.pe.empty()) {
        return usage_error("--weights applies only to Euclidean enumeration");
    }

    json parameters{{"sum", args.sum},
                    {"weights", args.weights},
                    {"pe", args.pe.empty() ? json() : json(args.pe)},
                    {"pe_stat", args.pe_stat},
                    {"format", args.format}};

    if (!args.pe.empty()) {
        const PEType type = pe_type_from_string(args.pe);
        const auto members = args.pe_stat == "largest"
                                 ? pe_partitions_by_largest_pair(type, args.sum)
                                 : pe_partitions(type, args.sum);
        if (args.format == "json") {
            json list = json::array();
            for (const PEPartition& p : members) {
                list.push_back({{"m_parts", p.m_parts().parts()},
                                {"n_parts", p.n_parts().parts()},
                                {"text", p.str()}});
            }
            emit_json(envelope("enumerate", parameters,
                               json{{"count", members.size()}, {"partitions", list}}));
        } else {
            for (const PEPartition& p : members) std::cout << p.str() << "\n";
        }
        return 0;
    }

    const auto members = euclidean_partitions(args.sum);
    if (args.format == "json") {
        json list = json::array();
        for (const Partition& p : members) {
            json item{{"parts", p.parts()}, {"text", p.str()}};
            if (args.weights) {
                item["weight_exponent"] = weight_exponent(p);
                item["phi"] = big_to_json(phi_weight(p));
            }
            list.push_back(std::move(item));
        }
        emit_json(envelope("enumerate", parameters,
                           json{{"count", members.size()}, {"partitions", list}}));
    } else {
        for (const Partition& p : members) {
            std::cout << p.str();
            if (args.weights) {
                std::cout << " w=" << weight_exponent(p) << " phi=" << phi_weight(p).str();
            }
            std::cout << "\n";
        }
    }
    return 0;
}

struct SeriesArgs {
    int max = -1; // resolved after parsing: 40 for Euclid, 24 for pe
    bool weighted = false;
    std::string pe;
    std::string method = "closed";
    std::string format = "text";
};

XPoly oracle_coefficient(int degree, bool weighted, const std::string& pe) {
    if (!pe.empty()) {
        return XPoly(
            static_cast<long long>(pe_partitions(pe_type_from_string(pe), degree).size()));
    }
    if (degree == 0) return XPoly{1};
    const auto members = euclidean_partitions(degree);
    if (!weighted) return XPoly(static_cast<long long>(members.size()));
    XPoly total;
    for (const Partition& p : members) total += XPoly::x_power(weight_exponent(p));
    return total;
}

int run_series(SeriesArgs args) {
    if (args.weighted && !args.pe.empty()) {
        return usage_error("--weighted cannot be combined with --pe");
    }
    if (args.max < 0) args.max = args.pe.empty() ? 40 : 24;

    std::optional<QSeries> closed;
    if (args.method != "oracle") {
        closed = args.pe.empty() ? euclid_series(args.max, args.weighted)
                                 : pe_series(pe_type_from_string(args.pe), args.max);
    }

    json parameters{{"max", args.max},
                    {"weighted", args.weighted},
                    {"pe", args.pe.empty() ? json() : json(args.pe)},
                    {"method", args.method},
                    {"format", args.format}};
    json rows = json::array();

    for (int degree = 0; degree <= args.max; ++degree) {
        std::optional<XPoly> closed_value;
        std::optional<XPoly> oracle_value;
        if (closed) closed_value = closed->coeff(degree);
        if (args.method != "closed") {
            oracle_value = (degree == 0 && !args.pe.empty())
                               ? XPoly{1}
                               : oracle_coefficient(degree, args.weighted, args.pe);
        }

        if (args.format == "json") {
            json row{{"degree", degree}};
            if (args.method == "closed") {
                row["value"] = closed_value->str();
            } else if (args.method == "oracle") {
                row["value"] = oracle_value->str();
            } else {
                row["closed"] = closed_value->str();
                row["oracle"] = oracle_value->str();
                row["diff"] = (*closed_value - *oracle_value).str();
            }
            rows.push_back(std::move(row));
        } else {
            std::cout << "q^" << degree << ": ";
            if (args.method == "closed") {
                std::cout << closed_value->str();
            } else if (args.method == "oracle") {
                std::cout << oracle_value->str();
            } else {
                std::cout << "closed=" << closed_value->str() << " oracle=" << oracle_value->str()
                          << " diff=" << (*closed_value - *oracle_value).str();
            }
            std::cout << "\n";
        }
    }

    if (args.format == "json") {
        emit_json(envelope("series", parameters, json{{"coefficients", rows}}));
    }
    return 0;
}

int run_decompose(const std::string& text, const std::string& format) {
    const Partition p = Partition::parse(text);
    if (!is_euclidean(p)) {
        throw std::invalid_argument("'" + p.str() +
                                    "' is not a Euclidean billiard partition "
                                    "(smallest part must be even; no two adjacent parts both odd)");
    }
    const Decomposition dec = decompose(p);
    const std::string rendered =
        "(" + dec.irreducible.str() + ") + " + padded_list(dec.padding);
    if (format == "json") {
        emit_json(envelope("decompose", json{{"partition", text}, {"format", format}},
                           json{{"input", p.parts()},
                                {"irreducible", dec.irreducible.parts()},
                                {"padding", dec.padding},
                                {"text", rendered}}));
    } else {
        std::cout << rendered << "\n";
    }
    return 0;
}

int run_phi(const std::string& text, const std::string& format) {
    const Partition p = Partition::parse(text);
    if (!is_euclidean(p)) {
        throw std::invalid_argument("'" + p.str() +
                                    "' is not a Euclidean billiard partition "
                                    "(smallest part must be even; no two adjacent parts both odd)");
    }
    const int w = weight_exponent(p);
    const BigInt phi = phi_weight(p);
    if (format == "json") {
        emit_json(envelope("phi", json{{"partition", text}, {"format", format}},
                           json{{"parts", p.parts()},
                                {"weight_exponent", w},
                                {"phi", big_to_json(phi)}}));
    } else {
        std::cout << "w=" << w << " phi=" << phi.str() << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    int dmax = 8;
    int nmax = 24;
    int order = 200;
    int max = -1; // euclid defaults to 40, pe to 24
    int summax = 40;
    int threads = 0;
    std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
    VerifyOptions options;
    options.threads = args.threads;

    std::vector<VerificationReport> reports;
    const bool all = args.suite == "all";
    if (all || args.suite == "shapes") {
        reports.push_back(verify_shapes(args.dmax, args.nmax, args.order, options));
    }
    if (all || args.suite == "euclid") {
        reports.push_back(verify_euclid_series(args.max < 0 ? 40 : args.max, options));
    }
    if (all || args.suite == "decomposition") {
        reports.push_back(verify_decomposition(args.summax, options));
    }
    if (all || args.suite == "pe") {
        reports.push_back(verify_pe(args.max < 0 ? 24 : args.max, options));
    }

    bool ok = true;
    json parameters{{"suite", args.suite},    {"dmax", args.dmax},
                    {"nmax", args.nmax},      {"order", args.order},
                    {"max", args.max < 0 ? json() : json(args.max)},
                    {"summax", args.summax},  {"threads", args.threads},
                    {"format", args.format}};
    json rendered = json::array();
    for (const VerificationReport& report : reports) {
        ok = ok && report.passed();
        if (args.format == "json") {
            rendered.push_back(report.to_json());
        } else {
            std::cout << report.to_text();
        }
    }
    if (args.format == "json") {
        emit_json(envelope("verify", parameters,
                           reports.size() == 1 ? rendered[0] : json{{"suites", rendered}}));
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration, closed-form series, and cross-checking "
                 "for billiard partitions"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"text", "json"});
    const auto pe_check = CLI::IsMember({"space", "time", "light"});

    EnumerateArgs enumerate_args;
    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "List partitions of a given total");
    enumerate_cmd->add_option("--sum", enumerate_args.sum, "Total to partition")
        ->required()
        ->check(CLI::PositiveNumber);
    enumerate_cmd->add_flag("--weights", enumerate_args.weights,
                            "Append the weight exponent w and phi = 2^w per line");
    enumerate_cmd->add_option("--pe", enumerate_args.pe,
                              "Enumerate pseudo-Euclidean partitions of this type")
        ->check(pe_check);
    enumerate_cmd
        ->add_option("--pe-stat", enumerate_args.pe_stat,
                     "Statistic grouping pseudo-Euclidean members: 'total' sums all parts, "
                     "'largest' sums only the two component maxima m1+n1")
        ->check(CLI::IsMember({"total", "largest"}));
    enumerate_cmd->add_option("--format", enumerate_args.format, "Output format")->check(format_check);

    SeriesArgs series_args;
    auto* series_cmd = app.add_subcommand("series", "Print generating-function coefficients");
    series_cmd->add_option("--max", series_args.max,
                           "Highest q-degree (default 40, or 24 with --pe)")
        ->check(CLI::NonNegativeNumber);
    series_cmd->add_flag("--weighted", series_args.weighted,
                         "Keep the weight marker x in the coefficients");
    series_cmd->add_option("--pe", series_args.pe, "Pseudo-Euclidean series of this type")
        ->check(pe_check);
    series_cmd
        ->add_option("--method", series_args.method,
                     "closed: evaluate the closed form; oracle: count by enumeration; "
                     "both: print both plus a diff column")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    series_cmd->add_option("--format", series_args.format, "Output format")->check(format_check);

    std::string decompose_text;
    std::string decompose_format = "text";
    auto* decompose_cmd =
        app.add_subcommand("decompose", "Split a partition into its irreducible part plus even padding");
    decompose_cmd->add_option("partition", decompose_text, "Partition text, e.g. \"9+4+2\"")
        ->required();
    decompose_cmd->add_option("--format", decompose_format, "Output format")->check(format_check);

    std::string phi_text;
    std::string phi_format = "text";
    auto* phi_cmd = app.add_subcommand("phi", "Print the weight of one partition");
    phi_cmd->add_option("partition", phi_text, "Partition text, e.g. \"6+4+2\"")->required();
    phi_cmd->add_option("--format", phi_format, "Output format")->check(format_check);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run cross-check suites");
    verify_cmd->add_option("--suite", verify_args.suite, "Which suite to run")
        ->required()
        ->check(CLI::IsMember({"shapes", "euclid", "decomposition", "pe", "all"}));
    verify_cmd->add_option("--dmax", verify_args.dmax, "Largest part count for the shapes suite")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--nmax", verify_args.nmax, "Largest part for the shapes suite")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--order", verify_args.order, "Series order for the shapes suite")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max", verify_args.max,
                           "Series order for the euclid (default 40) and pe (default 24) suites")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--summax", verify_args.summax,
                           "Largest partition sum for the decomposition suite")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--threads", verify_args.threads,
                           "Worker count: 1 serial, 0 library default")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--format", verify_args.format, "Output format")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate_cmd->parsed()) return run_enumerate(enumerate_args);
        if (series_cmd->parsed()) return run_series(series_args);
        if (decompose_cmd->parsed()) return run_decompose(decompose_text, decompose_format);
        if (phi_cmd->parsed()) return run_phi(phi_text, phi_format);
        if (verify_cmd->parsed()) return run_verify(verify_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
