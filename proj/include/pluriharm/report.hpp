#pragma once

// Structured verification reports. Entries are oriented so that
// pass <=> margin >= -tol with margin = rhs - lhs, and are kept in a
// canonical order so identical inputs produce byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

namespace pluriharm {

inline double default_tolerance(double rhs) {
    return 1e-9 * std::max(1.0, std::abs(rhs));
}

struct CheckEntry {
    std::string check;
    std::string location;  // sample point or radius, printed form
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs
    double tol = 0.0;
    bool pass = true;
    std::string note;
};

struct ReportSummary {
    int total = 0;
    int passed = 0;
    double worst_margin = 0.0;
};

struct VerificationReport {
    std::string map_id;
    std::string suite;
    std::vector<CheckEntry> entries;

    // margin/pass computed here so every pass flag is recomputable from
    // (lhs, rhs, tol) alone
    CheckEntry& add(const std::string& check, const std::string& location,
                    double lhs, double rhs, double tol);
    CheckEntry& add(const std::string& check, const std::string& location,
                    double lhs, double rhs);

    bool all_pass() const;
    ReportSummary summary() const;
};

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

// Header row + one row per entry; numbers printed with 17 significant
// digits for lossless double round-trip.
std::string to_csv(const VerificationReport& r);

std::string format_double(double v);

}  // namespace pluriharm
