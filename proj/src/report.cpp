#include "pluriharm/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pluriharm {

CheckEntry& VerificationReport::add(const std::string& check,
                                    const std::string& location, double lhs,
                                    double rhs, double tol) {
    CheckEntry e;
    e.check = check;
    e.location = location;
    e.lhs = lhs;
    e.rhs = rhs;
    e.tol = tol;
    e.margin = rhs - lhs;
    e.pass = std::isfinite(e.margin) && e.margin >= -tol;
    entries.push_back(std::move(e));
    return entries.back();
}

CheckEntry& VerificationReport::add(const std::string& check,
                                    const std::string& location, double lhs,
                                    double rhs) {
    return add(check, location, lhs, rhs, default_tolerance(rhs));
}

bool VerificationReport::all_pass() const {
    for (const auto& e : entries) {
        if (!e.pass) return false;
    }
    return true;
}

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    s.total = static_cast<int>(entries.size());
    bool first = true;
    for (const auto& e : entries) {
        if (e.pass) ++s.passed;
        if (first || e.margin < s.worst_margin) s.worst_margin = e.margin;
        first = false;
    }
    return s;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"check", e.check},
                           {"location", e.location},
                           {"lhs", e.lhs},
                           {"rhs", e.rhs},
                           {"margin", e.margin},
                           {"tol", e.tol},
                           {"pass", e.pass},
                           {"note", e.note}});
    }
    const ReportSummary s = r.summary();
    return {{"map", r.map_id},
            {"suite", r.suite},
            {"entries", entries},
            {"summary",
             {{"total", s.total}, {"passed", s.passed}, {"worst_margin", s.worst_margin}}}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.map_id = j.at("map").get<std::string>();
    r.suite = j.at("suite").get<std::string>();
    for (const auto& je : j.at("entries")) {
        CheckEntry e;
        e.check = je.at("check").get<std::string>();
        e.location = je.at("location").get<std::string>();
        e.lhs = je.at("lhs").get<double>();
        e.rhs = je.at("rhs").get<double>();
        e.margin = je.at("margin").get<double>();
        e.tol = je.at("tol").get<double>();
        e.pass = je.at("pass").get<bool>();
        e.note = je.value("note", "");
        r.entries.push_back(std::move(e));
    }
    return r;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "check,location,lhs,rhs,margin,tol,pass\n";
    for (const auto& e : r.entries) {
        out << e.check << "," << e.location << "," << format_double(e.lhs) << ","
            << format_double(e.rhs) << "," << format_double(e.margin) << ","
            << format_double(e.tol) << "," << (e.pass ? 1 : 0) << "\n";
    }
    return out.str();
}

}  // namespace pluriharm
