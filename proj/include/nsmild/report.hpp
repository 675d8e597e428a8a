#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nsmild {

struct CheckRecord {
    std::string check_id;
    std::string paper_anchor;  // short description of the verified statement
    double value = 0.0;        // measured
    double target = 0.0;       // bound or expected value
    bool pass = false;
    double tolerance = 0.0;
    double runtime_s = 0.0;
};

struct VerificationReport {
    std::vector<CheckRecord> records;
    // named plot series: (abscissa, ordinate) pairs
    std::map<std::string, std::vector<std::pair<double, double>>> series;

    void add(CheckRecord rec) { records.push_back(std::move(rec)); }
    bool all_pass() const;
    int fail_count() const;

    // CSV columns: check_id,paper_anchor,value,target,pass,tolerance,runtime_s
    std::string to_csv() const;
    std::string to_json() const;

    // Canonical content digest: every field except runtime_s (wall time is
    // not reproducible).  Used by the determinism check.
    std::string canonical_digest() const;
};

// Writes report.<format> plus one two-column CSV per named series into dir.
void emit_report(const VerificationReport& report, const std::string& dir,
                 const std::string& format);

// Strips the runtime_s column/field from serialized report text, yielding the
// byte string the determinism criterion compares.
std::string canonicalize_report_text(const std::string& text, const std::string& format);

} // namespace nsmild
