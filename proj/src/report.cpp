#include "nsmild/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nsmild {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

bool VerificationReport::all_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

int VerificationReport::fail_count() const {
    int n = 0;
    for (const auto& r : records)
        if (!r.pass) ++n;
    return n;
}

std::string VerificationReport::to_csv() const {
    std::string out = "check_id,paper_anchor,value,target,pass,tolerance,runtime_s\n";
    for (const auto& r : records) {
        out += csv_escape(r.check_id) + ',' + csv_escape(r.paper_anchor) + ',' + fmt(r.value) +
               ',' + fmt(r.target) + ',' + (r.pass ? "true" : "false") + ',' + fmt(r.tolerance) +
               ',' + fmt(r.runtime_s) + '\n';
    }
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["summary"]["checks"] = records.size();
    j["summary"]["failures"] = fail_count();
    j["summary"]["pass"] = all_pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json c;
        c["check_id"] = r.check_id;
        c["paper_anchor"] = r.paper_anchor;
        c["value"] = r.value;
        c["target"] = r.target;
        c["pass"] = r.pass;
        c["tolerance"] = r.tolerance;
        c["runtime_s"] = r.runtime_s;
        j["checks"].push_back(std::move(c));
    }
    for (const auto& [name, pts] : series) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [x, y] : pts) arr.push_back({x, y});
        j["series"][name] = std::move(arr);
    }
    return j.dump(2) + "\n";
}

std::string VerificationReport::canonical_digest() const {
    // FNV-1a over every field except runtime_s
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0x1f;
        h *= 1099511628211ULL;
    };
    for (const auto& r : records) {
        mix(r.check_id);
        mix(r.paper_anchor);
        mix(fmt(r.value));
        mix(fmt(r.target));
        mix(r.pass ? "1" : "0");
        mix(fmt(r.tolerance));
    }
    for (const auto& [name, pts] : series) {
        mix(name);
        for (const auto& [x, y] : pts) {
            mix(fmt(x));
            mix(fmt(y));
        }
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void emit_report(const VerificationReport& report, const std::string& dir,
                 const std::string& format) {
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/report." + format;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_report: cannot write " + path);
    out << (format == "json" ? report.to_json() : report.to_csv());
    for (const auto& [name, pts] : report.series) {
        std::ofstream s(dir + "/" + name + ".csv", std::ios::binary);
        s << "abscissa,ordinate\n";
        for (const auto& [x, y] : pts) s << fmt(x) << ',' << fmt(y) << '\n';
    }
}

std::string canonicalize_report_text(const std::string& text, const std::string& format) {
    std::string out;
    std::istringstream in(text);
    std::string line;
    if (format == "csv") {
        while (std::getline(in, line)) {
            const auto pos = line.rfind(',');
            out += (pos == std::string::npos ? line : line.substr(0, pos)) + '\n';
        }
        return out;
    }
    // json: drop runtime_s lines
    while (std::getline(in, line)) {
        if (line.find("\"runtime_s\"") != std::string::npos) continue;
        out += line + '\n';
    }
    return out;
}

} // namespace nsmild
