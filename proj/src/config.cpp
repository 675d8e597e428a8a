#include "nsmild/config.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "nsmild/errors.hpp"

namespace nsmild {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream in(s);
    double v;
    while (in >> v) out.push_back(v);
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_list(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += fmt(v[i]);
    }
    return out;
}

} // namespace

ExperimentConfig ExperimentConfig::from_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }

    ExperimentConfig cfg;
    auto get = [&kv](const char* key, auto& slot) {
        auto it = kv.find(key);
        if (it == kv.end()) return;
        using T = std::decay_t<decltype(slot)>;
        if constexpr (std::is_same_v<T, std::string>) {
            slot = it->second;
        } else if constexpr (std::is_same_v<T, bool>) {
            slot = it->second == "true" || it->second == "1";
        } else if constexpr (std::is_same_v<T, int>) {
            slot = std::stoi(it->second);
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
            slot = std::stoull(it->second);
        } else if constexpr (std::is_same_v<T, double>) {
            slot = std::stod(it->second);
        } else {
            slot = parse_list(it->second);
        }
    };

    get("experiment.kind", cfg.kind);
    get("experiment.quick", cfg.quick);
    get("grid.m", cfg.grid_m);
    get("grid.n", cfg.grid_n);
    get("grid.l", cfg.grid_l);
    get("solver.step", cfg.step);
    get("solver.final_time", cfg.final_time);
    get("solver.inner_tolerance", cfg.inner_tolerance);
    get("solver.max_inner_iterations", cfg.max_inner_iterations);
    get("solver.scheme", cfg.scheme);
    get("solver.nonlinearity", cfg.nonlinearity);
    get("solver.initial_data", cfg.initial_data);
    get("sweep.r", cfg.sweep_r);
    get("sweep.p", cfg.sweep_p);
    get("sweep.t", cfg.sweep_t);
    get("sweep.h", cfg.sweep_h);
    get("sweep.lambda", cfg.sweep_lambda);
    get("sweep.seeds", cfg.seeds);
    get("quadrature.tol", cfg.quad_tol);
    get("output.dir", cfg.out_dir);
    get("output.format", cfg.format);
    get("random.seed", cfg.seed);
    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

std::string ExperimentConfig::to_text() const {
    std::ostringstream out;
    out << "experiment.kind = " << kind << '\n'
        << "experiment.quick = " << (quick ? "true" : "false") << '\n'
        << "grid.m = " << grid_m << '\n'
        << "grid.n = " << grid_n << '\n'
        << "grid.l = " << fmt(grid_l) << '\n'
        << "solver.step = " << fmt(step) << '\n'
        << "solver.final_time = " << fmt(final_time) << '\n'
        << "solver.inner_tolerance = " << fmt(inner_tolerance) << '\n'
        << "solver.max_inner_iterations = " << max_inner_iterations << '\n'
        << "solver.scheme = " << scheme << '\n'
        << "solver.nonlinearity = " << (nonlinearity ? "true" : "false") << '\n'
        << "solver.initial_data = " << initial_data << '\n'
        << "sweep.r = " << fmt_list(sweep_r) << '\n'
        << "sweep.p = " << fmt_list(sweep_p) << '\n'
        << "sweep.t = " << fmt_list(sweep_t) << '\n'
        << "sweep.h = " << fmt_list(sweep_h) << '\n'
        << "sweep.lambda = " << fmt_list(sweep_lambda) << '\n'
        << "sweep.seeds = " << seeds << '\n'
        << "quadrature.tol = " << fmt(quad_tol) << '\n'
        << "output.dir = " << out_dir << '\n'
        << "output.format = " << format << '\n'
        << "random.seed = " << seed << '\n';
    return out.str();
}

void ExperimentConfig::validate() const {
    static const char* kinds[] = {"simulate", "verify-weak", "kato", "kernels", "holder", "all"};
    bool ok = false;
    for (const char* k : kinds)
        if (kind == k) ok = true;
    if (!ok) throw DomainError("config: unknown experiment kind '" + kind + "'");
    if (format != "csv" && format != "json")
        throw DomainError("config: format must be csv or json");
    if (scheme != "exponential_trapezoid" && scheme != "exponential_euler")
        throw DomainError("config: unknown scheme '" + scheme + "'");
    if (seeds < 1) throw DomainError("config: seeds must be >= 1");
    if (!(quad_tol > 0.0)) throw DomainError("config: quadrature.tol must be positive");
}

} // namespace nsmild
