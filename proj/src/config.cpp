#include "fbp/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fbp/errors.hpp"

namespace fbp {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, c = s.size();
    while (a < c && std::isspace((unsigned char)s[a])) ++a;
    while (c > a && std::isspace((unsigned char)s[c - 1])) --c;
    return s.substr(a, c - a);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + v);
    }
}

int to_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw ConfigError("config: bad integer value for '" + key + "': " + v);
    }
}

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::vector<double> RunConfig::effective_snapshot_times(bool for_particles) const {
    if (!snapshot_times.empty()) return snapshot_times;
    const double h = for_particles ? t_end : T;
    return {0.5 * h, h};
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " is not key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "scenario") cfg.scenario = val;
        else if (key == "b") cfg.b = to_double(key, val);
        else if (key == "wave_c") cfg.wave_c = to_double(key, val);
        else if (key == "wave_umax") cfg.wave_umax = to_double(key, val);
        else if (key == "T") cfg.T = to_double(key, val);
        else if (key == "M") cfg.M = to_int(key, val);
        else if (key == "A") cfg.A = to_double(key, val);
        else if (key == "damping") cfg.damping = to_double(key, val);
        else if (key == "tol_fp") cfg.tol_fp = to_double(key, val);
        else if (key == "max_iter") cfg.max_iter = to_int(key, val);
        else if (key == "adaptive_T") cfg.adaptive_T = to_int(key, val) != 0;
        else if (key == "workers") cfg.workers = to_int(key, val);
        else if (key == "n") cfg.n = to_int(key, val);
        else if (key == "t_end") cfg.t_end = to_double(key, val);
        else if (key == "seed") {
            try {
                cfg.seed = std::stoull(val);
            } catch (...) {
                throw ConfigError("config: bad seed: " + val);
            }
            cfg.seed_set = true;
        } else if (key == "snapshot_times") {
            cfg.snapshot_times.clear();
            std::istringstream list(val);
            std::string tok;
            while (std::getline(list, tok, ',')) {
                tok = trim(tok);
                if (!tok.empty()) cfg.snapshot_times.push_back(to_double(key, tok));
            }
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string echo_config(const RunConfig& cfg, bool for_particles) {
    std::ostringstream out;
    out << "scenario = " << cfg.scenario << "\n";
    out << "b = " << format_g17(cfg.b) << "\n";
    out << "wave_c = " << format_g17(cfg.wave_c) << "\n";
    out << "wave_umax = " << format_g17(cfg.wave_umax) << "\n";
    out << "T = " << format_g17(cfg.T) << "\n";
    out << "M = " << cfg.M << "\n";
    out << "A = " << format_g17(cfg.A) << "\n";
    out << "damping = " << format_g17(cfg.damping) << "\n";
    out << "tol_fp = " << format_g17(cfg.tol_fp) << "\n";
    out << "max_iter = " << cfg.max_iter << "\n";
    out << "adaptive_T = " << (cfg.adaptive_T ? 1 : 0) << "\n";
    out << "workers = " << cfg.workers << "\n";
    out << "n = " << cfg.n << "\n";
    out << "t_end = " << format_g17(cfg.t_end) << "\n";
    if (cfg.seed_set) out << "seed = " << cfg.seed << "\n";
    const auto times = cfg.effective_snapshot_times(for_particles);
    out << "snapshot_times = ";
    for (std::size_t i = 0; i < times.size(); ++i)
        out << (i ? ", " : "") << format_g17(times[i]);
    out << "\n";
    return out.str();
}

void validate_config(const RunConfig& cfg, RunKind kind) {
    if (cfg.scenario != "quartic" && cfg.scenario != "wave")
        throw ConfigError("config: scenario must be 'quartic' or 'wave'");
    if (!(cfg.T > 0.0)) throw ConfigError("config: T must be positive");
    if (cfg.M < 2) throw ConfigError("config: M must be >= 2");
    if (!(cfg.A > 0.0)) throw ConfigError("config: A must be positive");
    if (!(cfg.damping > 0.0) || cfg.damping > 1.0)
        throw ConfigError("config: damping must lie in (0, 1]");
    if (!(cfg.tol_fp > 0.0)) throw ConfigError("config: tol_fp must be positive");
    if (cfg.max_iter < 1) throw ConfigError("config: max_iter must be >= 1");
    if (cfg.n < 2) throw ConfigError("config: n must be >= 2");
    if (!(cfg.t_end > 0.0)) throw ConfigError("config: t_end must be positive");
    if (!(cfg.wave_c >= kSqrt2 - 1e-12)) throw ConfigError("config: wave_c must be >= sqrt(2)");
    if (!(cfg.wave_umax > 0.0)) throw ConfigError("config: wave_umax must be positive");
    const double t_hi = (kind == RunKind::solve) ? cfg.T : cfg.t_end;
    for (double t : cfg.effective_snapshot_times(kind == RunKind::particles))
        if (!(t > 0.0) || t > t_hi + 1e-12)
            throw ConfigError("config: snapshot times must lie in (0, " +
                              std::to_string(t_hi) + "]");
}

} // namespace fbp
