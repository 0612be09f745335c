#include "lind/config.hpp"

#include <fstream>
#include <sstream>

namespace lind {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw InputError("config: key '" + key + "' expects an integer, got '" + v + "'");
    }
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "off" || v == "no") return false;
    throw InputError("config: key '" + key + "' expects a boolean, got '" + v + "'");
}

std::pair<long, long> parse_ivec(const std::string& v, const std::string& key) {
    std::istringstream is(v);
    long a, b;
    if (!(is >> a >> b)) throw InputError("config: key '" + key + "' expects two integers");
    std::string rest;
    if (is >> rest) throw InputError("config: key '" + key + "' has trailing content");
    return {a, b};
}

} // namespace

std::vector<std::pair<long, long>> parse_pade_orders(const std::string& text) {
    std::vector<std::pair<long, long>> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        size_t slash = item.find('/');
        if (slash == std::string::npos)
            throw InputError("pade orders: expected m/n, got '" + item + "'");
        out.emplace_back(parse_long(trim(item.substr(0, slash)), "pade_orders"),
                         parse_long(trim(item.substr(slash + 1)), "pade_orders"));
    }
    if (out.empty()) throw InputError("pade orders: empty list");
    return out;
}

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError("config line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw InputError("config line " + std::to_string(line_no) + ": empty key or value");

        if (key == "gamma") cfg.series.gamma = static_cast<int>(parse_long(val, key));
        else if (key == "omega") cfg.series.omega_spec = FrequencySpec::parse(val);
        else if (key == "order") cfg.series.order = parse_long(val, key);
        else if (key == "digits") cfg.series.digits = static_cast<int>(parse_long(val, key));
        else if (key == "filter") cfg.series.filter_digits = static_cast<int>(parse_long(val, key));
        else if (key == "grid") cfg.series.grid_size = parse_long(val, key);
        else if (key == "k") { auto [a, b] = parse_ivec(val, key); cfg.series.k = {a, b}; }
        else if (key == "kperp") { auto [a, b] = parse_ivec(val, key); cfg.series.kperp = {a, b}; }
        else if (key == "beta0") cfg.series.beta0 = val;
        else if (key == "fix_final_beta") cfg.series.fix_final_beta = parse_bool(val, key);
        else if (key == "store_rhs") cfg.series.store_rhs = parse_bool(val, key);
        else if (key == "potential_mode") {
            std::istringstream ms(val);
            PotentialModeSpec m;
            if (!(ms >> m.l1 >> m.l2 >> m.re1 >> m.im1 >> m.re2 >> m.im2))
                throw InputError("config: potential_mode expects 'l1 l2 re1 im1 re2 im2'");
            cfg.series.potential_modes.push_back(std::move(m));
        }
        else if (key == "theta") cfg.theta = val;
        else if (key == "pade_orders") cfg.pade_orders = parse_pade_orders(val);
        else if (key == "log_mode") cfg.log_mode = parse_bool(val, key);
        else if (key == "rho") cfg.rho = val;
        else if (key == "r") cfg.r = parse_long(val, key);
        else if (key == "fit") {
            size_t colon = val.find(':');
            if (colon == std::string::npos) throw InputError("config: fit expects min:max");
            cfg.fit_min = parse_long(trim(val.substr(0, colon)), key);
            cfg.fit_max = parse_long(trim(val.substr(colon + 1)), key);
        }
        else if (key == "eps") cfg.eps = val;
        else throw InputError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    cfg.series.validate();
    return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string RunConfig::canonical() const {
    std::ostringstream os;
    os << "gamma = " << series.gamma << "\n";
    os << "omega = " << series.omega_spec.name() << "\n";
    os << "order = " << series.order << "\n";
    os << "digits = " << series.digits << "\n";
    os << "filter = " << series.filter_digits << "\n";
    os << "grid = " << series.grid_size << "\n";
    os << "k = " << series.k[0] << " " << series.k[1] << "\n";
    os << "kperp = " << series.kperp[0] << " " << series.kperp[1] << "\n";
    os << "beta0 = " << series.beta0 << "\n";
    os << "fix_final_beta = " << (series.fix_final_beta ? 1 : 0) << "\n";
    for (const auto& m : series.potential_modes)
        os << "potential_mode = " << m.l1 << " " << m.l2 << " " << m.re1 << " " << m.im1 << " "
           << m.re2 << " " << m.im2 << "\n";
    os << "theta = " << theta << "\n";
    if (!pade_orders.empty()) {
        os << "pade_orders = ";
        for (size_t i = 0; i < pade_orders.size(); ++i)
            os << (i ? "," : "") << pade_orders[i].first << "/" << pade_orders[i].second;
        os << "\n";
    }
    os << "log_mode = " << (log_mode ? 1 : 0) << "\n";
    os << "rho = " << rho << "\n";
    os << "r = " << r << "\n";
    os << "fit = " << fit_min << ":" << fit_max << "\n";
    os << "eps = " << eps << "\n";
    return os.str();
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string config_hash(const RunConfig& cfg) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(cfg.canonical())));
    return buf;
}

} // namespace lind
