#ifndef LIND_CONFIG_HPP
#define LIND_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lind/lindstedt.hpp"

namespace lind {

// Full run configuration: the series parameters plus the analysis
// blocks consumed by the pade/gevrey/validate stages. Parsed from a
// flat "key = value" text file; unknown keys are rejected.
struct RunConfig {
    LindstedtConfig series;

    std::string theta = "1";
    std::vector<std::pair<long, long>> pade_orders; // empty = near-diagonal default
    bool log_mode = false;
    std::string rho = "0.1";
    long r = 4;
    long fit_min = 0, fit_max = 0; // 0 = default range
    std::string eps = "1e-2";

    static RunConfig parse(const std::string& text);
    static RunConfig parse_file(const std::string& path);

    // canonical text form; also the input of config_hash
    std::string canonical() const;
};

// "m/n,m/n,..." -> list of orders
std::vector<std::pair<long, long>> parse_pade_orders(const std::string& text);

// FNV-1a over the canonical config text, for CSV provenance comments
std::uint64_t fnv1a(const std::string& text);
std::string config_hash(const RunConfig& cfg);

} // namespace lind

#endif
