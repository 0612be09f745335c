// Command-line surface: series / pade / gevrey / validate.
//
// Exit codes: 0 success, 1 input error, 2 numerical failure,
// 3 internal-consistency failure.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

#include "lind/archive.hpp"
#include "lind/config.hpp"
#include "lind/diagnostics.hpp"
#include "lind/gevrey.hpp"
#include "lind/pade.hpp"

using namespace lind;

namespace {

struct CommonOpts {
    std::string config_path;
};

RunConfig load_config(const CommonOpts& c) {
    if (c.config_path.empty()) return RunConfig{};
    return RunConfig::parse_file(c.config_path);
}

double ln_of(const BigReal& v) {
    if (v.is_zero()) return -std::numeric_limits<double>::infinity();
    return log(v).to_double();
}

std::string csv_header(const RunConfig& cfg) { return "# config " + config_hash(cfg) + "\n"; }

int run_series(const CommonOpts& common, int gamma, const std::string& omega, long order,
               int digits, int filter, long grid, const std::string& out_path) {
    RunConfig cfg = load_config(common);
    if (gamma >= 0) cfg.series.gamma = gamma;
    if (!omega.empty()) cfg.series.omega_spec = FrequencySpec::parse(omega);
    if (order >= 0) cfg.series.order = order;
    if (digits > 0) cfg.series.digits = digits;
    if (filter > 0) cfg.series.filter_digits = filter;
    if (grid > 0) cfg.series.grid_size = grid;
    cfg.series.validate();

    auto report = check_order0(cfg.series);
    std::cout << "order-0 average: (" << report.gradient_average_abs[0].to_string(4) << ", "
              << report.gradient_average_abs[1].to_string(4) << "), non-degeneracy average "
              << report.nondegeneracy_average.to_string(8) << "\n";

    try {
        LindstedtSeries s = run_lindstedt(cfg.series);
        for (long n = 1; n <= s.max_order(); ++n)
            std::cout << "order " << n << "  ln|residual| "
                      << ln_of(s.cohom_residuals[static_cast<size_t>(n)]) << "  support "
                      << s.orders[static_cast<size_t>(n)].coeffs().size() << "\n";
        save_archive_file(s, out_path);
        std::cout << "archive written: " << out_path << "\n";
        return 0;
    } catch (const RunAbortError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!out_path.empty()) {
            save_archive_file(*e.partial_series, out_path + ".partial");
            std::cerr << "partial archive written: " << out_path << ".partial\n";
        }
        return 2;
    }
}

int run_pade(const std::string& in_path, const std::string& theta, const std::string& orders,
             bool log_mode, const std::string& out_path, const CommonOpts& common) {
    RunConfig cfg = load_config(common);
    if (!theta.empty()) cfg.theta = theta;
    if (!orders.empty()) cfg.pade_orders = parse_pade_orders(orders);
    if (log_mode) cfg.log_mode = true;

    LindstedtSeries s = load_archive_file(in_path);
    PrecisionContext ctx = s.ctx();
    if (cfg.pade_orders.empty()) {
        const long usable = s.usable_order();
        const long m = usable / 2;
        cfg.pade_orders = {{m, m}, {m - 1, m}};
    }
    BigReal th = BigReal::from_string(cfg.theta, ctx.bits());
    auto clouds = pole_cloud(s, th, cfg.pade_orders, cfg.log_mode);

    std::ostringstream csv;
    csv << csv_header(cfg);
    csv << "re,im,residue_re,residue_im,spurious,component,m,n,log_mode\n";
    for (const auto& cell : clouds) {
        if (!cell.error.empty()) {
            std::cerr << "cell " << component_name(cell.component) << " [" << cell.m << "/"
                      << cell.n << "]: " << cell.error << "\n";
            continue;
        }
        for (const auto& p : cell.poles)
            csv << p.location.re().to_string(20) << "," << p.location.im().to_string(20) << ","
                << p.residue.re().to_string(20) << "," << p.residue.im().to_string(20) << ","
                << (p.spurious ? 1 : 0) << "," << component_name(cell.component) << "," << cell.m
                << "," << cell.n << "," << (cell.log_mode ? 1 : 0) << "\n";
    }
    atomic_write_file(out_path, csv.str());
    std::cout << "pole cloud written: " << out_path << "\n";
    return 0;
}

int run_gevrey(const std::string& in_path, const std::string& rho, long r, const std::string& fit,
               const std::string& out_path, const CommonOpts& common) {
    RunConfig cfg = load_config(common);
    if (!rho.empty()) cfg.rho = rho;
    if (r >= 0) cfg.r = r;
    if (!fit.empty()) {
        size_t colon = fit.find(':');
        if (colon == std::string::npos) throw InputError("--fit expects min:max");
        cfg.fit_min = std::stol(fit.substr(0, colon));
        cfg.fit_max = std::stol(fit.substr(colon + 1));
    }

    LindstedtSeries s = load_archive_file(in_path);
    PrecisionContext ctx = s.ctx();
    BigReal rho_v = BigReal::from_string(cfg.rho, ctx.bits());

    auto a1 = a_sequence(s, rho_v, cfg.r, Component::first);
    auto a2 = a_sequence(s, rho_v, cfg.r, Component::second);
    auto ab = a_sequence(s, rho_v, cfg.r, Component::both);

    long n_min = cfg.fit_min > 0 ? cfg.fit_min : std::max<long>(1, s.usable_order() / 3);
    long n_max = cfg.fit_max > 0 ? cfg.fit_max : s.usable_order();

    std::ostringstream csv;
    csv << csv_header(cfg);
    csv << "n,A_component1,A_component2\n";
    size_t i2 = 0;
    for (const auto& p : a1) {
        while (i2 < a2.size() && a2[i2].n < p.n) ++i2;
        std::string second = (i2 < a2.size() && a2[i2].n == p.n) ? a2[i2].value.to_string(20) : "";
        csv << p.n << "," << p.value.to_string(20) << "," << second << "\n";
    }
    atomic_write_file(out_path, csv.str());

    for (auto& [name, data, comp] :
         std::vector<std::tuple<std::string, std::vector<APoint>*, Component>>{
             {"component1", &a1, Component::first},
             {"component2", &a2, Component::second},
             {"both", &ab, Component::both}}) {
        try {
            GevreyFit f = fit_log(*data, n_min, n_max, ctx);
            std::cout << name << ": sigma = " << f.sigma.to_string(10)
                      << "  R = " << exp(f.lnR).to_string(10) << "  rss = " << f.rss.to_string(6)
                      << "  range [" << n_min << "," << n_max << "]\n";
        } catch (const std::exception& e) {
            std::cout << name << ": fit failed: " << e.what() << "\n";
        }
    }
    std::cout << "A(n) written: " << out_path << "\n";
    return 0;
}

int run_validate(const std::string& in_path, const std::string& eps, const std::string& out_path,
                 const CommonOpts& common) {
    RunConfig cfg = load_config(common);
    if (!eps.empty()) cfg.eps = eps;

    LindstedtSeries s = load_archive_file(in_path);
    PrecisionContext ctx = s.ctx();
    BigReal eps_v = BigReal::from_string(cfg.eps, ctx.bits());
    BigComplex eps_c(eps_v);

    auto cohom = all_cohomology_residuals(s);
    std::ostringstream csv;
    csv << csv_header(cfg);
    csv << "n,ln_cohomology_residual,ln_invariance_residual\n";
    for (long n = 0; n <= s.max_order(); ++n) {
        double lc = n >= 1 ? ln_of(cohom[static_cast<size_t>(n)])
                           : -std::numeric_limits<double>::infinity();
        double li = ln_of(invariance_residual(s, eps_c, n));
        csv << n << "," << lc << "," << li << "\n";
    }
    atomic_write_file(out_path, csv.str());
    std::cout << "residuals written: " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lindstedt expansions of lower dimensional tori in a weakly dissipative "
                 "Froeschle map: series computation, Pade pole clouds, Gevrey fits, residuals"};
    app.require_subcommand(1);

    CommonOpts common;

    auto* series = app.add_subcommand("series", "compute a Lindstedt series and write an archive");
    int gamma = -1, digits = 0, filter = 0;
    long order = -1, grid = 0;
    std::string omega, out_path;
    series->add_option("--config", common.config_path, "config file");
    series->add_option("--gamma", gamma, "0 conservative, 1 dissipative")->check(CLI::Range(0, 1));
    series->add_option("--omega", omega,
                       "golden | sqrt2-inverse | plastic-inverse | tribonacci-inverse | <decimal>");
    series->add_option("--order", order, "series order N");
    series->add_option("--digits", digits, "decimal working precision");
    series->add_option("--filter", filter, "coefficient filter digits");
    series->add_option("--grid", grid, "grid size (power of two, 0 = auto)");
    series->add_option("--out", out_path, "output archive")->required();

    auto* pade_cmd = app.add_subcommand("pade", "Pade / Log-Pade pole clouds from an archive");
    std::string in_path, theta, orders_text, pade_out;
    bool log_mode = false;
    pade_cmd->add_option("--config", common.config_path, "config file");
    pade_cmd->add_option("--in", in_path, "input archive")->required();
    pade_cmd->add_option("--theta", theta, "evaluation angle (decimal)");
    pade_cmd->add_option("--orders", orders_text, "approximant orders m/n,m/n,...");
    pade_cmd->add_flag("--log", log_mode, "Log-Pade (approximant of d/deps ln f)");
    pade_cmd->add_option("--out", pade_out, "output CSV")->required();

    auto* gevrey_cmd = app.add_subcommand("gevrey", "A(n) sequence and Gevrey fit from an archive");
    std::string rho, fit, gevrey_in, gevrey_out;
    long r = -1;
    gevrey_cmd->add_option("--config", common.config_path, "config file");
    gevrey_cmd->add_option("--in", gevrey_in, "input archive")->required();
    gevrey_cmd->add_option("--rho", rho, "norm weight rho");
    gevrey_cmd->add_option("--r", r, "norm weight r");
    gevrey_cmd->add_option("--fit", fit, "fit range min:max");
    gevrey_cmd->add_option("--out", gevrey_out, "output CSV")->required();

    auto* validate_cmd = app.add_subcommand("validate", "per-order residuals from an archive");
    std::string val_in, val_eps, val_out;
    validate_cmd->add_option("--config", common.config_path, "config file");
    validate_cmd->add_option("--in", val_in, "input archive")->required();
    validate_cmd->add_option("--eps", val_eps, "epsilon for the invariance residual");
    validate_cmd->add_option("--out", val_out, "output CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (series->parsed())
            return run_series(common, gamma, omega, order, digits, filter, grid, out_path);
        if (pade_cmd->parsed())
            return run_pade(in_path, theta, orders_text, log_mode, pade_out, common);
        if (gevrey_cmd->parsed()) return run_gevrey(gevrey_in, rho, r, fit, gevrey_out, common);
        if (validate_cmd->parsed()) return run_validate(val_in, val_eps, val_out, common);
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
