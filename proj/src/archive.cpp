#include "lind/archive.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lind {

namespace {

constexpr const char* kMagic = "lindstedt-archive";
constexpr int kVersion = 1;

std::string cstr(const BigComplex& z) { return z.re().to_string() + " " + z.im().to_string(); }

struct LineReader {
    std::istream& in;
    long line_no = 0;
    std::string line;

    bool next() {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty()) return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw FormatError(msg, line_no); }
};

std::vector<std::string> tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

long to_long(const std::string& s, const LineReader& r) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FormatError("expected an integer, got '" + s + "'", r.line_no);
    }
}

} // namespace

void save_archive(const LindstedtSeries& s, std::ostream& out) {
    out << kMagic << " " << kVersion << "\n";
    out << "gamma " << s.gamma << "\n";
    out << "omega " << s.omega_spec.name() << "\n";
    out << "omega_value " << s.omega.to_string() << "\n";
    out << "digits " << s.digits << "\n";
    out << "filter " << s.filter_digits << "\n";
    out << "grid " << s.grid_size << "\n";
    out << "order " << s.max_order() << "\n";
    out << "k " << s.k[0] << " " << s.k[1] << "\n";
    out << "kperp " << s.kperp[0] << " " << s.kperp[1] << "\n";
    out << "beta0 " << s.beta0.to_string() << "\n";
    out << "potential " << s.potential.modes().size() << "\n";
    for (const auto& m : s.potential.modes())
        out << "mode " << m.l[0] << " " << m.l[1] << " " << cstr(m.alpha[0]) << " "
            << cstr(m.alpha[1]) << "\n";
    for (long n = 0; n <= s.max_order(); ++n) {
        const auto& g = s.orders[static_cast<size_t>(n)];
        out << "order_block " << n << " beta " << s.betas[static_cast<size_t>(n)].to_string()
            << " provisional " << (s.beta_is_provisional[static_cast<size_t>(n)] ? 1 : 0) << " mu "
            << s.mus[static_cast<size_t>(n)][0].to_string() << " "
            << s.mus[static_cast<size_t>(n)][1].to_string() << "\n";
        out << "modes " << g.coeffs().size() << "\n";
        for (const auto& [l, c] : g.coeffs())
            out << l << " " << cstr(c[0]) << " " << cstr(c[1]) << "\n";
    }
    out << "end\n";
}

void save_archive_file(const LindstedtSeries& s, const std::string& path) {
    std::ostringstream os;
    save_archive(s, os);
    atomic_write_file(path, os.str());
}

LindstedtSeries load_archive(std::istream& in, int digits_override) {
    LineReader r{in};
    auto expect = [&](const char* key) -> std::vector<std::string> {
        if (!r.next()) r.fail(std::string("unexpected end of archive, expected '") + key + "'");
        auto t = tokens(r.line);
        if (t.empty() || t[0] != key) r.fail(std::string("expected '") + key + "', got '" + r.line + "'");
        return t;
    };

    auto head = expect(kMagic);
    if (head.size() != 2 || to_long(head[1], r) != kVersion)
        r.fail("unsupported archive version");

    auto tg = expect("gamma");
    auto tom = expect("omega");
    auto tov = expect("omega_value");
    auto td = expect("digits");
    auto tf = expect("filter");
    auto tgr = expect("grid");
    auto tor = expect("order");
    auto tk = expect("k");
    auto tkp = expect("kperp");
    auto tb0 = expect("beta0");
    auto tp = expect("potential");
    if (tg.size() != 2 || tom.size() != 2 || tov.size() != 2 || td.size() != 2 || tf.size() != 2 ||
        tgr.size() != 2 || tor.size() != 2 || tk.size() != 3 || tkp.size() != 3 ||
        tb0.size() != 2 || tp.size() != 2)
        r.fail("malformed header field");

    const int stored_digits = static_cast<int>(to_long(td[1], r));
    const int digits = digits_override > 0 ? digits_override : stored_digits;
    PrecisionContext ctx(digits);
    const mpfr_prec_t bits = ctx.bits();

    LindstedtSeries s(ctx);
    s.gamma = static_cast<int>(to_long(tg[1], r));
    s.omega_spec = FrequencySpec::parse(tom[1]);
    s.digits = digits;
    s.filter_digits = static_cast<int>(to_long(tf[1], r));
    s.grid_size = to_long(tgr[1], r);
    const long order = to_long(tor[1], r);
    s.k = {to_long(tk[1], r), to_long(tk[2], r)};
    s.kperp = {to_long(tkp[1], r), to_long(tkp[2], r)};
    s.beta0 = BigReal::from_string(tb0[1], bits);
    s.loaded_below_context = digits > stored_digits;

    const long n_modes = to_long(tp[1], r);
    std::vector<PotentialMode> modes;
    for (long i = 0; i < n_modes; ++i) {
        auto tm = expect("mode");
        if (tm.size() != 7) r.fail("malformed potential mode");
        PotentialMode pm;
        pm.l = {to_long(tm[1], r), to_long(tm[2], r)};
        pm.alpha = {BigComplex(BigReal::from_string(tm[3], bits), BigReal::from_string(tm[4], bits)),
                    BigComplex(BigReal::from_string(tm[5], bits), BigReal::from_string(tm[6], bits))};
        modes.push_back(std::move(pm));
    }
    s.potential = PotentialSpec(std::move(modes), ctx);
    s.omega = eval_frequency(s.omega_spec, ctx);
    s.omega_angle = s.omega * const_two_pi(bits);

    for (long n = 0; n <= order; ++n) {
        auto tb = expect("order_block");
        if (tb.size() != 9 || to_long(tb[1], r) != n || tb[2] != "beta" || tb[4] != "provisional" ||
            tb[6] != "mu")
            r.fail("malformed order block for order " + std::to_string(n));
        s.betas.push_back(BigReal::from_string(tb[3], bits));
        s.beta_is_provisional.push_back(to_long(tb[5], r) != 0);
        s.mus.push_back({BigReal::from_string(tb[7], bits), BigReal::from_string(tb[8], bits)});

        auto tm = expect("modes");
        if (tm.size() != 2) r.fail("malformed modes count in order " + std::to_string(n));
        const long count = to_long(tm[1], r);
        TrigPolyPair g(s.grid_size, ctx);
        for (long i = 0; i < count; ++i) {
            if (!r.next()) r.fail("truncated order block " + std::to_string(n));
            auto t = tokens(r.line);
            if (t.size() != 5) r.fail("malformed coefficient line in order " + std::to_string(n));
            const long l = to_long(t[0], r);
            g.set_coeff(l,
                        BigComplex(BigReal::from_string(t[1], bits), BigReal::from_string(t[2], bits)),
                        BigComplex(BigReal::from_string(t[3], bits), BigReal::from_string(t[4], bits)));
        }
        s.orders.push_back(std::move(g));
        s.cohom_residuals.emplace_back(bits);
        s.rhs_sup.emplace_back(bits);
    }
    expect("end");
    return s;
}

LindstedtSeries load_archive_file(const std::string& path, int digits_override) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open archive: " + path);
    return load_archive(in, digits_override);
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write file: " + tmp);
        out << content;
        out.flush();
        if (!out) throw InputError("write failed: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw InputError("rename failed for " + path + ": " + ec.message());
}

} // namespace lind
