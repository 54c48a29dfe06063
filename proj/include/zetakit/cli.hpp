#ifndef ZETAKIT_CLI_HPP
#define ZETAKIT_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "extended.hpp"
#include "identities.hpp"
#include "selftest.hpp"
#include "zeta.hpp"

namespace zetakit::cli {

enum ExitCode : int { ok = 0, usage = 1, domain = 2, convergence = 3, failure = 4 };

class UsageError : public Error {
public:
    using Error::Error;
};

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i").
inline Complex parse_complex(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (c != ' ')
            t += c;
    if (t.empty())
        throw UsageError("empty number");
    auto to_double = [&](const std::string& part) {
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed number '" + text + "'");
        }
        if (used != part.size())
            throw UsageError("malformed number '" + text + "'");
        return v;
    };
    if (t.back() != 'i')
        return to_double(t);
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;)
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    const std::string re = split == std::string::npos ? "" : t.substr(0, split);
    std::string im = split == std::string::npos ? t : t.substr(split);
    if (im.empty() || im == "+")
        im = "1";
    else if (im == "-")
        im = "-1";
    return {re.empty() ? 0.0 : to_double(re), to_double(im)};
}

/// A parameter value list: a single complex literal or "start:stop:count".
inline std::vector<Complex> parse_values(const std::string& text)
{
    const auto first = text.find(':');
    if (first == std::string::npos)
        return {parse_complex(text)};
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
        throw UsageError("grid must be start:stop:count, got '" + text + "'");
    const Complex a = parse_complex(text.substr(0, first));
    const Complex b = parse_complex(text.substr(first + 1, second - first - 1));
    const std::string cs = text.substr(second + 1);
    int count = 0;
    try {
        std::size_t used = 0;
        count = std::stoi(cs, &used);
        if (used != cs.size())
            throw UsageError("");
    } catch (const std::exception&) {
        throw UsageError("grid count must be an integer, got '" + cs + "'");
    }
    if (count < 1)
        throw UsageError("grid count must be >= 1");
    std::vector<Complex> out;
    for (int k = 0; k < count; ++k)
        out.push_back(count == 1 ? a : a + (b - a) * (static_cast<double>(k) / (count - 1)));
    return out;
}

struct CliConfig {
    std::string command;
    std::string function;
    std::map<std::string, std::string> params;  // raw parameter text
    Strategy strategy = Strategy::Auto;
    std::string format;
    std::string output_path;
    std::vector<std::string> only;
    std::string inject_fault;
    bool quick = false;
    bool corrupt_bernoulli = false;
    ExtConfig ext;
};

struct FunctionInfo {
    std::vector<std::string> params;
    bool takes_strategy = false;
    std::function<EvalResult(const std::map<std::string, Complex>&, const CliConfig&)> eval;
};

namespace detail {

inline double real_arg(Complex v, const char* name)
{
    if (v.imag() != 0.0)
        throw DomainError(std::string(name) + " must be real");
    return v.real();
}

} // namespace detail

inline const std::map<std::string, FunctionInfo>& functions()
{
    using P = std::map<std::string, Complex>;
    static const std::map<std::string, FunctionInfo> table = {
        {"zeta", {{"s"}, false, [](const P& p, const CliConfig& c) { return riemann_zeta(p.at("s"), ZetaRoute::euler_maclaurin, c.ext.series); }}},
        {"zeta_fe", {{"s"}, false, [](const P& p, const CliConfig& c) { return riemann_zeta(p.at("s"), ZetaRoute::functional_equation, c.ext.series); }}},
        {"hurwitz", {{"s", "a"}, false, [](const P& p, const CliConfig& c) { return hurwitz_zeta(p.at("s"), p.at("a"), c.ext.series); }}},
        {"eta", {{"s"}, false, [](const P& p, const CliConfig& c) { return dirichlet_eta(p.at("s"), c.ext.series); }}},
        {"chi", {{"s"}, false, [](const P& p, const CliConfig&) { return chi_ratio(p.at("s")); }}},
        {"lerch", {{"z", "s", "a"}, false, [](const P& p, const CliConfig& c) { return lerch_phi({p.at("z"), p.at("s"), p.at("a")}, c.ext.series); }}},
        {"polylog", {{"z", "s"}, false, [](const P& p, const CliConfig& c) { return polylog(p.at("z"), p.at("s"), c.ext.series); }}},
        {"ln_gamma", {{"s"}, false, [](const P& p, const CliConfig&) { return EvalResult{ln_gamma(p.at("s")), 0.0, "lanczos", 1}; }}},
        {"ext_fd", {{"nu", "s", "x"}, true, [](const P& p, const CliConfig& c) { return ext_fd({p.at("nu"), p.at("s"), p.at("x")}, c.strategy, c.ext); }}},
        {"ext_be", {{"nu", "s", "x"}, true, [](const P& p, const CliConfig& c) { return ext_be({p.at("nu"), p.at("s"), p.at("x")}, c.strategy, c.ext); }}},
        {"fd_classical", {{"s", "x"}, false, [](const P& p, const CliConfig& c) {
             return fd_classical(p.at("s"), detail::real_arg(p.at("x"), "x"), c.ext);
         }}},
        {"be_classical", {{"s", "x"}, false, [](const P& p, const CliConfig& c) {
             return be_classical(p.at("s"), detail::real_arg(p.at("x"), "x"), c.ext);
         }}},
    };
    return table;
}

namespace detail {

inline std::string fmt(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline std::string sci(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline nlohmann::ordered_json complex_json(Complex v, int digits)
{
    nlohmann::ordered_json j;
    // round-trip through the printed text so JSON and CSV carry the same digits
    j["re"] = std::stod(fmt(v.real(), digits));
    j["im"] = std::stod(fmt(v.imag(), digits));
    return j;
}

inline const char* status_of(const std::exception& e)
{
    if (dynamic_cast<const PoleError*>(&e))
        return "pole";
    if (dynamic_cast<const DomainError*>(&e))
        return "domain_error";
    if (dynamic_cast<const ConvergenceError*>(&e))
        return "convergence_error";
    return "error";
}

struct Output {
    std::ostream* stream;
    std::unique_ptr<std::ofstream> file;

    explicit Output(const CliConfig& cfg, std::ostream& fallback) : stream(&fallback)
    {
        if (!cfg.output_path.empty()) {
            file = std::make_unique<std::ofstream>(cfg.output_path, std::ios::binary);
            if (!*file)
                throw UsageError("cannot open output file '" + cfg.output_path + "'");
            stream = file.get();
        }
    }
    std::ostream& operator*() { return *stream; }
};

inline const FunctionInfo& lookup(const CliConfig& cfg)
{
    const auto& fns = functions();
    auto it = fns.find(cfg.function);
    if (it == fns.end()) {
        std::string names;
        for (const auto& [k, v] : fns)
            names += (names.empty() ? "" : ", ") + k;
        throw UsageError("unknown function '" + cfg.function + "' (known: " + names + ")");
    }
    if (cfg.strategy != Strategy::Auto && !it->second.takes_strategy)
        throw UsageError("--strategy does not apply to " + cfg.function);
    for (const auto& [k, v] : cfg.params)
        if (std::find(it->second.params.begin(), it->second.params.end(), k) == it->second.params.end())
            throw UsageError("--" + k + " does not apply to " + cfg.function);
    return it->second;
}

} // namespace detail

inline int cmd_eval(const CliConfig& cfg, std::ostream& out)
{
    const auto& info = detail::lookup(cfg);
    std::map<std::string, Complex> point;
    for (const auto& name : info.params) {
        auto it = cfg.params.find(name);
        if (it == cfg.params.end())
            throw UsageError(cfg.function + " requires --" + name);
        const auto vals = parse_values(it->second);
        if (vals.size() != 1)
            throw UsageError("eval takes a single point; use 'table' for grids");
        point[name] = vals[0];
    }
    const auto r = info.eval(point, cfg);
    detail::Output o(cfg, out);
    const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
    if (fmt == "json") {
        nlohmann::ordered_json j;
        j["value"] = detail::complex_json(r.value, 15);
        j["err_estimate"] = r.err_estimate;
        j["strategy"] = r.strategy;
        j["work"] = r.work;
        *o << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        *o << "value_re,value_im,err_estimate,strategy,work\n";
        *o << detail::fmt(r.value.real(), 15) << ',' << detail::fmt(r.value.imag(), 15) << ','
           << detail::sci(r.err_estimate) << ',' << r.strategy << ',' << r.work << '\n';
    } else {
        *o << "value        " << format_complex(r.value, 15) << '\n'
           << "err_estimate " << detail::sci(r.err_estimate) << '\n'
           << "strategy     " << r.strategy << '\n'
           << "work         " << r.work << '\n';
    }
    return ok;
}

inline int cmd_table(const CliConfig& cfg, std::ostream& out)
{
    const auto& info = detail::lookup(cfg);
    std::vector<Axis> axes;
    bool gridded = false;
    for (const auto& name : info.params) {
        auto it = cfg.params.find(name);
        if (it == cfg.params.end())
            throw UsageError(cfg.function + " requires --" + name);
        gridded = gridded || it->second.find(':') != std::string::npos;
        axes.push_back({name, parse_values(it->second)});
    }
    if (!gridded)
        throw UsageError("table needs at least one gridded parameter (start:stop:count)");
    const auto grid = make_grid(axes);

    struct Row {
        Point p;
        EvalResult r;
        std::string status;
    };
    std::vector<Row> rows;
    for (const auto& p : grid) {
        std::map<std::string, Complex> point;
        for (const auto& name : info.params)
            point[name] = p[name];
        Row row{p, {}, "ok"};
        try {
            row.r = info.eval(point, cfg);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            row.status = detail::status_of(e);
            row.r.value = Complex(std::nan(""), std::nan(""));
            row.r.err_estimate = std::nan("");
        }
        rows.push_back(row);
    }

    detail::Output o(cfg, out);
    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    if (fmt == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json j;
            for (const auto& name : info.params)
                j[name] = detail::complex_json(row.p[name], 17);
            if (row.status == "ok") {
                j["value"] = detail::complex_json(row.r.value, 15);
                j["err_estimate"] = std::stod(detail::sci(row.r.err_estimate));
            } else {
                j["value"] = nullptr;
                j["err_estimate"] = nullptr;
            }
            j["strategy"] = row.r.strategy;
            j["status"] = row.status;
            arr.push_back(j);
        }
        *o << arr.dump(2) << '\n';
    } else if (fmt == "csv") {
        for (const auto& name : info.params)
            *o << name << "_re," << name << "_im,";
        *o << "value_re,value_im,err_estimate,strategy,status\n";
        for (const auto& row : rows) {
            for (const auto& name : info.params)
                *o << detail::fmt(row.p[name].real(), 17) << ',' << detail::fmt(row.p[name].imag(), 17) << ',';
            *o << detail::fmt(row.r.value.real(), 15) << ',' << detail::fmt(row.r.value.imag(), 15) << ','
               << detail::sci(row.r.err_estimate) << ',' << row.r.strategy << ',' << row.status << '\n';
        }
    } else {
        for (const auto& row : rows) {
            std::string line;
            for (const auto& name : info.params)
                line += name + "=" + format_complex(row.p[name], 6) + "  ";
            if (row.status == "ok")
                line += format_complex(row.r.value, 15) + "  err " + detail::sci(row.r.err_estimate) + "  " +
                        row.r.strategy;
            else
                line += row.status;
            *o << line << '\n';
        }
    }
    return ok;
}

inline int cmd_check(const CliConfig& cfg, std::ostream& out)
{
    std::optional<ScopedFault> fault_guard;
    if (!cfg.inject_fault.empty()) {
        FaultTarget t;
        try {
            t = fault::parse(cfg.inject_fault);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        fault_guard.emplace(t);
    }
    std::vector<IdentityReport> reports;
    try {
        reports = run_catalog(cfg.only);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    detail::Output o(cfg, out);
    if (cfg.format == "text") {
        for (const auto& r : reports)
            *o << (r.pass ? "PASS " : "FAIL ") << r.name << "  points=" << r.points_tested
               << "  max_rel_err=" << detail::sci(r.max_rel_err) << "  worst=" << r.worst_point << '\n';
    } else {
        *o << to_json(reports).dump(2) << '\n';
    }
    for (const auto& r : reports)
        if (!r.pass)
            return failure;
    return ok;
}

inline int cmd_selftest(const CliConfig& cfg, std::ostream& out)
{
    std::optional<ScopedFault> fault_guard;
    if (cfg.corrupt_bernoulli)
        fault_guard.emplace(FaultTarget::bernoulli);
    const auto res = run_selftest(cfg.quick);
    detail::Output o(cfg, out);
    if (cfg.format == "json") {
        *o << res.json().dump(2) << '\n';
    } else {
        for (const auto& g : res.golden)
            *o << (g.pass ? "PASS " : "FAIL ") << "golden   " << g.name << "  rel_err=" << detail::sci(g.rel_err)
               << '\n';
        for (const auto& r : res.identities)
            *o << (r.pass ? "PASS " : "FAIL ") << "identity " << r.name << "  max_rel_err=" << detail::sci(r.max_rel_err)
               << '\n';
        *o << "selftest: " << (res.pass() ? "PASS" : "FAIL") << '\n';
    }
    return res.pass() ? ok : failure;
}

inline void apply_environment(CliConfig& cfg)
{
    if (const char* env = std::getenv("ZETAKIT_MAX_TERMS")) {
        const std::string s = env;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || v == 0)
            throw UsageError("ZETAKIT_MAX_TERMS must be a positive integer, got '" + s + "'");
        cfg.ext.series.max_terms = v;
    }
}

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"zetakit: zeta-family, extended Fermi-Dirac and Bose-Einstein functions"};
    app.require_subcommand(1);
    CliConfig cfg;
    std::string strategy = "auto";

    auto add_point_options = [&](CLI::App* sub) {
        sub->add_option("--fn", cfg.function, "function name")->required();
        for (const char* p : {"nu", "s", "x", "a", "z"})
            sub->add_option_function<std::string>(
                std::string("--") + p, [&cfg, p](const std::string& v) { cfg.params[p] = v; },
                "parameter value (a, a+bi, or start:stop:count)");
        sub->add_option("--strategy", strategy, "xseries|weylquad|powerseriesx|nuseries|negint|auto");
        sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output", cfg.output_path, "write to a file instead of stdout");
    };

    auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
    add_point_options(eval);
    auto* table = app.add_subcommand("table", "evaluate a function over a parameter grid");
    add_point_options(table);
    auto* check_cmd = app.add_subcommand("check", "run the identity catalog");
    check_cmd->add_option("--only", cfg.only, "identity name (repeatable)");
    check_cmd->add_option("--inject-fault", cfg.inject_fault,
                          "perturb one function by 1e-6: hurwitz_zeta|lerch_phi|ext_fd|ext_be|bernoulli|ln_gamma");
    check_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
    check_cmd->add_option("--output", cfg.output_path);
    auto* selftest = app.add_subcommand("selftest", "golden values plus the reduced identity catalog");
    selftest->add_flag("--quick", cfg.quick, "golden values and a subset of identities");
    selftest->add_flag("--corrupt-bernoulli", cfg.corrupt_bernoulli, "perturb the Bernoulli table (debug)");
    selftest->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
    selftest->add_option("--output", cfg.output_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        apply_environment(cfg);
        try {
            cfg.strategy = parse_strategy(strategy);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        if (eval->parsed())
            return cmd_eval(cfg, out);
        if (table->parsed())
            return cmd_table(cfg, out);
        if (check_cmd->parsed())
            return cmd_check(cfg, out);
        return cmd_selftest(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return domain;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return convergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return convergence;
    }
}

} // namespace zetakit::cli

#endif // ZETAKIT_CLI_HPP
