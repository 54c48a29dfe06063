#ifndef ZETAKIT_SELFTEST_HPP
#define ZETAKIT_SELFTEST_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "extended.hpp"
#include "identities.hpp"
#include "zeta.hpp"

namespace zetakit {

struct GoldenReport {
    std::string name;
    Complex value{};
    Complex reference{};
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct GoldenCase {
    std::string name;
    std::function<Complex()> eval;
    Complex reference;
    double tol;
};

namespace detail {

/// sum_{n=1}^{terms} e^{-n} / n^2, summed directly
inline double li2_inv_e_direct(int terms = 200)
{
    double acc = 0.0;
    for (int n = terms; n >= 1; --n)
        acc += std::exp(-static_cast<double>(n)) / (static_cast<double>(n) * n);
    return acc;
}

} // namespace detail

inline std::vector<GoldenCase> golden_cases()
{
    const double pi2 = pi * pi;
    return {
        {"zeta(2)", [] { return riemann_zeta(2.0).value; }, pi2 / 6.0, 1e-11},
        {"zeta(0)", [] { return riemann_zeta(0.0).value; }, -0.5, 1e-11},
        {"zeta(-1)", [] { return riemann_zeta(-1.0).value; }, -1.0 / 12.0, 1e-11},
        {"eta(1)", [] { return dirichlet_eta(1.0).value; }, ln2, 1e-11},
        {"eta(2)", [] { return dirichlet_eta(2.0).value; }, pi2 / 12.0, 1e-11},
        {"zeta(2,1/2)", [] { return hurwitz_zeta(2.0, 0.5).value; }, pi2 / 2.0, 1e-11},
        {"ext_fd(0,2,0)", [] { return ext_fd({0.0, 2.0, 0.0}).value; }, pi2 / 12.0, 1e-11},
        {"ext_fd(1,2,0)", [] { return ext_fd({1.0, 2.0, 0.0}).value; }, 1.0 - pi2 / 12.0, 1e-11},
        {"ext_be(0,2,0)", [] { return ext_be({0.0, 2.0, 0.0}).value; }, pi2 / 6.0, 1e-11},
        {"ext_be(0,-1,0)", [] { return ext_be({0.0, -1.0, 0.0}).value; }, -1.0 / 12.0, 1e-11},
        {"li2(exp(-1))", [] { return polylog(std::exp(-1.0), 2.0).value; }, detail::li2_inv_e_direct(), 1e-11},
        {"ext_be(0,2,1)", [] { return ext_be({0.0, 2.0, 1.0}).value; }, detail::li2_inv_e_direct(), 1e-11},
        {"be_classical(1,-1)", [] { return be_classical(1.0, -1.0).value; }, -std::log1p(-std::exp(-1.0)), 1e-11},
        {"fd_classical(1,0)", [] { return fd_classical(1.0, 0.0).value; }, ln2, 1e-11},
        {"ext_be(0,2,0) quadrature", [] { return ext_be({0.0, 2.0, 0.0}, Strategy::WeylQuad).value; }, pi2 / 6.0,
         1e-9},
    };
}

inline std::vector<GoldenReport> run_golden()
{
    std::vector<GoldenReport> out;
    for (const auto& c : golden_cases()) {
        GoldenReport r{c.name, {}, c.reference, inf, c.tol, false};
        try {
            r.value = c.eval();
            r.rel_err = residual(r.value, c.reference);
            r.pass = r.rel_err <= c.tol;
        } catch (const std::exception&) {
            r.pass = false;
        }
        out.push_back(r);
    }
    return out;
}

inline nlohmann::ordered_json to_json(const GoldenReport& r)
{
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["value"] = format_complex(r.value);
    j["reference"] = format_complex(r.reference);
    j["rel_err"] = std::isfinite(r.rel_err) ? nlohmann::ordered_json(r.rel_err) : nullptr;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    return j;
}

struct SelftestResult {
    std::vector<GoldenReport> golden;
    std::vector<IdentityReport> identities;

    bool pass() const
    {
        for (const auto& g : golden)
            if (!g.pass)
                return false;
        for (const auto& r : identities)
            if (!r.pass)
                return false;
        return true;
    }

    nlohmann::ordered_json json() const
    {
        nlohmann::ordered_json j;
        auto g = nlohmann::ordered_json::array();
        for (const auto& r : golden)
            g.push_back(to_json(r));
        j["golden"] = g;
        j["identities"] = to_json(identities);
        return j;
    }
};

/// Identities exercised by the quick selftest.
inline const std::vector<std::string>& quick_identities()
{
    static const std::vector<std::string> names = {"corrected-2.5", "diff-eq-7.2", "duality-6.7-corrected",
                                                   "functional-eq-1.2", "hurwitz-diff-7.11",
                                                   "negint-5.9-7.8-7.9"};
    return names;
}

inline SelftestResult run_selftest(bool quick = false)
{
    SelftestResult res;
    res.golden = run_golden();
    res.identities = run_catalog(quick ? quick_identities() : std::vector<std::string>{}, {true});
    return res;
}

} // namespace zetakit

#endif // ZETAKIT_SELFTEST_HPP
