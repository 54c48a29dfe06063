#ifndef ZETAKIT_IDENTITIES_HPP
#define ZETAKIT_IDENTITIES_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "extended.hpp"
#include "numeric_core.hpp"
#include "zeta.hpp"

namespace zetakit {

/// A named parameter point; insertion order is kept for labels.
class Point {
public:
    Point& set(std::string key, Complex v)
    {
        for (auto& kv : values_)
            if (kv.first == key) {
                kv.second = v;
                return *this;
            }
        values_.emplace_back(std::move(key), v);
        return *this;
    }

    Complex operator[](std::string_view key) const
    {
        for (const auto& kv : values_)
            if (kv.first == key)
                return kv.second;
        throw DomainError("point has no parameter '" + std::string(key) + "'");
    }

    double real(std::string_view key) const { return (*this)[key].real(); }
    int integer(std::string_view key) const { return static_cast<int>(std::lround((*this)[key].real())); }

    bool has(std::string_view key) const
    {
        return std::any_of(values_.begin(), values_.end(), [&](const auto& kv) { return kv.first == key; });
    }

    std::string label() const
    {
        std::string out;
        for (const auto& [k, v] : values_) {
            if (!out.empty())
                out += ',';
            out += k + '=' + format_complex(v, 6);
        }
        return out;
    }

private:
    std::vector<std::pair<std::string, Complex>> values_;
};

using Axis = std::pair<std::string, std::vector<Complex>>;

/// Cartesian product of the axes, first axis varying slowest.
inline std::vector<Point> make_grid(const std::vector<Axis>& axes)
{
    std::vector<Point> grid(1);
    for (const auto& [name, vals] : axes) {
        std::vector<Point> next;
        next.reserve(grid.size() * vals.size());
        for (const auto& p : grid)
            for (auto v : vals) {
                Point q = p;
                q.set(name, v);
                next.push_back(std::move(q));
            }
        grid = std::move(next);
    }
    return grid;
}

using Evaluator = std::function<Complex(const Point&)>;
using Guard = std::function<bool(const Point&)>;

struct IdentitySpec {
    std::string name;
    Evaluator lhs;
    Evaluator rhs;
    std::vector<Point> grid;
    double tol = 1e-10;
    Guard domain_guard;  // empty accepts every point
};

struct IdentityReport {
    std::string name;
    std::size_t points_tested = 0;
    double max_rel_err = 0.0;
    double mean_rel_err = 0.0;
    std::string worst_point;
    bool pass = false;
};

/// Near-zero threshold below which residuals are compared absolutely.
inline constexpr double near_zero = 1e-12;

inline double residual(Complex l, Complex r)
{
    const double scale = std::max(std::abs(l), std::abs(r));
    const double diff = std::abs(l - r);
    if (scale < near_zero)
        return diff;
    return diff / std::max(scale, 1e-30);
}

inline IdentityReport check(const IdentitySpec& spec)
{
    IdentityReport rep;
    rep.name = spec.name;
    double total = 0.0;
    bool failed = false;
    for (const auto& p : spec.grid) {
        if (spec.domain_guard && !spec.domain_guard(p))
            continue;
        ++rep.points_tested;
        double err;
        try {
            err = residual(spec.lhs(p), spec.rhs(p));
            if (std::isnan(err))
                err = inf;
        } catch (const std::exception& e) {
            if (!failed)
                rep.worst_point = p.label() + ": " + e.what();
            failed = true;
            rep.max_rel_err = inf;
            total = inf;
            continue;
        }
        total += err;
        if (!failed && (err > rep.max_rel_err || rep.worst_point.empty())) {
            rep.max_rel_err = err;
            rep.worst_point = p.label();
        }
    }
    rep.mean_rel_err = rep.points_tested ? total / static_cast<double>(rep.points_tested) : 0.0;
    rep.pass = !failed && rep.points_tested > 0 && rep.max_rel_err <= spec.tol;
    return rep;
}

inline nlohmann::ordered_json to_json(const IdentityReport& r)
{
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["points_tested"] = r.points_tested;
    j["max_rel_err"] = std::isfinite(r.max_rel_err) ? nlohmann::ordered_json(r.max_rel_err) : nullptr;
    j["mean_rel_err"] = std::isfinite(r.mean_rel_err) ? nlohmann::ordered_json(r.mean_rel_err) : nullptr;
    j["worst_point"] = r.worst_point;
    j["pass"] = r.pass;
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<IdentityReport>& reports)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    return arr;
}

namespace detail {

inline Complex fd(Complex nu, Complex s, Complex x, Strategy st = Strategy::Auto)
{
    return ext_fd({nu, s, x}, st).value;
}

inline Complex be(Complex nu, Complex s, Complex x, Strategy st = Strategy::Auto)
{
    return ext_be({nu, s, x}, st).value;
}

inline Complex zeta_h(Complex s, Complex a)
{
    return hurwitz_zeta(s, a).value;
}

inline Complex cpow_neg(Complex base, Complex s)
{
    return pow_neg(base, s);
}

inline std::vector<Complex> reals(std::initializer_list<double> v)
{
    return {v.begin(), v.end()};
}

// Euler polynomials from E_n(x) = x^n - 1/2 sum_{k<n} C(n,k) E_k(x)
inline Complex euler_by_recurrence(int n, Complex x)
{
    std::vector<Complex> e(n + 1);
    std::vector<double> row{1.0};  // binomial row n
    for (int m = 0; m <= n; ++m) {
        if (m > 0) {
            std::vector<double> next(m + 1, 1.0);
            for (int k = 1; k < m; ++k)
                next[k] = row[k - 1] + row[k];
            row = std::move(next);
        }
        Complex acc = std::pow(x, m);
        for (int k = 0; k < m; ++k)
            acc -= 0.5 * row[k] * e[k];
        e[m] = acc;
    }
    return e[n];
}

} // namespace detail

struct CatalogOptions {
    bool reduced = false;  // smaller grids (selftest)
};

//
// The identity catalog, sorted by name.
//
inline std::vector<IdentitySpec> catalog(const CatalogOptions& opt = {})
{
    using namespace detail;
    const bool red = opt.reduced;
    const Complex I(0.0, 1.0);
    const auto nus = red ? reals({0.0, 0.5}) : reals({0.0, 0.5, 1.0, 2.3});
    const std::vector<Complex> ss = red ? std::vector<Complex>{1.5, {2.5, 2.0}}
                                        : std::vector<Complex>{1.5, 2.0, 3.0, {2.5, 2.0}};
    const auto xs = red ? reals({0.0, 1.0}) : reals({0.0, 0.25, 1.0, 3.0});
    auto filter = [](std::vector<Complex> v, auto pred) {
        v.erase(std::remove_if(v.begin(), v.end(), [&](Complex c) { return !pred(c); }), v.end());
        return v;
    };
    const auto x0_needs_sigma1 = [](const Point& p) { return p["x"] != Complex(0.0) || p["s"].real() > 1.0; };

    std::vector<IdentitySpec> out;

    // Phi_{2nu}(s;x) = Psi_{2nu}(s;x) - 2^{1-s} Psi_nu(s;2x)
    out.push_back({"bisection-6.1",
                   [](const Point& p) { return fd(2.0 * p["nu"], p["s"], p["x"]); },
                   [](const Point& p) {
                       const Complex s = p["s"];
                       return be(2.0 * p["nu"], s, p["x"]) -
                              std::exp((1.0 - s) * ln2) * be(p["nu"], s, 2.0 * p["x"]);
                   },
                   make_grid({{"nu", nus}, {"s", ss}, {"x", xs}}), 1e-10, x0_needs_sigma1});

    // Phi_nu(s;0) = 2^{-s} [zeta(s,(nu+1)/2) - zeta(s,(nu+2)/2)]
    {
        auto s_ext = ss;
        if (!red) {
            s_ext.push_back(0.5);
            s_ext.push_back({0.5, 3.0});
        }
        out.push_back({"cor-6.12-corrected",
                       [](const Point& p) { return fd(p["nu"], p["s"], 0.0, Strategy::XSeries); },
                       [](const Point& p) {
                           const Complex s = p["s"], nu = p["nu"];
                           return std::exp(-s * ln2) * (zeta_h(s, 0.5 * (nu + 1.0)) - zeta_h(s, 0.5 * (nu + 2.0)));
                       },
                       make_grid({{"nu", nus}, {"s", s_ext}})});
    }

    // zeta(2n) = (-1)^{n+1} (2 pi)^{2n} B_{2n} / (2 (2n)!)
    out.push_back({"corrected-2.5",
                   [](const Point& p) { return riemann_zeta(2.0 * p.integer("n")).value; },
                   [](const Point& p) {
                       const int n = p.integer("n");
                       double fact = 1.0;
                       for (int k = 2; k <= 2 * n; ++k)
                           fact *= k;
                       const double sign = (n % 2 == 0) ? -1.0 : 1.0;
                       return Complex(sign * std::pow(2.0 * pi, 2 * n) * bernoulli_number_value(2 * n) / (2.0 * fact));
                   },
                   make_grid({{"n", red ? reals({0, 1, 2, 5}) : reals({0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 12})}})});

    // E_n(x) = 2/(n+1) [B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)]
    out.push_back({"corrected-2.6",
                   [](const Point& p) { return euler_by_recurrence(p.integer("n"), p["x"]); },
                   [](const Point& p) {
                       const int n = p.integer("n");
                       const Complex x = p["x"];
                       return 2.0 / (n + 1) *
                              (bernoulli_poly(n + 1, x) - std::ldexp(1.0, n + 1) * bernoulli_poly(n + 1, 0.5 * x));
                   },
                   make_grid({{"n", red ? reals({0, 1, 3, 6}) : reals({0, 1, 2, 3, 4, 5, 6, 8, 10, 12})},
                              {"x", {0.0, 0.5, 1.0, 2.3, -1.7, {0.3, 0.4}}}})});

    // Phi_{nu+1}(s;x) + Phi_nu(s;x) = (nu+1)^{-s} e^{-(nu+1)x}
    out.push_back({"diff-eq-7.2",
                   [](const Point& p) {
                       const Complex nu = p["nu"], s = p["s"], x = p["x"];
                       return fd(nu + 1.0, s, x) + fd(nu, s, x);
                   },
                   [](const Point& p) {
                       const Complex a = p["nu"] + 1.0;
                       return cpow_neg(a, p["s"]) * std::exp(-a * p["x"]);
                   },
                   make_grid({{"nu", nus}, {"s", ss}, {"x", xs}})});

    // Phi_nu(s;0) + Phi_{nu-1}(s;0) = nu^{-s}, nu >= 1
    out.push_back({"diff-eq-7.6",
                   [](const Point& p) {
                       const Complex nu = p["nu"], s = p["s"];
                       return fd(nu, s, 0.0) + fd(nu - 1.0, s, 0.0);
                   },
                   [](const Point& p) { return cpow_neg(p["nu"], p["s"]); },
                   make_grid({{"nu", red ? reals({1.0, 2.3}) : reals({1.0, 1.5, 2.3, 3.0})}, {"s", ss}})});

    // Psi_nu(s;x) = e^{i(nu+1)pi} Phi_nu(s; x + pi i)
    {
        auto dx = xs;
        if (!red)
            dx.push_back({0.5, 1.0});
        out.push_back({"duality-6.7-corrected",
                       [](const Point& p) { return be(p["nu"], p["s"], p["x"], Strategy::XSeries); },
                       [I](const Point& p) {
                           const Complex nu = p["nu"];
                           return std::exp(I * pi * (nu + 1.0)) *
                                  fd(nu, p["s"], p["x"] + I * pi, Strategy::XSeries);
                       },
                       make_grid({{"nu", nus}, {"s", ss}, {"x", dx}}), 1e-9, x0_needs_sigma1});
    }

    // Phi_{nu+1}(s;x) = 2^{-s} [Psi_{nu/2}(s;2x) - Psi_{(nu+1)/2}(s;2x)]
    out.push_back({"evenodd-6.10",
                   [](const Point& p) { return fd(p["nu"] + 1.0, p["s"], p["x"]); },
                   [](const Point& p) {
                       const Complex nu = p["nu"], s = p["s"], x2 = 2.0 * p["x"];
                       return std::exp(-s * ln2) * (be(0.5 * nu, s, x2) - be(0.5 * (nu + 1.0), s, x2));
                   },
                   make_grid({{"nu", nus}, {"s", ss}, {"x", xs}}), 1e-10,
                   [x0_needs_sigma1](const Point& p) {
                       const Complex nu = p["nu"], s = p["s"];
                       const bool nu_ok = nu.real() > 0.0 ||
                                          (nu.real() == 0.0 && nu.imag() != 0.0 && s.real() > 0.0 && s.real() < 1.0);
                       return nu_ok && x0_needs_sigma1(p);
                   }});

    // F_{s-1}(x) = B_{s-1}(x) - 2^{1-s} B_{s-1}(2x), x <= 0
    out.push_back({"fd-be-6.6",
                   [](const Point& p) { return fd_classical(p["s"], p.real("x")).value; },
                   [](const Point& p) {
                       const Complex s = p["s"];
                       const double x = p.real("x");
                       return be_classical(s, x).value - std::exp((1.0 - s) * ln2) * be_classical(s, 2.0 * x).value;
                   },
                   make_grid({{"s", ss}, {"x", red ? reals({-1.0}) : reals({-2.0, -1.0, -0.25})}})});

    // zeta(s) = chi(s) zeta(1-s)
    {
        std::vector<Complex> pts;
        const int count = red ? 10 : 50;
        for (int k = 0; k < count; ++k) {
            const double sigma = -3.9 + 7.3 * (k + 0.5) / count;
            const double t = (k % 5 == 0) ? 0.0 : 1.3 * (k % 5) + 0.7 * (k % 3);
            const Complex s{sigma, (k % 2 == 0) ? t : -t};
            if (std::abs(s - 1.0) < 0.05 || (s.imag() == 0.0 && std::abs(sigma - std::round(sigma)) < 0.05))
                pts.push_back(s + Complex(0.1, 0.0));
            else
                pts.push_back(s);
        }
        out.push_back({"functional-eq-1.2",
                       [](const Point& p) { return riemann_zeta(p["s"], ZetaRoute::euler_maclaurin).value; },
                       [](const Point& p) { return riemann_zeta(p["s"], ZetaRoute::functional_equation).value; },
                       make_grid({{"s", pts}}), 1e-9});
    }

    // zeta(s,nu) - zeta(s,nu+1) = nu^{-s}
    {
        auto s_ext = ss;
        s_ext.push_back({0.5, 3.0});
        s_ext.push_back(-2.5);
        out.push_back({"hurwitz-diff-7.11",
                       [](const Point& p) { return zeta_h(p["s"], p["nu"]) - zeta_h(p["s"], p["nu"] + 1.0); },
                       [](const Point& p) { return cpow_neg(p["nu"], p["s"]); },
                       make_grid({{"nu", red ? reals({1.0}) : reals({1.0, 1.5, 2.3, 4.0})}, {"s", s_ext}})});
    }

    // Phi(z,s,nu) - z Phi(z,s,nu+1) = nu^{-s}
    {
        std::vector<Complex> zs;
        for (double x : {0.0, 0.25, 1.0, 3.0})
            zs.push_back(-std::exp(-x));
        zs.push_back({0.0, 0.6});
        if (!red)
            zs.push_back(std::exp(Complex(0.0, pi / 3.0)));
        out.push_back({"lerch-diff-7.7",
                       [](const Point& p) {
                           const Complex z = p["z"], s = p["s"], nu = p["nu"];
                           return lerch_phi({z, s, nu}).value - z * lerch_phi({z, s, nu + 1.0}).value;
                       },
                       [](const Point& p) { return cpow_neg(p["nu"], p["s"]); },
                       make_grid({{"nu", red ? reals({1.0}) : reals({1.0, 1.5, 2.3})}, {"s", ss}, {"z", zs}})});
    }

    // Psi_a(s;x) = q^{-s} sum_j e^{-(a+j)x} Phi(e^{-qx}, s, (a+j)/q)
    out.push_back({"mult-5.10",
                   [](const Point& p) { return be(p["a"], p["s"], p["x"]); },
                   [](const Point& p) {
                       const Complex a = p["a"], s = p["s"], x = p["x"];
                       const int q = p.integer("q");
                       const Complex zq = std::exp(-static_cast<double>(q) * x);
                       Complex acc = 0.0;
                       for (int j = 1; j <= q; ++j) {
                           const Complex b = (a + static_cast<double>(j)) / static_cast<double>(q);
                           acc += std::exp(-(a + static_cast<double>(j)) * x) * lerch_phi({zq, s, b}).value;
                       }
                       return std::pow(Complex(q), -s) * acc;
                   },
                   make_grid({{"a", nus}, {"s", ss}, {"x", xs}, {"q", reals({2, 3})}})});

    // zeta(s,a+1) = q^{-s} sum_j zeta(s,(a+j)/q); zeta(s) = q^{-s} sum_j zeta(s, j/q); (2^s-1) zeta(s) = zeta(s,1/2)
    {
        auto grid = make_grid({{"part", reals({0})}, {"a", nus}, {"s", ss}, {"q", reals({2, 3, 4})}});
        for (auto& p : make_grid({{"part", reals({1})}, {"s", ss}, {"q", reals({2, 3, 5})}}))
            grid.push_back(p);
        for (auto& p : make_grid({{"part", reals({2})}, {"s", ss}}))
            grid.push_back(p);
        out.push_back({"mult-5.12-5.14",
                       [](const Point& p) {
                           const Complex s = p["s"];
                           switch (p.integer("part")) {
                           case 0: return be(p["a"], s, 0.0);
                           case 1: return riemann_zeta(s).value;
                           default: return (std::exp(s * ln2) - 1.0) * riemann_zeta(s).value;
                           }
                       },
                       [](const Point& p) {
                           const Complex s = p["s"];
                           const int part = p.integer("part");
                           if (part == 2)
                               return zeta_h(s, 0.5);
                           const int q = p.integer("q");
                           const Complex a = part == 0 ? p["a"] : Complex(0.0);
                           Complex acc = 0.0;
                           for (int j = 1; j <= q; ++j)
                               acc += zeta_h(s, (a + static_cast<double>(j)) / static_cast<double>(q));
                           return std::pow(Complex(q), -s) * acc;
                       },
                       grid});
    }

    //   part 0: Psi_nu(-n;0) = -B_{n+1}(nu+1)/(n+1) against the Hurwitz continuation
    //   part 1: Phi_nu(-n;pi i) = e^{-i pi nu} B_{n+1}(nu+1)/(n+1) against the series path
    //   part 2: B_{n+1}(nu+1) - B_{n+1}(nu) = (n+1) nu^n in exact arithmetic (residual must be 0)
    out.push_back({"negint-5.9-7.8-7.9",
                   [I](const Point& p) {
                       const int n = p.integer("n");
                       const Complex nu = p["nu"];
                       switch (p.integer("part")) {
                       case 0: return ext_be_negint(nu, n);
                       case 1: return ext_fd_negint_at_pi_i(nu, n);
                       default: {
                           const Rational r = rational_from_double(nu.real());
                           const Rational lhs = bernoulli_poly(n + 1, Rational(r + 1)) - bernoulli_poly(n + 1, r);
                           Rational rhs = n + 1;
                           for (int k = 0; k < n; ++k)
                               rhs *= r;
                           return Complex(to_double(lhs - rhs));
                       }
                       }
                   },
                   [I](const Point& p) {
                       const int n = p.integer("n");
                       const Complex nu = p["nu"];
                       switch (p.integer("part")) {
                       case 0: return zeta_h(static_cast<double>(-n), nu + 1.0);
                       case 1: return fd(nu, static_cast<double>(-n), I * pi, Strategy::XSeries);
                       default: return Complex(0.0);
                       }
                   },
                   make_grid({{"part", reals({0, 1, 2})},
                              {"nu", nus},
                              {"n", red ? reals({0, 1, 3}) : reals({0, 1, 2, 3, 4, 5, 6, 8})}})});

    // nu-series at x = 0 against direct evaluation
    out.push_back({"nuseries-4.7-5.8",
                   [](const Point& p) {
                       const double nu = p.real("nu");
                       return p.integer("kind") == 0 ? ext_fd_nu_series(nu, p["s"]).value
                                                     : ext_be_nu_series(nu, p["s"]).value;
                   },
                   [](const Point& p) {
                       const Complex nu = p["nu"], s = p["s"];
                       return p.integer("kind") == 0 ? fd(nu, s, 0.0, Strategy::XSeries) : zeta_h(s, nu + 1.0);
                   },
                   make_grid({{"kind", reals({0, 1})},
                              {"nu", red ? reals({0.0, 0.5}) : reals({0.0, 0.3, 0.5, 0.9})},
                              {"s", ss}})});

    // Phi_nu(s+beta;x) = W^{-s}[Phi_nu(beta;.)](x)
    out.push_back({"weyl-selfrep-4.8",
                   [](const Point& p) { return fd(p["nu"], p["s"] + p["beta"], p["x"]); },
                   [](const Point& p) {
                       const Complex nu = p["nu"], beta = p["beta"];
                       KernelSpec k;
                       k.value = [nu, beta](double t) { return fd(nu, beta, t); };
                       k.decay_rate = nu.real() + 1.0;
                       QuadratureConfig q;
                       q.rel_tol = 1e-11;
                       q.abs_tol = 1e-13;
                       return weyl_transform(k, p["s"], p.real("x"), q).value;
                   },
                   [&] {
                       auto g = make_grid({{"sb", reals({0, 1})},
                                           {"nu", reals({0.0, 1.0})},
                                           {"x", red ? reals({0.5}) : reals({0.0, 0.5})}});
                       for (auto& p : g) {
                           const bool first = p.integer("sb") == 0;
                           p.set("s", first ? 1.0 : 0.5).set("beta", first ? 1.0 : 1.5);
                       }
                       return g;
                   }(),
                   1e-7});

    //   kind 0: Taylor series in x against the direct series
    //   kind 1: F_{s-1}(x) = sum_n eta(s-n) x^n / n!
    {
        auto grid = make_grid({{"kind", reals({0})}, {"nu", nus}, {"s", ss}, {"x", red ? reals({0.25}) : reals({0.0, 0.25, 1.0})}});
        for (auto& p : make_grid({{"kind", reals({1})}, {"s", ss}, {"x", red ? reals({-0.5}) : reals({-0.5, -0.2, 0.3})}}))
            grid.push_back(p);
        out.push_back({"xseries-4.14-4.15",
                       [](const Point& p) {
                           if (p.integer("kind") == 0)
                               return ext_fd_xseries({p["nu"], p["s"], p["x"]}).value;
                           return fd_classical(p["s"], p.real("x")).value;
                       },
                       [](const Point& p) {
                           if (p.integer("kind") == 0)
                               return fd(p["nu"], p["s"], p["x"], Strategy::XSeries);
                           const Complex s = p["s"];
                           const double x = p.real("x");
                           CompensatedSum sum;
                           double f = 1.0;
                           for (int n = 0; n <= 40; ++n) {
                               sum.add(f * dirichlet_eta(s - static_cast<double>(n)).value);
                               f *= x / (n + 1);
                           }
                           return sum.value();
                       },
                       grid, 1e-8});
    }

    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.name < r.name; });
    return out;
}

inline std::vector<std::string> catalog_names()
{
    std::vector<std::string> names;
    for (const auto& spec : catalog({true}))
        names.push_back(spec.name);
    return names;
}

/// Filter entries match either the full name or the name without "-corrected".
inline bool matches_filter(const std::string& name, const std::string& key)
{
    if (name == key)
        return true;
    constexpr std::string_view suffix = "-corrected";
    return name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0 &&
           name.substr(0, name.size() - suffix.size()) == key;
}

inline std::vector<IdentityReport> run_catalog(const std::vector<std::string>& names = {},
                                               const CatalogOptions& opt = {})
{
    const auto specs = catalog(opt);
    for (const auto& key : names)
        if (std::none_of(specs.begin(), specs.end(), [&](const auto& s) { return matches_filter(s.name, key); }))
            throw DomainError("unknown identity '" + key + "'");
    std::vector<IdentityReport> out;
    for (const auto& spec : specs) {
        const bool selected =
            names.empty() || std::any_of(names.begin(), names.end(), [&](const auto& k) { return matches_filter(spec.name, k); });
        if (selected)
            out.push_back(check(spec));
    }
    return out;
}

//
// The multiplication theorem for Psi as printed carries the extra factors
// e^{a x (1-q)/q} e^{x j (1-q)/q}; evaluating it shows whether those factors
// are consistent with the Lerch multiplication formula. Informational only.
//
inline bool printed_multiplication_form_agrees(Complex a, Complex s, double x, int q, double tol = 1e-10)
{
    const double qd = q;
    Complex acc = 0.0;
    for (int j = 1; j <= q; ++j) {
        const Complex b = (a + static_cast<double>(j)) / qd;  // Psi_{b-1}(s; qx) = e^{-b q x} Phi(e^{-qx}, s, b)
        const Complex psi = std::exp(-b * qd * x) * lerch_phi({std::exp(-qd * x), s, b}).value;
        acc += std::exp(x * j * (1.0 - qd) / qd) * psi;
    }
    const Complex printed = std::pow(Complex(qd), -s) * std::exp(a * x * (1.0 - qd) / qd) * acc;
    return residual(ext_be({a, s, x}).value, printed) <= tol;
}

} // namespace zetakit

#endif // ZETAKIT_IDENTITIES_HPP
