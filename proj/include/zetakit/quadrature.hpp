#ifndef ZETAKIT_QUADRATURE_HPP
#define ZETAKIT_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <queue>
#include <vector>

#include "core.hpp"
#include "numeric_core.hpp"

namespace zetakit {

struct QuadratureConfig {
    double abs_tol = 1e-15;
    double rel_tol = 1e-13;
    int max_subdivisions = 4000;
    double endpoint_split = 1.0;  // width of the graded region next to t = 0

    void validate() const
    {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw DomainError("quadrature tolerances must be positive");
        if (max_subdivisions < 1)
            throw DomainError("max_subdivisions must be >= 1");
        if (!(endpoint_split > 0.0 && endpoint_split <= 1.0))
            throw DomainError("endpoint_split must lie in (0, 1]");
    }
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a = 0.0, b = 0.0;
    Complex value{};
    double error = 0.0;
    bool converged = false;  // error sits at the rounding floor

    bool operator<(const Panel& other) const noexcept { return error < other.error; }
};

template <class F>
Panel gk15(F& f, double a, double b, std::uint64_t& evals)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Complex fc = f(center);
    Complex resk = fc * wgk[7];
    Complex resg = fc * wg[3];
    double resabs = std::abs(fc) * wgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const Complex f1 = f(center - dx);
        const Complex f2 = f(center + dx);
        resk += (f1 + f2) * wgk[j];
        resabs += (std::abs(f1) + std::abs(f2)) * wgk[j];
        if (j % 2 == 1)
            resg += (f1 + f2) * wg[j / 2];
    }
    evals += 15;
    Panel p{a, b, resk * half, std::abs((resk - resg) * half)};
    const double floor = 50.0 * eps * resabs * std::abs(half);
    if (p.error <= floor) {
        p.error = floor;
        p.converged = true;
    }
    if (!is_finite(p.value))
        throw ConvergenceError("quadrature: non-finite integrand on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
    return p;
}

} // namespace detail

/// Result of an adaptive integration over a set of panels.
struct QuadratureResult {
    Complex value{};
    double err_estimate = 0.0;
    std::uint64_t evals = 0;
};

//
// Globally adaptive Gauss-Kronrod integration over the union of the given
// breakpoint intervals. The panel with the largest error estimate is bisected
// until the summed estimate meets the tolerance or only rounding-limited
// panels remain. Summation order is fixed, so results are reproducible.
//
template <class F>
QuadratureResult integrate_panels(F&& f, const std::vector<double>& breaks, const QuadratureConfig& cfg,
                                  double extra_error = 0.0)
{
    QuadratureResult out;
    std::priority_queue<detail::Panel> active;
    std::vector<detail::Panel> done;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        auto p = detail::gk15(f, breaks[i], breaks[i + 1], out.evals);
        (p.converged ? done.push_back(p) : active.push(p));
    }
    auto totals = [&](Complex& value, double& err) {
        CompensatedSum sum;
        err = extra_error;
        std::vector<detail::Panel> all = done;
        auto copy = active;
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        std::sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
        for (const auto& p : all) {
            sum.add(p.value);
            err += p.error;
        }
        value = sum.value();
    };

    int subdivisions = 0;
    Complex value;
    double err;
    totals(value, err);
    // running value/error are updated incrementally; the final totals are
    // re-summed in panel order
    while (!active.empty() && err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
        if (subdivisions >= cfg.max_subdivisions)
            throw ConvergenceError("quadrature: tolerance not met within " + std::to_string(cfg.max_subdivisions) +
                                   " subdivisions (error estimate " + std::to_string(err) + ")");
        const auto worst = active.top();
        active.pop();
        value -= worst.value;
        err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            auto p = worst;
            p.converged = true;
            done.push_back(p);
            value += p.value;
            err += p.error;
        } else {
            for (auto p : {detail::gk15(f, worst.a, mid, out.evals), detail::gk15(f, mid, worst.b, out.evals)}) {
                value += p.value;
                err += p.error;
                (p.converged ? done.push_back(p) : active.push(p));
            }
        }
        ++subdivisions;
        if (subdivisions % 64 == 0)
            totals(value, err);
    }
    totals(value, err);
    out.value = value;
    out.err_estimate = err;
    return out;
}

} // namespace zetakit

#endif // ZETAKIT_QUADRATURE_HPP
