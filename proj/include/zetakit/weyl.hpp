#ifndef ZETAKIT_WEYL_HPP
#define ZETAKIT_WEYL_HPP

#include <functional>
#include <iostream>
#include <span>

#include "core.hpp"
#include "numeric_core.hpp"
#include "quadrature.hpp"

namespace zetakit {

//
// A "good function" omega on [0, inf). decay_b is the exponent b in
// |omega(t)| = O(t^-b); infinity marks the rapidly decaying class.
// decay_rate, when positive, is an exponential rate lambda with
// |omega(t)| = O(exp(-lambda t)) and is used to bound the quadrature tail.
// The callables must be safe to invoke concurrently.
//
struct KernelSpec {
    std::function<Complex(double)> value;
    std::function<Complex(int, double)> derivative;  // (m, t) -> omega^(m)(t); may be empty
    double decay_b = inf;
    double decay_rate = 0.0;
};

/// omega(t) = exp(-rate t); every derivative is available in closed form.
inline KernelSpec exp_kernel(double rate)
{
    KernelSpec k;
    k.value = [rate](double t) { return Complex(std::exp(-rate * t)); };
    k.derivative = [rate](int m, double t) { return Complex(std::pow(-rate, m) * std::exp(-rate * t)); };
    k.decay_rate = rate;
    return k;
}

namespace detail {

inline Complex t_pow(double t, Complex e)
{
    // t^e for t > 0
    if (e.imag() == 0.0)
        return std::pow(t, e.real());
    return std::exp(e * std::log(t));
}

inline double tail_bound(const KernelSpec& k, double x, double T, double sigma)
{
    const double w = std::abs(k.value(T + x));
    if (w == 0.0)
        return 0.0;
    double rate = k.decay_rate;
    if (!(rate > 0.0) && std::isinf(k.decay_b)) {
        // local logarithmic slope
        const double w2 = std::abs(k.value(T + x + 1.0));
        rate = (w2 > 0.0) ? std::log(w / w2) : 50.0;
    }
    if (rate > 0.0) {
        const double denom = rate - std::max(0.0, sigma - 1.0) / T;
        if (denom <= 0.0)
            return inf;
        return w * std::pow(T, sigma - 1.0) / denom;
    }
    const double b = k.decay_b;
    if (!(b > sigma))
        return inf;
    const double c = w * std::pow(T + x, b);
    return c * std::pow(T, sigma - b) / (b - sigma);
}

} // namespace detail

/// Omega(0; x) := omega(x).
inline Complex weyl_at_zero_order(const KernelSpec& kernel, double x)
{
    return kernel.value(x);
}

//
// Omega(s; x) = 1/Gamma(s) * int_0^inf omega(t + x) t^(s-1) dt, 0 < Re(s) < b.
// The t^(s-1) endpoint behaviour is resolved with a graded mesh whose panel
// widths shrink by 4 toward t = 0; the innermost sliver [0, eps_K] is added
// from the leading term omega(x) eps_K^s / s. Beyond a cut-off T the tail is
// bounded analytically and the bound is folded into err_estimate; kernels
// with only algebraic decay get the tail integrated in the variable 1/t.
//
inline EvalResult weyl_transform(const KernelSpec& kernel, Complex s, double x, const QuadratureConfig& cfg = {})
{
    cfg.validate();
    require_finite(s, "weyl_transform order");
    if (!std::isfinite(x) || x < 0.0)
        throw DomainError("weyl_transform: x must be a finite non-negative real");
    const double sigma = s.real();
    if (!(sigma > 0.0))
        throw DomainError("weyl_transform: requires Re(s) > 0, got s=" + format_complex(s));
    if (!(sigma < kernel.decay_b))
        throw DomainError("weyl_transform: requires Re(s) < decay exponent b");

    const Complex sm1 = s - 1.0;
    auto integrand = [&](double t) -> Complex {
        if (t <= 0.0)
            return 0.0;
        return kernel.value(t + x) * detail::t_pow(t, sm1);
    };

    const double h0 = cfg.endpoint_split;
    const double w0 = std::max({std::abs(kernel.value(x)), std::abs(kernel.value(x + 0.5 * h0)),
                                std::abs(kernel.value(x + h0))});
    const double ref = std::max(w0 * std::pow(h0, sigma) / sigma, 1e-300);
    const double head_target = 0.01 * std::max(cfg.abs_tol, cfg.rel_tol * ref);

    std::vector<double> breaks;
    double inner = h0;
    int levels = 0;
    while (levels < 4 || w0 * std::pow(inner, sigma) / sigma * inner > head_target) {
        ++levels;
        inner *= 0.25;
        if (inner < 1e-290)
            throw ConvergenceError("weyl_transform: endpoint singularity too strong for Re(s)=" +
                                   std::to_string(sigma));
    }
    for (double p = inner; p < h0; p *= 4.0)
        breaks.push_back(p);
    breaks.push_back(h0);

    const bool power_law = !(kernel.decay_rate > 0.0) && std::isfinite(kernel.decay_b);
    double T = std::max(8.0, 2.0 * h0);
    double tail = detail::tail_bound(kernel, x, T, sigma);
    while (!power_law && tail > 0.5 * cfg.abs_tol) {
        T *= 2.0;
        if (T > 1e8)
            throw ConvergenceError("weyl_transform: kernel tail does not decay fast enough");
        tail = detail::tail_bound(kernel, x, T, sigma);
    }
    for (double p = 2.0 * h0; p < T; p *= 2.0)
        breaks.push_back(p);
    breaks.push_back(T);

    const Complex head = kernel.value(x) * detail::t_pow(inner, s) / s;
    const double head_err = std::abs(head) * inner;

    // algebraic tails: t = 1/u on (0, 1/T], graded toward u = 0
    Complex far = 0.0;
    double far_err = 0.0;
    std::uint64_t far_evals = 0;
    if (power_law) {
        auto mapped = [&](double u) -> Complex {
            if (u <= 0.0)
                return 0.0;
            return kernel.value(1.0 / u + x) * detail::t_pow(1.0 / u, sm1) / (u * u);
        };
        std::vector<double> ub;
        double lo = 1.0 / T;
        while (detail::tail_bound(kernel, x, 1.0 / lo, sigma) > 0.01 * cfg.abs_tol && lo > 1e-280)
            lo *= 0.25;
        for (double p = lo; p < 1.0 / T; p *= 4.0)
            ub.push_back(p);
        ub.push_back(1.0 / T);
        auto qt = integrate_panels(mapped, ub, cfg, detail::tail_bound(kernel, x, 1.0 / lo, sigma));
        far = qt.value;
        far_err = qt.err_estimate;
        far_evals = qt.evals;
        tail = 0.0;
    }

    auto q = integrate_panels(integrand, breaks, cfg, tail + head_err);
    const Complex scale = rgamma(s);
    EvalResult r;
    r.value = (q.value + far + head) * scale;
    r.err_estimate = (q.err_estimate + far_err) * std::abs(scale);
    q.evals += far_evals;
    r.strategy = "weyl-quadrature";
    r.work = q.evals;
    return r;
}

//
// Negative orders: Omega(s; x) = (-1)^n d^n/dx^n Omega(n + s; x) with
// n = ceil(-Re(s)). The derivative is taken under the integral sign, i.e.
// the positive-order transform of omega^(n).
//
inline EvalResult weyl_negative_order(const KernelSpec& kernel, Complex s, double x, const QuadratureConfig& cfg = {})
{
    require_finite(s, "weyl_negative_order order");
    if (s.real() > 0.0)
        throw DomainError("weyl_negative_order: requires Re(s) <= 0");
    if (s == Complex(0.0))
        return {weyl_at_zero_order(kernel, x), 0.0, "weyl-zero-order", 1};
    if (!kernel.derivative)
        throw DomainError("weyl_negative_order: kernel has no derivative supplier");

    int n = static_cast<int>(std::ceil(-s.real()));
    Complex order = static_cast<double>(n) + s;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    if (order == Complex(0.0))
        return {sign * kernel.derivative(n, x), 0.0, "weyl-derivative", 1};
    if (order.real() <= 0.0) {
        ++n;
        order += 1.0;
    }
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    KernelSpec dk;
    dk.value = [&kernel, n](double t) { return kernel.derivative(n, t); };
    dk.decay_b = kernel.decay_b;
    dk.decay_rate = kernel.decay_rate;
    auto r = weyl_transform(dk, order, x, cfg);
    r.value *= sgn;
    r.strategy = "weyl-derivative-quadrature";
    return r;
}

//
// Taylor representation Omega(s; x) = sum_n (-1)^n Omega(s-n; 0) x^n / n!.
// coeffs[n] holds Omega(s - n; 0). Terms are summed through index N; the
// error estimate is the first omitted term (or the last summed one when the
// sequence is exhausted).
//
inline EvalResult taylor_representation(std::span<const Complex> coeffs, Complex s, double x, int N)
{
    require_finite(s, "taylor_representation order");
    if (N < 0 || static_cast<std::size_t>(N) + 1 > coeffs.size())
        throw DomainError("taylor_representation: need at least N+1 coefficients");
    if (!std::isfinite(x) || x < 0.0)
        throw DomainError("taylor_representation: x must be a finite non-negative real");

    CompensatedSum sum;
    double factor = 1.0;  // x^n / n!
    std::vector<double> mags;
    for (int n = 0; n <= N; ++n) {
        const Complex term = ((n % 2 == 0) ? 1.0 : -1.0) * coeffs[n] * factor;
        sum.add(term);
        mags.push_back(std::abs(term));
        factor *= x / (n + 1);
    }
    const Complex value = sum.value();
    double err;
    if (static_cast<std::size_t>(N) + 1 < coeffs.size())
        err = std::abs(coeffs[N + 1]) * factor;
    else
        err = mags.back();
    const double negligible = 1e-17 * std::abs(value);
    if (N >= 2 && mags[N] > negligible && mags[N] >= mags[N - 1] && mags[N - 1] >= mags[N - 2])
        throw ConvergenceError("taylor_representation: terms are not decreasing at N=" + std::to_string(N));
    return {value, err + eps * sum.abs_sum(), "taylor-series", static_cast<std::uint64_t>(N + 1)};
}

struct DecayAudit {
    double max_scaled = 0.0;  // max |omega(t)| t^b over the sample
    bool bounded = true;
};

/// Samples |omega(t)| t^b on [10, 1e4]; a growing profile is reported (not thrown).
inline DecayAudit audit_decay(const KernelSpec& kernel, double b, std::ostream* warn = &std::clog)
{
    DecayAudit audit;
    double early = 0.0, late = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double t = 10.0 * std::pow(1e3, i / 60.0);
        const double v = std::abs(kernel.value(t)) * std::pow(t, b);
        audit.max_scaled = std::max(audit.max_scaled, v);
        if (i <= 20)
            early = std::max(early, v);
        if (i >= 40)
            late = std::max(late, v);
    }
    audit.bounded = std::isfinite(audit.max_scaled) && late <= 10.0 * early + 1e-300;
    if (!audit.bounded && warn)
        *warn << "warning: kernel does not look O(t^-" << b << ") on [10, 1e4]\n";
    return audit;
}

} // namespace zetakit

#endif // ZETAKIT_WEYL_HPP
