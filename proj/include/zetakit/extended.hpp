#ifndef ZETAKIT_EXTENDED_HPP
#define ZETAKIT_EXTENDED_HPP

#include <string_view>
#include <vector>

#include "core.hpp"
#include "numeric_core.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "weyl.hpp"
#include "zeta.hpp"

namespace zetakit {

//
// Extended Fermi-Dirac and Bose-Einstein functions
//   Phi_nu(s; x) = W^{-s}[e^{-nu t} / (e^t + 1)](x)
//                = e^{-(nu+1)x} sum_n (-1)^n e^{-n x} (n+nu+1)^{-s}
//   Psi_nu(s; x) = W^{-s}[e^{-nu t} / (e^t - 1)](x)
//                = e^{-(nu+1)x} sum_n e^{-n x} (n+nu+1)^{-s}
//

struct ExtParams {
    Complex nu{};
    Complex s{};
    Complex x{};

    void validate() const
    {
        require_finite(nu, "nu");
        require_finite(s, "s");
        require_finite(x, "x");
        if (nu.real() < 0.0)
            throw DomainError("requires Re(nu) >= 0");
        if (x.real() < 0.0)
            throw DomainError("requires Re(x) >= 0");
    }
};

enum class Strategy { XSeries, WeylQuad, PowerSeriesX, NuSeries, NegIntBernoulli, Auto };

inline const char* strategy_name(Strategy s) noexcept
{
    switch (s) {
    case Strategy::XSeries: return "xseries";
    case Strategy::WeylQuad: return "weylquad";
    case Strategy::PowerSeriesX: return "powerseriesx";
    case Strategy::NuSeries: return "nuseries";
    case Strategy::NegIntBernoulli: return "negint";
    case Strategy::Auto: return "auto";
    }
    return "?";
}

inline Strategy parse_strategy(std::string_view name)
{
    for (auto s : {Strategy::XSeries, Strategy::WeylQuad, Strategy::PowerSeriesX, Strategy::NuSeries,
                   Strategy::NegIntBernoulli, Strategy::Auto})
        if (name == strategy_name(s))
            return s;
    throw DomainError("unknown strategy '" + std::string(name) + "'");
}

struct ExtConfig {
    SeriesConfig series;
    QuadratureConfig quad;
    int xseries_terms = 40;   // cap for the power series in x
    int nu_terms = 4000;      // cap for the power series in nu
};

inline constexpr double small_x = 0.05;

inline KernelSpec fd_kernel(Complex nu)
{
    KernelSpec k;
    const Complex a = nu + 1.0;
    k.value = [a](double t) -> Complex { return std::exp(-a * t) / (1.0 + std::exp(-t)); };
    k.decay_rate = a.real();
    return k;
}

inline KernelSpec be_kernel(Complex nu)
{
    KernelSpec k;
    const Complex a = nu + 1.0;
    k.value = [a](double t) -> Complex {
        if (t <= 0.0)
            return inf;
        return std::exp(-a * t) / (-std::expm1(-t));
    };
    k.decay_rate = a.real();
    return k;
}

namespace detail {

inline bool near_pi_i(Complex x)
{
    return std::abs(x - Complex(0.0, pi)) <= 1e-14;
}

inline EvalResult scaled(EvalResult r, Complex factor, const char* tag)
{
    r.value *= factor;
    r.err_estimate *= std::abs(factor);
    r.strategy = tag;
    return r;
}

// sum_n z^n (n + a)^{-s} for z = sign * e^{-x}, times e^{-a x}
inline EvalResult lerch_series(double sign, Complex a, Complex s, Complex x, const ExtConfig& cfg, bool fermi)
{
    const char* what = fermi ? "ext_fd" : "ext_be";
    const Complex pre = std::exp(-a * x);
    const Complex z = sign * std::exp(-x);
    const double rx = x.real();
    auto b = [&](std::uint64_t n) { return pow_neg(static_cast<double>(n) + a, s); };

    if (rx > 0.0 && (rx > small_x || x.imag() == 0.0 || !(s.real() > 0.0))) {
        // terms computed as sign^n exp(-(n+a)x - s log(n+a)) to avoid overflow
        auto term = [&](std::uint64_t n) {
            const Complex m = static_cast<double>(n) + a;
            const Complex v = std::exp(-m * x - s * std::log(m));
            return (sign < 0.0 && n % 2 == 1) ? -v : v;
        };
        if (z.imag() == 0.0 && z.real() < 0.0 && rx <= small_x && s.real() > 0.0) {
            auto sum = alternating_sum(z.real(), b, cfg.series, what);
            return scaled({sum.value, sum.err_estimate, "", sum.terms}, pre, "xseries-euler");
        }
        auto sum = geometric_sum(term, std::exp(-rx), cfg.series, what);
        return {sum.value, sum.err_estimate, "xseries-direct", sum.terms};
    }
    if (rx == 0.0 && x.imag() == 0.0 && !fermi) {
        auto r = hurwitz_zeta(s, a, cfg.series);
        r.strategy = "xseries-hurwitz";
        return r;
    }
    // z on (or just inside) the unit circle
    if (std::abs(z - 1.0) <= 1e-12) {
        if (s.real() > 1.0)
            return scaled(lerch_phi_integral(1.0, s, a, cfg.quad), pre, "xseries-lerch-integral");
        if (detail::near_one(s))
            throw PoleError("pole at s=1");
        return scaled(hurwitz_zeta(s, a, cfg.series), pre, "xseries-hurwitz");
    }
    if (!(s.real() > 0.0))
        throw DomainError(std::string(what) + ": XSeries on Re(x) = 0 requires Re(s) > 0");
    if (std::abs(z + 1.0) <= 1e-12) {
        auto sum = alternating_sum(-1.0, b, cfg.series, what);
        return scaled({sum.value, sum.err_estimate, "", sum.terms}, pre, "xseries-euler");
    }
    return scaled(lerch_phi_integral(z, s, a, cfg.quad), pre, "xseries-lerch-integral");
}

} // namespace detail

//
// Phi_nu(s; 0) = 2^{-s} [zeta(s, (nu+1)/2) - zeta(s, (nu+2)/2)], entire in s.
// Near s = 1 the two Hurwitz poles cancel, so there the alternating series is
// summed instead (and the digamma limit is used at s = 1 itself).
//
inline EvalResult fd_at_zero(Complex nu, Complex s, const ExtConfig& cfg = {})
{
    require_finite(nu, "nu");
    require_finite(s, "s");
    if (nu.real() < 0.0)
        throw DomainError("requires Re(nu) >= 0");
    const Complex a = 0.5 * (nu + 1.0);
    const Complex b = 0.5 * (nu + 2.0);
    if (detail::near_one(s))
        return {0.5 * (digamma(b) - digamma(a)), 1e-15, "digamma-limit", 1};
    if (std::abs(s - 1.0) < 1e-4) {
        auto sum = alternating_sum(
            -1.0, [&](std::uint64_t n) { return pow_neg(static_cast<double>(n) + nu + 1.0, s); }, cfg.series,
            "fd_at_zero");
        return {sum.value, sum.err_estimate, "alternating-euler", sum.terms};
    }
    const auto za = hurwitz_zeta(s, a, cfg.series);
    const auto zb = hurwitz_zeta(s, b, cfg.series);
    const Complex f = std::exp(-s * ln2);
    return {f * (za.value - zb.value), std::abs(f) * (za.err_estimate + zb.err_estimate), "hurwitz-difference",
            za.work + zb.work};
}

/// Psi_nu(-n; 0) = -B_{n+1}(nu+1) / (n+1).
inline Complex ext_be_negint(Complex nu, int n)
{
    if (n < 0)
        throw DomainError("ext_be_negint: n must be non-negative");
    return -bernoulli_poly(n + 1, nu + 1.0) / static_cast<double>(n + 1);
}

/// Phi_nu(-n; pi i) = e^{-i pi nu} B_{n+1}(nu+1) / (n+1).
inline Complex ext_fd_negint_at_pi_i(Complex nu, int n)
{
    if (n < 0)
        throw DomainError("ext_fd_negint_at_pi_i: n must be non-negative");
    const Complex phase = std::exp(Complex(0.0, -pi) * nu);
    return phase * bernoulli_poly(n + 1, nu + 1.0) / static_cast<double>(n + 1);
}

//
// Power series in nu at x = 0 (0 <= nu < 1):
//   Phi_nu(s; 0) = sum_n (-1)^n (s)_n eta(s+n) nu^n / n!
//   Psi_nu(s; 0) = sum_n (-1)^n (s)_n zeta(s+n) nu^n / n!
//
namespace detail {

template <class Coef>
EvalResult nu_series(double nu, Complex s, int N, Coef&& coef, const char* what)
{
    if (!(nu >= 0.0 && nu < 1.0))
        throw DomainError(std::string(what) + ": requires 0 <= nu < 1");
    if (!(s.real() > 0.0))
        throw DomainError(std::string(what) + ": requires Re(s) > 0");
    if (N < 0)
        throw DomainError(std::string(what) + ": N must be non-negative");
    CompensatedSum sum;
    Complex factor = 1.0;  // (-1)^n (s)_n nu^n / n!
    double last = inf;
    int small = 0;
    for (int n = 0; n <= N; ++n) {
        if (factor == Complex(0.0))
            return {sum.value(), 0.0, "nu-series", static_cast<std::uint64_t>(n)};
        const Complex term = factor * coef(s + static_cast<double>(n));
        sum.add(term);
        const double mag = std::abs(term);
        small = (mag <= 1e-17 * std::abs(sum.value())) ? small + 1 : 0;
        if (small >= 2)
            return {sum.value(), mag + eps * sum.abs_sum(), "nu-series", static_cast<std::uint64_t>(n + 1)};
        last = mag;
        factor *= -(s + static_cast<double>(n)) * nu / static_cast<double>(n + 1);
    }
    const Complex omitted = factor * coef(s + static_cast<double>(N + 1));
    if (std::abs(omitted) >= last && last > 1e-17 * std::abs(sum.value()))
        throw ConvergenceError(std::string(what) + ": terms are not decreasing at N=" + std::to_string(N));
    return {sum.value(), std::abs(omitted) + eps * sum.abs_sum(), "nu-series", static_cast<std::uint64_t>(N + 1)};
}

} // namespace detail

inline EvalResult ext_fd_nu_series(double nu, Complex s, int N = 4000, const ExtConfig& cfg = {})
{
    return detail::nu_series(
        nu, s, N, [&](Complex u) { return dirichlet_eta(u, cfg.series).value; }, "ext_fd_nu_series");
}

inline EvalResult ext_be_nu_series(double nu, Complex s, int N = 4000, const ExtConfig& cfg = {})
{
    if (nu != 0.0 && is_real(s) && s.real() <= 1.0 && s.real() == std::floor(s.real()))
        throw PoleError("ext_be_nu_series: pole at s+n=1");
    if (detail::near_one(s))
        throw PoleError("pole at s=1");
    return detail::nu_series(
        nu, s, N, [&](Complex u) { return hurwitz_zeta(u, 1.0, cfg.series).value; }, "ext_be_nu_series");
}

//
// Taylor series in x about 0:
//   Phi_nu(s; x) = sum_n (-1)^n Phi_nu(s-n; 0) x^n / n!,
// with coefficients from fd_at_zero. The coefficients grow roughly like
// n! / pi^n, so the usable radius is about pi.
//
inline EvalResult ext_fd_xseries(const ExtParams& p, int N = 40, const ExtConfig& cfg = {})
{
    p.validate();
    if (p.x.imag() != 0.0)
        throw DomainError("ext_fd_xseries: requires real x >= 0");
    if (N < 1 || N > 40)
        throw DomainError("ext_fd_xseries: N must lie in [1, 40]");
    const double x = p.x.real();
    std::vector<Complex> coeffs;
    const auto c0 = fd_at_zero(p.nu, p.s, cfg);
    coeffs.push_back(c0.value);
    if (x == 0.0)
        return {c0.value, c0.err_estimate, "xseries-taylor", 1};
    double coeff_err = c0.err_estimate;  // propagated coefficient errors

    double factor = 1.0;
    std::vector<double> mags;  // term magnitudes; Bernoulli-type zeros make single terms vanish
    int small = 0;
    int n = 0;
    for (; n < N; ++n) {
        const auto c = fd_at_zero(p.nu, p.s - static_cast<double>(n + 1), cfg);
        coeffs.push_back(c.value);
        const double mag = std::abs(coeffs[n]) * factor;
        mags.push_back(mag);
        small = (mag <= 1e-17 * std::abs(coeffs[0])) ? small + 1 : 0;
        if (small >= 2)
            break;
        auto envelope = [&](int i) { return std::max(mags[i], i > 0 ? mags[i - 1] : 0.0); };
        if (n == N / 2 && n >= 4 && !(envelope(n) < envelope(n - 2)))
            throw ConvergenceError("ext_fd_xseries: terms not decaying by N/2; x outside the usable radius");
        factor *= x / (n + 1);
        coeff_err += c.err_estimate * factor;
    }
    const int last = std::min(n, N - 1);
    auto r = taylor_representation(coeffs, p.s, x, last);
    r.err_estimate += coeff_err;
    if (small < 2 && last >= 4) {
        // single omitted terms can vanish; bound the tail by the envelope ratio
        auto envelope = [&](int i) { return std::max(mags[i], mags[i - 1]); };
        const double env = std::max(envelope(last), r.err_estimate);
        const double q = std::sqrt(envelope(last) / std::max(envelope(last - 2), 1e-300));
        r.err_estimate += (q < 1.0) ? env * q / (1.0 - q) : inf;
    }
    const double scale = std::max(std::abs(r.value), std::abs(coeffs[0]));
    if (r.err_estimate > 1e-10 * scale)
        throw ConvergenceError("ext_fd_xseries: truncation error too large; x outside the usable radius");
    r.strategy = "xseries-taylor";
    return r;
}

namespace detail {

inline EvalResult fd_dispatch(const ExtParams& p, Strategy strat, const ExtConfig& cfg)
{
    const Complex a = p.nu + 1.0;
    switch (strat) {
    case Strategy::XSeries:
        return lerch_series(-1.0, a, p.s, p.x, cfg, true);
    case Strategy::WeylQuad: {
        if (p.x.imag() != 0.0)
            throw DomainError("ext_fd: WeylQuad requires real x");
        if (!(p.s.real() > 0.0))
            throw DomainError("ext_fd: WeylQuad requires Re(s) > 0");
        auto r = weyl_transform(fd_kernel(p.nu), p.s, p.x.real(), cfg.quad);
        r.strategy = "weyl-quadrature";
        return r;
    }
    case Strategy::PowerSeriesX:
        if (p.x == Complex(0.0))
            return fd_at_zero(p.nu, p.s, cfg);
        return ext_fd_xseries(p, cfg.xseries_terms, cfg);
    case Strategy::NuSeries:
        if (p.x != Complex(0.0) || p.nu.imag() != 0.0)
            throw DomainError("ext_fd: NuSeries requires x = 0 and real nu");
        return ext_fd_nu_series(p.nu.real(), p.s, cfg.nu_terms, cfg);
    case Strategy::NegIntBernoulli: {
        if (!is_nonpositive_integer(p.s) || !near_pi_i(p.x))
            throw DomainError("ext_fd: NegIntBernoulli requires s in {0, -1, -2, ...} and x = pi i");
        const int n = static_cast<int>(-p.s.real());
        return {ext_fd_negint_at_pi_i(p.nu, n), 1e-15 * std::abs(ext_fd_negint_at_pi_i(p.nu, n)), "negint-bernoulli",
                1};
    }
    case Strategy::Auto:
        if (is_nonpositive_integer(p.s) && near_pi_i(p.x))
            return fd_dispatch(p, Strategy::NegIntBernoulli, cfg);
        if (p.x.real() > small_x || p.s.real() > 0.0)
            return fd_dispatch(p, Strategy::XSeries, cfg);
        if (p.x.imag() == 0.0)
            return fd_dispatch(p, Strategy::PowerSeriesX, cfg);
        if (p.x.real() > 0.0)
            return lerch_series(-1.0, a, p.s, p.x, cfg, true);
        throw DomainError("ext_fd: no strategy covers Re(s) <= 0 with Re(x) = 0, x != pi i");
    }
    throw DomainError("ext_fd: invalid strategy");
}

} // namespace detail

inline EvalResult ext_fd(const ExtParams& p, Strategy strat = Strategy::Auto, const ExtConfig& cfg = {})
{
    p.validate();
    auto r = detail::fd_dispatch(p, strat, cfg);
    require_finite(r.value, "ext_fd result");
    r.value = fault::apply(FaultTarget::ext_fd, r.value);
    return r;
}

namespace detail {

inline EvalResult be_dispatch(const ExtParams& p, Strategy strat, const ExtConfig& cfg)
{
    const Complex a = p.nu + 1.0;
    const bool at_zero = p.x == Complex(0.0);
    if (at_zero && near_one(p.s))
        throw PoleError("pole at s=1");
    switch (strat) {
    case Strategy::XSeries:
        return lerch_series(1.0, a, p.s, p.x, cfg, false);
    case Strategy::WeylQuad: {
        if (p.x.imag() != 0.0)
            throw DomainError("ext_be: WeylQuad requires real x");
        if (at_zero) {
            if (!(p.s.real() > 1.0))
                throw DomainError("ext_be: WeylQuad at x = 0 requires Re(s) > 1");
            auto r = lerch_phi_integral(1.0, p.s, a, cfg.quad);
            r.strategy = "weyl-quadrature";
            return r;
        }
        if (!(p.s.real() > 0.0))
            throw DomainError("ext_be: WeylQuad requires Re(s) > 0");
        auto r = weyl_transform(be_kernel(p.nu), p.s, p.x.real(), cfg.quad);
        r.strategy = "weyl-quadrature";
        return r;
    }
    case Strategy::PowerSeriesX:
        throw DomainError("ext_be: PowerSeriesX is not available (logarithmic singularity at x = 0)");
    case Strategy::NuSeries:
        if (!at_zero || p.nu.imag() != 0.0)
            throw DomainError("ext_be: NuSeries requires x = 0 and real nu");
        return ext_be_nu_series(p.nu.real(), p.s, cfg.nu_terms, cfg);
    case Strategy::NegIntBernoulli: {
        if (!is_nonpositive_integer(p.s) || !at_zero)
            throw DomainError("ext_be: NegIntBernoulli requires s in {0, -1, -2, ...} and x = 0");
        const Complex v = ext_be_negint(p.nu, static_cast<int>(-p.s.real()));
        return {v, 1e-15 * std::abs(v), "negint-bernoulli", 1};
    }
    case Strategy::Auto:
        if (at_zero && is_nonpositive_integer(p.s))
            return be_dispatch(p, Strategy::NegIntBernoulli, cfg);
        return be_dispatch(p, Strategy::XSeries, cfg);
    }
    throw DomainError("ext_be: invalid strategy");
}

} // namespace detail

inline EvalResult ext_be(const ExtParams& p, Strategy strat = Strategy::Auto, const ExtConfig& cfg = {})
{
    p.validate();
    auto r = detail::be_dispatch(p, strat, cfg);
    require_finite(r.value, "ext_be result");
    r.value = fault::apply(FaultTarget::ext_be, r.value);
    return r;
}

//
// Classical FD integral F_{s-1}(x) = 1/Gamma(s) int_0^inf t^{s-1} / (e^{t-x} + 1) dt.
//
inline EvalResult fd_classical(Complex s, double x, const ExtConfig& cfg = {})
{
    require_finite(s, "s");
    if (!std::isfinite(x))
        throw DomainError("fd_classical: x must be finite");
    if (!(s.real() > 0.0))
        throw DomainError("fd_classical: requires Re(s) > 0");
    if (x <= 0.0)
        return ext_fd({0.0, s, -x}, Strategy::Auto, cfg);
    KernelSpec k;
    k.value = [x](double t) -> Complex {
        const double u = t - x;
        if (u > 0.0) {
            const double e = std::exp(-u);
            return e / (1.0 + e);
        }
        return 1.0 / (std::exp(u) + 1.0);
    };
    k.decay_rate = 1.0;
    auto r = weyl_transform(k, s, 0.0, cfg.quad);
    r.strategy = "fd-quadrature";
    return r;
}

/// Classical BE integral B_{s-1}(x) for x <= 0.
inline EvalResult be_classical(Complex s, double x, const ExtConfig& cfg = {})
{
    require_finite(s, "s");
    if (!std::isfinite(x))
        throw DomainError("be_classical: x must be finite");
    if (x > 0.0)
        throw DomainError("be_classical: requires x <= 0");
    if (x == 0.0 && !(s.real() > 1.0))
        throw DomainError("be_classical: x = 0 requires Re(s) > 1");
    if (!(s.real() > 0.0))
        throw DomainError("be_classical: requires Re(s) > 0");
    return ext_be({0.0, s, -x}, Strategy::Auto, cfg);
}

} // namespace zetakit

#endif // ZETAKIT_EXTENDED_HPP
