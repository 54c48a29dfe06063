#ifndef ZETAKIT_ZETA_HPP
#define ZETAKIT_ZETA_HPP

#include <vector>

#include "core.hpp"
#include "numeric_core.hpp"
#include "series.hpp"
#include "weyl.hpp"

namespace zetakit {

namespace detail {

// B_{2k} / (2k)! for the Euler-Maclaurin corrections.
inline double em_coefficient(int k)
{
    static const std::vector<double> table = [] {
        std::vector<double> t(max_poly_degree / 2 + 1, 0.0);
        Rational fact = 1;
        for (int j = 1; j <= max_poly_degree; ++j) {
            fact *= j;
            if (j % 2 == 0)
                t[j / 2] = to_double(bernoulli_number(j) / fact);
        }
        return t;
    }();
    return fault::apply(FaultTarget::bernoulli, table.at(static_cast<std::size_t>(k)));
}

inline bool near_one(Complex s)
{
    return std::abs(s - 1.0) <= 1e-15;
}

} // namespace detail

namespace detail {

//
// Hurwitz's formula for Re(s) < 0 and real 0 < a <= 1:
//   zeta(s, a) = 2 Gamma(u) (2 pi)^{-u} sum_k cos(pi u / 2 - 2 pi k a) k^{-u},  u = 1 - s.
// Far left of the critical strip the Euler-Maclaurin partial sum cancels
// catastrophically, while this series converges like k^{-u}.
//
inline EvalResult hurwitz_fourier(Complex s, double a, const SeriesConfig& cfg)
{
    const Complex u = 1.0 - s;
    const double sigma = u.real();
    CompensatedSum sum;
    double scale_sum = 0.0;  // sum of |k^{-u}|; the cosines may cancel the terms exactly
    std::uint64_t k = 1;
    double tail = inf;
    for (; k <= cfg.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const double frac = kd * a - std::floor(kd * a);
        const Complex ku = pow_neg(kd, u);
        sum.add(std::cos(0.5 * pi * u - 2.0 * pi * frac) * ku);
        scale_sum += std::abs(ku);
        tail = std::pow(kd, 1.0 - sigma) / (sigma - 1.0);
        if (tail <= 0.1 * eps * std::max(std::abs(sum.value()), scale_sum))
            break;
    }
    if (k > cfg.max_terms)
        throw ConvergenceError("hurwitz_zeta: Fourier series did not converge");
    const Complex scale = 2.0 * std::exp(ln_gamma(u) - u * std::log(2.0 * pi));
    const Complex v = scale * sum.value();
    const double err = std::abs(scale) * (tail + 4.0 * eps * scale_sum) + 8.0 * eps * std::abs(v) * std::abs(u);
    return {v, err, "hurwitz-fourier", k};
}

} // namespace detail

//
// Hurwitz zeta by Euler-Maclaurin:
//   sum_{n<N} (n+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^-s/2
//     + sum_{k=1}^{M} B_2k/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}.
// The correction series is extended until its terms drop below the rounding
// level; if they start growing first, N is doubled. With Re(s) <= 0 the
// smallest workable N is preferred because the direct sum then cancels.
//
inline EvalResult hurwitz_zeta(Complex s, Complex a, const SeriesConfig& cfg = {})
{
    cfg.validate();
    require_finite(s, "hurwitz_zeta order");
    require_finite(a, "hurwitz_zeta shift");
    if (detail::near_one(s))
        throw PoleError("pole at s=1");
    if (!(a.real() > 0.0))
        throw DomainError("hurwitz_zeta: requires Re(a) > 0, got a=" + format_complex(a));

    if (s.real() < -4.0 && a.imag() == 0.0 && cfg.em_shift == 0) {
        // shift a into (0, 1]: zeta(s, a) = zeta(s, a - m) - sum_{j=1}^{m} (a - j)^{-s}
        const double ar = a.real();
        const double m = std::ceil(ar) - 1.0;
        const double base = ar - m;
        auto r = detail::hurwitz_fourier(s, base, cfg);
        CompensatedSum acc;
        acc.add(r.value);
        for (double j = 0.0; j < m; j += 1.0)
            acc.add(-pow_neg(base + j, s));
        r.value = fault::apply(FaultTarget::hurwitz_zeta, acc.value());
        r.err_estimate += 4.0 * eps * acc.abs_sum();
        r.work += static_cast<std::uint64_t>(m);
        return r;
    }

    const double abs_s = std::abs(s);
    int N;
    if (cfg.em_shift > 0)
        N = cfg.em_shift;
    else if (s.real() > 0.0)
        N = std::max(10, static_cast<int>(std::ceil(abs_s)) + 10);
    else
        N = std::max(1, static_cast<int>(std::ceil(abs_s / 4.0)));
    const int M = cfg.em_order / 2;

    for (;; N *= 2) {
        if (static_cast<std::uint64_t>(N) > cfg.max_terms)
            throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin did not converge for s=" + format_complex(s));
        CompensatedSum sum;
        for (int n = 0; n < N; ++n)
            sum.add(pow_neg(static_cast<double>(n) + a, s));
        const Complex w = static_cast<double>(N) + a;
        const Complex ws = pow_neg(w, s);
        sum.add(w * ws / (s - 1.0));
        sum.add(0.5 * ws);

        Complex poch = s;            // (s)_{2k-1}
        Complex wpow = ws / w;       // w^{-s-2k+1}
        const Complex inv_w2 = 1.0 / (w * w);
        double prev = inf;
        bool converged = false;
        double last = 0.0;
        int k = 1;
        for (; k <= M; ++k) {
            const Complex term = detail::em_coefficient(k) * poch * wpow;
            const double mag = std::abs(term);
            if (mag > prev && k > 1)
                break;
            sum.add(term);
            last = mag;
            const double level = std::max(cfg.rel_tol * std::abs(sum.value()), eps * sum.abs_sum());
            if (mag <= level) {
                converged = true;
                break;
            }
            prev = mag;
            const double m = 2.0 * k;
            poch *= (s + (m - 1.0)) * (s + m);
            wpow *= inv_w2;
        }
        if (!converged)
            continue;
        EvalResult r;
        r.value = fault::apply(FaultTarget::hurwitz_zeta, sum.value());
        r.err_estimate = last + 4.0 * eps * sum.abs_sum() * (1.0 + std::abs(s) * std::log(std::abs(w) + 1.0));
        r.strategy = "euler-maclaurin";
        r.work = static_cast<std::uint64_t>(N + k);
        return r;
    }
}

//
// zeta(-m, a) for rational a > 0 in exact arithmetic. With s = -m the
// Euler-Maclaurin corrections terminate, so the formula with N = 1 is exact.
//
inline Rational hurwitz_zeta_negint_exact(int m, const Rational& a)
{
    if (m < 0 || m + 1 > max_poly_degree)
        throw RangeError("hurwitz_zeta_negint_exact: m outside [0, " + std::to_string(max_poly_degree - 1) + "]");
    if (a <= 0)
        throw DomainError("hurwitz_zeta_negint_exact: requires a > 0");
    auto power = [](const Rational& b, int e) {
        Rational r = 1;
        for (int i = 0; i < e; ++i)
            r *= b;
        return r;
    };
    const Rational w = a + 1;
    Rational sum = power(a, m) - power(w, m + 1) / (m + 1) + power(w, m) / 2;
    Rational poch = -m;  // (s)_{2k-1}
    Rational fact = 2;   // (2k)!
    for (int k = 1; 2 * k - 1 <= m; ++k) {
        sum += bernoulli_number(2 * k) / fact * poch * power(w, m - 2 * k + 1);
        poch *= Rational(-m + 2 * k - 1) * Rational(-m + 2 * k);
        fact *= Rational((2 * k + 1) * (2 * k + 2));
    }
    return sum;
}

enum class ZetaRoute { euler_maclaurin, functional_equation };

inline EvalResult chi_ratio(Complex s);

/// Riemann zeta; the functional-equation route evaluates chi(s) zeta(1-s).
inline EvalResult riemann_zeta(Complex s, ZetaRoute route = ZetaRoute::euler_maclaurin, const SeriesConfig& cfg = {})
{
    require_finite(s, "riemann_zeta argument");
    if (detail::near_one(s))
        throw PoleError("pole at s=1");
    if (route == ZetaRoute::euler_maclaurin) {
        auto r = hurwitz_zeta(s, 1.0, cfg);
        r.strategy = "euler-maclaurin";
        return r;
    }
    if (s == Complex(0.0))
        throw DomainError("riemann_zeta: functional equation is indeterminate at s=0");
    const auto chi = chi_ratio(s);
    const auto z = hurwitz_zeta(1.0 - s, 1.0, cfg);
    EvalResult r;
    r.value = chi.value * z.value;
    r.err_estimate = std::abs(chi.value) * z.err_estimate + chi.err_estimate * std::abs(z.value);
    r.strategy = "functional-equation";
    r.work = z.work;
    return r;
}

/// chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2), evaluated in log space.
inline EvalResult chi_ratio(Complex s)
{
    require_finite(s, "chi_ratio argument");
    const Complex half_s = 0.5 * s;
    const Complex half_1ms = 0.5 * (1.0 - s);
    if (is_nonpositive_integer(half_1ms, 1e-15))
        throw PoleError("chi_ratio: pole at s=" + format_complex(s));
    if (is_nonpositive_integer(half_s, 1e-15))
        return {0.0, 0.0, "chi-zero", 1};
    const Complex log_chi = (s - 0.5) * std::log(pi) + ln_gamma(half_1ms) - ln_gamma(half_s);
    const Complex v = std::exp(log_chi);
    return {v, 8.0 * eps * std::abs(v) * (1.0 + std::abs(log_chi)), "log-gamma", 1};
}

inline EvalResult lerch_phi_integral(Complex z, Complex s, Complex a, const QuadratureConfig& qcfg = {});

/// Dirichlet eta (1 - 2^{1-s}) zeta(s); entire, ln 2 at s = 1.
inline EvalResult dirichlet_eta(Complex s, const SeriesConfig& cfg = {})
{
    require_finite(s, "dirichlet_eta argument");
    if (std::abs(s - 1.0) < 1e-8)
        return {ln2, eps, "eta-limit", 0};
    if (std::abs(s - 1.0) < 0.25) {
        // the closed form cancels near s = 1; sum the alternating series instead
        auto sum = alternating_sum(
            -1.0, [&](std::uint64_t n) { return pow_neg(static_cast<double>(n) + 1.0, s); }, cfg, "dirichlet_eta");
        return {sum.value, sum.err_estimate, "alternating-euler", sum.terms};
    }
    const auto z = riemann_zeta(s, ZetaRoute::euler_maclaurin, cfg);
    const Complex factor = 1.0 - std::exp((1.0 - s) * ln2);
    return {factor * z.value, std::abs(factor) * z.err_estimate + eps * std::abs(z.value), "eta-from-zeta", z.work};
}

struct LerchParams {
    Complex z{};
    Complex s{};
    Complex a{1.0};

    void validate() const
    {
        require_finite(z, "lerch z");
        require_finite(s, "lerch s");
        require_finite(a, "lerch a");
        if (is_nonpositive_integer(a, 1e-15))
            throw DomainError("lerch_phi: a must not be a non-positive integer");
        const double r = std::abs(z);
        if (r > 1.0 + 1e-14)
            throw DomainError("lerch_phi: requires |z| <= 1");
        if (r >= 1.0 - 1e-14 && !detail::near_one(z) && !(s.real() > 0.0))
            throw DomainError("lerch_phi: |z| = 1 requires Re(s) > 0");
    }
};

//
// Hurwitz-Lerch Phi(z, s, a) = sum_n z^n (n+a)^-s.
//   |z| < 1           direct sum, geometric tail bound
//   z real, near -1   Euler transform of the alternating tail
//   z = 1             Hurwitz zeta (with its continuation)
//   |z| = 1 otherwise integral representation
//
inline EvalResult lerch_phi(const LerchParams& p, const SeriesConfig& cfg = {})
{
    cfg.validate();
    p.validate();
    const Complex z = p.z, s = p.s, a = p.a;
    EvalResult r;
    const double rz = std::abs(z);
    if (z == Complex(0.0)) {
        r = {pow_neg(a, s), eps * std::abs(pow_neg(a, s)), "lerch-direct", 1};
    } else if (detail::near_one(z)) {
        if (!(a.real() > 0.0))
            throw DomainError("lerch_phi: z = 1 requires Re(a) > 0");
        r = hurwitz_zeta(s, a, cfg);
        r.strategy = "lerch-hurwitz";
    } else if (is_real(z, 1e-15) && z.real() < -0.5 && s.real() > 0.0) {
        auto sum = alternating_sum(
            std::max(-1.0, z.real()), [&](std::uint64_t n) { return pow_neg(static_cast<double>(n) + a, s); }, cfg,
            "lerch_phi");
        r = {sum.value, sum.err_estimate, "lerch-euler", sum.terms};
    } else if (rz < 1.0 - 1e-14) {
        Complex zn = 1.0;
        std::uint64_t last_n = 0;
        auto term = [&](std::uint64_t n) {
            // z^n by running product; n is visited in increasing order
            while (last_n < n) {
                zn *= z;
                ++last_n;
            }
            return zn * pow_neg(static_cast<double>(n) + a, s);
        };
        auto sum = geometric_sum(term, rz, cfg, "lerch_phi");
        r = {sum.value, sum.err_estimate, "lerch-direct", sum.terms};
    } else {
        if (!(a.real() > 0.0))
            throw DomainError("lerch_phi: unit-circle z requires Re(a) > 0");
        r = lerch_phi_integral(z, s, a);
    }
    r.value = fault::apply(FaultTarget::lerch_phi, r.value);
    return r;
}

//
// Integral representation
//   Phi(z, s, a) = 1/Gamma(s) int_0^inf t^{s-1} e^{-a t} / (1 - z e^{-t}) dt,
// Re(a) > 0, |z| <= 1; Re(s) > 0 for z != 1 and Re(s) > 1 for z = 1.
//
inline EvalResult lerch_phi_integral(Complex z, Complex s, Complex a, const QuadratureConfig& qcfg)
{
    require_finite(z, "lerch z");
    require_finite(s, "lerch s");
    require_finite(a, "lerch a");
    if (!(a.real() > 0.0))
        throw DomainError("lerch_phi_integral: requires Re(a) > 0");
    if (std::abs(z) > 1.0 + 1e-14)
        throw DomainError("lerch_phi_integral: requires |z| <= 1");
    if (std::abs(z - 1.0) <= 1e-12) {
        if (!(s.real() > 1.0))
            throw DomainError("lerch_phi_integral: z = 1 requires Re(s) > 1");
        // t e^{-a t} / (1 - e^{-t}) is smooth at 0; integrate it at order s - 1
        KernelSpec k;
        k.value = [a](double t) -> Complex {
            if (t == 0.0)
                return 1.0;
            return t * std::exp(-a * t) / (-std::expm1(-t));
        };
        k.decay_rate = a.real();
        auto r = weyl_transform(k, s - 1.0, 0.0, qcfg);
        r.value /= (s - 1.0);
        r.err_estimate /= std::abs(s - 1.0);
        r.strategy = "lerch-integral";
        return r;
    }
    if (!(s.real() > 0.0))
        throw DomainError("lerch_phi_integral: requires Re(s) > 0");
    KernelSpec k;
    k.value = [a, z](double t) -> Complex { return std::exp(-a * t) / (1.0 - z * std::exp(-t)); };
    k.decay_rate = a.real();
    auto r = weyl_transform(k, s, 0.0, qcfg);
    r.strategy = "lerch-integral";
    return r;
}

/// Li_s(z) = z Phi(z, s, 1).
inline EvalResult polylog(Complex z, Complex s, const SeriesConfig& cfg = {})
{
    require_finite(z, "polylog z");
    require_finite(s, "polylog s");
    const double r = std::abs(z);
    if (r > 1.0 + 1e-14)
        throw DomainError("polylog: requires |z| <= 1");
    if (r >= 1.0 - 1e-14) {
        if (detail::near_one(z) && !(s.real() > 1.0))
            throw DomainError("polylog: z = 1 requires Re(s) > 1");
        if (!(s.real() > 0.0))
            throw DomainError("polylog: |z| = 1 requires Re(s) > 0");
    }
    if (z == Complex(0.0))
        return {0.0, 0.0, "polylog", 0};
    auto phi = lerch_phi({z, s, 1.0}, cfg);
    phi.value *= z;
    phi.err_estimate *= r;
    return phi;
}

} // namespace zetakit

#endif // ZETAKIT_ZETA_HPP
