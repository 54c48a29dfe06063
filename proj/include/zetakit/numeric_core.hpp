#ifndef ZETAKIT_NUMERIC_CORE_HPP
#define ZETAKIT_NUMERIC_CORE_HPP

#include <array>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core.hpp"

namespace zetakit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest Bernoulli/Euler index served by the exact tables.
inline constexpr int max_poly_degree = 64;

/// Exact polynomial, ascending powers.
struct PolyCoeffs {
    int degree = 0;
    std::vector<Rational> coeffs;
};

inline double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

/// The exact binary value of a finite double.
inline Rational rational_from_double(double v)
{
    if (!std::isfinite(v))
        throw DomainError("rational_from_double: non-finite value");
    int exp = 0;
    const double mant = std::frexp(v, &exp);
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Rational r = Rational(BigInt(scaled));
    exp -= 53;
    if (exp > 0)
        r *= Rational(BigInt(1) << exp);
    else if (exp < 0)
        r /= Rational(BigInt(1) << -exp);
    return r;
}

//
// Compensated (Neumaier) summation, componentwise on complex values.
//
class CompensatedSum {
public:
    void add(Complex term) noexcept
    {
        add_component(re_, re_c_, term.real());
        add_component(im_, im_c_, term.imag());
        abs_sum_ += std::abs(term);
        ++count_;
    }
    CompensatedSum& operator+=(Complex term) noexcept
    {
        add(term);
        return *this;
    }
    Complex value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }
    /// Sum of |terms|; the scale of the rounding error.
    double abs_sum() const noexcept { return abs_sum_; }
    std::uint64_t count() const noexcept { return count_; }

private:
    static void add_component(double& sum, double& comp, double x) noexcept
    {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double re_ = 0.0, re_c_ = 0.0;
    double im_ = 0.0, im_c_ = 0.0;
    double abs_sum_ = 0.0;
    std::uint64_t count_ = 0;
};

inline Complex compensated_sum(std::span<const Complex> terms) noexcept
{
    CompensatedSum acc;
    for (auto t : terms)
        acc.add(t);
    return acc.value();
}

//
// Gamma family.
//
namespace detail {

// Lanczos approximation, g = 7, n = 9.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

inline Complex ln_gamma_right(Complex z)
{
    // valid for Re(z) >= 1/2
    z -= 1.0;
    Complex a = lanczos_coeffs[0];
    for (std::size_t k = 1; k < lanczos_coeffs.size(); ++k)
        a += lanczos_coeffs[k] / (z + static_cast<double>(k));
    const Complex t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

inline Complex sin_pi(Complex z)
{
    // reduce the real part so that sin(pi z) keeps its relative accuracy
    const double shift = std::round(z.real());
    const Complex r{z.real() - shift, z.imag()};
    const Complex v = std::sin(pi * r);
    return (static_cast<long long>(shift) % 2 == 0) ? v : -v;
}

} // namespace detail

/// log Gamma(s). Lanczos on Re(s) >= 1/2, reflection elsewhere.
inline Complex ln_gamma(Complex s)
{
    require_finite(s, "ln_gamma argument");
    if (is_nonpositive_integer(s))
        throw PoleError("ln_gamma: pole at s=" + format_complex(s));
    Complex r;
    if (s.real() >= 0.5)
        r = detail::ln_gamma_right(s);
    else
        r = std::log(pi) - std::log(detail::sin_pi(s)) - detail::ln_gamma_right(1.0 - s);
    return fault::apply(FaultTarget::ln_gamma, r);
}

inline Complex gamma(Complex s)
{
    return std::exp(ln_gamma(s));
}

/// 1/Gamma(s); entire, zero at the poles of Gamma.
inline Complex rgamma(Complex s)
{
    if (is_nonpositive_integer(s))
        return 0.0;
    return std::exp(-ln_gamma(s));
}

/// Rising factorial s(s+1)...(s+n-1).
inline Complex pochhammer(Complex s, int n)
{
    if (n < 0)
        throw DomainError("pochhammer: negative length");
    Complex p = 1.0;
    for (int k = 0; k < n; ++k)
        p *= s + static_cast<double>(k);
    return p;
}

//
// Exact Bernoulli and Euler tables.
//
namespace detail {

struct PolyTables {
    std::vector<Rational> bernoulli;                 // B_0 .. B_{max+1}
    std::vector<PolyCoeffs> bernoulli_poly;          // B_n(x), n <= max+1
    std::vector<std::vector<double>> bernoulli_poly_f;
    std::vector<PolyCoeffs> euler_poly;              // E_n(x), n <= max
    std::vector<std::vector<double>> euler_poly_f;

    PolyTables()
    {
        const int top = max_poly_degree + 1;
        // Pascal rows 0..top+1
        std::vector<std::vector<BigInt>> binom(top + 2);
        for (int n = 0; n <= top + 1; ++n) {
            binom[n].assign(n + 1, BigInt(1));
            for (int k = 1; k < n; ++k)
                binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
        }
        // sum_{k=0}^{n} C(n+1,k) B_k = 0
        bernoulli.assign(top + 1, Rational(0));
        bernoulli[0] = 1;
        for (int n = 1; n <= top; ++n) {
            Rational acc = 0;
            for (int k = 0; k < n; ++k)
                acc += Rational(binom[n + 1][k]) * bernoulli[k];
            bernoulli[n] = -acc / Rational(binom[n + 1][n]);
        }
        for (int n = 0; n <= top; ++n) {
            PolyCoeffs p{n, std::vector<Rational>(n + 1)};
            for (int k = 0; k <= n; ++k)
                p.coeffs[n - k] = Rational(binom[n][k]) * bernoulli[k];
            bernoulli_poly.push_back(p);
        }
        // E_n(x) = 2/(n+1) [B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)]
        for (int n = 0; n < top; ++n) {
            const auto& b = bernoulli_poly[n + 1].coeffs;
            PolyCoeffs e{n, std::vector<Rational>(n + 1)};
            for (int j = 0; j <= n + 1; ++j) {
                const Rational scaled = b[j] * Rational(BigInt(1) << (n + 1)) / Rational(BigInt(1) << j);
                const Rational c = Rational(2, n + 1) * (b[j] - scaled);
                if (j <= n)
                    e.coeffs[j] = c;
                // the x^{n+1} coefficients cancel exactly (2^{n+1}/2^{n+1} = 1)
            }
            euler_poly.push_back(e);
        }
        for (const auto& p : bernoulli_poly)
            bernoulli_poly_f.push_back(to_doubles(p));
        for (const auto& p : euler_poly)
            euler_poly_f.push_back(to_doubles(p));
    }

    static std::vector<double> to_doubles(const PolyCoeffs& p)
    {
        std::vector<double> out;
        out.reserve(p.coeffs.size());
        for (const auto& c : p.coeffs)
            out.push_back(to_double(c));
        return out;
    }
};

inline const PolyTables& poly_tables()
{
    static const PolyTables tables;
    return tables;
}

inline void check_degree(int n, int limit, const char* what)
{
    if (n < 0 || n > limit)
        throw RangeError(std::string(what) + ": index " + std::to_string(n) + " outside [0, " +
                         std::to_string(limit) + "]");
}

inline Complex horner(const std::vector<double>& c, Complex x)
{
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline Rational horner(const std::vector<Rational>& c, const Rational& x)
{
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

} // namespace detail

/// Exact B_n. The table extends one past max_poly_degree so that E_max is available.
inline const Rational& bernoulli_number(int n)
{
    detail::check_degree(n, max_poly_degree + 1, "bernoulli_number");
    return detail::poly_tables().bernoulli[n];
}

/// B_n as a double (subject to the bernoulli fault hook).
inline double bernoulli_number_value(int n)
{
    return fault::apply(FaultTarget::bernoulli, to_double(bernoulli_number(n)));
}

inline const PolyCoeffs& bernoulli_poly_coeffs(int n)
{
    detail::check_degree(n, max_poly_degree + 1, "bernoulli_poly");
    return detail::poly_tables().bernoulli_poly[n];
}

inline const PolyCoeffs& euler_poly_coeffs(int n)
{
    detail::check_degree(n, max_poly_degree, "euler_poly");
    return detail::poly_tables().euler_poly[n];
}

inline Complex bernoulli_poly(int n, Complex x)
{
    detail::check_degree(n, max_poly_degree + 1, "bernoulli_poly");
    require_finite(x, "bernoulli_poly argument");
    return fault::apply(FaultTarget::bernoulli, detail::horner(detail::poly_tables().bernoulli_poly_f[n], x));
}

inline Rational bernoulli_poly(int n, const Rational& x)
{
    return detail::horner(bernoulli_poly_coeffs(n).coeffs, x);
}

inline Complex euler_poly(int n, Complex x)
{
    detail::check_degree(n, max_poly_degree, "euler_poly");
    require_finite(x, "euler_poly argument");
    return detail::horner(detail::poly_tables().euler_poly_f[n], x);
}

inline Rational euler_poly(int n, const Rational& x)
{
    return detail::horner(euler_poly_coeffs(n).coeffs, x);
}

/// Digamma function psi(z); used for the s = 1 limit of Hurwitz differences.
inline Complex digamma(Complex z)
{
    require_finite(z, "digamma argument");
    if (is_nonpositive_integer(z))
        throw PoleError("digamma: pole at z=" + format_complex(z));
    if (z.real() < 0.5)
        return digamma(1.0 - z) - pi / std::tan(pi * z);
    Complex shift = 0.0;
    while (std::abs(z) < 12.0 || z.real() < 8.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const Complex inv2 = 1.0 / (z * z);
    Complex series = 0.0;
    Complex p = inv2;
    for (int k = 1; k <= 10; ++k) {
        series += to_double(bernoulli_number(2 * k)) / (2.0 * k) * p;
        p *= inv2;
    }
    return shift + std::log(z) - 0.5 / z - series;
}

} // namespace zetakit

#endif // ZETAKIT_NUMERIC_CORE_HPP
