#ifndef ZETAKIT_CORE_HPP
#define ZETAKIT_CORE_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zetakit {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double ln2 = std::numbers::ln2;
inline constexpr double eps = std::numeric_limits<double>::epsilon();
inline constexpr double inf = std::numeric_limits<double>::infinity();

//
// Error hierarchy. Every numerical failure is reported through one of these;
// the CLI maps them onto exit codes.
//
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class RangeError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Value produced by every evaluation strategy.
struct EvalResult {
    Complex value{};
    double err_estimate = 0.0;  // absolute
    std::string strategy;
    std::uint64_t work = 0;     // terms summed or integrand evaluations
};

inline bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what)
{
    if (!is_finite(z))
        throw DomainError(std::string(what) + " must be finite");
}

inline bool is_real(Complex z, double tol = 0.0) noexcept
{
    return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z.real()));
}

/// True when z is (numerically) one of 0, -1, -2, ...
inline bool is_nonpositive_integer(Complex z, double tol = 0.0) noexcept
{
    if (!is_real(z, tol) || z.real() > tol)
        return false;
    return std::abs(z.real() - std::round(z.real())) <= tol * std::max(1.0, std::abs(z.real()));
}

/// Principal power base^(-s) for base off the negative real axis.
inline Complex pow_neg(Complex base, Complex s)
{
    if (base.imag() == 0.0 && base.real() > 0.0) {
        if (s.imag() == 0.0)
            return std::pow(base.real(), -s.real());
        return std::exp(-s * std::log(base.real()));
    }
    return std::exp(-s * std::log(base));
}

inline std::string format_complex(Complex z, int digits = 17)
{
    char buf[96];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, z.real());
    } else {
        char re[40], im[40];
        std::snprintf(re, sizeof re, "%.*g", digits, z.real());
        std::snprintf(im, sizeof im, "%.*g", digits, std::abs(z.imag()));
        std::snprintf(buf, sizeof buf, "%s%c%si", re, std::signbit(z.imag()) ? '-' : '+', im);
    }
    return buf;
}

//
// Fault injection. A debug facility used by the self-test and the
// mutation-style tests: the selected function's public result is scaled by
// (1 + magnitude). Only one target is active at a time.
//
enum class FaultTarget { none, hurwitz_zeta, lerch_phi, ext_fd, ext_be, bernoulli, ln_gamma };

namespace fault {

inline std::atomic<FaultTarget> active{FaultTarget::none};
inline std::atomic<double> magnitude{1e-6};

inline Complex apply(FaultTarget target, Complex v) noexcept
{
    if (active.load(std::memory_order_relaxed) == target)
        return v * (1.0 + magnitude.load(std::memory_order_relaxed));
    return v;
}

inline double apply(FaultTarget target, double v) noexcept
{
    if (active.load(std::memory_order_relaxed) == target)
        return v * (1.0 + magnitude.load(std::memory_order_relaxed));
    return v;
}

inline const char* name(FaultTarget t) noexcept
{
    switch (t) {
    case FaultTarget::none: return "none";
    case FaultTarget::hurwitz_zeta: return "hurwitz_zeta";
    case FaultTarget::lerch_phi: return "lerch_phi";
    case FaultTarget::ext_fd: return "ext_fd";
    case FaultTarget::ext_be: return "ext_be";
    case FaultTarget::bernoulli: return "bernoulli";
    case FaultTarget::ln_gamma: return "ln_gamma";
    }
    return "none";
}

inline FaultTarget parse(const std::string& s)
{
    for (auto t : {FaultTarget::none, FaultTarget::hurwitz_zeta, FaultTarget::lerch_phi, FaultTarget::ext_fd,
                   FaultTarget::ext_be, FaultTarget::bernoulli, FaultTarget::ln_gamma})
        if (s == name(t))
            return t;
    throw DomainError("unknown fault target '" + s + "'");
}

} // namespace fault

/// Activates a fault for the lifetime of the guard.
class ScopedFault {
public:
    explicit ScopedFault(FaultTarget target, double magnitude = 1e-6)
        : previous_(fault::active.load()), previous_magnitude_(fault::magnitude.load())
    {
        fault::magnitude.store(magnitude);
        fault::active.store(target);
    }
    ~ScopedFault()
    {
        fault::active.store(previous_);
        fault::magnitude.store(previous_magnitude_);
    }
    ScopedFault(const ScopedFault&) = delete;
    ScopedFault& operator=(const ScopedFault&) = delete;

private:
    FaultTarget previous_;
    double previous_magnitude_;
};

} // namespace zetakit

#endif // ZETAKIT_CORE_HPP
