#ifndef ZETAKIT_SERIES_HPP
#define ZETAKIT_SERIES_HPP

#include <vector>

#include "core.hpp"
#include "numeric_core.hpp"

namespace zetakit {

struct SeriesConfig {
    double rel_tol = 1e-16;
    std::uint64_t max_terms = 100000;
    int em_shift = 0;   // Euler-Maclaurin direct-sum cutoff N; 0 selects it automatically
    int em_order = 30;  // largest Bernoulli index 2M used by the Euler-Maclaurin corrections

    void validate() const
    {
        if (!(rel_tol > 0.0))
            throw DomainError("series rel_tol must be positive");
        if (max_terms < 1)
            throw DomainError("series max_terms must be positive");
        if (em_shift < 0)
            throw DomainError("em_shift must be non-negative");
        if (em_order < 2 || em_order % 2 != 0 || em_order > max_poly_degree)
            throw DomainError("em_order must be an even integer in [2, " + std::to_string(max_poly_degree) + "]");
    }
};

struct SeriesSum {
    Complex value{};
    double err_estimate = 0.0;
    std::uint64_t terms = 0;
};

//
// Sum of a series whose terms eventually shrink at least geometrically,
// |t_{n+1}| <= q |t_n| with q < 1. Stops once the geometric tail bound
// |t_{n+1}| / (1 - q) falls below the requested relative tolerance (or the
// rounding level of the accumulated sum).
//
template <class Term>
SeriesSum geometric_sum(Term&& term, double ratio_hint, const SeriesConfig& cfg, const char* what)
{
    CompensatedSum sum;
    Complex t = term(std::uint64_t{0});
    double prev = std::abs(t);
    for (std::uint64_t n = 0;; ++n) {
        sum.add(t);
        if (n + 1 >= cfg.max_terms)
            break;
        const Complex next = term(n + 1);
        const double mag = std::abs(next);
        const double q = std::max(ratio_hint, prev > 0.0 ? mag / prev : 0.0);
        const double level = std::max(cfg.rel_tol * std::abs(sum.value()), eps * sum.abs_sum());
        if (q < 1.0 && mag / (1.0 - q) <= level && n >= 2) {
            SeriesSum out{sum.value(), mag / (1.0 - q) + eps * sum.abs_sum(), n + 1};
            return out;
        }
        prev = mag;
        t = next;
    }
    throw ConvergenceError(std::string(what) + ": no convergence within " + std::to_string(cfg.max_terms) +
                           " terms");
}

//
// Euler transform of sum_{j >= 0} z^j c_j for real z in [-1, 0):
//   sum_k z^k / (1 - z)^{k+1} Delta^k c_0,
// with forward differences kept on a running diagonal. Since |z/(1-z)| <= 1/2,
// rounding in the difference table (growth <= 2^k) is damped by the weights.
//
template <class Term>
SeriesSum euler_transform(double z, Term&& c, const SeriesConfig& cfg, const char* what, int max_k = 400)
{
    if (!(z >= -1.0 && z < 0.0))
        throw DomainError(std::string(what) + ": Euler transform needs z in [-1, 0)");
    const double w = z / (1.0 - z);
    std::vector<Complex> diag;  // diag[j] = Delta^j c_{k-j}
    diag.reserve(max_k + 1);
    CompensatedSum sum;
    double weight = 1.0 / (1.0 - z);
    int small_run = 0;
    double c0 = 0.0;
    for (int k = 0; k <= max_k; ++k) {
        Complex carry = c(k);
        if (k == 0)
            c0 = std::abs(carry);
        for (auto& d : diag) {
            const Complex next = carry - d;
            d = carry;
            carry = next;
        }
        diag.push_back(carry);
        const Complex term = weight * carry;
        sum.add(term);
        weight *= w;
        const double level = std::max(cfg.rel_tol * std::abs(sum.value()), 4.0 * eps * c0);
        small_run = (std::abs(term) <= level) ? small_run + 1 : 0;
        if (small_run >= 3 && k >= 6) {
            const double rounding = (k + 1) * eps * c0 / (1.0 - z) + eps * sum.abs_sum();
            return {sum.value(), std::abs(term) + rounding, static_cast<std::uint64_t>(k + 1)};
        }
    }
    throw ConvergenceError(std::string(what) + ": Euler transform did not converge");
}

//
// sum_{n >= 0} z^n b_n with real z in [-1, 0): terms are summed directly
// until |b_n| has decreased three times in a row, then the remaining tail
// goes through the Euler transform.
//
template <class Term>
SeriesSum alternating_sum(double z, Term&& b, const SeriesConfig& cfg, const char* what)
{
    CompensatedSum head;
    double zn = 1.0;
    double prev = inf;
    int decreases = 0;
    std::uint64_t K = 0;
    for (; K < 64 && decreases < 3; ++K) {
        const Complex bk = b(K);
        const double mag = std::abs(bk);
        decreases = (mag < prev) ? decreases + 1 : 0;
        prev = mag;
        if (decreases >= 3)
            break;
        head.add(zn * bk);
        zn *= z;
    }
    if (decreases < 3)
        throw ConvergenceError(std::string(what) + ": terms never become monotone");
    const std::uint64_t start = K;
    auto tail = euler_transform(z, [&](int j) { return b(start + static_cast<std::uint64_t>(j)); }, cfg, what);
    head.add(zn * tail.value);
    return {head.value(), std::abs(zn) * tail.err_estimate + eps * head.abs_sum(), start + tail.terms};
}

} // namespace zetakit

#endif // ZETAKIT_SERIES_HPP
