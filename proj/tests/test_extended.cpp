#include <gtest/gtest.h>

#include <vector>

#include "zetakit/extended.hpp"

using namespace zetakit;

namespace {

const Complex I(0.0, 1.0);

double rel(Complex v, Complex ref)
{
    return std::abs(v - ref) / std::abs(ref);
}

// sum_n sign^n e^{-(n+a)x} (n+a)^{-s}, summed backwards (x > 0 only)
Complex direct_series(double sign, Complex a, Complex s, Complex x, int terms)
{
    Complex acc = 0.0;
    for (int n = terms; n >= 0; --n) {
        const Complex m = a + static_cast<double>(n);
        const Complex v = std::exp(-m * x - s * std::log(m));
        acc += (sign < 0.0 && n % 2 == 1) ? -v : v;
    }
    return acc;
}

// alternating sum_n (-1)^n (n+a)^{-s}: average of consecutive partial sums, repeated
double alternating_oracle(double a, double s)
{
    std::vector<double> partial;
    double acc = 0.0;
    for (int n = 0; n < 40; ++n) {
        acc += (n % 2 == 0 ? 1.0 : -1.0) * std::pow(n + a, -s);
        partial.push_back(acc);
    }
    while (partial.size() > 1) {
        for (std::size_t i = 0; i + 1 < partial.size(); ++i)
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        partial.pop_back();
    }
    return partial[0];
}

// classical FD kernel quadrature, independent of the library Weyl engine
double fd_quadrature_oracle(double s, double x)
{
    // 1/Gamma(s) int_0^inf t^{s-1} / (e^{t+x} + 1) dt, composite Simpson on t = u^2
    const int n = 200000;
    const double U = std::sqrt(60.0);
    const double h = U / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double u = i * h;
        const double t = u * u;
        const double f = (i == 0 && s < 0.5) ? 0.0 : 2.0 * std::pow(u, 2.0 * s - 1.0) / (std::exp(t + x) + 1.0);
        acc += f * ((i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0));
    }
    return acc * h / 3.0 / std::tgamma(s);
}

} // namespace

TEST(ExtendedFD, ClosedFormsAtZero)
{
    EXPECT_LT(rel(ext_fd({0.0, 2.0, 0.0}).value, pi * pi / 12.0), 1e-14);
    EXPECT_LT(rel(ext_fd({1.0, 2.0, 0.0}).value, 1.0 - pi * pi / 12.0), 1e-13);
    EXPECT_LT(rel(ext_fd({0.0, 1.0, 0.0}).value, ln2), 1e-14);
    EXPECT_LT(rel(ext_fd({0.0, 0.0, 0.0}).value, 0.5), 1e-14);
    // Phi_nu(1; 0) = [psi((nu+2)/2) - psi((nu+1)/2)] / 2; nu = 1 gives 1 - ln 2
    EXPECT_LT(rel(ext_fd({1.0, 1.0, 0.0}).value, 1.0 - ln2), 1e-14);
    // Phi_0(-2; 0) = eta(-2) = 0
    EXPECT_LT(std::abs(ext_fd({0.0, -2.0, 0.0}).value), 1e-15);
}

TEST(ExtendedFD, AlternatingOracle)
{
    for (double nu : {0.0, 0.5, 2.3})
        for (double s : {0.5, 1.5, 3.0})
            EXPECT_LT(rel(ext_fd({nu, s, 0.0}).value, alternating_oracle(nu + 1.0, s)), 1e-12) << nu << " " << s;
}

TEST(ExtendedFD, ClassicalQuadratureOracle)
{
    for (double s : {1.0, 2.0, 2.5})
        for (double x : {0.0, 1.0, 3.0}) {
            const double ref = fd_quadrature_oracle(s, x);
            for (auto st : {Strategy::Auto, Strategy::XSeries, Strategy::WeylQuad})
                EXPECT_LT(rel(ext_fd({0.0, s, x}, st).value, ref), 1e-10) << s << " " << x;
        }
}

TEST(ExtendedBE, ClosedFormsAtZero)
{
    EXPECT_LT(rel(ext_be({0.0, 2.0, 0.0}).value, pi * pi / 6.0), 1e-14);
    EXPECT_LT(rel(ext_be({0.0, -1.0, 0.0}).value, -1.0 / 12.0), 1e-14);
    EXPECT_LT(rel(ext_be({0.0, 0.0, 0.0}).value, -0.5), 1e-14);
    EXPECT_LT(rel(ext_be({1.0, 0.0, 0.0}).value, -1.5), 1e-14);
    // Psi_{1/2}(2; 0) = zeta(2, 3/2) = pi^2/2 - 4
    EXPECT_LT(rel(ext_be({0.5, 2.0, 0.0}).value, pi * pi / 2.0 - 4.0), 1e-13);
    EXPECT_EQ(ext_be({0.0, -3.0, 0.0}).strategy, "negint-bernoulli");
}

TEST(ExtendedBE, DirectSeriesOracle)
{
    for (double nu : {0.0, 0.5, 2.0})
        for (Complex s : {Complex(-1.5), Complex(0.5), Complex(2.0), Complex(2.0, 2.0)})
            for (double x : {0.5, 1.0, 3.0}) {
                const Complex ref = direct_series(1.0, nu + 1.0, s, x, 200);
                EXPECT_LT(rel(ext_be({nu, s, x}).value, ref), 1e-13) << nu << s << x;
            }
    double li2 = 0.0;
    for (int n = 200; n >= 1; --n)
        li2 += std::exp(-static_cast<double>(n)) / (static_cast<double>(n) * n);
    EXPECT_LT(rel(ext_be({0.0, 2.0, 1.0}).value, li2), 1e-14);
}

TEST(ExtendedBE, PoleAtOrigin)
{
    EXPECT_THROW(ext_be({0.0, 1.0, 0.0}), PoleError);
    EXPECT_THROW(ext_be({0.7, 1.0, 0.0}, Strategy::XSeries), PoleError);
    EXPECT_NO_THROW(ext_be({0.0, 1.0, 0.5}));
}

TEST(Negint, BernoulliForms)
{
    EXPECT_LT(std::abs(ext_be_negint(0.0, 1) + 1.0 / 12.0), 1e-16);
    EXPECT_LT(std::abs(ext_be_negint(0.0, 0) + 0.5), 1e-16);
    EXPECT_LT(std::abs(ext_be_negint(1.0, 0) + 1.5), 1e-15);
    EXPECT_LT(std::abs(ext_fd_negint_at_pi_i(0.0, 1) - 1.0 / 12.0), 1e-16);
    EXPECT_LT(std::abs(ext_fd_negint_at_pi_i(0.0, 0) - 0.5), 1e-16);
    // nu = 1: phase e^{-i pi} = -1, B_1(2) = 3/2
    EXPECT_LT(std::abs(ext_fd_negint_at_pi_i(1.0, 0) + 1.5), 1e-15);
    EXPECT_THROW(ext_be_negint(0.0, -1), DomainError);
}

TEST(Negint, AutoRoutesAtPiI)
{
    const auto r = ext_fd({0.5, -2.0, Complex(0.0, pi)});
    EXPECT_EQ(r.strategy, "negint-bernoulli");
    EXPECT_LT(std::abs(r.value - ext_fd_negint_at_pi_i(0.5, 2)), 1e-15);
    // consistent with the duality relation applied to the Bose-Einstein values
    for (int n = 0; n <= 4; ++n)
        for (double nu : {0.0, 0.5, 2.0}) {
            const Complex be = ext_be({nu, -static_cast<double>(n), 0.0}).value;
            const Complex fd = ext_fd({nu, -static_cast<double>(n), Complex(0.0, pi)}).value;
            EXPECT_LT(std::abs(std::exp(I * (nu + 1.0) * pi) * fd - be), 1e-14 * std::max(1.0, std::abs(be)))
                << n << " " << nu;
        }
}

TEST(Bridge, LerchRepresentation)
{
    for (double nu : {0.0, 0.5, 2.0})
        for (Complex s : {Complex(1.5), Complex(2.0), Complex(2.0, 2.0)})
            for (double x : {0.1, 1.0, 3.0}) {
                const Complex pre = std::exp(-(nu + 1.0) * x);
                const Complex fd = pre * lerch_phi({-std::exp(-x), s, nu + 1.0}).value;
                const Complex be = pre * lerch_phi({std::exp(-x), s, nu + 1.0}).value;
                EXPECT_LT(rel(ext_fd({nu, s, x}).value, fd), 1e-10) << nu << s << x;
                EXPECT_LT(rel(ext_be({nu, s, x}).value, be), 1e-10) << nu << s << x;
            }
}

TEST(Strategies, AgreeOnGrid)
{
    for (double nu : {0.0, 0.5, 2.0})
        for (double s : {1.5, 2.0, 2.5, 3.0})
            for (double x : {0.1, 1.0, 3.0}) {
                const ExtParams p{nu, s, x};
                std::vector<EvalResult> fd = {ext_fd(p, Strategy::XSeries), ext_fd(p, Strategy::WeylQuad)};
                if (x < 3.0)
                    fd.push_back(ext_fd(p, Strategy::PowerSeriesX));
                std::vector<EvalResult> be = {ext_be(p, Strategy::XSeries), ext_be(p, Strategy::WeylQuad)};
                for (const std::vector<EvalResult>* set : {&fd, &be})
                    for (std::size_t i = 0; i < set->size(); ++i)
                        for (std::size_t j = i + 1; j < set->size(); ++j) {
                            const auto& a = (*set)[i];
                            const auto& b = (*set)[j];
                            const double allowed = std::max(1e-8 * std::abs(a.value),
                                                            10.0 * (a.err_estimate + b.err_estimate));
                            EXPECT_LE(std::abs(a.value - b.value), allowed)
                                << a.strategy << " vs " << b.strategy << " nu=" << nu << " s=" << s << " x=" << x;
                        }
            }
}

TEST(Strategies, PowerSeriesOutsideRadius)
{
    EXPECT_THROW(ext_fd({0.0, 2.5, 3.0}, Strategy::PowerSeriesX), ConvergenceError);
    EXPECT_THROW(ext_be({0.0, 2.5, 1.0}, Strategy::PowerSeriesX), DomainError);
}

TEST(Strategies, PowerSeriesContinuesToNegativeOrder)
{
    for (Complex s : {Complex(-1.5), Complex(0.0), Complex(-0.5, 1.0)}) {
        const Complex ref = direct_series(-1.0, 1.0, s, 0.5, 400);
        EXPECT_LT(rel(ext_fd({0.0, s, 0.5}, Strategy::PowerSeriesX).value, ref), 1e-10) << s;
    }
}

TEST(Strategies, AutoTags)
{
    EXPECT_EQ(ext_fd({0.0, 2.0, 2.0}).strategy, "xseries-direct");
    EXPECT_EQ(ext_fd({0.0, 2.0, 0.01}).strategy, "xseries-euler");
    EXPECT_EQ(ext_be({0.0, 2.0, 0.0}).strategy, "xseries-hurwitz");
    EXPECT_EQ(parse_strategy("weylquad"), Strategy::WeylQuad);
    EXPECT_STREQ(strategy_name(Strategy::NegIntBernoulli), "negint");
    EXPECT_THROW(parse_strategy("bogus"), DomainError);
}

TEST(NuSeries, FermiDirac)
{
    EXPECT_LT(rel(ext_fd_nu_series(0.0, 2.0).value, pi * pi / 12.0), 1e-14);
    EXPECT_LT(rel(ext_fd_nu_series(0.5, 2.0).value, alternating_oracle(1.5, 2.0)), 1e-12);
    EXPECT_LT(rel(ext_fd_nu_series(0.9, 3.0).value, alternating_oracle(1.9, 3.0)), 1e-8);
    EXPECT_THROW(ext_fd_nu_series(1.0, 2.0), DomainError);
}

TEST(NuSeries, EntireInS)
{
    // finite across s = 1 and in agreement with the Hurwitz-difference form
    for (double s : {0.5, 1.0, 1.5}) {
        const auto a = ext_fd_nu_series(0.5, s);
        const auto b = fd_at_zero(0.5, s);
        ASSERT_TRUE(std::isfinite(std::abs(a.value)));
        EXPECT_LT(rel(a.value, b.value), 1e-9) << s;
    }
}

TEST(NuSeries, BoseEinstein)
{
    EXPECT_LT(rel(ext_be_nu_series(0.5, 2.0).value, pi * pi / 2.0 - 4.0), 1e-12);
    EXPECT_LT(rel(ext_be_nu_series(0.3, 3.0).value, hurwitz_zeta(3.0, 1.3).value), 1e-9);
    EXPECT_THROW(ext_be_nu_series(0.3, 1.0), PoleError);
    EXPECT_EQ(ext_be({0.5, 2.0, 0.0}, Strategy::NuSeries).strategy, "nu-series");
}

TEST(XSeries, TaylorAboutZero)
{
    for (double x : {0.0, 0.5, 1.0}) {
        const ExtParams p{0.5, 2.5, x};
        EXPECT_LT(rel(ext_fd_xseries(p).value, ext_fd(p, Strategy::XSeries).value), 1e-9) << x;
    }
    EXPECT_THROW(ext_fd_xseries({0.0, 2.0, Complex(0.5, 0.5)}), DomainError);
}

TEST(Duality, ComplexArgument)
{
    // Psi_nu(s; x) = e^{i (nu+1) pi} Phi_nu(s; x + pi i)
    for (double nu : {0.0, 0.5, 2.0})
        for (Complex s : {Complex(1.5), Complex(2.5, 1.0), Complex(-0.5)})
            for (double x : {0.25, 1.0}) {
                const Complex be = ext_be({nu, s, x}).value;
                const Complex fd = ext_fd({nu, s, x + I * pi}).value;
                EXPECT_LT(rel(std::exp(I * (nu + 1.0) * pi) * fd, be), 1e-10) << nu << s << x;
            }
}

TEST(Properties, MonotoneInX)
{
    for (double nu : {0.0, 1.5})
        for (double s : {0.5, 2.0}) {
            double prev_fd = inf, prev_be = inf;
            for (double x : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
                const double fd = ext_fd({nu, s, x}).value.real();
                EXPECT_LT(fd, prev_fd);
                prev_fd = fd;
                if (x > 0.0) {
                    const double be = ext_be({nu, s, x}).value.real();
                    EXPECT_LT(be, prev_be);
                    prev_be = be;
                }
            }
        }
}

TEST(Properties, ConjugateSymmetry)
{
    for (Complex s : {Complex(1.5, 2.0), Complex(-0.5, 1.0)})
        for (double x : {0.0, 0.7}) {
            const Complex a = ext_fd({0.5, s, x}).value;
            const Complex b = ext_fd({0.5, std::conj(s), x}).value;
            EXPECT_LT(std::abs(a - std::conj(b)), 1e-13 * std::abs(a));
        }
}

TEST(Properties, NuShift)
{
    // Phi_nu(s; x) + Phi_{nu+1}(s; x) = e^{-(nu+1)x} (nu+1)^{-s}
    for (double nu : {0.0, 0.4, 3.0})
        for (Complex s : {Complex(2.0), Complex(-1.5), Complex(0.5, 1.0)})
            for (double x : {0.0, 0.3, 2.0}) {
                const Complex l = ext_fd({nu, s, x}).value + ext_fd({nu + 1.0, s, x}).value;
                const Complex r = std::exp(-(nu + 1.0) * x) * std::exp(-s * std::log(nu + 1.0));
                EXPECT_LT(rel(l, r), 1e-11) << nu << s << x;
            }
}

TEST(Classical, Wrappers)
{
    EXPECT_LT(rel(fd_classical(2.0, 0.0).value, pi * pi / 12.0), 1e-14);
    EXPECT_LT(rel(fd_classical(1.0, 0.0).value, ln2), 1e-14);
    EXPECT_LT(rel(fd_classical(2.0, -1.0).value, ext_fd({0.0, 2.0, 1.0}).value), 1e-14);
    // F_1(1) = pi^2/6 + 1/2 + Li_2(-1/e)
    double li2 = 0.0;
    for (int n = 200; n >= 1; --n)
        li2 += (n % 2 ? -1.0 : 1.0) * std::exp(-static_cast<double>(n)) / (static_cast<double>(n) * n);
    const auto f = fd_classical(2.0, 1.0);
    EXPECT_LT(rel(f.value, pi * pi / 6.0 + 0.5 + li2), 1e-11);
    EXPECT_EQ(f.strategy, "fd-quadrature");
    // F_0(x) = log(1 + e^x)
    EXPECT_LT(rel(fd_classical(1.0, 4.0).value, std::log1p(std::exp(4.0))), 1e-11);

    EXPECT_LT(rel(be_classical(2.0, 0.0).value, pi * pi / 6.0), 1e-14);
    EXPECT_LT(rel(be_classical(1.0, -1.0).value, -std::log1p(-std::exp(-1.0))), 1e-14);
    EXPECT_THROW(be_classical(2.0, 0.5), DomainError);
    EXPECT_THROW(be_classical(1.0, 0.0), DomainError);
    EXPECT_THROW(fd_classical(-1.0, 0.0), DomainError);
}

TEST(Domain, Errors)
{
    EXPECT_THROW(ext_fd({-0.5, 2.0, 1.0}), DomainError);
    EXPECT_THROW(ext_be({0.0, 2.0, -1.0}), DomainError);
    EXPECT_THROW(ext_fd({0.0, 2.0, Complex(1.0, 1.0)}, Strategy::WeylQuad), DomainError);
    EXPECT_THROW(ext_fd({0.0, -1.0, 1.0}, Strategy::WeylQuad), DomainError);
    EXPECT_THROW(ext_fd({0.0, 2.0, 0.0}, Strategy::NegIntBernoulli), DomainError);
    EXPECT_THROW(ext_be({0.0, -2.0, 1.0}, Strategy::NegIntBernoulli), DomainError);
    EXPECT_THROW(ext_fd({0.5, 2.0, 1.0}, Strategy::NuSeries), DomainError);
    EXPECT_THROW(ext_fd({0.0, 2.0, std::nan("")}), DomainError);
}
