// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zetakit/zetakit.hpp"

using namespace zetakit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(Complex v, Complex ref)
{
    const double scale = std::abs(ref);
    return scale == 0.0 ? std::abs(v) : std::abs(v - ref) / scale;
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o)
{
    std::printf("[%s] criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass)
        ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// 1. golden values against independent oracles
Outcome golden_values()
{
    // sum_{n>=1} e^{-n}/n^2 with 200 terms, smallest first
    double li2 = 0.0;
    for (int n = 200; n >= 1; --n)
        li2 += std::exp(-static_cast<double>(n)) / (static_cast<double>(n) * n);
    const double pi2 = pi * pi;
    struct G {
        const char* name;
        std::function<Complex()> f;
        double ref;
        double tol;
    };
    const std::vector<G> cases = {
        {"zeta(2)", [] { return riemann_zeta(2.0).value; }, pi2 / 6.0, 1e-11},
        {"zeta(0)", [] { return riemann_zeta(0.0).value; }, -0.5, 1e-11},
        {"zeta(-1)", [] { return riemann_zeta(-1.0).value; }, -1.0 / 12.0, 1e-11},
        {"eta(1)", [] { return dirichlet_eta(1.0).value; }, std::log(2.0), 1e-11},
        {"eta(2)", [] { return dirichlet_eta(2.0).value; }, pi2 / 12.0, 1e-11},
        {"zeta(2,1/2)", [] { return hurwitz_zeta(2.0, 0.5).value; }, 3.0 * pi2 / 6.0, 1e-11},
        {"Phi_0(2;0)", [] { return ext_fd({0.0, 2.0, 0.0}).value; }, pi2 / 12.0, 1e-11},
        {"Psi_0(2;0)", [] { return ext_be({0.0, 2.0, 0.0}).value; }, pi2 / 6.0, 1e-11},
        {"Psi_0(-1;0)", [] { return ext_be({0.0, -1.0, 0.0}).value; }, -1.0 / 12.0, 1e-11},
        {"Li_2(e^-1)", [] { return polylog(std::exp(-1.0), 2.0).value; }, li2, 1e-11},
    };
    Outcome o;
    const auto t0 = Clock::now();
    double worst = 0.0;
    std::string worst_name = "-";
    for (const auto& c : cases) {
        double e;
        try {
            e = rel(c.f(), c.ref);
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail += std::string(c.name) + " threw: " + ex.what() + "; ";
            continue;
        }
        if (e > c.tol)
            o.pass = false;
        if (e >= worst) {
            worst = e;
            worst_name = c.name;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 5.0)
        o.pass = false;
    o.detail += "10 values, worst rel err " + fmt("%.2e", worst) + " (" + worst_name + "), tol 1e-11, " +
                fmt("%.3f s (limit 5 s)", dt);
    return o;
}

// 2. full identity catalog
Outcome identity_catalog()
{
    Outcome o;
    const auto t0 = Clock::now();
    const auto reports = run_catalog();
    const double dt = seconds_since(t0);
    int failed = 0;
    for (const auto& r : reports)
        if (!r.pass) {
            ++failed;
            o.detail += r.name + " failed (max " + fmt("%.2e", r.max_rel_err) + ", " + r.worst_point + "); ";
        }
    o.pass = failed == 0 && dt < 60.0 && !reports.empty();
    o.detail += std::to_string(reports.size()) + " identities, " + std::to_string(failed) + " failing, " +
                fmt("%.2f s (limit 60 s)", dt);
    return o;
}

// 3. cross-strategy agreement on the 36-point grid
Outcome cross_strategy()
{
    Outcome o;
    int pairs = 0, points = 0;
    double worst = 0.0;
    for (double nu : {0.0, 0.5, 2.0})
        for (double s : {1.5, 2.0, 2.5, 3.0})
            for (double x : {0.1, 1.0, 3.0}) {
                ++points;
                for (int fermi = 1; fermi >= 0; --fermi) {
                    std::vector<Strategy> strategies = {Strategy::XSeries, Strategy::WeylQuad};
                    if (fermi)
                        strategies.push_back(Strategy::PowerSeriesX);
                    std::vector<EvalResult> results;
                    for (auto st : strategies) {
                        try {
                            results.push_back(fermi ? ext_fd({nu, s, x}, st) : ext_be({nu, s, x}, st));
                        } catch (const ConvergenceError&) {
                            if (st != Strategy::PowerSeriesX)
                                throw;
                        }
                    }
                    if (results.size() < 2) {
                        o.pass = false;
                        o.detail += "fewer than two strategies applicable; ";
                    }
                    for (std::size_t i = 0; i < results.size(); ++i)
                        for (std::size_t j = i + 1; j < results.size(); ++j) {
                            ++pairs;
                            const auto& a = results[i];
                            const auto& b = results[j];
                            const double diff = std::abs(a.value - b.value);
                            const double scale = std::max(std::abs(a.value), std::abs(b.value));
                            const double allowed =
                                std::max(1e-8 * scale, 10.0 * (a.err_estimate + b.err_estimate));
                            worst = std::max(worst, diff / scale);
                            if (!(diff <= allowed)) {
                                o.pass = false;
                                o.detail += (fermi ? "FD " : "BE ") + a.strategy + " vs " + b.strategy +
                                            fmt(" at nu=%g s=%g x=%g; ", nu, s, x);
                            }
                        }
                }
            }
    o.detail += std::to_string(points) + " points, " + std::to_string(pairs) + " strategy pairs, worst rel diff " +
                fmt("%.2e", worst);
    return o;
}

// 4. exact rational layer
Outcome exact_layer()
{
    Outcome o;
    int checks = 0;
    auto expect = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            o.pass = false;
            o.detail += what + "; ";
        }
    };
    auto pow_r = [](const Rational& b, int e) {
        Rational r = 1;
        for (int i = 0; i < e; ++i)
            r *= b;
        return r;
    };
    const std::vector<Rational> args = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(2), Rational(-7, 5),
                                        Rational(5, 2)};
    // Bernoulli recurrence sum_{k<=n} C(n+1,k) B_k = 0
    for (int n = 1; n <= 8; ++n) {
        Rational acc = 0;
        BigInt binom = 1;  // C(n+1, k)
        for (int k = 0; k <= n; ++k) {
            acc += Rational(binom) * bernoulli_number(k);
            binom = binom * (n + 1 - k) / (k + 1);
        }
        expect(acc == 0, "Bernoulli recurrence n=" + std::to_string(n));
    }
    for (int n = 1; n <= 8; ++n)
        for (const auto& x : args) {
            // B_n(x+1) - B_n(x) = n x^{n-1}
            expect(bernoulli_poly(n, Rational(x + 1)) - bernoulli_poly(n, x) == n * pow_r(x, n - 1),
                   "difference equation n=" + std::to_string(n));
        }
    for (int n = 0; n <= 8; ++n)
        for (const auto& nu : args) {
            // B_{n+1}(nu+1)/(n+1) - B_{n+1}(nu)/(n+1) = nu^n
            expect((bernoulli_poly(n + 1, Rational(nu + 1)) - bernoulli_poly(n + 1, nu)) / (n + 1) == pow_r(nu, n),
                   "Bernoulli chain n=" + std::to_string(n));
        }
    for (int n = 1; n <= 8; ++n)
        for (const auto& a : args)
            if (a > 0)  // zeta(1-n, a) = -B_n(a)/n
                expect(hurwitz_zeta_negint_exact(n - 1, a) == -bernoulli_poly(n, a) / n,
                       "Hurwitz closed form n=" + std::to_string(n));
    for (int n = 0; n <= 8; ++n)
        for (const auto& nu : args)
            if (nu >= 0)  // Psi_nu(-n;0) = zeta(-n, nu+1) = -B_{n+1}(nu+1)/(n+1)
                expect(hurwitz_zeta_negint_exact(n, Rational(nu + 1)) ==
                           -bernoulli_poly(n + 1, Rational(nu + 1)) / (n + 1),
                       "BE negative-integer closed form n=" + std::to_string(n));
    o.detail += std::to_string(checks) + " exact checks, n <= 8";
    return o;
}

// 5. continuation consistency
Outcome continuation()
{
    Outcome o;
    // B_1..B_4 written out
    auto bern = [](int n, double a) {
        switch (n) {
        case 1: return a - 0.5;
        case 2: return a * a - a + 1.0 / 6.0;
        case 3: return a * a * a - 1.5 * a * a + 0.5 * a;
        default: return a * a * a * a - 2.0 * a * a * a + a * a - 1.0 / 30.0;
        }
    };
    double worst_h = 0.0;
    for (int s = -3; s <= 0; ++s)
        for (double a : {0.5, 1.0, 2.0}) {
            const int n = 1 - s;
            const double ref = -bern(n, a) / n;
            const Complex v = hurwitz_zeta(static_cast<double>(s), a).value;
            const double e = std::abs(ref) < 1e-300 ? std::abs(v) : rel(v, ref);
            worst_h = std::max(worst_h, e);
            if (e > 1e-11) {
                o.pass = false;
                o.detail += fmt("hurwitz(%g,%g) off by %.2e; ", s, a, e);
            }
        }
    double worst_fe = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double sigma = -3.0 + 2.5 * k / 19.0;
        const double t = (k % 4) * 2.7;
        const Complex s{sigma, (k % 2) ? t : -t};
        if (s.imag() == 0.0 && std::abs(sigma - std::round(sigma)) < 1e-9 && std::fmod(std::round(sigma), 2.0) == 0.0)
            continue;
        const Complex em = riemann_zeta(s, ZetaRoute::euler_maclaurin).value;
        const Complex fe = riemann_zeta(s, ZetaRoute::functional_equation).value;
        const double e = std::max(std::abs(em), std::abs(fe)) < 1e-12 ? std::abs(em - fe) : rel(em, fe);
        worst_fe = std::max(worst_fe, e);
        if (e > 1e-9) {
            o.pass = false;
            o.detail += fmt("EM vs FE at %g%+gi off by %.2e; ", s.real(), s.imag(), e);
        }
    }
    o.detail += "hurwitz worst " + fmt("%.2e", worst_h) + " (tol 1e-11), EM vs FE worst " + fmt("%.2e", worst_fe) +
                " over 20 points (tol 1e-9)";
    return o;
}

// 6. duality at complex argument, both sides on separate series paths
Outcome duality()
{
    Outcome o;
    const auto reps = run_catalog({"duality-6.7"});
    if (reps.size() != 1) {
        o.pass = false;
        o.detail = "catalog lookup failed";
        return o;
    }
    const auto& r = reps[0];
    o.pass = r.pass && r.max_rel_err <= 1e-9;
    // the FD side must come from its own complex-x series evaluation
    int shared = 0;
    const Complex I(0.0, 1.0);
    for (double nu : {0.0, 0.5, 2.3})
        for (Complex s : {Complex(1.5), Complex(2.5, 2.0)})
            for (double x : {0.0, 0.25, 1.0}) {
                const auto fd = ext_fd({nu, s, x + I * pi}, Strategy::XSeries);
                const auto be = ext_be({nu, s, x}, Strategy::XSeries);
                if (fd.strategy.rfind("xseries", 0) != 0 || (x == 0.0 && fd.strategy == be.strategy))
                    ++shared;
            }
    if (shared) {
        o.pass = false;
        o.detail += std::to_string(shared) + " points evaluated through a shared path; ";
    }
    o.detail += r.name + ": " + std::to_string(r.points_tested) + " points, max rel residual " +
                fmt("%.2e", r.max_rel_err) + " (tol 1e-9)";
    return o;
}

// 7. fault sensitivity
Outcome fault_sensitivity()
{
    Outcome o;
    int detected = 0;
    for (auto target : {FaultTarget::hurwitz_zeta, FaultTarget::lerch_phi, FaultTarget::ext_fd, FaultTarget::ext_be,
                        FaultTarget::bernoulli}) {
        ScopedFault guard(target);
        std::string caught;
        for (const auto& r : run_catalog())
            if (!r.pass)
                caught += (caught.empty() ? "" : ",") + r.name;
        if (caught.empty()) {
            o.pass = false;
            o.detail += std::string(fault::name(target)) + " undetected; ";
        } else {
            ++detected;
            o.detail += std::string(fault::name(target)) + " -> " + caught.substr(0, caught.find(',')) + "...; ";
        }
    }
    const auto clean = run_catalog({"diff-eq-7.2"});
    if (!clean.at(0).pass) {
        o.pass = false;
        o.detail += "fault scope leaked; ";
    }
    o.detail += std::to_string(detected) + "/5 perturbations detected";
    return o;
}

// 8. determinism
Outcome determinism()
{
    Outcome o;
    const std::string a = run_selftest().json().dump(2);
    const std::string b = run_selftest().json().dump(2);
    const std::string c = run_selftest(true).json().dump(2);
    const std::string d = run_selftest(true).json().dump(2);
    o.pass = a == b && c == d;
    o.detail = "selftest JSON " + std::to_string(a.size()) + " bytes, repeat " + (a == b ? "identical" : "DIFFERS") +
               "; quick repeat " + (c == d ? "identical" : "DIFFERS");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"golden values", golden_values},
        {"identity catalog", identity_catalog},
        {"cross-strategy agreement", cross_strategy},
        {"exact rational layer", exact_layer},
        {"continuation consistency", continuation},
        {"duality at complex argument", duality},
        {"fault sensitivity", fault_sensitivity},
        {"determinism", determinism},
    };
    int id = 0;
    for (const auto& [title, fn] : criteria) {
        ++id;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        report(id, title, o);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
