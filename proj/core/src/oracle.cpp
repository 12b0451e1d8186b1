#include "hwnorm/oracle.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace hwn {

namespace {

long long printed_dim(const GroupSpec& g, const KType& t) {
    switch (g.family) {
    case Family::Sp: return weyl_dim_gl(t.weight, g.r);
    case Family::SU: return weyl_dim_gl(t.weight_q, g.p1) * weyl_dim_gl(t.weight, g.p2);
    case Family::SOStar: return weyl_dim_gl(t.weight, g.p1);
    case Family::Spin: return weyl_dim_so(t.weight, g.p1);
    case Family::E6: return weyl_dim_so(t.weight, 10);
    case Family::E7: return tube_scalar_dim(t.m, g.d);
    }
    return 0;
}

mpq_class rising(const mpq_class& x, int len) {
    mpq_class v = 1;
    for (int i = 0; i < len; ++i) v *= x + i;
    return v;
}

}  // namespace

CheckReport graded_dim_check(const GroupSpec& g, const FiberSpec& f, int N) {
    CheckReport rep;
    rep.name = "graded_dim " + g.id() + " " + f.str(g);
    const long long dim_v = fiber_dim(g, normalize(g, f));
    for (int d = 0; d <= N; ++d) {
        mpz_class total = 0;
        for (const auto& t : decompose(g, f, d)) {
            if (g.family != Family::SU && t.multiplicity != 1)
                rep.fail("degree " + std::to_string(d) + ": " + t.label() + " has multiplicity " +
                         std::to_string(t.multiplicity));
            total += mpz_class(static_cast<long>(t.multiplicity)) * static_cast<long>(printed_dim(g, t));
        }
        mpz_class expect;
        mpz_bin_uiui(expect.get_mpz_t(), static_cast<unsigned long>(d + g.n - 1), static_cast<unsigned long>(d));
        expect *= static_cast<long>(dim_v);
        if (total != expect)
            rep.fail("degree " + std::to_string(d) + ": sum " + total.get_str() + " != " + expect.get_str());
    }
    return rep;
}

CheckReport two_form_check(const GroupSpec& g, const FiberSpec& f, int N, bool conjecture) {
    CheckReport rep;
    rep.name = "two_form " + g.id() + " " + f.str(g);
    for (const auto& t : decompose_upto(g, f, N)) {
        try {
            RatioResult res = norm_ratio(g, f, t, conjecture);
            if (!(res.formA == res.formB)) rep.fail(t.label() + ": " + res.formA.str() + " != " + res.formB.str());
        } catch (const std::logic_error& e) {
            rep.fail(t.label() + ": " + e.what());
        }
    }
    return rep;
}

CheckReport e6_recurrence_check(int k, const std::vector<Rat>& lambdas) {
    CheckReport rep;
    rep.name = "e6_recurrence k=" + std::to_string(k);
    const GroupSpec g = GroupSpec::e6();
    const GammaQuotient c = normalizing_const(g, FiberSpec::e6(k));
    auto bin = [](long n, long r) {
        if (r < 0 || n < r) return mpz_class(0);
        mpz_class out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
        return out;
    };
    const mpz_class dim_v = bin(k + 9, 9) - bin(k + 7, 9);
    for (const auto& lam : lambdas) {
        const mpq_class x = lam.value();
        mpq_class F = 0;
        bool pole = false;
        for (int k1 = 0; k1 <= k; ++k1) {
            for (int k2 = 0; k2 <= k1; ++k2) {
                const mpq_class den = rising(x + k1 - 8, 8) * rising(x + k2 - 11, 8);
                if (den == 0) {
                    pole = true;
                    continue;
                }
                F += mpq_class(bin(k1 - k2 + 7, 7) - bin(k1 - k2 + 5, 7)) / den;
            }
        }
        const Evaluation cv = c.rational.evaluate(lam);
        if (pole || cv.kind != Evaluation::Kind::Value) {
            rep.fail("λ=" + lam.str() + ": pole in a sample");
            continue;
        }
        mpq_class closed = mpq_class(dim_v) / cv.value.value();
        closed.canonicalize();
        F.canonicalize();
        if (F != closed) rep.fail("λ=" + lam.str() + ": sum " + F.get_str() + " != closed form " + closed.get_str());
    }
    return rep;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
               double whole, double eps, int depth, bool& ok) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15 * eps) return left + right + delta / 15;
    if (depth <= 0) {
        ok = false;
        return left + right + delta / 15;
    }
    return simpson(f, a, m, fa, flm, fm, left, eps / 2, depth - 1, ok) +
           simpson(f, m, b, fm, frm, fb, right, eps / 2, depth - 1, ok);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double eps, bool& ok) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, eps, 50, ok);
}

}  // namespace

CheckReport su11_integral_check(const Rat& lambda, int m_max, double tol) {
    CheckReport rep;
    rep.name = "su11_integral λ=" + lambda.str();
    const double lam = lambda.to_double();
    if (!(lam > 1)) {
        rep.fail("need λ > 1 for the integral to converge");
        return rep;
    }
    const GroupSpec g = GroupSpec::su(1, 1);
    const FiberSpec f = FiberSpec::su({0});
    // ∫_{1-ε}^1 r^{2m+1}(1-r²)^{λ-2} dr <= 2^{λ-2} ε^{λ-1} / (λ-1) for λ >= 2.
    const double eps = 1e-4;
    const double tail = std::pow(2.0, std::max(lam - 2, 0.0)) * std::pow(eps, lam - 1) / (lam - 1);
    for (int m = 0; m <= m_max; ++m) {
        auto integrand = [m, lam](double r) {
            return std::pow(r, 2 * m + 1) * std::pow(1 - r * r, lam - 2);
        };
        bool ok = true;
        const double body = adaptive_simpson(integrand, 0.0, 1.0 - eps, 1e-13, ok);
        const double norm = 2 * (lam - 1) * body;
        const double tail_bound = 2 * (lam - 1) * tail;
        if (!ok) {
            rep.fail("m=" + std::to_string(m) + ": quadrature did not converge");
            continue;
        }
        KType t = decompose(g, f, m).at(0);
        const Evaluation ev = norm_ratio(g, f, t).ratio.evaluate(lambda);
        const double fischer = std::tgamma(m + 1.0);
        const double expect = fischer * ev.value.to_double();
        const double err = std::abs(norm - expect);
        if (err + tail_bound > tol) {
            std::ostringstream os;
            os.precision(17);
            os << "m=" << m << ": quadrature " << norm << " vs m!/(λ)_m " << expect << " (error " << err
               << ", tail bound " << tail_bound << ")";
            rep.fail(os.str());
        }
    }
    return rep;
}

CheckReport embedding_check(int r, int k, int N) {
    CheckReport rep;
    rep.name = "embedding r=" + std::to_string(r) + " k=" + std::to_string(k);
    const GroupSpec g = GroupSpec::sostar(2 * r + 1);
    const FiberSpec f = FiberSpec::sostar(FiberKind::SymDual, k);
    for (const auto& t : decompose_upto(g, f, N)) {
        std::vector<LinearFactor> num = poch_expand(Rat(0), k), den;
        for (int j = 1; j <= r; ++j) {
            auto part = poch_expand(Rat(-2 * (j - 1)), t.m[j - 1] + t.kappa[j - 1]);
            den.insert(den.end(), part.begin(), part.end());
        }
        auto last = poch_expand(Rat(-2 * r), t.kappa[r]);
        den.insert(den.end(), last.begin(), last.end());
        const FactoredFn expect = FactoredFn::raw(Rat(1), num, den).simplified();
        const FactoredFn got = norm_ratio(g, f, t).ratio;
        if (!(got == expect)) rep.fail(t.label() + ": " + got.str() + " != " + expect.str());
    }
    return rep;
}

CheckReport gamma_poch_numeric_check(const GroupSpec& g, const Rat& lambda, const Partition& m, double tol) {
    CheckReport rep;
    rep.name = "gamma_poch " + g.id() + " λ=" + lambda.str() + " m=" + str(m);
    Partition mm(m);
    mm.resize(g.r, 0);
    const double lam = lambda.to_double();
    std::vector<double> s0(g.r, lam), s1(g.r);
    for (int j = 0; j < g.r; ++j) s1[j] = lam + mm[j];
    double numeric;
    try {
        numeric = std::exp(gamma_omega_log(g, s1) - gamma_omega_log(g, s0));
    } catch (const std::domain_error& e) {
        rep.fail(e.what());
        return rep;
    }
    const Evaluation ev = gen_poch(g, mm).evaluate(lambda);
    if (ev.kind != Evaluation::Kind::Value) {
        rep.fail("(λ)_m vanishes at λ=" + lambda.str());
        return rep;
    }
    const double exact = ev.value.to_double();
    if (std::abs(numeric - exact) > tol * std::abs(exact)) {
        std::ostringstream os;
        os.precision(17);
        os << "numeric " << numeric << " vs exact " << exact;
        rep.fail(os.str());
    }
    return rep;
}

}  // namespace hwn
