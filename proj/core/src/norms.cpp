#include "hwnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace hwn {

namespace {

using P = FactoredFn;

// (λ + shift)_len with integer shift.
P poch(long shift, long len) {
    return P::poch(Rat(shift), len);
}

P poch(const Rat& shift, long len) {
    return P::poch(shift, len);
}

int sum(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("norm_ratio: K-type does not match fiber: ") + what);
}

RatioResult finish(P a, P b) {
    RatioResult res;
    res.formA = a.simplified();
    res.formB = b.simplified();
    if (!(res.formA == res.formB))
        throw std::logic_error("norm_ratio: printed forms disagree: " + res.formA.str() + " vs " +
                               res.formB.str());
    res.ratio = res.formA;
    return res;
}

RatioResult sp_ratio(const GroupSpec& g, const FiberSpec& f, const KType& t) {
    const int r = g.r, k = f.k;
    require(static_cast<int>(t.kappa.size()) == r && sum(t.kappa) == k, "kappa");
    P a, b;
    for (int j = 1; j <= k; ++j) a *= poch(-Rat(j - 1, 2), 1);
    for (int j = 1; j <= r; ++j) a /= poch(-Rat(j - 1, 2), t.m[j - 1] + t.kappa[j - 1]);
    for (int j = 1; j <= k; ++j) b /= poch(-Rat(j - 1, 2) + Rat(1), t.m[j - 1] + t.kappa[j - 1] - 1);
    for (int j = k + 1; j <= r; ++j) b /= poch(-Rat(j - 1, 2), t.m[j - 1] + t.kappa[j - 1]);
    return finish(a, b);
}

RatioResult su_ratio(const GroupSpec& g, const FiberSpec& f, const KType& t) {
    const int s = g.p2;
    require(static_cast<int>(t.n.size()) == s, "n");
    P a, b;
    for (int j = 1; j <= s; ++j) {
        const int kj = f.kvec[j - 1], nj = t.n[j - 1];
        a *= poch(-(j - 1), kj);
        a /= poch(-(j - 1), nj);
        b /= poch(-(j - 1) + kj, nj - kj);
    }
    return finish(a, b);
}

RatioResult sostar_ratio(const GroupSpec& g, const FiberSpec& f, const KType& t) {
    const int r = g.r, k = f.k;
    const bool odd = g.sostar_odd();
    const auto& m = t.m;
    const auto& kap = t.kappa;
    require(static_cast<int>(kap.size()) == (odd ? r + 1 : r) && sum(kap) == k, "kappa");
    P a, b;
    if (f.kind == FiberKind::SymDual) {
        a *= poch(0, k);
        for (int j = 1; j <= r; ++j) a /= poch(-2 * (j - 1), m[j - 1] + kap[j - 1]);
        b /= poch(k, m[0] + kap[0] - k);
        for (int j = 2; j <= r; ++j) b /= poch(-2 * (j - 1), m[j - 1] + kap[j - 1]);
        if (odd) {
            a /= poch(-2 * r, kap[r]);
            b /= poch(-2 * r, kap[r]);
        }
    } else if (odd) {
        for (int j = 1; j <= r; ++j) a *= poch(-2 * (j - 1), k);
        for (int j = 1; j <= r; ++j) a /= poch(-2 * (j - 1), m[j - 1] - kap[j - 1] + k);
        a /= poch(-2 * r + 1, k - kap[r]);
        for (int j = 1; j <= r; ++j) b /= poch(k - 2 * (j - 1), m[j - 1] - kap[j - 1]);
        b /= poch(-2 * r + 1, k - kap[r]);
    } else {
        for (int j = 1; j < r; ++j) a *= poch(-2 * (j - 1), k);
        for (int j = 1; j <= r; ++j) a /= poch(-2 * (j - 1), m[j - 1] - kap[j - 1] + k);
        for (int j = 1; j < r; ++j) b /= poch(k - 2 * (j - 1), m[j - 1] - kap[j - 1]);
        b /= poch(-2 * (r - 1), m[r - 1] - kap[r - 1] + k);
    }
    return finish(a, b);
}

RatioResult spin_ratio(const GroupSpec& g, const FiberSpec& f, const KType& t) {
    require(t.l.has_value(), "l");
    const Half k = f.half_k, l = *t.l;
    const Rat shift2 = -Rat(g.p1 - 2, 2);
    const long two_k = static_cast<long>(k.doubled());
    const long e1 = static_cast<long>((Half(t.m[0]) + k + l).to_int());
    const long e2 = static_cast<long>((Half(t.m[1]) + k - l).to_int());
    const long e3 = static_cast<long>((Half(t.m[0]) - k + l).to_int());
    P a = poch(0, two_k);
    a /= poch(0, e1);
    a /= poch(shift2, e2);
    P b;
    b /= poch(Rat(two_k), e3);
    b /= poch(shift2, e2);
    return finish(a, b);
}

RatioResult e6_ratio(const FiberSpec& f, const KType& t, bool conjecture) {
    require(t.kappa.size() == 4 && sum(t.kappa) == f.k, "kappa");
    const int k = f.k, k1 = t.kappa[0], k2 = t.kappa[1], k3 = t.kappa[2], k4 = t.kappa[3];
    const int m1 = t.m[0], m2 = t.m[1];
    const int unknown = 2 * k1 + k2 + k3;
    RatioResult res;
    // c_λ normalizes the minimal K-type to 1, which pins the numerator at degree 0.
    if (t.degree == 0) return finish(P(), P());
    if (conjecture || unknown == 0) {
        P a = poch(0, k) * poch(-3, k);
        a /= poch(0, m1 + k1 + k2);
        a /= poch(-3, m2 + k1 + k3);
        a /= poch(-4, k2 + k3 + k4);
        a /= poch(-7, k4);
        P b;
        b /= poch(k, m1 + k1 + k2 - k);
        b /= poch(k - 3, m2 + k1 + k3 - k);
        b /= poch(-4, k2 + k3 + k4);
        b /= poch(-7, k4);
        res = finish(a, b);
        res.conjectural = unknown > 0;
        return res;
    }
    // Proven part only: the numerator polynomial of degree 2k1+k2+k3 is left out.
    P a = poch(0, k) * poch(-3, k);
    a /= poch(0, m1 + k1 + k2);
    a /= poch(-3, m2 + k1 + k3);
    a /= poch(-4, k);
    a /= poch(-7, k);
    P b;
    b /= poch(k, m1 + k1 + k2 - k);
    b /= poch(k - 3, m2 + k1 + k3 - k);
    b /= poch(-4, k);
    b /= poch(-7, k);
    res = finish(a, b);
    res.unknown_numerator_degree = unknown;
    return res;
}

RatioResult e7_ratio(const GroupSpec& g, const KType& t) {
    P a = gen_poch(g, t.m).inverse();
    return finish(a, a);
}

}  // namespace

FactoredFn gen_poch(const GroupSpec& g, const Partition& m) {
    if (static_cast<int>(m.size()) > g.r) throw std::invalid_argument("gen_poch: m longer than rank");
    P out;
    for (size_t j = 0; j < m.size(); ++j) out *= poch(-Rat(static_cast<long>(j)) * g.half_d(), m[j]);
    return out;
}

RatioResult norm_ratio(const GroupSpec& g, const FiberSpec& fiber, const KType& t, bool conjecture) {
    const FiberSpec f = normalize(g, fiber);
    validate(g, f);
    if (t.family != g.family) throw std::invalid_argument("norm_ratio: K-type family mismatch");
    if (static_cast<int>(t.m.size()) != g.r) throw std::invalid_argument("norm_ratio: index m has wrong length");
    switch (g.family) {
    case Family::Sp: return sp_ratio(g, f, t);
    case Family::SU: return su_ratio(g, f, t);
    case Family::SOStar: return sostar_ratio(g, f, t);
    case Family::Spin: return spin_ratio(g, f, t);
    case Family::E6: return e6_ratio(f, t, conjecture);
    case Family::E7: return e7_ratio(g, t);
    }
    throw std::invalid_argument("norm_ratio: unknown family");
}

FactoredFn kernel_coeff(const GroupSpec& g, const FiberSpec& f, const KType& t, bool conjecture) {
    RatioResult res = norm_ratio(g, f, t, conjecture);
    if (!res.complete())
        throw ConjecturalError("E6 K-type " + t.label() +
                               ": numerator is only known conjecturally (pass --conjecture)");
    return res.ratio.inverse();
}

std::string GammaQuotient::str() const {
    std::string out = rational.str();
    if (is_rational()) return out;
    auto gammas = [](const std::vector<Rat>& v) {
        std::string s;
        for (const auto& a : v) s += "Γ(" + factor_str(a) + ")";
        return s.empty() ? std::string("1") : s;
    };
    return out + " * " + gammas(residual_num) + "/" + gammas(residual_den);
}

GammaQuotient reduce_gamma_quotient(const std::vector<Rat>& num, const std::vector<Rat>& den) {
    // Pair arguments in the same class modulo 1: Γ(λ+a)/Γ(λ+b) = (λ+b)_{a-b}.
    std::map<Rat, std::pair<std::vector<Rat>, std::vector<Rat>>> classes;
    auto frac = [](const Rat& x) { return x - Rat(mpq_class(x.floor())); };
    for (const auto& a : num) classes[frac(a)].first.push_back(a);
    for (const auto& b : den) classes[frac(b)].second.push_back(b);
    GammaQuotient out;
    for (auto& [cls, pair] : classes) {
        auto& [as, bs] = pair;
        std::sort(as.begin(), as.end());
        std::sort(bs.begin(), bs.end());
        const size_t common = std::min(as.size(), bs.size());
        for (size_t i = 0; i < common; ++i) out.rational *= FactoredFn::poch(bs[i], (as[i] - bs[i]).to_long());
        for (size_t i = common; i < as.size(); ++i) out.residual_num.push_back(as[i]);
        for (size_t i = common; i < bs.size(); ++i) out.residual_den.push_back(bs[i]);
    }
    std::sort(out.residual_num.begin(), out.residual_num.end());
    std::sort(out.residual_den.begin(), out.residual_den.end());
    return out;
}

GammaQuotient gamma_omega_quotient(const GroupSpec& g, const std::vector<Rat>& kvec) {
    if (static_cast<int>(kvec.size()) != g.r) throw std::invalid_argument("gamma_omega_quotient: weight length");
    const Rat shift = Rat(g.n, g.r);
    std::vector<Rat> num, den;
    for (int j = 0; j < g.r; ++j) {
        Rat a = kvec[j] - Rat(j) * g.half_d();
        num.push_back(a);
        den.push_back(a - shift);
    }
    return reduce_gamma_quotient(num, den);
}

GammaQuotient normalizing_const(const GroupSpec& g, const FiberSpec& fiber) {
    const FiberSpec f = normalize(g, fiber);
    validate(g, f);
    const int r = g.r;
    std::vector<Rat> kvec(r, Rat(0));
    GammaQuotient out;
    switch (g.family) {
    case Family::Sp:
        for (int j = 0; j < f.k; ++j) kvec[j] = Rat(1);
        return gamma_omega_quotient(g, kvec);
    case Family::SU: {
        const int q = g.p1, s = g.p2;
        for (int j = 1; j <= s; ++j) out.rational *= poch(-(j - 1) + f.kvec[j - 1] - q, q);
        return out;
    }
    case Family::SOStar: {
        const int k = f.k;
        if (!g.sostar_odd()) {
            if (f.kind == FiberKind::SymDual) {
                kvec[0] = Rat(k);
            } else {
                for (int j = 0; j + 1 < r; ++j) kvec[j] = Rat(k);
            }
            return gamma_omega_quotient(g, kvec);
        }
        if (f.kind == FiberKind::SymDual) {
            out.rational *= poch(-(2 * r + 1), 1);
            out.rational *= poch(k - 2 * r, 2 * r);
            for (int j = 2; j <= r; ++j) out.rational *= poch(-(2 * r + 1) - 2 * (j - 1), 2 * r + 1);
        } else {
            for (int j = 1; j <= r - 1; ++j) out.rational *= poch(k - (2 * r + 1) - 2 * (j - 1), 2 * r + 1);
            out.rational *= poch(-4 * r + 1, 2 * r);
            out.rational *= poch(k - 2 * r + 1, 1);
        }
        return out;
    }
    case Family::Spin:
        kvec[0] = f.half_k.to_rat();
        return gamma_omega_quotient(g, kvec);
    case Family::E6: {
        const int k = f.k;
        out.rational *= poch(-7 + k, 7);
        out.rational *= poch(-8, 1);
        out.rational *= poch(-11, 7);
        out.rational *= poch(-4 + k, 1);
        return out;
    }
    case Family::E7:
        return gamma_omega_quotient(g, kvec);
    }
    return out;
}

double gamma_omega_log(const GroupSpec& g, const std::vector<double>& s) {
    if (static_cast<int>(s.size()) != g.r) throw std::invalid_argument("gamma_omega_log: need r arguments");
    constexpr double two_pi = 6.283185307179586476925286766559;
    double out = 0.5 * (g.n_tube - g.r) * std::log(two_pi);
    for (int j = 0; j < g.r; ++j) {
        const double x = s[j] - j * g.d / 2.0;
        if (!(x > 0)) throw std::domain_error("gamma_omega_log: argument outside the real domain");
        out += std::lgamma(x);
    }
    return out;
}

}  // namespace hwn
