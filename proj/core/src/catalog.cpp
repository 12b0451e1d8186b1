#include "hwnorm/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace hwn {

const char* to_string(Family f) {
    switch (f) {
    case Family::Sp: return "SP";
    case Family::SU: return "SU";
    case Family::SOStar: return "SOSTAR";
    case Family::Spin: return "SPIN";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    }
    return "?";
}

const char* to_string(FiberKind k) {
    return k == FiberKind::SymDual ? "dual" : "det";
}

namespace {

GroupSpec finish(GroupSpec g) {
    g.n_tube = g.r + g.r * (g.r - 1) * g.d / 2;
    g.tube = g.b == 0;
    if (g.n != g.n_tube + g.b * g.r || g.p != 2 + (g.r - 1) * g.d + g.b)
        throw std::logic_error("structure constants inconsistent for " + g.name());
    return g;
}

}  // namespace

GroupSpec GroupSpec::sp(int r) {
    if (r < 1) throw std::invalid_argument("sp: need r >= 1");
    GroupSpec g;
    g.family = Family::Sp;
    g.p1 = r;
    g.r = r;
    g.n = r * (r + 1) / 2;
    g.d = 1;
    g.b = 0;
    g.p = r + 1;
    return finish(g);
}

GroupSpec GroupSpec::su(int q, int s) {
    if (q < 1 || s < 1) throw std::invalid_argument("su: need q, s >= 1");
    GroupSpec g;
    g.family = Family::SU;
    g.p1 = q;
    g.p2 = s;
    g.r = std::min(q, s);
    g.n = q * s;
    g.d = 2;
    g.b = std::abs(q - s);
    g.p = q + s;
    return finish(g);
}

GroupSpec GroupSpec::sostar(int s) {
    if (s < 2) throw std::invalid_argument("sostar: need s >= 2");
    GroupSpec g;
    g.family = Family::SOStar;
    g.p1 = s;
    g.r = s / 2;
    g.n = s * (s - 1) / 2;
    g.d = 4;
    g.b = 2 * (s % 2);
    g.p = 2 * s - 2;
    return finish(g);
}

GroupSpec GroupSpec::spin(int n) {
    if (n < 4) throw std::invalid_argument("spin: need n >= 4");
    GroupSpec g;
    g.family = Family::Spin;
    g.p1 = n;
    g.r = 2;
    g.n = n;
    g.d = n - 2;
    g.b = 0;
    g.p = n;
    return finish(g);
}

GroupSpec GroupSpec::e6() {
    GroupSpec g;
    g.family = Family::E6;
    g.r = 2;
    g.n = 16;
    g.d = 6;
    g.b = 4;
    g.p = 12;
    return finish(g);
}

GroupSpec GroupSpec::e7() {
    GroupSpec g;
    g.family = Family::E7;
    g.r = 3;
    g.n = 27;
    g.d = 8;
    g.b = 0;
    g.p = 18;
    return finish(g);
}

std::string GroupSpec::id() const {
    switch (family) {
    case Family::Sp: return "sp:r=" + std::to_string(p1);
    case Family::SU: return "su:q=" + std::to_string(p1) + ",s=" + std::to_string(p2);
    case Family::SOStar: return "sostar:s=" + std::to_string(p1);
    case Family::Spin: return "spin:n=" + std::to_string(p1);
    case Family::E6: return "e6";
    case Family::E7: return "e7";
    }
    return "?";
}

std::string GroupSpec::name() const {
    switch (family) {
    case Family::Sp: return "Sp(" + std::to_string(p1) + ",R)";
    case Family::SU: return "SU(" + std::to_string(p1) + "," + std::to_string(p2) + ")";
    case Family::SOStar: return "SO*(" + std::to_string(2 * p1) + ")";
    case Family::Spin: return "Spin(2," + std::to_string(p1) + ")";
    case Family::E6: return "E6(-14)";
    case Family::E7: return "E7(-25)";
    }
    return "?";
}

GroupSpec structure_constants(Family family, const std::vector<int>& params) {
    auto need = [&](size_t count) {
        if (params.size() != count)
            throw std::invalid_argument(std::string(to_string(family)) + ": expected " +
                                        std::to_string(count) + " parameter(s)");
    };
    switch (family) {
    case Family::Sp: need(1); return GroupSpec::sp(params[0]);
    case Family::SU: need(2); return GroupSpec::su(params[0], params[1]);
    case Family::SOStar: need(1); return GroupSpec::sostar(params[0]);
    case Family::Spin: need(1); return GroupSpec::spin(params[0]);
    case Family::E6: need(0); return GroupSpec::e6();
    case Family::E7: need(0); return GroupSpec::e7();
    }
    throw std::invalid_argument("unknown family");
}

FiberSpec FiberSpec::sp(int k) {
    FiberSpec f;
    f.k = k;
    return f;
}

FiberSpec FiberSpec::su(std::vector<int> k) {
    FiberSpec f;
    f.kvec = std::move(k);
    return f;
}

FiberSpec FiberSpec::sostar(FiberKind kind, int k) {
    FiberSpec f;
    f.kind = kind;
    f.k = k;
    return f;
}

FiberSpec FiberSpec::spin(Half k, int sign) {
    FiberSpec f;
    f.half_k = k;
    f.sign = sign;
    return f;
}

FiberSpec FiberSpec::e6(int k) {
    FiberSpec f;
    f.k = k;
    return f;
}

int FiberSpec::su_nonzero() const {
    int ks = su_last();
    return static_cast<int>(std::count_if(kvec.begin(), kvec.end(), [ks](int x) { return x != ks; }));
}

bool FiberSpec::is_scalar() const {
    return k == 0 && half_k == Half(0) &&
           std::all_of(kvec.begin(), kvec.end(), [](int x) { return x == 0; });
}

std::string FiberSpec::str(const GroupSpec& g) const {
    switch (g.family) {
    case Family::Sp:
    case Family::E6: return "k=" + std::to_string(k);
    case Family::SU: {
        std::string out = "k=";
        for (size_t i = 0; i < kvec.size(); ++i) out += (i ? "," : "") + std::to_string(kvec[i]);
        return kvec.empty() ? "k=0" : out;
    }
    case Family::SOStar: return std::string("kind=") + to_string(kind) + ",k=" + std::to_string(k);
    case Family::Spin:
        return "k=" + half_k.str() + (g.p1 % 2 == 0 ? (sign > 0 ? ",sign=+" : ",sign=-") : "");
    case Family::E7: return "k=0";
    }
    return "?";
}

FiberSpec normalize(const GroupSpec& g, FiberSpec f) {
    if (g.family == Family::SU && static_cast<int>(f.kvec.size()) < g.p2) f.kvec.resize(g.p2, 0);
    if (g.family == Family::Spin && (g.p1 % 2 == 1 || f.half_k == Half(0))) f.sign = 1;
    return f;
}

void validate(const GroupSpec& g, const FiberSpec& f) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument(g.name() + ": invalid fiber: " + why);
    };
    const bool uses_k = g.family == Family::Sp || g.family == Family::SOStar || g.family == Family::E6;
    if (!uses_k && f.k != 0) fail("k is not a parameter of this family");
    if (g.family != Family::SU && !f.kvec.empty()) fail("vector k only applies to SU");
    if (g.family != Family::Spin && f.half_k != Half(0)) fail("half-integral k only applies to Spin");
    if (f.k < 0) fail("k must be non-negative");
    switch (g.family) {
    case Family::Sp:
        if (f.k > g.r - 1) fail("need 0 <= k <= r-1");
        break;
    case Family::SU:
        if (static_cast<int>(f.kvec.size()) != g.p2) fail("k must have s = " + std::to_string(g.p2) + " entries");
        if (!is_partition(f.kvec)) fail("k must be weakly decreasing and non-negative");
        break;
    case Family::SOStar:
        break;
    case Family::Spin:
        if (f.half_k < Half(0)) fail("k must be non-negative");
        if (g.p1 % 2 == 1 && f.half_k != Half(0) && f.half_k != Half::from_doubled(1))
            fail("odd n needs k in {0, 1/2}");
        if (f.sign != 1 && f.sign != -1) fail("sign must be + or -");
        break;
    case Family::E6:
        break;
    case Family::E7:
        if (!f.is_scalar()) fail("only the scalar fiber is supported");
        break;
    }
}

Rat convergence_threshold(const GroupSpec& g, const FiberSpec& f) {
    if (g.family == Family::SU) return Rat(g.p - 1 - f.su_last());
    return Rat(g.p - 1);
}

long long fiber_dim(const GroupSpec& g, const FiberSpec& f) {
    switch (g.family) {
    case Family::Sp: return binomial(g.r, f.k);
    case Family::SU: return weyl_dim_gl(f.kvec, g.p2);
    case Family::SOStar: return binomial(g.p1 + f.k - 1, f.k);
    case Family::Spin: {
        const int s = g.p1 / 2;
        Signature w(s, f.half_k);
        if (g.p1 % 2 == 0) w[s - 1] = f.half_k * f.sign;
        return weyl_dim_so(w, g.p1);
    }
    case Family::E6: {
        Signature w(5, Half(0));
        w[0] = Half(f.k);
        return weyl_dim_so(w, 10);
    }
    case Family::E7: return 1;
    }
    return 1;
}

}  // namespace hwn
