#include "hwnorm/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hwn {

namespace {

bool is_int(const Rat& x) {
    return x.is_integer();
}

long ceil_long(const Rat& x) {
    return mpz_class(x.ceil()).get_si();
}

void require_closed_form(const GroupSpec& g) {
    if (g.family == Family::E6)
        throw std::invalid_argument("E6(-14): no closed-form unitarity or reducibility result is available");
}

// Everything the case tables say at one λ.
struct Closed {
    bool literal = false;
    std::optional<int> a, b;
    int step = 1;
};

// SU data after twisting the fiber to k_s = 0.
struct SUView {
    int q, s, l, mn;
    std::vector<int> kn;
    Rat lam;  // λ + k_s

    int K(int j) const { return (j >= 1 && j <= s) ? kn[j - 1] : 0; }
};

SUView su_view(const GroupSpec& g, const FiberSpec& f, const Rat& lambda) {
    SUView v;
    v.q = g.p1;
    v.s = g.p2;
    const int ks = f.su_last();
    for (int x : f.kvec) v.kn.push_back(x - ks);
    v.l = f.su_nonzero();
    v.mn = std::min(v.q + v.l, v.s);
    v.lam = lambda + Rat(ks);
    return v;
}

Closed closed_sp(const GroupSpec& g, const FiberSpec& f, const Rat& L) {
    const int r = g.r, k = f.k;
    Closed c;
    c.step = 2;
    c.literal = L <= Rat(r - 1, 2) && is_int(L * Rat(2));
    if (!c.literal) return c;
    if (Rat(k, 2) <= L && L <= Rat(r - 1, 2))
        c.a = (L * Rat(2)).to_long() + 1;
    else if (Rat(0) <= L && L <= Rat(k - 1, 2))
        c.a = (L * Rat(2)).to_long() + 3;
    else if (is_int(L))
        c.a = 1;
    else
        c.a = 2;
    const long twice = (L * Rat(2)).to_long();
    c.b = ((twice - r) % 2 == 0) ? r - 1 : r;
    return c;
}

Closed closed_su(const GroupSpec& g, const FiberSpec& f, const Rat& lambda) {
    const SUView v = su_view(g, f, lambda);
    const Rat& L = v.lam;
    Closed c;
    if (!(L <= Rat(v.mn - 1) && is_int(L))) return c;
    bool excluded = false;
    for (int j = v.q + 1; j <= v.s; ++j)
        if (L == Rat(j - v.K(j)) && L == Rat(j - v.K(j - v.q + 1))) excluded = true;
    c.literal = !excluded;
    for (int j = 1; j <= v.mn - 1; ++j) {
        if (Rat(j - v.K(j)) <= L && L <= Rat(j - v.K(j + 1))) {
            c.a = j + 1;
            break;
        }
    }
    if (L <= Rat(-v.K(1))) c.a = 1;
    if (v.q >= v.s) {
        c.b = v.s;
    } else {
        if (v.l > 0 && Rat(v.mn - v.K(std::min(v.l, v.s - v.q))) <= L && L <= Rat(v.mn - 1)) c.b = v.mn;
        for (int j = v.q + 1; j <= v.mn - 1 && !c.b; ++j)
            if (Rat(j - v.K(j - v.q)) <= L && L <= Rat(j - v.K(j - v.q + 1))) c.b = j;
        if (!c.b && L <= Rat(v.q - v.K(1))) c.b = v.q;
    }
    return c;
}

Closed closed_sostar(const GroupSpec& g, const FiberSpec& f, const Rat& L) {
    const int r = g.r, k = f.k;
    const bool dual = f.kind == FiberKind::SymDual || k == 0;
    Closed c;
    if (!is_int(L)) return c;
    const long x = L.to_long();
    if (!g.sostar_odd()) {
        if (x > 2 * r - 2) return c;
        c.literal = true;
        if (dual) {
            if (3 <= x && x <= 2 * r - 2) c.a = ceil_long(Rat(x, 2)) + 1;
            else if (-k + 1 <= x && x <= 2) c.a = 2;
            else c.a = 1;
        } else {
            if (2 * r - 3 - k <= x && x <= 2 * r - 2) c.a = r;
            else if (-k + 1 <= x && x <= 2 * r - 4 - k) c.a = ceil_long(Rat(x + k, 2)) + 1;
            else c.a = 1;
        }
        c.b = r;
        return c;
    }
    if (dual) {
        const int lim = k >= 1 ? 2 * r : 2 * r - 2;
        if (x > lim) return c;
        c.literal = !(r == 1 && x == -k + 1);
        if (3 <= x && x <= 2 * r) c.a = ceil_long(Rat(x, 2)) + 1;
        else if (-k + 1 <= x && x <= 2) c.a = 2;
        else c.a = 1;
        c.b = (2 * r + 1 - k <= x && x <= 2 * r) ? r + 1 : r;
        return c;
    }
    if (x > 2 * r - 1) return c;
    c.literal = x != 2 * r - k - 1;
    if (2 * r - k <= x && x <= 2 * r - 1) {
        c.a = r + 1;
        c.b = r + 1;
    } else if (-k + 1 <= x && x <= 2 * r - 2 - k) {
        c.a = ceil_long(Rat(x + k, 2)) + 1;
        c.b = r;
    } else if (x <= -k) {
        c.a = 1;
        c.b = r;
    }
    return c;
}

Closed closed_spin(const GroupSpec& g, const FiberSpec& f, const Rat& L) {
    const int n = g.p1, s = n / 2;
    const Rat k = f.half_k.to_rat();
    Closed c;
    if (n % 2 == 0) {
        if (!(L <= Rat(s - 1) && is_int(L))) return c;
        c.literal = true;
        c.a = (Rat(1) - Rat(2) * k <= L) ? 2 : 1;
        c.b = 2;
        return c;
    }
    if (L <= Rat(2 * s - 1, 2) && is_int(L - Rat(1, 2))) {
        c.literal = true;
        c.a = 2;
        c.b = 2;
    } else if (L <= -Rat(2) * k && is_int(L)) {
        c.literal = true;
        c.a = 1;
        c.b = 1;
    }
    return c;
}

// Scalar E7: reducible at integers up to (r-1)d/2, chain M_a ⊂ ... ⊂ M_r.
Closed closed_e7(const GroupSpec& g, const Rat& L) {
    Closed c;
    const Rat top = Rat(g.r - 1) * g.half_d();
    if (!(is_int(L) && L <= top)) return c;
    c.literal = true;
    c.a = std::max<long>(1, ceil_long(L / g.half_d()) + 1);
    c.b = g.r;
    return c;
}

Closed closed(const GroupSpec& g, const FiberSpec& fiber, const Rat& lambda) {
    require_closed_form(g);
    const FiberSpec f = normalize(g, fiber);
    validate(g, f);
    switch (g.family) {
    case Family::Sp: return closed_sp(g, f, lambda);
    case Family::SU: return closed_su(g, f, lambda);
    case Family::SOStar: return closed_sostar(g, f, lambda);
    case Family::Spin: return closed_spin(g, f, lambda);
    case Family::E7: return closed_e7(g, lambda);
    case Family::E6: break;
    }
    throw std::logic_error("closed: unreachable");
}

// Levels flagged infinitesimally unitary, and whether P/M_b is.
struct UnitaryFlags {
    std::set<int> levels;
    bool quotient = false;
};

UnitaryFlags unitary_flags(const GroupSpec& g, const FiberSpec& f, const Rat& L, const ChainBounds& cb) {
    UnitaryFlags u;
    const int r = g.r;
    switch (g.family) {
    case Family::Sp: {
        const long twice = (L * Rat(2)).to_long();
        if (f.k <= twice && twice <= r - 1) u.levels.insert(static_cast<int>(twice) + 1);
        u.quotient = (twice - r) % 2 != 0;
        break;
    }
    case Family::SU: {
        const SUView v = su_view(g, f, L);
        const long x = v.lam.to_long();
        if (v.l <= x && x <= v.mn - 1) u.levels.insert(static_cast<int>(x) + 1);
        if (v.q >= v.s || v.l == 0)
            u.quotient = true;
        else
            u.quotient = v.mn - v.K(std::min(v.l, v.s - v.q)) <= x && x <= v.mn - 1;
        break;
    }
    case Family::SOStar: {
        const long x = L.to_long();
        const int k = f.k;
        const bool dual = f.kind == FiberKind::SymDual || k == 0;
        if (!g.sostar_odd()) {
            if (dual) {
                if (x % 2 == 0 && (k >= 1 ? 2 : 0) <= x && x <= 2 * r - 2) u.levels.insert(static_cast<int>(x / 2) + 1);
            } else if (x == 2 * r - 2) {
                u.levels.insert(r);
            }
            u.quotient = true;
        } else if (dual) {
            const int top = k >= 1 ? 2 * r : 2 * r - 2;
            if (x % 2 == 0 && (k >= 1 ? 2 : 0) <= x && x <= top) u.levels.insert(static_cast<int>(x / 2) + 1);
            u.quotient = k == 0 ? true : (2 * r + 1 - k <= x && x <= 2 * r);
        } else {
            if (x == 2 * r - 1) u.levels.insert(r + 1);
            u.quotient = 2 * r - k <= x && x <= 2 * r - 1;
        }
        break;
    }
    case Family::Spin: {
        const int s = g.p1 / 2;
        const bool odd = g.p1 % 2 == 1;
        const Rat top = odd ? Rat(2 * s - 1, 2) : Rat(s - 1);
        if (L == top) u.levels.insert(2);
        if (f.half_k == Half(0) && L == Rat(0)) u.levels.insert(1);
        u.quotient = odd ? !is_int(L) : true;
        break;
    }
    case Family::E7:
        if (L == Rat(0) || L == Rat(4) || L == Rat(8)) u.levels.insert(cb.a);
        break;
    case Family::E6: break;
    }
    return u;
}

}  // namespace

bool UnitarySet::contains(const Rat& lambda) const {
    return lambda > continuous_min || std::find(discrete.begin(), discrete.end(), lambda) != discrete.end();
}

std::string UnitarySet::str() const {
    std::string out = "{";
    for (size_t i = 0; i < discrete.size(); ++i) out += (i ? ", " : "") + discrete[i].str();
    return out + "} ∪ (" + continuous_min.str() + ", ∞)";
}

UnitarySet unitary_set(const GroupSpec& g, const FiberSpec& fiber) {
    require_closed_form(g);
    const FiberSpec f = normalize(g, fiber);
    validate(g, f);
    UnitarySet u;
    switch (g.family) {
    case Family::Sp:
        for (int t = f.k; t < g.r; ++t) u.discrete.push_back(Rat(t, 2));
        u.continuous_min = Rat(g.r - 1, 2);
        break;
    case Family::SU: {
        const int ks = f.su_last(), l = f.su_nonzero();
        const int mn = std::min(g.p1 + l, g.p2);
        for (int t = l; t < mn; ++t) u.discrete.push_back(Rat(t - ks));
        u.continuous_min = Rat(mn - 1 - ks);
        break;
    }
    case Family::SOStar: {
        const int s = g.p1;
        if (f.k == 0) {
            const int top = 2 * (s / 2 - 1);
            for (int t = 0; t <= top; t += 2) u.discrete.push_back(Rat(t));
            u.continuous_min = Rat(top);
        } else if (f.kind == FiberKind::SymDual) {
            const int top = 2 * ((s + 1) / 2 - 1);
            for (int t = 2; t <= top; t += 2) u.discrete.push_back(Rat(t));
            u.continuous_min = Rat(top);
        } else {
            u.discrete.push_back(Rat(s - 2));
            u.continuous_min = Rat(s - 2);
        }
        break;
    }
    case Family::Spin:
        if (f.half_k == Half(0)) u.discrete.push_back(Rat(0));
        u.discrete.push_back(Rat(g.p1 - 2, 2));
        u.continuous_min = Rat(g.p1 - 2, 2);
        break;
    case Family::E7:
        for (int t = 0; t < g.r; ++t) u.discrete.push_back(Rat(t) * g.half_d());
        u.continuous_min = Rat(g.r - 1) * g.half_d();
        break;
    case Family::E6: break;
    }
    return u;
}

bool reducible_literal(const GroupSpec& g, const FiberSpec& f, const Rat& lambda) {
    return closed(g, f, lambda).literal;
}

bool reducible(const GroupSpec& g, const FiberSpec& f, const Rat& lambda) {
    const Closed c = closed(g, f, lambda);
    return c.literal && c.a && c.b && *c.a <= *c.b;
}

std::optional<ChainBounds> chain_bounds(const GroupSpec& g, const FiberSpec& f, const Rat& lambda) {
    const Closed c = closed(g, f, lambda);
    if (!c.literal || !c.a || !c.b) return std::nullopt;
    return ChainBounds{*c.a, *c.b, c.step};
}

int gk_dim(const GroupSpec& g, int l) {
    if (l < 0 || l > g.r) throw std::invalid_argument("gk_dim: need 0 <= l <= r");
    return l + l * (2 * g.r - l - 1) * g.d / 2 + l * g.b;
}

bool in_level(const GroupSpec& g, const FiberSpec& fiber, const KType& t, int j, const Rat& L) {
    const FiberSpec f = normalize(g, fiber);
    auto bad = [&] { return std::invalid_argument("in_level: level " + std::to_string(j) + " out of range"); };
    switch (g.family) {
    case Family::Sp:
        if (j < 1 || j > g.r) throw bad();
        return Rat(t.m[j - 1] + t.kappa[j - 1]) < Rat(j, 2) - L + Rat(1, 2);
    case Family::SU:
        if (j < 1 || j > g.p2) throw bad();
        return Rat(t.n[j - 1]) < Rat(j) - L;
    case Family::SOStar: {
        const int r = g.r, k = f.k;
        const bool dual = f.kind == FiberKind::SymDual;
        const int top = g.sostar_odd() ? r + 1 : r;
        if (j < 1 || j > top) throw bad();
        if (j <= r) {
            const int lhs = dual ? t.m[j - 1] + t.kappa[j - 1] : t.m[j - 1] - t.kappa[j - 1] + k;
            return Rat(lhs) < Rat(2 * j - 1) - L;
        }
        if (dual) return Rat(t.kappa[r]) < Rat(2 * r + 1) - L;
        return Rat(k - t.kappa[r]) < Rat(2 * r) - L;
    }
    case Family::Spin: {
        const Rat k = f.half_k.to_rat(), l = t.l->to_rat();
        if (j == 1) return Rat(t.m[0]) + k + l < Rat(1) - L;
        if (j == 2) return Rat(t.m[1]) + k - l < Rat(g.p1, 2) - L;
        throw bad();
    }
    case Family::E7:
        if (j < 1 || j > g.r) throw bad();
        return Rat(t.m[j - 1]) < Rat(j - 1) * g.half_d() - L + Rat(1);
    case Family::E6: break;
    }
    require_closed_form(g);
    return false;
}

std::string level_predicate(const GroupSpec& g, const FiberSpec& fiber, int j, const Rat& L) {
    const FiberSpec f = normalize(g, fiber);
    const std::string js = std::to_string(j);
    switch (g.family) {
    case Family::Sp: return "m_" + js + "+k_" + js + " < " + (Rat(j, 2) - L + Rat(1, 2)).str();
    case Family::SU: return "n_" + js + " < " + (Rat(j) - L).str();
    case Family::SOStar: {
        const int r = g.r;
        const bool dual = f.kind == FiberKind::SymDual;
        if (j <= r) {
            const std::string lhs = dual ? "m_" + js + "+k_" + js : "m_" + js + "-k_" + js + "+k";
            return lhs + " < " + (Rat(2 * j - 1) - L).str();
        }
        if (dual) return "k_" + js + " < " + (Rat(2 * r + 1) - L).str();
        return "k-k_" + js + " < " + (Rat(2 * r) - L).str();
    }
    case Family::Spin:
        if (j == 1) return "m_1+k+l < " + (Rat(1) - L).str();
        return "m_2+k-l < " + (Rat(g.p1, 2) - L).str();
    case Family::E7: return "m_" + js + " < " + (Rat(j - 1) * g.half_d() - L + Rat(1)).str();
    case Family::E6: break;
    }
    require_closed_form(g);
    return "";
}

Filtration filtration(const GroupSpec& g, const FiberSpec& fiber, const Rat& lambda) {
    const FiberSpec f = normalize(g, fiber);
    const Closed c = closed(g, f, lambda);
    if (!(c.literal && c.a && c.b && *c.a <= *c.b))
        throw std::invalid_argument(g.name() + ", " + f.str(g) + ": λ = " + lambda.str() + " is an irreducible point");
    Filtration out;
    out.lambda = lambda;
    out.a = *c.a;
    out.b = *c.b;
    out.step = c.step;
    const UnitaryFlags u = unitary_flags(g, f, lambda, ChainBounds{out.a, out.b, out.step});
    for (int j = out.a; j <= out.b; j += out.step) {
        Level lv;
        lv.j = j;
        lv.predicate = level_predicate(g, f, j, lambda);
        lv.gk_dim = gk_dim(g, std::min(j - 1, g.r));
        lv.unitary = u.levels.count(j) > 0;
        lv.irreducible = j == out.a;
        out.levels.push_back(lv);
    }
    out.quotient_gk_dim = g.n;
    out.quotient_unitary = u.quotient;
    return out;
}

std::vector<SubquotientInfo> subquotient_report(const GroupSpec& g, const FiberSpec& f, const Rat& lambda) {
    const Filtration fl = filtration(g, f, lambda);
    std::vector<SubquotientInfo> out;
    int prev = 0;
    for (const auto& lv : fl.levels) {
        SubquotientInfo info;
        info.name = prev == 0 ? "M_" + std::to_string(lv.j)
                              : "M_" + std::to_string(lv.j) + "/M_" + std::to_string(prev);
        info.orbit = std::min(lv.j - 1, g.r);
        info.gk_dim = lv.gk_dim;
        info.unitary = lv.unitary;
        info.irreducible = lv.irreducible;
        out.push_back(info);
        prev = lv.j;
    }
    SubquotientInfo top;
    top.name = "P/M_" + std::to_string(fl.b);
    top.orbit = g.r;
    top.gk_dim = fl.quotient_gk_dim;
    top.unitary = fl.quotient_unitary;
    out.push_back(top);
    return out;
}

ScanTable build_scan_table(const GroupSpec& g, const FiberSpec& f, int N, bool conjecture) {
    ScanTable table;
    table.types = decompose_upto(g, f, N);
    table.ratios.reserve(table.types.size());
    for (const auto& t : table.types) {
        table.ratios.push_back(norm_ratio(g, f, t, conjecture));
        table.conjectural = table.conjectural || table.ratios.back().conjectural;
        table.complete = table.complete && table.ratios.back().complete();
    }
    return table;
}

namespace {

void require_complete(const ScanTable& table) {
    if (!table.complete)
        throw ConjecturalError("E6 norm ratios are only known conjecturally (pass --conjecture)");
}

}  // namespace

UnitaryScan unitary_scan(const ScanTable& table, const Rat& lambda) {
    require_complete(table);
    UnitaryScan out;
    out.conjectural = table.conjectural;
    for (size_t i = 0; i < table.types.size(); ++i) {
        const FactoredFn kc = table.ratios[i].ratio.inverse();
        if (kc.sign_at(lambda) == Sign::Negative) {
            out.compatible = false;
            out.witness = ScanWitness{table.types[i], kc};
            break;
        }
    }
    return out;
}

UnitaryScan unitary_scan(const GroupSpec& g, const FiberSpec& f, const Rat& lambda, int N, bool conjecture) {
    return unitary_scan(build_scan_table(g, f, N, conjecture), lambda);
}

ReducibleScan reducible_scan(const ScanTable& table, const Rat& lambda) {
    require_complete(table);
    ReducibleScan out;
    out.conjectural = table.conjectural;
    for (size_t i = 0; i < table.types.size(); ++i) {
        if (table.ratios[i].ratio.pole_order(lambda) > 0) {
            out.reducible = true;
            out.witness = ScanWitness{table.types[i], table.ratios[i].ratio};
            break;
        }
    }
    return out;
}

ReducibleScan reducible_scan(const GroupSpec& g, const FiberSpec& f, const Rat& lambda, int N, bool conjecture) {
    return reducible_scan(build_scan_table(g, f, N, conjecture), lambda);
}

std::optional<int> first_pole_degree(const ScanTable& table, const Rat& lambda) {
    auto r = reducible_scan(table, lambda);
    if (!r.reducible) return std::nullopt;
    return r.witness->ktype.degree;
}

std::optional<int> first_negative_degree(const ScanTable& table, const Rat& lambda) {
    auto u = unitary_scan(table, lambda);
    if (u.compatible) return std::nullopt;
    return u.witness->ktype.degree;
}

PoleCheck filtration_pole_check(const GroupSpec& g, const FiberSpec& f, const Rat& lambda, const ScanTable& table) {
    require_complete(table);
    PoleCheck out;
    const auto cb = chain_bounds(g, f, lambda);
    if (!cb || cb->a > cb->b) {
        out.passed = false;
        out.witnesses.push_back("λ=" + lambda.str() + ": no non-empty chain in the case table");
        return out;
    }
    const int len = (cb->b - cb->a) / cb->step + 1;
    for (size_t i = 0; i < table.types.size(); ++i) {
        const KType& t = table.types[i];
        const int po = table.ratios[i].ratio.pole_order(lambda);
        for (int idx = 0; idx < len; ++idx) {
            const int j = cb->a + idx * cb->step;
            if (in_level(g, f, t, j, lambda) != (po <= idx)) {
                out.witnesses.push_back("λ=" + lambda.str() + " M_" + std::to_string(j) + ": " + t.label() +
                                        " has pole order " + std::to_string(po));
                break;
            }
        }
        if (po > len)
            out.witnesses.push_back("λ=" + lambda.str() + ": " + t.label() + " has pole order " +
                                    std::to_string(po) + " beyond the chain length " + std::to_string(len));
    }
    out.passed = out.witnesses.empty();
    return out;
}

PoleCheck filtration_pole_check(const GroupSpec& g, const FiberSpec& f, const Rat& lambda, int N) {
    return filtration_pole_check(g, f, lambda, build_scan_table(g, f, N));
}

}  // namespace hwn
