#include "hwnorm/decomp.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace hwn {

std::string KType::label() const {
    std::string out = "m=" + str(m);
    if (!kappa.empty()) out += " kappa=" + str(kappa);
    if (l) out += " l=" + l->str();
    if (family == Family::SU) out += " n=" + str(n);
    return out;
}

long long tube_scalar_dim(const Partition& m, int d) {
    const int r = static_cast<int>(m.size());
    mpq_class v = 1;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            const int t = m[i] - m[j];
            const mpq_class a(d * (j - i), 2);
            v *= (t + a) / a;
            const mpq_class up(d * (j - i + 1), 2), low = mpq_class(d * (j - i - 1), 2) + 1;
            for (int u = 0; u < t; ++u) v *= (up + u) / (low + u);
        }
    }
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("tube_scalar_dim: non-integral dimension");
    return v.get_num().get_si();
}

namespace {

KType base(const GroupSpec& g, int N, const Partition& m) {
    KType t;
    t.family = g.family;
    t.degree = N;
    t.m = m;
    return t;
}

void sp_types(const GroupSpec& g, const FiberSpec& f, int N, std::vector<KType>& out) {
    const int r = g.r;
    for (const auto& m : iter_partitions(r, N)) {
        std::vector<int> kappa(r, 0);
        std::fill(kappa.begin(), kappa.begin() + f.k, 1);
        do {
            Partition mk(r);
            for (int j = 0; j < r; ++j) mk[j] = m[j] + kappa[j];
            if (!is_dominant(mk)) continue;
            KType t = base(g, N, m);
            t.kappa = kappa;
            t.weight.resize(r);
            for (int j = 0; j < r; ++j) t.weight[j] = Half(2 * m[j] + kappa[j]);
            t.dim = weyl_dim_gl(t.weight, r);
            out.push_back(std::move(t));
        } while (std::prev_permutation(kappa.begin(), kappa.end()));
    }
}

void su_types(const GroupSpec& g, const FiberSpec& f, int N, std::vector<KType>& out) {
    const int q = g.p1, s = g.p2, r = g.r;
    int ksum = 0;
    for (int x : f.kvec) ksum += x;
    const auto targets = iter_partitions(s, N + ksum);
    for (const auto& m : iter_partitions(r, N)) {
        Partition ms(m), mq(m);
        ms.resize(s, 0);
        mq.resize(q, 0);
        const long long dim_q = weyl_dim_gl(mq, q);
        for (const auto& n : targets) {
            const long long c = lr_coefficient(n, f.kvec, ms);
            if (c == 0) continue;
            KType t = base(g, N, m);
            t.n = n;
            t.weight = to_signature(n);
            t.weight_q = to_signature(mq);
            t.multiplicity = c;
            t.dim = dim_q * weyl_dim_gl(n, s);
            out.push_back(std::move(t));
        }
    }
}

void sostar_types(const GroupSpec& g, const FiberSpec& f, int N, std::vector<KType>& out) {
    const int r = g.r, k = f.k;
    const bool odd = g.sostar_odd();
    const int len = odd ? r + 1 : r;
    const bool dual = f.kind == FiberKind::SymDual;
    for (const auto& m : iter_partitions(r, N)) {
        Partition mm(m);
        mm.push_back(0);
        for (const auto& kappa : compositions(len, k)) {
            bool ok = true;
            if (dual) {
                for (int j = 2; j <= len && ok; ++j) ok = kappa[j - 1] <= mm[j - 2] - mm[j - 1];
            } else {
                const int lim = odd ? r : r - 1;
                for (int j = 1; j <= lim && ok; ++j) ok = kappa[j - 1] <= mm[j - 1] - mm[j];
            }
            if (!ok) continue;
            KType t = base(g, N, m);
            t.kappa = kappa;
            const Half hk = Half::from_doubled(k);
            for (int j = 0; j < r; ++j) {
                if (dual) {
                    t.weight.push_back(Half(m[j] + kappa[j]));
                    t.weight.push_back(Half(m[j]));
                } else {
                    t.weight.push_back(Half(m[j]) + hk);
                    t.weight.push_back(Half(m[j] - kappa[j]) + hk);
                }
            }
            if (odd) t.weight.push_back(dual ? Half(kappa[r]) : Half(-kappa[r]) + hk);
            t.dim = weyl_dim_gl(t.weight, g.p1);
            out.push_back(std::move(t));
        }
    }
}

void spin_types(const GroupSpec& g, const FiberSpec& f, int N, std::vector<KType>& out) {
    const int n = g.p1, s = n / 2;
    const Half k = f.half_k;
    for (const auto& m : iter_partitions(2, N)) {
        for (Half l = -k; l <= k; l += Half(1)) {
            if (Half(m[0] - m[1]) + l < k) continue;
            KType t = base(g, N, m);
            t.l = l;
            t.weight.assign(s, k);
            t.weight[0] = Half(m[0] - m[1]) + l;
            t.weight[s - 1] = n % 2 == 0 ? l * f.sign : l.abs();
            t.m0 = -(Rat(m[0] + m[1]) + k.to_rat());
            t.dim = weyl_dim_so(t.weight, n);
            out.push_back(std::move(t));
        }
    }
}

void e6_types(const GroupSpec& g, const FiberSpec& f, int N, std::vector<KType>& out) {
    for (const auto& m : iter_partitions(2, N)) {
        for (const auto& kappa : compositions(4, f.k)) {
            const int k1 = kappa[0], k2 = kappa[1], k3 = kappa[2], k4 = kappa[3];
            if (k2 + k4 > m[1] || k3 > m[0] - m[1]) continue;
            KType t = base(g, N, m);
            t.kappa = kappa;
            const Half a = Half::from_doubled(m[0] + m[1]), b = Half::from_doubled(m[0] - m[1]);
            t.weight = {a + Half(k1 - k4), b + Half(k2), b, b, -b + Half(k3)};
            t.m0 = Rat(-3 * (m[0] + m[1]), 4) - Rat(f.k, 2);
            t.dim = weyl_dim_so(t.weight, 10);
            out.push_back(std::move(t));
        }
    }
}

void e7_types(const GroupSpec& g, int N, std::vector<KType>& out) {
    for (const auto& m : iter_partitions(3, N)) {
        KType t = base(g, N, m);
        t.weight = to_signature(m);
        t.dim = tube_scalar_dim(m, g.d);
        out.push_back(std::move(t));
    }
}

}  // namespace

std::vector<KType> decompose(const GroupSpec& g, const FiberSpec& fiber, int N) {
    if (N < 0) throw std::invalid_argument("decompose: negative degree");
    const FiberSpec f = normalize(g, fiber);
    validate(g, f);
    std::vector<KType> out;
    switch (g.family) {
    case Family::Sp: sp_types(g, f, N, out); break;
    case Family::SU: su_types(g, f, N, out); break;
    case Family::SOStar: sostar_types(g, f, N, out); break;
    case Family::Spin: spin_types(g, f, N, out); break;
    case Family::E6: e6_types(g, f, N, out); break;
    case Family::E7: e7_types(g, N, out); break;
    }
    return out;
}

std::vector<KType> decompose_upto(const GroupSpec& g, const FiberSpec& f, int N) {
    std::vector<KType> out;
    for (int d = 0; d <= N; ++d) {
        auto part = decompose(g, f, d);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace hwn
